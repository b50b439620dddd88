#include <fracdtn/dtn.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include <fracdtn/errors.hpp>

namespace fracdtn {

namespace {

struct CellData {
  double h;
  double hm;  // stiff / h^2
  detail::CellMoments cm;
};

std::vector<CellData> build_cells(const GradedMesh& mesh, double s) {
  const auto& t = mesh.nodes();
  std::vector<CellData> cells(t.size() - 1);
  const double alpha = 1.0 - 2.0 * s;
  for (std::size_t c = 0; c + 1 < t.size(); ++c) {
    cells[c].h = t[c + 1] - t[c];
    cells[c].cm = detail::cell_moments(t[c], t[c + 1], alpha);
    cells[c].hm = cells[c].cm.stiff / (cells[c].h * cells[c].h);
  }
  return cells;
}

// Solver for a block-tridiagonal system whose sub- and superdiagonal blocks
// coincide (the Galerkin system has that structure with a real weight).
class BlockTridiag {
 public:
  BlockTridiag(std::vector<Matrix> diag, std::vector<Matrix> off) : off_(std::move(off)) {
    lu_.reserve(diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) {
      if (k > 0) diag[k].noalias() -= off_[k - 1] * lu_[k - 1].solve(off_[k - 1]);
      lu_.emplace_back(diag[k]);
      diag[k].resize(0, 0);
    }
  }

  std::size_t blocks() const { return lu_.size(); }

  std::vector<Vector> solve(std::vector<Vector> rhs) const {
    const std::size_t K = lu_.size();
    for (std::size_t k = 1; k < K; ++k)
      rhs[k].noalias() -= off_[k - 1] * lu_[k - 1].solve(rhs[k - 1]);
    std::vector<Vector> u(K);
    u[K - 1] = lu_[K - 1].solve(rhs[K - 1]);
    for (std::size_t k = K - 1; k-- > 0;)
      u[k] = lu_[k].solve((rhs[k] - off_[k] * u[k + 1]).eval());
    return u;
  }

 private:
  std::vector<Eigen::PartialPivLU<Matrix>> lu_;
  std::vector<Matrix> off_;
};

// Assembled extension system on a mesh; unknown nodes are [lo, N-1] with
// lo = 1 (Dirichlet, u_0 prescribed) or lo = 0 (Neumann); u_N = 0 always.
class ExtensionSystem {
 public:
  ExtensionSystem(const SectorialOperator& op, const MeasureSpaceModel& model, double s,
                  const GradedMesh& mesh, bool dirichlet)
      : model_(model),
        mesh_(mesh),
        cells_(build_cells(mesh, s)),
        s_(s),
        dirichlet_(dirichlet),
        A_(op.A) {
    const Index n = model.dim();
    if (op.A.rows() != n || op.A.cols() != n)
      throw std::invalid_argument("extension solve: dimension mismatch");
    const Matrix D = model.sigma().cast<Complex>().asDiagonal();
    DA_ = D * op.A;
    const int N = mesh.intervals();
    const int lo = dirichlet ? 1 : 0;
    const int K = N - lo;
    if (K <= 0 && !dirichlet)
      throw std::invalid_argument("extension solve: mesh has no unknowns");
    std::vector<Matrix> diag(static_cast<std::size_t>(K));
    std::vector<Matrix> off(K > 0 ? static_cast<std::size_t>(K - 1) : 0);
    for (int k = 0; k < K; ++k) {
      const int j = lo + k;
      Matrix blk = Matrix::Zero(n, n);
      if (j >= 1) {
        const auto& c = cells_[static_cast<std::size_t>(j - 1)];
        blk += c.hm * D + c.cm.j11 * DA_;
      }
      if (j <= N - 1) {
        const auto& c = cells_[static_cast<std::size_t>(j)];
        blk += c.hm * D + c.cm.j00 * DA_;
      }
      diag[static_cast<std::size_t>(k)] = std::move(blk);
      if (k + 1 < K) {
        const auto& c = cells_[static_cast<std::size_t>(j)];
        off[static_cast<std::size_t>(k)] = -c.hm * D + c.cm.j01 * DA_;
      }
    }
    if (K > 0) solver_.emplace(std::move(diag), std::move(off));
  }

  // data: boundary value x (Dirichlet) or flux y (Neumann).
  GridFunction solve(const Vector& data) const {
    const Index n = model_.dim();
    if (data.size() != n) throw std::invalid_argument("extension solve: dimension mismatch");
    const int N = mesh_.intervals();
    GridFunction u(mesh_, n);
    const int lo = dirichlet_ ? 1 : 0;
    const int K = N - lo;
    if (K > 0) {
      std::vector<Vector> rhs(static_cast<std::size_t>(K), Vector::Zero(n));
      if (dirichlet_) {
        const auto& c0 = cells_[0];
        rhs[0] = c0.hm * (model_.sigma().cast<Complex>().asDiagonal() * data) -
                 c0.cm.j01 * (DA_ * data);
      } else {
        rhs[0] = model_.sigma().cast<Complex>().cwiseProduct(data);
      }
      const auto sol = solver_->solve(std::move(rhs));
      for (int k = 0; k < K; ++k) u.set(lo + k, sol[static_cast<std::size_t>(k)]);
    }
    if (dirichlet_) u.set(0, data);
    return u;  // u_N stays 0
  }

  // b_s(u, chi e_p) with the ramp test chi(t) = (T - t)/T.
  Vector ramp_flux(const GridFunction& u) const {
    const Index n = model_.dim();
    const double T = mesh_.T();
    const auto& t = mesh_.nodes();
    Vector stiff_part = Vector::Zero(n);
    Vector mass_part = Vector::Zero(n);
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      const auto& cd = cells_[c];
      const Vector ua = u.at(static_cast<int>(c));
      const Vector ub = u.at(static_cast<int>(c + 1));
      stiff_part += (cd.cm.stiff / cd.h) * (ub - ua);
      const double xa = (T - t[c]) / T, xb = (T - t[c + 1]) / T;
      mass_part += (xa * cd.cm.j00 + xb * cd.cm.j01) * ua + (xa * cd.cm.j01 + xb * cd.cm.j11) * ub;
    }
    return -stiff_part / T + A_ * mass_part;
  }

  Vector extract(const GridFunction& u, FluxExtraction mode) const {
    return mode == FluxExtraction::VariationalFlux ? ramp_flux(u) : discrete_s_normal(u, s_);
  }

  const Matrix& A() const { return A_; }
  double s() const { return s_; }
  const MeasureSpaceModel& model() const { return model_; }

 private:
  const MeasureSpaceModel& model_;
  GradedMesh mesh_;
  std::vector<CellData> cells_;
  double s_;
  bool dirichlet_;
  Matrix A_;
  Matrix DA_;
  std::optional<BlockTridiag> solver_;
};

ExtensionSolution finish(const ExtensionSystem& sys, GridFunction u, const DtnOptions& opts) {
  ExtensionSolution sol{std::move(u), Vector(), Vector(), Complex(0.0, 0.0)};
  sol.trace = sol.u.at(0);
  sol.s_normal = sys.extract(sol.u, opts.extraction);
  if (opts.compute_energy)
    sol.energy = bs_form(sol.u, sol.u, sys.A(), sys.s(), sys.model());
  return sol;
}

void check_solve_args(const SectorialOperator& op, const MeasureSpaceModel& model, double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("extension solve: s must lie in (0,1)");
  if (op.A.rows() != model.dim())
    throw std::invalid_argument("extension solve: dimension mismatch");
}

}  // namespace

ExtensionSolution solve_dirichlet(const SectorialOperator& op, const MeasureSpaceModel& model,
                                  double s, const Vector& x, const GradedMesh& mesh,
                                  const DtnOptions& opts) {
  check_solve_args(op, model, s);
  ExtensionSystem sys(op, model, s, mesh, /*dirichlet=*/true);
  return finish(sys, sys.solve(x), opts);
}

ExtensionSolution solve_neumann(const SectorialOperator& op, const MeasureSpaceModel& model,
                                double s, const Vector& y, const GradedMesh& mesh,
                                const DtnOptions& opts) {
  check_solve_args(op, model, s);
  ExtensionSystem sys(op, model, s, mesh, /*dirichlet=*/false);
  return finish(sys, sys.solve(y), opts);
}

Matrix dtn_matrix(const SectorialOperator& op, const MeasureSpaceModel& model, double s,
                  const GradedMesh& mesh, const DtnOptions& opts) {
  check_solve_args(op, model, s);
  ExtensionSystem sys(op, model, s, mesh, /*dirichlet=*/true);
  const Index n = model.dim();
  Matrix out(n, n);
  for (Index j = 0; j < n; ++j) {
    Vector e = Vector::Zero(n);
    e[j] = 1.0;
    out.col(j) = sys.extract(sys.solve(e), opts.extraction);
  }
  return out;
}

IsomorphismReport verify_dtn_isomorphism(const SectorialOperator& op,
                                         const MeasureSpaceModel& model, double s,
                                         const GradedMesh& mesh) {
  check_solve_args(op, model, s);
  const Index n = model.dim();
  ExtensionSystem sys(op, model, s, mesh, /*dirichlet=*/true);
  DtnOptions opts;
  opts.compute_energy = false;

  std::vector<GridFunction> basis_solutions;
  basis_solutions.reserve(static_cast<std::size_t>(n));
  Matrix Dm(n, n);
  for (Index j = 0; j < n; ++j) {
    Vector e = Vector::Zero(n);
    e[j] = 1.0;
    basis_solutions.push_back(sys.solve(e));
    Dm.col(j) = sys.extract(basis_solutions.back(), opts.extraction);
  }

  const RealVector win = model.weight(SpaceTag::InterpHV(s));
  const RealVector wout = model.weight(SpaceTag::InterpHVdual(s));
  const RealVector win_sqrt = win.cwiseSqrt(), wout_sqrt = wout.cwiseSqrt();

  IsomorphismReport rep{};
  {
    const Matrix T1 = wout_sqrt.cast<Complex>().asDiagonal() * Dm *
                      win_sqrt.cwiseInverse().cast<Complex>().asDiagonal();
    rep.dtn_norm = T1.jacobiSvd().singularValues()(0);
  }

  Eigen::FullPivLU<Matrix> lu(Dm);
  if (!lu.isInvertible())
    throw ConvergenceError("verify_dtn_isomorphism: discrete map is singular");
  const Matrix T2 = win_sqrt.cast<Complex>().asDiagonal() * lu.inverse() *
                    wout_sqrt.cwiseInverse().cast<Complex>().asDiagonal();
  Eigen::JacobiSVD<Matrix> svd(T2, Eigen::ComputeThinV);
  rep.inverse_norm = svd.singularValues()(0);

  auto trace_ratio = [&](const GridFunction& u) {
    const double num = weighted_norm(u.at(0), SpaceTag::InterpHV(s), model);
    const double den = ws_norm(u, 1.0 - s, model);
    return den > 0.0 ? num / den : 0.0;
  };
  double c = 0.0;
  for (const auto& u : basis_solutions) c = std::max(c, trace_ratio(u));
  // Extremal datum of the inverse map: include its extension as a probe so
  // the chain bound below is evaluated where it is tight.
  {
    const Vector ystar = wout_sqrt.cwiseInverse().cast<Complex>().asDiagonal() *
                         Vector(svd.matrixV().col(0));
    ExtensionSystem neu(op, model, s, mesh, /*dirichlet=*/false);
    c = std::max(c, trace_ratio(neu.solve(ystar)));
  }
  rep.trace_constant = c;

  const double mu_eff = std::min(op.coercivity, 1.0);
  rep.stability_bound =
      mu_eff > 0.0 ? c * c / mu_eff : std::numeric_limits<double>::infinity();
  rep.bound_satisfied = rep.inverse_norm <= rep.stability_bound * (1.0 + 1e-9);
  return rep;
}

double dirichlet_energy_identity(const ExtensionSolution& sol, const MeasureSpaceModel& model) {
  const Complex pairing = duality_pairing(sol.s_normal, sol.trace, model);
  const double scale = std::max(std::abs(sol.energy), 1e-300);
  return std::abs(sol.energy - pairing) / scale;
}

}  // namespace fracdtn
