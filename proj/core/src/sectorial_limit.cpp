#include <fracdtn/sectorial_limit.hpp>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fracdtn/errors.hpp>

namespace fracdtn {

namespace {

Matrix power_matrix_balakrishnan(const SectorialOperator& op, const MeasureSpaceModel& model,
                                 double s, const QuadratureRule& rule) {
  SemigroupSampler sampler(op, model);
  const Index n = model.dim();
  Matrix out(n, n);
  for (Index j = 0; j < n; ++j) {
    Vector e = Vector::Zero(n);
    e[j] = 1.0;
    out.col(j) = frac_power_balakrishnan(op.A, sampler, s, e, rule);
  }
  return out;
}

Matrix resolvent_of_power(const Matrix& As, Complex z) {
  Matrix M = As;
  M.diagonal().array() += z;
  Eigen::FullPivLU<Matrix> lu(M);
  if (!lu.isInvertible())
    throw ConvergenceError("sectorial limit: zI + A_n^s is singular");
  return lu.inverse();
}

// Bulirsch-Stoer rational extrapolation of (eps_i, y_i) to eps = 0. The
// zero-eigenvalue branch of the regularized resolvent is exactly rational in
// eps = n^{-s} (1/(1 + eps) for a 0 eigenvalue with m = 1), so a rational
// model recovers it to quadrature accuracy where polynomial elimination
// stalls at the first untreated ladder exponent.
Complex rational_limit(const std::vector<double>& eps, const std::vector<Complex>& vals) {
  const std::size_t K = vals.size();
  if (K == 1) return vals[0];
  std::vector<std::vector<Complex>> tab(K, std::vector<Complex>(K, Complex(0.0, 0.0)));
  tab[0] = vals;
  for (std::size_t k = 1; k < K; ++k) {
    for (std::size_t i = 0; i + k < K; ++i) {
      const Complex num = tab[k - 1][i + 1] - tab[k - 1][i];
      const Complex lower = k >= 2 ? tab[k - 2][i + 1] : Complex(0.0, 0.0);
      const Complex d2 = tab[k - 1][i + 1] - lower;
      if (d2 == Complex(0.0, 0.0)) {
        tab[k][i] = tab[k - 1][i + 1];
        continue;
      }
      const Complex den = (eps[i] / eps[i + k]) * (Complex(1.0, 0.0) - num / d2) - 1.0;
      // A vanishing denominator marks a degenerate (already converged) entry.
      tab[k][i] = std::abs(den) < 1e-300 ? tab[k - 1][i + 1] : tab[k - 1][i + 1] + num / den;
    }
  }
  return tab[K - 1][0];
}

void check_schedule(const std::vector<double>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("sectorial limit: empty schedule");
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (!(schedule[k] > 0.0))
      throw std::invalid_argument("sectorial limit: schedule entries must be positive");
    if (k > 0 && !(schedule[k] > schedule[k - 1]))
      throw std::invalid_argument("sectorial limit: schedule must be strictly increasing");
  }
}

}  // namespace

SectorialOperator regularize(const SectorialOperator& op, const MeasureSpaceModel& model,
                             double n) {
  if (!(n > 0.0)) throw std::invalid_argument("regularize: n must be positive");
  Matrix An = op.A;
  An.diagonal() += (model.m() / n).cast<Complex>();
  return certify_sectorial(An, model);
}

Matrix vertex0_resolvent(const SectorialOperator& op, const MeasureSpaceModel& model, double s,
                         const std::vector<double>& schedule, const QuadratureRule& rule) {
  if (!(s > 0.0 && s < 1.0))
    throw std::invalid_argument("vertex0_resolvent: s must lie in (0,1)");
  check_schedule(schedule);

  if (op.coercivity > 0.0) {
    return resolvent_of_power(power_matrix_balakrishnan(op, model, s, rule), Complex(1.0, 0.0));
  }
  if (schedule.size() < 2)
    throw std::invalid_argument("vertex0_resolvent: schedule too short for extrapolation");

  std::vector<Matrix> table;
  std::vector<double> eps;
  table.reserve(schedule.size());
  for (double n : schedule) {
    const SectorialOperator An = regularize(op, model, n);
    table.push_back(
        resolvent_of_power(power_matrix_balakrishnan(An, model, s, rule), Complex(1.0, 0.0)));
    eps.push_back(std::pow(n, -s));
  }

  const Index dim = model.dim();
  Matrix out(dim, dim);
  std::vector<Complex> vals(schedule.size());
  for (Index r = 0; r < dim; ++r)
    for (Index c = 0; c < dim; ++c) {
      for (std::size_t k = 0; k < schedule.size(); ++k) vals[k] = table[k](r, c);
      out(r, c) = rational_limit(eps, vals);
    }
  return out;
}

Matrix vertex0_resolvent(const SectorialOperator& op, const MeasureSpaceModel& model, double s) {
  return vertex0_resolvent(op, model, s, default_limit_schedule(),
                           QuadratureRule::double_exponential());
}

Vector frac_power_vertex0(const SectorialOperator& op, const MeasureSpaceModel& model, double s,
                          const Vector& x, const std::vector<double>& schedule,
                          const QuadratureRule& rule) {
  if (x.size() != model.dim())
    throw std::invalid_argument("frac_power_vertex0: dimension mismatch");
  const Matrix R = vertex0_resolvent(op, model, s, schedule, rule);
  Eigen::FullPivLU<Matrix> lu(R);
  if (!lu.isInvertible())
    throw ConvergenceError("frac_power_vertex0: extrapolated resolvent is singular");
  return lu.solve(x) - x;
}

Vector frac_power_vertex0(const SectorialOperator& op, const MeasureSpaceModel& model, double s,
                          const Vector& x) {
  return frac_power_vertex0(op, model, s, x, default_limit_schedule(),
                            QuadratureRule::double_exponential());
}

std::vector<double> strong_resolvent_gap(const SectorialOperator& op,
                                         const MeasureSpaceModel& model, double s, Complex z,
                                         const std::vector<double>& schedule,
                                         const QuadratureRule& rule,
                                         const std::vector<Vector>* test_vectors) {
  if (!(s > 0.0 && s < 1.0))
    throw std::invalid_argument("strong_resolvent_gap: s must lie in (0,1)");
  check_schedule(schedule);
  if (schedule.size() < 2)
    throw std::invalid_argument("strong_resolvent_gap: need at least two schedule entries");

  std::vector<Vector> basis;
  if (!test_vectors) {
    for (Index j = 0; j < model.dim(); ++j) {
      Vector e = Vector::Zero(model.dim());
      e[j] = 1.0;
      basis.push_back(std::move(e));
    }
    test_vectors = &basis;
  }
  for (const auto& v : *test_vectors)
    if (v.size() != model.dim())
      throw std::invalid_argument("strong_resolvent_gap: test vector dimension mismatch");

  std::vector<Matrix> res;
  res.reserve(schedule.size());
  for (double n : schedule) {
    const SectorialOperator An =
        op.coercivity > 0.0 ? op : regularize(op, model, n);
    res.push_back(resolvent_of_power(power_matrix_balakrishnan(An, model, s, rule), z));
  }

  std::vector<double> gaps;
  for (std::size_t k = 0; k + 1 < res.size(); ++k) {
    double g = 0.0;
    const Matrix diff = res[k + 1] - res[k];
    for (const auto& v : *test_vectors)
      g = std::max(g, weighted_norm((diff * v).eval(), SpaceTag::H(), model));
    gaps.push_back(g);
  }
  return gaps;
}

}  // namespace fracdtn
