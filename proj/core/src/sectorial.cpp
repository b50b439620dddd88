#include <fracdtn/sectorial.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <fracdtn/errors.hpp>

namespace fracdtn {

namespace detail {

Matrix h_similarity(const Matrix& A, const MeasureSpaceModel& model) {
  const RealVector& sigma = model.sigma();
  Matrix B = A;
  for (Index i = 0; i < A.rows(); ++i) {
    const double si = std::sqrt(sigma[i]);
    for (Index j = 0; j < A.cols(); ++j) B(i, j) = A(i, j) * si / std::sqrt(sigma[j]);
  }
  return B;
}

}  // namespace detail

bool is_hermitian_in_h(const Matrix& A, const MeasureSpaceModel& model, double tol) {
  if (A.rows() != A.cols() || A.rows() != model.dim())
    throw std::invalid_argument("is_hermitian_in_h: dimension mismatch");
  const Matrix DA = model.sigma().cast<Complex>().asDiagonal() * A;
  const double scale = DA.norm();
  if (scale == 0.0) return true;
  return (DA - DA.adjoint()).norm() <= tol * scale;
}

SectorialOperator certify_sectorial(const Matrix& A, const MeasureSpaceModel& model,
                                    const CertifyOptions& opts) {
  const Index n = A.rows();
  if (A.cols() != n || n != model.dim())
    throw std::invalid_argument("certify_sectorial: dimension mismatch");

  const RealVector& sigma = model.sigma();
  const RealVector vw = model.weight(SpaceTag::V());  // sigma * m
  const Matrix DA = sigma.cast<Complex>().asDiagonal() * A;

  // Continuity: largest singular value of G^{-1/2} (D_sigma A) G^{-1/2},
  // G = diag(sigma * m).
  Matrix T = DA;
  for (Index i = 0; i < n; ++i) {
    const double ri = 1.0 / std::sqrt(vw[i]);
    for (Index j = 0; j < n; ++j) T(i, j) *= ri / std::sqrt(vw[j]);
  }
  const double continuity = T.jacobiSvd().singularValues()(0);
  const double scale = std::max(1.0, continuity);

  const Matrix R = 0.5 * (DA + DA.adjoint());
  const Matrix S = (DA - DA.adjoint()) / Complex(0.0, 2.0);

  // Coercivity: smallest eigenvalue of the pencil (R, G).
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> pencil(
      R, vw.cast<Complex>().asDiagonal().toDenseMatrix());
  if (pencil.info() != Eigen::Success)
    throw std::runtime_error("certify_sectorial: pencil eigensolver failed");
  double mu = pencil.eigenvalues().minCoeff();
  if (mu < -opts.tol * scale)
    throw CertificationError("certify_sectorial: real part of the form is indefinite");
  if (mu < 0.0) mu = 0.0;

  // Angle from the numerical range over the unit H-sphere: normalize by
  // D_sigma^{1/2} and split into Hermitian and skew parts.
  Matrix Rh = R, Sh = S;
  for (Index i = 0; i < n; ++i) {
    const double ri = 1.0 / std::sqrt(sigma[i]);
    for (Index j = 0; j < n; ++j) {
      const double f = ri / std::sqrt(sigma[j]);
      Rh(i, j) *= f;
      Sh(i, j) *= f;
    }
  }

  Eigen::SelfAdjointEigenSolver<Matrix> res(Rh);
  if (res.info() != Eigen::Success)
    throw std::runtime_error("certify_sectorial: eigensolver failed");
  const RealVector lam = res.eigenvalues();
  const double lam_max = lam.maxCoeff();
  const double s_norm = Sh.norm();

  double theta = 0.0;
  if (lam_max <= opts.tol * scale) {
    // Re part vanishes identically; only the zero operator is admissible.
    if (s_norm > opts.tol * scale)
      throw CertificationError("certify_sectorial: purely skew form, angle would be pi/2");
  } else {
    const double cut = std::max(opts.tol * scale, 1e-14 * lam_max);
    std::vector<Index> pos;
    std::vector<Index> ker;
    for (Index i = 0; i < n; ++i) (lam[i] > cut ? pos : ker).push_back(i);

    if (!ker.empty() && s_norm > 0.0) {
      Matrix Qk(n, static_cast<Index>(ker.size()));
      for (std::size_t c = 0; c < ker.size(); ++c) Qk.col(static_cast<Index>(c)) = res.eigenvectors().col(ker[c]);
      // Im part must vanish wherever the Re part does, otherwise the range
      // ratio Im/Re is unbounded.
      if ((Sh * Qk).norm() > std::sqrt(static_cast<double>(n)) * opts.tol * scale)
        throw CertificationError(
            "certify_sectorial: skew part acts on the kernel of the Hermitian part");
    }

    Matrix Qp(n, static_cast<Index>(pos.size()));
    RealVector lp(static_cast<Index>(pos.size()));
    for (std::size_t c = 0; c < pos.size(); ++c) {
      Qp.col(static_cast<Index>(c)) = res.eigenvectors().col(pos[c]);
      lp[static_cast<Index>(c)] = lam[pos[c]];
    }
    const Matrix scaled = lp.array().rsqrt().matrix().cast<Complex>().asDiagonal() *
                          (Qp.adjoint() * Sh * Qp) *
                          lp.array().rsqrt().matrix().cast<Complex>().asDiagonal();
    if (scaled.size() > 0) {
      Eigen::SelfAdjointEigenSolver<Matrix> ratio(scaled);
      const double t = ratio.eigenvalues().cwiseAbs().maxCoeff();
      theta = std::atan(t);
    }
  }

  // Random cross-check of all three certified bounds.
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double tan_theta = std::tan(theta);
  for (int k = 0; k < opts.samples; ++k) {
    Vector f(n), g(n);
    for (Index i = 0; i < n; ++i) {
      f[i] = Complex(gauss(rng), gauss(rng));
      g[i] = Complex(gauss(rng), gauss(rng));
    }
    const double fn = weighted_norm(f, SpaceTag::H(), model);
    f /= fn;
    const Vector Af = A * f;
    const Complex q = weighted_inner(Af, f, SpaceTag::H(), model);
    const double fv2 = std::pow(weighted_norm(f, SpaceTag::V(), model), 2);
    if (q.real() < mu * fv2 - 1e2 * opts.tol * scale * fv2) {
      std::ostringstream msg;
      msg << "certify_sectorial: sampled coercivity violation, Re<Af,f> = " << q.real()
          << " vs mu ||f||_V^2 = " << mu * fv2;
      throw CertificationError(msg.str());
    }
    if (std::abs(q.imag()) > tan_theta * std::max(q.real(), 0.0) + 1e2 * opts.tol * scale)
      throw CertificationError("certify_sectorial: sampled point escapes the certified sector");
    const Complex b = weighted_inner(A * g, f, SpaceTag::H(), model);
    const double gv = weighted_norm(g, SpaceTag::V(), model);
    const double fv = weighted_norm(f, SpaceTag::V(), model);
    if (std::abs(b) > continuity * gv * fv * (1.0 + 1e3 * opts.tol))
      throw CertificationError("certify_sectorial: sampled continuity violation");
  }

  SectorialOperator out;
  out.A = A;
  out.continuity = continuity;
  out.coercivity = mu;
  out.sector_angle = theta;
  return out;
}

}  // namespace fracdtn
