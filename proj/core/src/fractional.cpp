#include <fracdtn/fractional.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include <fracdtn/errors.hpp>

namespace fracdtn {

namespace {

void check_s(double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("fractional power: s must lie in (0,1)");
}

// Principal branch lambda^p with 0^p := 0; rejects spectrum left of the
// imaginary axis.
Complex principal_power(Complex lam, double p, double tol) {
  const double mag = std::abs(lam);
  if (mag <= tol) return Complex(0.0, 0.0);
  if (lam.real() < -tol * std::max(1.0, mag))
    throw std::invalid_argument("fractional power: eigenvalue with negative real part");
  return std::pow(lam, Complex(p, 0.0));
}

}  // namespace

Vector frac_power_spectral(const SectorialOperator& op, const MeasureSpaceModel& model, double s,
                           const Vector& x, double cond_cap) {
  check_s(s);
  SpectralDecomposition dec(op.A, model, cond_cap);
  const double tol = 1e-12 * std::max(1.0, dec.eigenvalues().cwiseAbs().maxCoeff());
  return dec.apply([&](Complex lam) { return principal_power(lam, s, tol); }, x);
}

Matrix frac_power_spectral_matrix(const SectorialOperator& op, const MeasureSpaceModel& model,
                                  double s, double cond_cap) {
  check_s(s);
  SpectralDecomposition dec(op.A, model, cond_cap);
  const double tol = 1e-12 * std::max(1.0, dec.eigenvalues().cwiseAbs().maxCoeff());
  return dec.materialize([&](Complex lam) { return principal_power(lam, s, tol); });
}

Vector inverse_frac_power_spectral(const SectorialOperator& op, const MeasureSpaceModel& model,
                                   double s, const Vector& x, double cond_cap) {
  check_s(s);
  SpectralDecomposition dec(op.A, model, cond_cap);
  const double tol = 1e-12 * std::max(1.0, dec.eigenvalues().cwiseAbs().maxCoeff());
  for (Index i = 0; i < dec.dim(); ++i)
    if (std::abs(dec.eigenvalues()[i]) <= tol)
      throw std::invalid_argument("inverse_frac_power_spectral: operator is singular");
  return dec.apply([&](Complex lam) { return 1.0 / principal_power(lam, s, tol); }, x);
}

Vector negative_frac_power(const SemigroupSampler& sampler, double s, const Vector& x,
                           const QuadratureRule& rule) {
  check_s(s);
  if (x.size() != sampler.dim())
    throw std::invalid_argument("negative_frac_power: dimension mismatch");
  const double inv_gamma = std::exp(-std::lgamma(s));
  Vector acc = Vector::Zero(x.size());
  const auto& r = rule.nodes();
  const auto& w = rule.weights();
  for (std::size_t k = 0; k < r.size(); ++k) {
    const double f = w[k] * std::exp(s * std::log(r[k])) * inv_gamma;
    if (f == 0.0) continue;
    acc.noalias() += f * sampler.apply(r[k], x);
  }
  return acc;
}

Vector frac_power_balakrishnan(const Matrix& A, const SemigroupSampler& sampler, double s,
                               const Vector& x, const QuadratureRule& rule) {
  check_s(s);
  return A * negative_frac_power(sampler, 1.0 - s, x, rule);
}

Vector frac_power_balakrishnan(const SectorialOperator& op, const MeasureSpaceModel& model,
                               double s, const Vector& x, const QuadratureRule& rule) {
  if (!(op.coercivity > 0.0))
    throw std::invalid_argument(
        "frac_power_balakrishnan: operator must be coercive; regularize a vertex-0 operator "
        "through the limit module");
  SemigroupSampler sampler(op, model);
  return frac_power_balakrishnan(op.A, sampler, s, x, rule);
}

Vector resolvent_apply(const SectorialOperator& op, Complex z, const Vector& x) {
  if (x.size() != op.A.rows()) throw std::invalid_argument("resolvent_apply: dimension mismatch");
  Matrix M = op.A;
  M.diagonal().array() += z;
  Eigen::FullPivLU<Matrix> lu(M);
  if (!lu.isInvertible()) throw std::invalid_argument("resolvent_apply: zI + A is singular");
  return lu.solve(x);
}

}  // namespace fracdtn
