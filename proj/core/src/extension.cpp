#include <fracdtn/extension.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <fracdtn/errors.hpp>

namespace fracdtn {

double fractional_constant(double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("fractional_constant: s must lie in (0,1)");
  return std::exp((1.0 - 2.0 * s) * std::numbers::ln2 + std::lgamma(1.0 - s) - std::lgamma(s));
}

ExtensionParams::ExtensionParams(double s_, QuadratureRule rule_)
    : s(s_), c_s(fractional_constant(s_)), rule(std::move(rule_)) {}

ExtensionParams::ExtensionParams(double s_)
    : ExtensionParams(s_, QuadratureRule::double_exponential()) {}

Vector poisson_apply(const SemigroupSampler& sampler, const ExtensionParams& p, double t,
                     const Vector& x) {
  if (!(t >= 0.0)) throw std::invalid_argument("poisson_apply: t must be >= 0");
  if (x.size() != sampler.dim()) throw std::invalid_argument("poisson_apply: dimension mismatch");
  const double inv_gamma = std::exp(-std::lgamma(p.s));
  Vector acc = Vector::Zero(x.size());
  const auto& r = p.rule.nodes();
  const auto& w = p.rule.weights();
  for (std::size_t k = 0; k < r.size(); ++k) {
    const double f = w[k] * std::exp(p.s * std::log(r[k]) - t * t / (4.0 * r[k])) * inv_gamma;
    if (f == 0.0) continue;
    acc.noalias() += f * sampler.apply(r[k], x);
  }
  return acc;
}

Vector poisson_apply(const SectorialOperator& op, const MeasureSpaceModel& model,
                     const ExtensionParams& p, double t, const Vector& x) {
  SemigroupSampler sampler(op, model);
  return poisson_apply(sampler, p, t, x);
}

Vector poisson_derivative(const SemigroupSampler& sampler, const ExtensionParams& p, double t,
                          const Vector& x) {
  if (!(t >= 0.0)) throw std::invalid_argument("poisson_derivative: t must be >= 0");
  if (x.size() != sampler.dim())
    throw std::invalid_argument("poisson_derivative: dimension mismatch");
  const double scale = -0.5 * t * std::exp(-std::lgamma(p.s));
  Vector acc = Vector::Zero(x.size());
  if (scale == 0.0) return acc;
  const auto& r = p.rule.nodes();
  const auto& w = p.rule.weights();
  for (std::size_t k = 0; k < r.size(); ++k) {
    const double f = w[k] * std::exp((p.s - 1.0) * std::log(r[k]) - t * t / (4.0 * r[k]));
    if (f == 0.0) continue;
    acc.noalias() += f * sampler.apply(r[k], x);
  }
  return scale * acc;
}

Vector poisson_derivative(const SectorialOperator& op, const MeasureSpaceModel& model,
                          const ExtensionParams& p, double t, const Vector& x) {
  SemigroupSampler sampler(op, model);
  return poisson_derivative(sampler, p, t, x);
}

namespace {

// Exponents of the t -> 0 error expansion of -t^{1-2s} u'(t):
// {2-2s, 2, 4-2s, 4, ...}, ascending; collapses to {1, 2, 3, ...} at s = 1/2.
std::vector<double> exponent_ladder(double s, int count) {
  std::vector<double> out;
  for (int k = 1; static_cast<int>(out.size()) < count; ++k) {
    out.push_back(2.0 * k - 2.0 * s);
    out.push_back(2.0 * k);
  }
  out.resize(count);
  return out;
}

}  // namespace

Vector s_normal_derivative(const SectorialOperator& op, const MeasureSpaceModel& model,
                           const ExtensionParams& p, const Vector& x, const SNormalOptions& opts) {
  if (!(op.coercivity > 0.0))
    throw std::invalid_argument("s_normal_derivative: operator must be coercive");
  if (opts.levels < 1 || !(opts.t0 > 0.0))
    throw std::invalid_argument("s_normal_derivative: bad extrapolation options");

  SemigroupSampler sampler(op, model);
  const Vector y = frac_power_balakrishnan(op.A, sampler, p.s, x, p.rule);
  const double yscale = weighted_norm(y, SpaceTag::H(), model);
  if (yscale == 0.0) return Vector::Zero(x.size());

  const double inv2g = 0.5 * std::exp(-std::lgamma(p.s));
  const auto& tau = p.rule.nodes();
  const auto& w = p.rule.weights();
  auto G = [&](double t) {
    Vector acc = Vector::Zero(y.size());
    for (std::size_t k = 0; k < tau.size(); ++k) {
      const double f = w[k] * std::exp((p.s - 1.0) * std::log(tau[k]) - 0.25 / tau[k]) * inv2g;
      if (f == 0.0) continue;
      acc.noalias() += f * sampler.apply(t * t * tau[k], y);
    }
    return acc;
  };

  std::vector<Vector> table;
  table.reserve(opts.levels + 1);
  for (int i = 0; i <= opts.levels; ++i) table.push_back(G(opts.t0 / std::pow(2.0, i)));

  const std::vector<double> ladder = exponent_ladder(p.s, opts.levels);
  std::vector<double> corrections;
  Vector prev = table[0];
  for (int stage = 0; stage < opts.levels; ++stage) {
    const double f = std::pow(2.0, ladder[stage]);
    for (int i = 0; i + stage + 1 <= opts.levels; ++i)
      table[i] = (f * table[i + 1] - table[i]) / (f - 1.0);
    corrections.push_back(weighted_norm((table[0] - prev).eval(), SpaceTag::H(), model));
    prev = table[0];
  }

  const double rel = corrections.back() / std::max(weighted_norm(prev, SpaceTag::H(), model),
                                                   1e-300);
  if (!(rel <= opts.max_error_estimate)) {
    std::ostringstream msg;
    msg << "s_normal_derivative: extrapolation not converged, relative corrections:";
    for (double c : corrections) msg << ' ' << c / yscale;
    throw ConvergenceError(msg.str());
  }
  return prev;
}

std::pair<Vector, Vector> half_case_identity(const SectorialOperator& op,
                                             const MeasureSpaceModel& model, double t,
                                             const Vector& x) {
  if (!is_hermitian_in_h(op.A, model))
    throw std::invalid_argument("half_case_identity: operator must be self-adjoint in H");
  if (!(op.coercivity > 0.0))
    throw std::invalid_argument("half_case_identity: operator must be coercive");
  SpectralDecomposition dec(op.A, model);
  const Vector lhs = dec.apply(
      [t](Complex lam) { return std::exp(-t * std::sqrt(std::max(lam.real(), 0.0))); }, x);
  const Vector sqx =
      dec.apply([](Complex lam) { return std::sqrt(std::max(lam.real(), 0.0)); }, x);
  SemigroupSampler sampler(op, model);
  const ExtensionParams p(0.5);
  return {lhs, poisson_apply(sampler, p, t, sqx)};
}

}  // namespace fracdtn
