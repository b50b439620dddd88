#include <fracdtn/bessel.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracdtn {

double bessel_k_quadrature(double nu, double z, const QuadratureRule& rule) {
  if (!(z > 0.0)) throw std::invalid_argument("bessel_k_quadrature: z must be positive");
  const double lead = nu * std::log(0.5 * z) - std::numbers::ln2;
  double acc = 0.0;
  const auto& r = rule.nodes();
  const auto& w = rule.weights();
  for (std::size_t k = 0; k < r.size(); ++k) {
    const double lr = std::log(r[k]);
    acc += w[k] * std::exp(lead - r[k] - z * z / (4.0 * r[k]) - nu * lr);
  }
  return acc;
}

double scalar_bessel_psi(double lambda, double s, double t, const QuadratureRule& rule) {
  if (!(lambda > 0.0)) throw std::invalid_argument("scalar_bessel_psi: lambda must be positive");
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("scalar_bessel_psi: s must lie in (0,1)");
  if (!(t >= 0.0)) throw std::invalid_argument("scalar_bessel_psi: t must be >= 0");
  const double lead = s * std::log(lambda) + (s - 1.0) * std::numbers::ln2;
  double acc = 0.0;
  const auto& r = rule.nodes();
  const auto& w = rule.weights();
  for (std::size_t k = 0; k < r.size(); ++k) {
    const double lr = std::log(r[k]);
    acc += w[k] * std::exp(lead + s * lr - lambda * r[k] - t * t / (4.0 * r[k]));
  }
  return acc;
}

double scalar_bessel_normalized(double lambda, double s, double t, const QuadratureRule& rule) {
  if (t == 0.0) {
    if (!(lambda > 0.0) || !(s > 0.0 && s < 1.0))
      throw std::invalid_argument("scalar_bessel_normalized: bad parameters");
    return 1.0;
  }
  const double norm = std::exp((1.0 - s) * std::numbers::ln2 - std::lgamma(s));
  return norm * scalar_bessel_psi(lambda, s, t, rule);
}

double scalar_bessel_ode_residual(double lambda, double s, double t, double h,
                                  const QuadratureRule& rule) {
  if (!(t > h && h > 0.0))
    throw std::invalid_argument("scalar_bessel_ode_residual: need t > h > 0");
  const double um = scalar_bessel_normalized(lambda, s, t - h, rule);
  const double u0 = scalar_bessel_normalized(lambda, s, t, rule);
  const double up = scalar_bessel_normalized(lambda, s, t + h, rule);
  const double d2 = (up - 2.0 * u0 + um) / (h * h);
  const double d1 = (up - um) / (2.0 * h);
  return d2 + (1.0 - 2.0 * s) / t * d1 - lambda * u0;
}

}  // namespace fracdtn
