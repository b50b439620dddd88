#pragma once

#include <fracdtn/quadrature.hpp>

namespace fracdtn {

// K_nu(z) = (1/2)(z/2)^nu int_0^inf e^{-r - z^2/(4r)} r^{-nu} dr/r, z > 0.
double bessel_k_quadrature(double nu, double z, const QuadratureRule& rule);

// psi(t) = (sqrt(lambda) t)^s K_s(sqrt(lambda) t), computed as
// lambda^s 2^{s-1} int_0^inf e^{-lambda r} e^{-t^2/(4r)} r^s dr/r.
// Solves psi'' + ((1-2s)/t) psi' = lambda psi with psi(0+) = 2^{s-1} Gamma(s).
double scalar_bessel_psi(double lambda, double s, double t, const QuadratureRule& rule);

// Normalized solution u(t) = psi(t) 2^{1-s} / Gamma(s); u(0) = 1 and
// s = 1/2 reduces to e^{-sqrt(lambda) t}.
double scalar_bessel_normalized(double lambda, double s, double t, const QuadratureRule& rule);

// Central-difference residual of the ODE above for the normalized solution.
double scalar_bessel_ode_residual(double lambda, double s, double t, double h,
                                  const QuadratureRule& rule);

}  // namespace fracdtn
