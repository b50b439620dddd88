#include <doctest.h>

#include <cmath>
#include <random>

#include <fracdtn/bessel.hpp>
#include <fracdtn/errors.hpp>
#include <fracdtn/extension.hpp>
#include <fracdtn/operators.hpp>

using namespace fracdtn;

namespace {

Vector random_vector(Index n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist;
  Vector x(n);
  for (Index i = 0; i < n; ++i) x(i) = Complex(dist(gen), dist(gen));
  return x;
}

SectorialOperator scalar_op(double lambda) {
  SectorialOperator op;
  op.A = Matrix::Constant(1, 1, Complex(lambda, 0.0));
  op.continuity = lambda;
  op.coercivity = lambda;
  op.sector_angle = 0.0;
  return op;
}

}  // namespace

TEST_CASE("the extension constant hits its special values") {
  CHECK(fractional_constant(0.5) == 1.0);
  CHECK(fractional_constant(0.25) == doctest::Approx(0.4779887974861251).epsilon(1e-15));
  CHECK(fractional_constant(0.75) == doctest::Approx(2.092099240106203).epsilon(1e-15));
  CHECK(fractional_constant(0.1) == doctest::Approx(0.19557356719531738).epsilon(1e-15));
  // c_s c_{1-s} relates through the reflection of Gamma; spot check the product
  CHECK(fractional_constant(0.25) * fractional_constant(0.75) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(fractional_constant(0.0), std::invalid_argument);
  CHECK_THROWS_AS(fractional_constant(1.0), std::invalid_argument);
}

TEST_CASE("poisson operator at t = 0 is the negative fractional power") {
  const OperatorBundle b = make_builtin("dirichlet_laplacian_1d", {{"n", "8"}});
  const Vector x = random_vector(8, 2);
  for (double s : {0.2, 0.5, 0.8}) {
    const ExtensionParams p(s);
    const Vector got = poisson_apply(b.op, b.model, p, 0.0, x);
    const Vector want = inverse_frac_power_spectral(b.op, b.model, s, x);
    CHECK(weighted_norm((got - want).eval(), SpaceTag::H(), b.model) /
              weighted_norm(want, SpaceTag::H(), b.model) <
          1e-10);
  }
}

TEST_CASE("scalar poisson trajectory matches the normalized bessel solution") {
  const double lambda = 3.0;
  const MeasureSpaceModel unit = MeasureSpaceModel::unit(1);
  const SectorialOperator op = scalar_op(lambda);
  const QuadratureRule rule = QuadratureRule::double_exponential();
  for (double s : {0.3, 0.5, 0.7}) {
    const ExtensionParams p(s);
    for (double t : {0.1, 0.5, 1.5}) {
      // U(t) 1 = lambda^{-s} u_hat(t) for the 1x1 operator
      const Vector u = poisson_apply(op, unit, p, t, Vector::Ones(1));
      const double want = std::pow(lambda, -s) * scalar_bessel_normalized(lambda, s, t, rule);
      CHECK(std::abs(u(0) - want) < 1e-12);
    }
  }
}

TEST_CASE("poisson derivative matches the half-case closed form") {
  // lambda = 1, s = 1/2: U(t) = e^{-t}, so u'(1) = -e^{-1}
  const MeasureSpaceModel unit = MeasureSpaceModel::unit(1);
  const ExtensionParams p(0.5);
  const Vector d = poisson_derivative(scalar_op(1.0), unit, p, 1.0, Vector::Ones(1));
  CHECK(std::abs(d(0) - (-std::exp(-1.0))) < 1e-12);
}

TEST_CASE("poisson derivative is the derivative of the trajectory") {
  const OperatorBundle b = make_builtin("dirichlet_laplacian_1d", {{"n", "6"}});
  const Vector x = random_vector(6, 19);
  const ExtensionParams p(0.35);
  const double t = 0.4, h = 1e-5;
  const Vector fd = (poisson_apply(b.op, b.model, p, t + h, x) -
                     poisson_apply(b.op, b.model, p, t - h, x)) /
                    (2.0 * h);
  const Vector d = poisson_derivative(b.op, b.model, p, t, x);
  CHECK(weighted_norm((fd - d).eval(), SpaceTag::H(), b.model) /
            weighted_norm(d, SpaceTag::H(), b.model) <
        1e-8);
}

TEST_CASE("s-normal derivative recovers the scaled fractional power") {
  const OperatorBundle b = make_builtin("dirichlet_laplacian_1d", {{"n", "8"}});
  const Vector x = random_vector(8, 23);
  for (double s : {0.3, 0.5, 0.7}) {
    const ExtensionParams p(s);
    const Vector want = p.c_s * frac_power_spectral(b.op, b.model, s, x);
    const Vector got = s_normal_derivative(b.op, b.model, p, x);
    CHECK(weighted_norm((got - want).eval(), SpaceTag::H(), b.model) /
              weighted_norm(want, SpaceTag::H(), b.model) <
          1e-9);
  }
}

TEST_CASE("s-normal derivative honors its error guard") {
  const OperatorBundle b = make_builtin("dirichlet_laplacian_1d", {{"n", "4"}});
  const ExtensionParams p(0.5);
  SNormalOptions opts;
  opts.max_error_estimate = 1e-30;  // unreachable: the guard must fire
  CHECK_THROWS_AS(s_normal_derivative(b.op, b.model, p, Vector::Ones(4), opts),
                  ConvergenceError);
  SNormalOptions bad;
  bad.levels = 0;
  CHECK_THROWS_AS(s_normal_derivative(b.op, b.model, p, Vector::Ones(4), bad),
                  std::invalid_argument);
}

TEST_CASE("s-normal derivative needs coercivity") {
  Matrix A = Matrix::Zero(2, 2);
  A(1, 1) = 1.0;
  const MeasureSpaceModel unit = MeasureSpaceModel::unit(2);
  const SectorialOperator op = certify_sectorial(A, unit);
  CHECK_THROWS_AS(s_normal_derivative(op, unit, ExtensionParams(0.5), Vector::Ones(2)),
                  std::invalid_argument);
}

TEST_CASE("half case identity closes on hermitian coercive operators") {
  const OperatorBundle b = make_builtin("dirichlet_laplacian_1d", {{"n", "8"}});
  const Vector x = random_vector(8, 31);
  for (double t : {0.05, 0.3, 1.0}) {
    const auto [lhs, rhs] = half_case_identity(b.op, b.model, t, x);
    CHECK(weighted_norm((lhs - rhs).eval(), SpaceTag::H(), b.model) /
              weighted_norm(lhs, SpaceTag::H(), b.model) <
          1e-10);
  }
  Matrix A(2, 2);
  A << 1.0, 1.0, -1.0, 1.0;
  const MeasureSpaceModel unit = MeasureSpaceModel::unit(2);
  const SectorialOperator nonsym = certify_sectorial(A, unit);
  CHECK_THROWS_AS(half_case_identity(nonsym, unit, 0.5, Vector::Ones(2)), std::invalid_argument);
}

TEST_CASE("bessel quadrature reproduces the half-order closed form") {
  const QuadratureRule rule = QuadratureRule::double_exponential();
  // K_{1/2}(z) = sqrt(pi/(2z)) e^{-z}
  CHECK(bessel_k_quadrature(0.5, 0.5, rule) == doctest::Approx(1.0750476034999201).epsilon(1e-13));
  CHECK(bessel_k_quadrature(0.5, 1.0, rule) == doctest::Approx(0.46106850444789454).epsilon(1e-13));
  CHECK(bessel_k_quadrature(0.5, 3.0, rule) == doctest::Approx(0.03602598513176459).epsilon(1e-13));
}

TEST_CASE("bessel quadrature respects the nu reflection symmetry") {
  const QuadratureRule rule = QuadratureRule::double_exponential();
  for (double nu : {0.2, 0.45}) {
    for (double z : {0.7, 2.0}) {
      CHECK(bessel_k_quadrature(nu, z, rule) ==
            doctest::Approx(bessel_k_quadrature(-nu, z, rule)).epsilon(1e-12));
    }
  }
}

TEST_CASE("normalized bessel solution has unit trace and exponential half case") {
  const QuadratureRule rule = QuadratureRule::double_exponential();
  CHECK(scalar_bessel_normalized(2.0, 0.3, 0.0, rule) == 1.0);
  CHECK(scalar_bessel_normalized(4.0, 0.5, 0.7, rule) ==
        doctest::Approx(std::exp(-1.4)).epsilon(1e-12));
  // psi(0+) = 2^{s-1} Gamma(s)
  const double s = 0.4;
  CHECK(scalar_bessel_psi(5.0, s, 0.0, rule) ==
        doctest::Approx(std::pow(2.0, s - 1.0) * std::tgamma(s)).epsilon(1e-12));
}

TEST_CASE("normalized bessel solution satisfies its ode") {
  const QuadratureRule rule = QuadratureRule::double_exponential();
  for (double lambda : {0.5, 1.0, 10.0}) {
    for (double s : {0.2, 0.5, 0.8}) {
      CHECK(std::abs(scalar_bessel_ode_residual(lambda, s, 1.0, 4e-4, rule)) < 1e-6);
    }
  }
  CHECK_THROWS_AS(scalar_bessel_ode_residual(1.0, 0.5, 1e-6, 4e-4, rule), std::invalid_argument);
}

TEST_CASE("bessel solution decays monotonically") {
  const QuadratureRule rule = QuadratureRule::double_exponential();
  double prev = 1.0;
  for (int k = 1; k <= 12; ++k) {
    const double u = scalar_bessel_normalized(2.0, 0.65, 0.25 * k, rule);
    CHECK(u < prev);
    CHECK(u > 0.0);
    prev = u;
  }
}
