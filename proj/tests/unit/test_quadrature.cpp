#include <doctest.h>

#include <cmath>

#include <fracdtn/errors.hpp>
#include <fracdtn/quadrature.hpp>

using namespace fracdtn;

TEST_CASE("double exponential rule reproduces Gamma to 1e-12") {
  const QuadratureRule rule = QuadratureRule::double_exponential();
  for (double s : {0.1, 0.25, 0.5, 0.75, 0.9})
    CHECK(rule.calibration_error(s) <= 1e-12);
}

TEST_CASE("rule integrates moments of e^{-r} against dr/r") {
  const QuadratureRule rule = QuadratureRule::double_exponential();
  // int r e^{-r} dr/r = 1
  CHECK(rule.integrate([](double r) { return r * std::exp(-r); }) ==
        doctest::Approx(1.0).epsilon(1e-13));
  // int r^2 e^{-r} dr/r = Gamma(2) = 1
  CHECK(rule.integrate([](double r) { return r * r * std::exp(-r); }) ==
        doctest::Approx(1.0).epsilon(1e-13));
  // int sqrt(r) e^{-r} dr/r = Gamma(1/2)
  CHECK(rule.integrate([](double r) { return std::sqrt(r) * std::exp(-r); }) ==
        doctest::Approx(1.7724538509055159).epsilon(1e-13));
  CHECK(rule.integrate([](double) { return 0.0; }) == 0.0);
}

TEST_CASE("rule covers a wide dynamic range") {
  const QuadratureRule rule = QuadratureRule::double_exponential();
  CHECK(rule.size() == 700);
  CHECK(rule.log_r_min() < -500.0);  // (pi/2) sinh(-6.5) ~ -522
  CHECK(rule.log_r_max() > 40.0);    // (pi/2) sinh(4) ~ 42.9
  CHECK(rule.substitution() == Substitution::DoubleExponential);
  // nodes ascend and weights are positive
  for (int k = 0; k + 1 < rule.size(); ++k) {
    CHECK(rule.nodes()[k] < rule.nodes()[k + 1]);
    CHECK(rule.weights()[k] > 0.0);
  }
}

TEST_CASE("log uniform substitution calibrates when the window is wide enough") {
  // bounds are in x = ln r; cover r from 1e-130 up to ~e^9
  const QuadratureRule rule = QuadratureRule::log_uniform(4000, std::log(1e-130), 9.2);
  CHECK(rule.substitution() == Substitution::LogUniform);
  for (double s : {0.1, 0.5, 0.9})
    CHECK(rule.calibration_error(s) <= 1e-12);
}

TEST_CASE("undersized rules fail their calibration gate") {
  CHECK_THROWS_AS(QuadratureRule::double_exponential(40), ConvergenceError);
  // narrow log window misses the r^{0.1} mass near zero
  CHECK_THROWS_AS(QuadratureRule::log_uniform(2000, std::log(1e-3), std::log(1e3)),
                  ConvergenceError);
  CHECK_THROWS_AS(QuadratureRule::double_exponential(0), std::invalid_argument);
  CHECK_THROWS_AS(QuadratureRule::double_exponential(700, 3.0, -3.0), std::invalid_argument);
}
