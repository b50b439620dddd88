#include <doctest.h>

#include <cmath>
#include <random>

#include <fracdtn/measure_space.hpp>

using namespace fracdtn;

TEST_CASE("space tags carry the m-exponent of their weight") {
  CHECK(SpaceTag::H().exponent() == 0.0);
  CHECK(SpaceTag::V().exponent() == 1.0);
  CHECK(SpaceTag::Vdual().exponent() == -1.0);
  CHECK(SpaceTag::InterpHV(0.3).exponent() == doctest::Approx(0.3));
  CHECK(SpaceTag::InterpHVdual(0.3).exponent() == doctest::Approx(-0.3));
  CHECK_THROWS_AS(SpaceTag::InterpHV(1.5), std::invalid_argument);
  CHECK_THROWS_AS(SpaceTag::InterpHVdual(-0.1), std::invalid_argument);
}

TEST_CASE("model construction validates sigma > 0 and m >= 1") {
  RealVector sigma(2), m(2);
  sigma << 1.0, 2.0;
  m << 1.0, 4.0;
  const MeasureSpaceModel model(sigma, m);
  CHECK(model.dim() == 2);

  RealVector bad_sigma(2);
  bad_sigma << 1.0, 0.0;
  CHECK_THROWS_AS(MeasureSpaceModel(bad_sigma, m), std::invalid_argument);
  RealVector bad_m(2);
  bad_m << 1.0, 0.5;
  CHECK_THROWS_AS(MeasureSpaceModel(sigma, bad_m), std::invalid_argument);
  RealVector short_m(1);
  short_m << 1.0;
  CHECK_THROWS_AS(MeasureSpaceModel(sigma, short_m), std::invalid_argument);
}

TEST_CASE("interpolation norm interpolates between H and V") {
  // sigma = (1,1), m = (1,4), f = (1,1):
  //   |f|_H = sqrt(2), |f|_V = sqrt(5), |f|_{[H,V]_{1/2}} = sqrt(1 + 2) = sqrt(3)
  RealVector sigma = RealVector::Ones(2);
  RealVector m(2);
  m << 1.0, 4.0;
  const MeasureSpaceModel model(sigma, m);
  Vector f = Vector::Ones(2);
  CHECK(weighted_norm(f, SpaceTag::H(), model) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(weighted_norm(f, SpaceTag::V(), model) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  CHECK(weighted_norm(f, SpaceTag::InterpHV(0.5), model) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(weighted_norm(f, SpaceTag::InterpHVdual(0.5), model) ==
        doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
  // s = 0 and s = 1 degenerate to the endpoint norms
  CHECK(weighted_norm(f, SpaceTag::InterpHV(1.0), model) ==
        doctest::Approx(weighted_norm(f, SpaceTag::V(), model)).epsilon(1e-14));
  CHECK(weighted_norm(f, SpaceTag::InterpHV(0.0), model) ==
        doctest::Approx(weighted_norm(f, SpaceTag::H(), model)).epsilon(1e-14));
}

TEST_CASE("duality pairing is the H inner product expression") {
  RealVector sigma(2), m(2);
  sigma << 2.0, 3.0;
  m << 1.0, 2.0;
  const MeasureSpaceModel model(sigma, m);
  Vector f(2), g(2);
  f << Complex(1.0, 1.0), Complex(2.0, 0.0);
  g << Complex(1.0, 0.0), Complex(1.0, -1.0);
  // sum f_i conj(g_i) sigma_i = (1+i)*1*2 + 2*(1+i)*3 = 8 + 8i
  const Complex p = duality_pairing(f, g, model);
  CHECK(p.real() == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(p.imag() == doctest::Approx(8.0).epsilon(1e-14));
  // pairing is linear in the first slot, conjugate-linear in the second
  const Complex scaled = duality_pairing((Complex(0.0, 1.0) * f).eval(), g, model);
  CHECK(std::abs(scaled - Complex(0.0, 1.0) * p) < 1e-14);
  const Complex conj_scaled = duality_pairing(f, (Complex(0.0, 1.0) * g).eval(), model);
  CHECK(std::abs(conj_scaled + Complex(0.0, 1.0) * p) < 1e-14);
}

TEST_CASE("pairing is bounded by dual interpolation norms") {
  std::mt19937_64 gen(7);
  std::normal_distribution<double> dist;
  RealVector sigma(4), m(4);
  for (int i = 0; i < 4; ++i) {
    sigma(i) = 0.5 + i;
    m(i) = 1.0 + i * i;
  }
  const MeasureSpaceModel model(sigma, m);
  for (double s : {0.25, 0.5, 0.75}) {
    for (int trial = 0; trial < 50; ++trial) {
      Vector f(4), g(4);
      for (int i = 0; i < 4; ++i) {
        f(i) = Complex(dist(gen), dist(gen));
        g(i) = Complex(dist(gen), dist(gen));
      }
      const double lhs = std::abs(duality_pairing(f, g, model));
      const double rhs = weighted_norm(f, SpaceTag::InterpHV(s), model) *
                         weighted_norm(g, SpaceTag::InterpHVdual(s), model);
      CHECK(lhs <= rhs * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("weighted inner product reproduces the norm") {
  RealVector sigma(3), m(3);
  sigma << 1.0, 0.25, 4.0;
  m << 2.0, 1.0, 8.0;
  const MeasureSpaceModel model(sigma, m);
  Vector f(3);
  f << Complex(1.0, -2.0), Complex(0.0, 3.0), Complex(-1.0, 0.5);
  for (auto tag : {SpaceTag::H(), SpaceTag::V(), SpaceTag::Vdual(), SpaceTag::InterpHV(0.7)}) {
    const double n = weighted_norm(f, tag, model);
    const Complex ip = weighted_inner(f, f, tag, model);
    CHECK(ip.imag() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::sqrt(ip.real()) == doctest::Approx(n).epsilon(1e-14));
  }
}

TEST_CASE("unit model has all weights equal to one") {
  const MeasureSpaceModel model = MeasureSpaceModel::unit(3);
  Vector f(3);
  f << 1.0, 2.0, 2.0;
  const double expect = 3.0;
  for (auto tag : {SpaceTag::H(), SpaceTag::V(), SpaceTag::InterpHV(0.4)})
    CHECK(weighted_norm(f, tag, model) == doctest::Approx(expect).epsilon(1e-14));
}
