#include <fracdtn/sobolev.hpp>

#include <cmath>
#include <stdexcept>

namespace fracdtn {

namespace detail {

double power_moment(double a, double b, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("power_moment: beta must be positive");
  if (!(b > a && a >= 0.0)) throw std::invalid_argument("power_moment: need 0 <= a < b");
  if (a == 0.0) return std::pow(b, beta) / beta;
  return std::pow(a, beta) * std::expm1(beta * std::log1p((b - a) / a)) / beta;
}

CellMoments cell_moments(double a, double b, double alpha) {
  if (!(alpha > -1.0 && alpha < 1.0))
    throw std::invalid_argument("cell_moments: weight exponent must lie in (-1, 1)");
  const double h = b - a;
  CellMoments cm;
  if (a > 0.0 && h < 1e-6 * a) {
    // Thin cell: the monomial moment differences cancel catastrophically;
    // the weight is constant to ~1e-12 here, so use its midpoint value.
    const double w = std::pow(0.5 * (a + b), alpha);
    cm.stiff = w * h;
    cm.j00 = cm.j11 = w * h / 3.0;
    cm.j01 = w * h / 6.0;
    return cm;
  }
  const double m0 = power_moment(a, b, alpha + 1.0);
  const double m1 = power_moment(a, b, alpha + 2.0);
  const double m2 = power_moment(a, b, alpha + 3.0);
  const double h2 = h * h;
  cm.stiff = m0;
  cm.j00 = (b * b * m0 - 2.0 * b * m1 + m2) / h2;
  cm.j01 = (-a * b * m0 + (a + b) * m1 - m2) / h2;
  cm.j11 = (a * a * m0 - 2.0 * a * m1 + m2) / h2;
  return cm;
}

}  // namespace detail

double ws_norm(const GridFunction& u, double s, const MeasureSpaceModel& model) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("ws_norm: s must lie in (0,1)");
  if (u.dim() != model.dim()) throw std::invalid_argument("ws_norm: dimension mismatch");
  const auto& t = u.mesh().nodes();
  const double alpha = 2.0 * s - 1.0;
  double acc = 0.0;
  for (std::size_t c = 0; c + 1 < t.size(); ++c) {
    const double a = t[c], b = t[c + 1], h = b - a;
    const auto cm = detail::cell_moments(a, b, alpha);
    const Vector ua = u.at(static_cast<int>(c));
    const Vector ub = u.at(static_cast<int>(c + 1));
    const Vector du = (ub - ua) / h;
    const double na = std::pow(weighted_norm(ua, SpaceTag::V(), model), 2);
    const double nb = std::pow(weighted_norm(ub, SpaceTag::V(), model), 2);
    const double cross = weighted_inner(ua, ub, SpaceTag::V(), model).real();
    acc += cm.j00 * na + 2.0 * cm.j01 * cross + cm.j11 * nb;
    acc += cm.stiff * std::pow(weighted_norm(du, SpaceTag::H(), model), 2);
  }
  return std::sqrt(acc);
}

Complex bs_form(const GridFunction& u, const GridFunction& v, const Matrix& A, double s,
                const MeasureSpaceModel& model) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("bs_form: s must lie in (0,1)");
  if (u.dim() != model.dim() || v.dim() != model.dim() || A.rows() != model.dim() ||
      A.cols() != model.dim())
    throw std::invalid_argument("bs_form: dimension mismatch");
  if (!(u.mesh() == v.mesh())) throw std::invalid_argument("bs_form: meshes differ");
  const auto& t = u.mesh().nodes();
  const double alpha = 1.0 - 2.0 * s;
  // row j of AU holds (A u_j)^T
  const Matrix AU = u.values() * A.transpose();
  Complex acc(0.0, 0.0);
  for (std::size_t c = 0; c + 1 < t.size(); ++c) {
    const double a = t[c], b = t[c + 1], h = b - a;
    const auto cm = detail::cell_moments(a, b, alpha);
    const int ja = static_cast<int>(c), jb = static_cast<int>(c + 1);
    const Vector du = (u.at(jb) - u.at(ja)) / h;
    const Vector dv = (v.at(jb) - v.at(ja)) / h;
    acc += cm.stiff * weighted_inner(du, dv, SpaceTag::H(), model);
    const Vector Aua = AU.row(ja).transpose();
    const Vector Aub = AU.row(jb).transpose();
    acc += cm.j00 * weighted_inner(Aua, v.at(ja), SpaceTag::H(), model);
    acc += cm.j01 * (weighted_inner(Aua, v.at(jb), SpaceTag::H(), model) +
                     weighted_inner(Aub, v.at(ja), SpaceTag::H(), model));
    acc += cm.j11 * weighted_inner(Aub, v.at(jb), SpaceTag::H(), model);
  }
  return acc;
}

Vector discrete_s_normal(const GridFunction& u, double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("discrete_s_normal: s must lie in (0,1)");
  if (u.mesh().intervals() < 1)
    throw std::invalid_argument("discrete_s_normal: mesh has no interior node");
  const double t1 = u.mesh().node(1);
  return (u.at(0) - u.at(1)) * (2.0 * s / std::pow(t1, 2.0 * s));
}

double integration_by_parts_residual(const GridFunction& w, const GridFunction& v,
                                     const MeasureSpaceModel& model) {
  if (w.dim() != model.dim() || v.dim() != model.dim())
    throw std::invalid_argument("integration_by_parts_residual: dimension mismatch");
  if (!(w.mesh() == v.mesh()))
    throw std::invalid_argument("integration_by_parts_residual: meshes differ");
  const auto& t = w.mesh().nodes();
  const int N = w.mesh().intervals();
  if (N < 2) throw std::invalid_argument("integration_by_parts_residual: need N >= 2");

  auto derivative = [&](const GridFunction& g, int j) -> Vector {
    if (j == 0) {
      const double h0 = t[1] - t[0], h1 = t[2] - t[1];
      return (-(2.0 * h0 + h1) / (h0 * (h0 + h1))) * g.at(0) +
             ((h0 + h1) / (h0 * h1)) * g.at(1) + (-h0 / (h1 * (h0 + h1))) * g.at(2);
    }
    if (j == N) {
      const double h0 = t[N - 1] - t[N - 2], h1 = t[N] - t[N - 1];
      return (h1 / (h0 * (h0 + h1))) * g.at(N - 2) + (-(h0 + h1) / (h0 * h1)) * g.at(N - 1) +
             ((2.0 * h1 + h0) / (h1 * (h0 + h1))) * g.at(N);
    }
    const double h0 = t[j] - t[j - 1], h1 = t[j + 1] - t[j];
    return (-h1 / (h0 * (h0 + h1))) * g.at(j - 1) + ((h1 - h0) / (h0 * h1)) * g.at(j) +
           (h0 / (h1 * (h0 + h1))) * g.at(j + 1);
  };

  Complex acc = duality_pairing(w.at(0), v.at(0), model);
  for (int j = 0; j <= N; ++j) {
    const double wj = 0.5 * ((j < N ? t[j + 1] : t[j]) - (j > 0 ? t[j - 1] : t[j]));
    acc += wj * (duality_pairing(derivative(w, j), v.at(j), model) +
                 weighted_inner(w.at(j), derivative(v, j), SpaceTag::H(), model));
  }
  return std::abs(acc);
}

}  // namespace fracdtn
