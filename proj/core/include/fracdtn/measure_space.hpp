#pragma once

#include <fracdtn/types.hpp>

namespace fracdtn {

// Tags the weighted l2 norms of the scale V -> H -> V' built over a finite
// measure-space model, including the interpolation spaces between H and V
// (weight multiplier m^s) and between H and V' (multiplier m^-s).
class SpaceTag {
 public:
  enum class Kind { H, V, Vdual, InterpHV, InterpHVdual };

  static SpaceTag H() { return SpaceTag(Kind::H, 0.0); }
  static SpaceTag V() { return SpaceTag(Kind::V, 1.0); }
  static SpaceTag Vdual() { return SpaceTag(Kind::Vdual, 1.0); }
  static SpaceTag InterpHV(double s);
  static SpaceTag InterpHVdual(double s);

  Kind kind() const { return kind_; }
  // Interpolation parameter; 0 for H, 1 for V and V'.
  double order() const { return order_; }
  // Exponent p such that the norm weight is m^p (times sigma).
  double exponent() const;

 private:
  SpaceTag(Kind k, double order) : kind_(k), order_(order) {}
  Kind kind_;
  double order_;
};

// Finite diagonal model: H is C^n with inner product sum_i f_i conj(g_i) sigma_i,
// V the same space re-normed with the extra multiplier m_i >= 1. Then
// ||f||_V' <= ||f||_H <= ||f||_V and the duality pairing between V' and V is
// given by the same sum as the H inner product.
class MeasureSpaceModel {
 public:
  MeasureSpaceModel(RealVector sigma, RealVector m);

  static MeasureSpaceModel unit(Index n);

  Index dim() const { return sigma_.size(); }
  const RealVector& sigma() const { return sigma_; }
  const RealVector& m() const { return m_; }

  // Pointwise norm weight for a tagged space, sigma included.
  RealVector weight(const SpaceTag& tag) const;

 private:
  RealVector sigma_;
  RealVector m_;
};

double weighted_norm(const Vector& f, const SpaceTag& tag, const MeasureSpaceModel& model);

// <f,g>_{V',V} = sum_i f_i conj(g_i) sigma_i; f lives in V', g in V.
Complex duality_pairing(const Vector& f, const Vector& g, const MeasureSpaceModel& model);

// Inner product of the tagged space, linear in f and antilinear in g.
Complex weighted_inner(const Vector& f, const Vector& g, const SpaceTag& tag,
                       const MeasureSpaceModel& model);

}  // namespace fracdtn
