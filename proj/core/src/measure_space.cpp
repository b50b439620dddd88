#include <fracdtn/measure_space.hpp>

#include <cmath>
#include <stdexcept>

namespace fracdtn {

SpaceTag SpaceTag::InterpHV(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("SpaceTag: s must lie in [0,1]");
  return SpaceTag(Kind::InterpHV, s);
}

SpaceTag SpaceTag::InterpHVdual(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("SpaceTag: s must lie in [0,1]");
  return SpaceTag(Kind::InterpHVdual, s);
}

double SpaceTag::exponent() const {
  switch (kind_) {
    case Kind::H: return 0.0;
    case Kind::V: return 1.0;
    case Kind::Vdual: return -1.0;
    case Kind::InterpHV: return order_;
    case Kind::InterpHVdual: return -order_;
  }
  return 0.0;
}

MeasureSpaceModel::MeasureSpaceModel(RealVector sigma, RealVector m)
    : sigma_(std::move(sigma)), m_(std::move(m)) {
  if (sigma_.size() != m_.size())
    throw std::invalid_argument("MeasureSpaceModel: sigma and m must have equal length");
  if (sigma_.size() == 0) throw std::invalid_argument("MeasureSpaceModel: empty model");
  for (Index i = 0; i < sigma_.size(); ++i) {
    if (!(sigma_[i] > 0.0)) throw std::invalid_argument("MeasureSpaceModel: sigma must be positive");
    if (!(m_[i] >= 1.0)) throw std::invalid_argument("MeasureSpaceModel: m must satisfy m >= 1");
  }
}

MeasureSpaceModel MeasureSpaceModel::unit(Index n) {
  return MeasureSpaceModel(RealVector::Ones(n), RealVector::Ones(n));
}

RealVector MeasureSpaceModel::weight(const SpaceTag& tag) const {
  const double p = tag.exponent();
  if (p == 0.0) return sigma_;
  if (p == 1.0) return sigma_.cwiseProduct(m_);
  if (p == -1.0) return sigma_.cwiseQuotient(m_);
  return sigma_.cwiseProduct(m_.array().pow(p).matrix());
}

double weighted_norm(const Vector& f, const SpaceTag& tag, const MeasureSpaceModel& model) {
  if (f.size() != model.dim())
    throw std::invalid_argument("weighted_norm: dimension mismatch");
  const RealVector w = model.weight(tag);
  double acc = 0.0;
  for (Index i = 0; i < f.size(); ++i) acc += std::norm(f[i]) * w[i];
  return std::sqrt(acc);
}

Complex duality_pairing(const Vector& f, const Vector& g, const MeasureSpaceModel& model) {
  if (f.size() != model.dim() || g.size() != model.dim())
    throw std::invalid_argument("duality_pairing: dimension mismatch");
  Complex acc(0.0, 0.0);
  for (Index i = 0; i < f.size(); ++i) acc += f[i] * std::conj(g[i]) * model.sigma()[i];
  return acc;
}

Complex weighted_inner(const Vector& f, const Vector& g, const SpaceTag& tag,
                       const MeasureSpaceModel& model) {
  if (f.size() != model.dim() || g.size() != model.dim())
    throw std::invalid_argument("weighted_inner: dimension mismatch");
  const RealVector w = model.weight(tag);
  Complex acc(0.0, 0.0);
  for (Index i = 0; i < f.size(); ++i) acc += f[i] * std::conj(g[i]) * w[i];
  return acc;
}

}  // namespace fracdtn
