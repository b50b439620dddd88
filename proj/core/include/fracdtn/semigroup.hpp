#pragma once

#include <optional>

#include <fracdtn/sectorial.hpp>
#include <fracdtn/spectral.hpp>

namespace fracdtn {

// Dense matrix exponential (Pade with scaling and squaring).
Matrix matrix_exponential(const Matrix& B);

struct SamplerOptions {
  double cond_cap = 1e8;   // eigenbasis condition cap for the spectral path
  bool force_pade = false;
  // r * (spectral lower bound of Re) beyond which e^{-rA} is treated as 0.
  double decay_cutoff = 745.0;
};

// Evaluates e^{-rA} x for many values of r. Picks a decomposition once: the
// weighted-Hermitian or conditioned complex eigenbasis when available (O(n^2)
// per application), otherwise one Pade exponential per distinct r.
class SemigroupSampler {
 public:
  SemigroupSampler(const SectorialOperator& op, const MeasureSpaceModel& model,
                   const SamplerOptions& opts = {});

  Index dim() const { return A_.rows(); }
  bool spectral_path() const { return spec_.has_value(); }
  const SpectralDecomposition* decomposition() const {
    return spec_ ? &*spec_ : nullptr;
  }

  Vector apply(double r, const Vector& x) const;

 private:
  Matrix A_;
  std::optional<SpectralDecomposition> spec_;
  double re_floor_;  // lower bound for Re of the numerical range in H
  SamplerOptions opts_;
};

// Single application e^{-rA} x; r >= 0 required, r == 0 returns x.
Vector semigroup_apply(const SectorialOperator& op, const MeasureSpaceModel& model, double r,
                       const Vector& x);

}  // namespace fracdtn
