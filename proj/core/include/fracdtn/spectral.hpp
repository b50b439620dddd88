#pragma once

#include <functional>

#include <fracdtn/measure_space.hpp>

namespace fracdtn {

// Eigendecomposition of an operator on the diagonal model, specialised for
// applying scalar functions f(A). Operators self-adjoint in H get the exact
// weighted-Hermitian path (real spectrum, orthogonal diagonalization after the
// D_sigma^{1/2} similarity); everything else goes through the complex
// eigenbasis, guarded by a condition-number cap.
class SpectralDecomposition {
 public:
  SpectralDecomposition(const Matrix& A, const MeasureSpaceModel& model,
                        double cond_cap = 1e8);

  bool hermitian() const { return hermitian_; }
  Index dim() const { return eigenvalues_.size(); }
  const Vector& eigenvalues() const { return eigenvalues_; }
  double basis_condition() const { return cond_; }

  Vector apply(const std::function<Complex(Complex)>& f, const Vector& x) const;
  Matrix materialize(const std::function<Complex(Complex)>& f) const;

 private:
  bool hermitian_;
  Vector eigenvalues_;
  Matrix P_;     // eigenvector columns in model coordinates
  Matrix Pinv_;  // explicit inverse (weighted adjoint in the Hermitian case)
  double cond_;
};

}  // namespace fracdtn
