#pragma once

#include <cstdint>

#include <fracdtn/measure_space.hpp>

namespace fracdtn {

// An operator on the diagonal model together with certified form constants:
//   |<Au,v>_H|     <= continuity ||u||_V ||v||_V
//   Re<Au,u>_H     >= coercivity ||u||_V^2          (coercivity may be 0)
//   |Im<Au,u>_H|   <= tan(sector_angle) Re<Au,u>_H
// coercivity == 0 marks a merely sectorial operator with vertex at the origin.
struct SectorialOperator {
  Matrix A;
  double continuity = 0.0;
  double coercivity = 0.0;
  double sector_angle = 0.0;
};

struct CertifyOptions {
  int samples = 10000;        // random unit-sphere cross-checks
  double tol = 1e-10;         // rejection tolerance, relative to max(1, continuity)
  std::uint64_t seed = 0x5eed1e5ull;
};

// Certifies the constants above. continuity and coercivity come from a
// singular value / generalized Hermitian eigenvalue computation in the
// weighted coordinates; the angle from the Hermitian/skew-Hermitian pencil.
// A random sample over the unit H-sphere re-checks every bound. Throws
// CertificationError when the numerical range is not contained in any closed
// sector of half-angle < pi/2 about the positive real axis.
SectorialOperator certify_sectorial(const Matrix& A, const MeasureSpaceModel& model,
                                    const CertifyOptions& opts = {});

// True when A is self-adjoint for the H inner product, i.e. D_sigma A is
// Hermitian as a plain matrix.
bool is_hermitian_in_h(const Matrix& A, const MeasureSpaceModel& model, double tol = 1e-12);

namespace detail {
// Similarity B = D_sigma^{1/2} A D_sigma^{-1/2}; Hermitian iff A is
// self-adjoint in H.
Matrix h_similarity(const Matrix& A, const MeasureSpaceModel& model);
}  // namespace detail

}  // namespace fracdtn
