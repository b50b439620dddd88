#pragma once

#include <vector>

#include <fracdtn/fractional.hpp>

namespace fracdtn {

// A_n = A + (1/n) diag(m), re-certified; coercivity of the result is at
// least 1/n up to roundoff.
SectorialOperator regularize(const SectorialOperator& op, const MeasureSpaceModel& model,
                             double n);

inline std::vector<double> default_limit_schedule() { return {1e1, 1e2, 1e3, 1e4}; }

// (I + A^s)^{-1} for an operator with vertex 0, as the extrapolated limit of
// (I + A_n^s)^{-1} over the regularization schedule. Each A_n^s is built by
// the Balakrishnan quadrature (A_n is coercive); the limit is taken by
// entrywise rational extrapolation in eps = n^{-s}, which captures the
// zero-eigenvalue branch exactly. A coercive input short-circuits: the limit
// is already attained at A itself.
Matrix vertex0_resolvent(const SectorialOperator& op, const MeasureSpaceModel& model, double s,
                         const std::vector<double>& schedule, const QuadratureRule& rule);
Matrix vertex0_resolvent(const SectorialOperator& op, const MeasureSpaceModel& model, double s);

// A^s x = R^{-1} x - x with R = vertex0_resolvent(...).
Vector frac_power_vertex0(const SectorialOperator& op, const MeasureSpaceModel& model, double s,
                          const Vector& x, const std::vector<double>& schedule,
                          const QuadratureRule& rule);
Vector frac_power_vertex0(const SectorialOperator& op, const MeasureSpaceModel& model, double s,
                          const Vector& x);

// Successive gaps max_v || (zI + A_{n_k}^s)^{-1} v - (zI + A_{n_{k+1}}^s)^{-1} v ||_H
// over the test vectors (basis vectors when none are given). Monotone decay of
// the gaps witnesses strong resolvent convergence on the sample.
std::vector<double> strong_resolvent_gap(const SectorialOperator& op,
                                         const MeasureSpaceModel& model, double s, Complex z,
                                         const std::vector<double>& schedule,
                                         const QuadratureRule& rule,
                                         const std::vector<Vector>* test_vectors = nullptr);

}  // namespace fracdtn
