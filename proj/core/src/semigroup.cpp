#include <fracdtn/semigroup.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include <fracdtn/errors.hpp>

namespace fracdtn {

Matrix matrix_exponential(const Matrix& B) {
  if (B.rows() != B.cols()) throw std::invalid_argument("matrix_exponential: square matrix required");
  return B.exp();
}

SemigroupSampler::SemigroupSampler(const SectorialOperator& op, const MeasureSpaceModel& model,
                                   const SamplerOptions& opts)
    : A_(op.A), opts_(opts) {
  if (A_.rows() != A_.cols() || A_.rows() != model.dim())
    throw std::invalid_argument("SemigroupSampler: dimension mismatch");

  if (!opts.force_pade) {
    try {
      spec_.emplace(A_, model, opts.cond_cap);
    } catch (const ConvergenceError&) {
      spec_.reset();
    }
  }

  if (spec_ && spec_->hermitian()) {
    re_floor_ = spec_->eigenvalues().real().minCoeff();
  } else {
    // log-norm bound: ||e^{-rA}||_H <= e^{-r lambda_min(Re part in H)}
    const Matrix B = detail::h_similarity(A_, model);
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (B + B.adjoint()));
    re_floor_ = es.info() == Eigen::Success ? es.eigenvalues().minCoeff() : 0.0;
  }
}

Vector SemigroupSampler::apply(double r, const Vector& x) const {
  if (!(r >= 0.0)) throw std::invalid_argument("SemigroupSampler: r must be >= 0");
  if (x.size() != dim()) throw std::invalid_argument("SemigroupSampler: dimension mismatch");
  if (r == 0.0) return x;
  if (re_floor_ > 0.0 && r * re_floor_ > opts_.decay_cutoff) return Vector::Zero(dim());
  if (spec_) {
    return spec_->apply([r](Complex lam) { return std::exp(-r * lam); }, x);
  }
  return matrix_exponential((-r * A_).eval()) * x;
}

Vector semigroup_apply(const SectorialOperator& op, const MeasureSpaceModel& model, double r,
                       const Vector& x) {
  SemigroupSampler sampler(op, model);
  return sampler.apply(r, x);
}

}  // namespace fracdtn
