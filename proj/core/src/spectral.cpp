#include <fracdtn/spectral.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include <fracdtn/errors.hpp>
#include <fracdtn/sectorial.hpp>

namespace fracdtn {

SpectralDecomposition::SpectralDecomposition(const Matrix& A, const MeasureSpaceModel& model,
                                             double cond_cap) {
  const Index n = A.rows();
  if (A.cols() != n || n != model.dim())
    throw std::invalid_argument("SpectralDecomposition: dimension mismatch");

  if (is_hermitian_in_h(A, model, 1e-13)) {
    hermitian_ = true;
    const Matrix B = detail::h_similarity(A, model);
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (B + B.adjoint()));
    if (es.info() != Eigen::Success)
      throw std::runtime_error("SpectralDecomposition: Hermitian eigensolver failed");
    eigenvalues_ = es.eigenvalues().cast<Complex>();
    const RealVector& sigma = model.sigma();
    P_ = es.eigenvectors();
    Pinv_ = es.eigenvectors().adjoint();
    for (Index i = 0; i < n; ++i) {
      const double rs = std::sqrt(sigma[i]);
      P_.row(i) /= rs;
      Pinv_.col(i) *= rs;
    }
    const double smax = sigma.maxCoeff(), smin = sigma.minCoeff();
    cond_ = std::sqrt(smax / smin);
    return;
  }

  hermitian_ = false;
  Eigen::ComplexEigenSolver<Matrix> es(A);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("SpectralDecomposition: complex eigensolver failed");
  eigenvalues_ = es.eigenvalues();
  P_ = es.eigenvectors();
  const auto sv = P_.jacobiSvd().singularValues();
  const double smin = sv(sv.size() - 1);
  cond_ = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
  if (!(cond_ <= cond_cap)) {
    std::ostringstream msg;
    msg << "SpectralDecomposition: eigenbasis condition " << cond_ << " exceeds cap " << cond_cap
        << "; use a quadrature-based method instead";
    throw ConvergenceError(msg.str());
  }
  Pinv_ = P_.partialPivLu().inverse();
}

Vector SpectralDecomposition::apply(const std::function<Complex(Complex)>& f,
                                    const Vector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("SpectralDecomposition: dimension mismatch");
  Vector c = Pinv_ * x;
  for (Index i = 0; i < c.size(); ++i) c[i] *= f(eigenvalues_[i]);
  return P_ * c;
}

Matrix SpectralDecomposition::materialize(const std::function<Complex(Complex)>& f) const {
  Vector d(dim());
  for (Index i = 0; i < dim(); ++i) d[i] = f(eigenvalues_[i]);
  return P_ * d.asDiagonal() * Pinv_;
}

}  // namespace fracdtn
