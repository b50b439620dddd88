#pragma once

#include <Eigen/Core>
#include <complex>

namespace fracdtn {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

}  // namespace fracdtn
