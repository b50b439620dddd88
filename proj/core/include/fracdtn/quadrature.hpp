#pragma once

#include <functional>
#include <vector>

#include <fracdtn/types.hpp>

namespace fracdtn {

enum class Substitution { DoubleExponential, LogUniform };

// Nodes and weights for integrals against the multiplicative measure dr/r on
// (0, inf):  integral_0^inf f(r) dr/r  ~=  sum_k w_k f(r_k).
//
// DoubleExponential uses r = exp(c sinh(u)), c = pi/2, with the trapezoid rule
// on a uniform u-grid; LogUniform uses r = exp(x) on a uniform x-grid. Every
// rule is calibrated at construction: sum_k w_k r_k^s exp(-r_k) must equal
// Gamma(s) to 1e-12 relative for s in {0.1, 0.5, 0.9}, otherwise construction
// throws ConvergenceError.
class QuadratureRule {
 public:
  static QuadratureRule double_exponential(int nodes = 700, double u_min = -6.5,
                                           double u_max = 4.0);
  static QuadratureRule log_uniform(int nodes, double x_min, double x_max);

  Substitution substitution() const { return substitution_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  // ln r at the two truncation ends.
  double log_r_min() const { return log_r_min_; }
  double log_r_max() const { return log_r_max_; }

  double integrate(const std::function<double(double)>& f) const;

  // Relative error of the rule on integral r^s e^{-r} dr/r = Gamma(s).
  double calibration_error(double s) const;

 private:
  QuadratureRule(Substitution sub, std::vector<double> nodes, std::vector<double> weights,
                 double lmin, double lmax);
  void calibrate() const;

  Substitution substitution_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  double log_r_min_;
  double log_r_max_;
};

}  // namespace fracdtn
