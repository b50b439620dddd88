#pragma once

#include <vector>

#include <fracdtn/types.hpp>

namespace fracdtn {

// Graded mesh on [0, T] with nodes t_j = T (j/N)^gamma. gamma == 1 is the
// uniform mesh, computed as T j / N so the uniform case is reproduced exactly.
class GradedMesh {
 public:
  GradedMesh(double T, int N, double gamma);

  // Defaults tuned for the extension problem: T = 8 / sqrt(decay_rate),
  // gamma = max(1, 1.5 / min(s, 1-s)).
  static GradedMesh for_problem(double s, double decay_rate, int N);

  double T() const { return T_; }
  int intervals() const { return N_; }
  double gamma() const { return gamma_; }
  int num_nodes() const { return N_ + 1; }
  double node(int j) const { return nodes_[static_cast<std::size_t>(j)]; }
  const std::vector<double>& nodes() const { return nodes_; }

  bool operator==(const GradedMesh& other) const {
    return T_ == other.T_ && N_ == other.N_ && gamma_ == other.gamma_;
  }

 private:
  double T_;
  double gamma_;
  int N_;
  std::vector<double> nodes_;
};

}  // namespace fracdtn
