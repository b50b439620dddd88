#include <fracdtn/mesh.hpp>

#include <cmath>
#include <stdexcept>

namespace fracdtn {

GradedMesh::GradedMesh(double T, int N, double gamma) : T_(T), gamma_(gamma), N_(N) {
  if (!(T > 0.0)) throw std::invalid_argument("GradedMesh: T must be positive");
  if (N < 1) throw std::invalid_argument("GradedMesh: need at least one interval");
  if (!(gamma >= 1.0)) throw std::invalid_argument("GradedMesh: gamma must be >= 1");
  nodes_.resize(static_cast<std::size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) {
    const double frac = static_cast<double>(j) / N;
    nodes_[static_cast<std::size_t>(j)] = gamma == 1.0 ? T * frac : T * std::pow(frac, gamma);
  }
  for (int j = 1; j <= N; ++j)
    if (!(nodes_[static_cast<std::size_t>(j)] > nodes_[static_cast<std::size_t>(j - 1)]))
      throw std::invalid_argument("GradedMesh: nodes collapse, grading too strong for N");
}

GradedMesh GradedMesh::for_problem(double s, double decay_rate, int N) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("GradedMesh: s must lie in (0,1)");
  if (!(decay_rate > 0.0)) throw std::invalid_argument("GradedMesh: decay rate must be positive");
  const double se = std::min(s, 1.0 - s);
  return GradedMesh(8.0 / std::sqrt(decay_rate), N, std::max(1.0, 1.5 / se));
}

}  // namespace fracdtn
