#pragma once

#include <iosfwd>
#include <string>

#include <fracdtn/mesh.hpp>

namespace fracdtn {

// A function of t sampled on a graded mesh with values in C^n; row j of the
// value matrix holds u(t_j).
class GridFunction {
 public:
  GridFunction(GradedMesh mesh, Index dim);
  GridFunction(GradedMesh mesh, Matrix values);

  const GradedMesh& mesh() const { return mesh_; }
  Index dim() const { return values_.cols(); }
  Matrix& values() { return values_; }
  const Matrix& values() const { return values_; }

  Vector at(int j) const { return values_.row(j).transpose(); }
  void set(int j, const Vector& v) { values_.row(j) = v.transpose(); }

  // CSV layout: two '#' header lines (mesh parameters, then the column names
  // t, Re u_1, Im u_1, ..., Re u_n, Im u_n) followed by one row per node,
  // every number printed with %.17g so a round trip is bit-exact.
  void to_csv(std::ostream& out) const;
  void save_csv(const std::string& path) const;
  static GridFunction from_csv(std::istream& in);
  static GridFunction load_csv(const std::string& path);

 private:
  GradedMesh mesh_;
  Matrix values_;
};

}  // namespace fracdtn
