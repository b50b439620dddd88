#include <fracdtn/grid_function.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fracdtn {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

GridFunction::GridFunction(GradedMesh mesh, Index dim)
    : mesh_(std::move(mesh)), values_(Matrix::Zero(mesh_.num_nodes(), dim)) {
  if (dim < 1) throw std::invalid_argument("GridFunction: dimension must be positive");
}

GridFunction::GridFunction(GradedMesh mesh, Matrix values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  if (values_.rows() != mesh_.num_nodes())
    throw std::invalid_argument("GridFunction: row count must equal the node count");
  if (values_.cols() < 1) throw std::invalid_argument("GridFunction: dimension must be positive");
}

void GridFunction::to_csv(std::ostream& out) const {
  out << "# grid function: T=" << fmt17(mesh_.T()) << " N=" << mesh_.intervals()
      << " gamma=" << fmt17(mesh_.gamma()) << " dim=" << dim() << "\n# t";
  for (Index c = 0; c < dim(); ++c) out << ",Re u_" << (c + 1) << ",Im u_" << (c + 1);
  out << "\n";
  for (int j = 0; j < mesh_.num_nodes(); ++j) {
    out << fmt17(mesh_.node(j));
    for (Index c = 0; c < dim(); ++c)
      out << ',' << fmt17(values_(j, c).real()) << ',' << fmt17(values_(j, c).imag());
    out << "\n";
  }
}

void GridFunction::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("GridFunction: cannot open " + path + " for writing");
  to_csv(out);
  if (!out.good()) throw std::runtime_error("GridFunction: write to " + path + " failed");
}

GridFunction GridFunction::from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("GridFunction: missing header line");
  double T = 0.0, gamma = 0.0;
  int N = 0;
  long dim = 0;
  if (std::sscanf(line.c_str(), "# grid function: T=%lf N=%d gamma=%lf dim=%ld", &T, &N, &gamma,
                  &dim) != 4)
    throw std::runtime_error("GridFunction: malformed header: " + line);
  if (!std::getline(in, line) || line.rfind("# t", 0) != 0)
    throw std::runtime_error("GridFunction: missing column header");

  GradedMesh mesh(T, N, gamma);
  Matrix values(mesh.num_nodes(), dim);
  for (int j = 0; j < mesh.num_nodes(); ++j) {
    if (!std::getline(in, line))
      throw std::runtime_error("GridFunction: unexpected end of data");
    std::istringstream row(line);
    std::string cell;
    if (!std::getline(row, cell, ','))
      throw std::runtime_error("GridFunction: empty row");
    for (long c = 0; c < dim; ++c) {
      double re = 0.0, im = 0.0;
      if (!std::getline(row, cell, ',')) throw std::runtime_error("GridFunction: short row");
      re = std::stod(cell);
      if (!std::getline(row, cell, ',')) throw std::runtime_error("GridFunction: short row");
      im = std::stod(cell);
      values(j, c) = Complex(re, im);
    }
  }
  return GridFunction(std::move(mesh), std::move(values));
}

GridFunction GridFunction::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("GridFunction: cannot open " + path);
  return from_csv(in);
}

}  // namespace fracdtn
