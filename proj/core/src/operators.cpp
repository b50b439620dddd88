#include <fracdtn/operators.hpp>

#include <cmath>
#include <stdexcept>

#include <fracdtn/matrix_io.hpp>

namespace fracdtn {

namespace {

double param_number(const std::map<std::string, std::string>& params, const std::string& key,
                    double fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  std::size_t used = 0;
  const double v = std::stod(it->second, &used);
  if (used != it->second.size())
    throw std::invalid_argument("builtin operator: bad value for " + key);
  return v;
}

long param_count(const std::map<std::string, std::string>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("builtin operator: missing parameter " + key);
  const double v = std::stod(it->second);
  const long n = std::lround(v);
  if (n < 1 || static_cast<double>(n) != v)
    throw std::invalid_argument("builtin operator: " + key + " must be a positive integer");
  return n;
}

OperatorBundle certify_bundle(Matrix A, MeasureSpaceModel model) {
  SectorialOperator op = certify_sectorial(A, model);
  return OperatorBundle{std::move(op), std::move(model)};
}

OperatorBundle laplacian_1d(const std::map<std::string, std::string>& params) {
  const long n = param_count(params, "n");
  const double h = param_number(params, "h", 1.0 / (static_cast<double>(n) + 1.0));
  if (!(h > 0.0)) throw std::invalid_argument("builtin operator: h must be positive");
  const double scale = param_number(params, "scale", 1.0);
  const double shift = param_number(params, "shift", 0.0);
  Matrix A = Matrix::Zero(n, n);
  const double d = scale / (h * h);
  for (long i = 0; i < n; ++i) {
    A(i, i) = 2.0 * d + shift;
    if (i > 0) A(i, i - 1) = -d;
    if (i + 1 < n) A(i, i + 1) = -d;
  }
  return certify_bundle(std::move(A),
                        MeasureSpaceModel(RealVector::Constant(n, h), RealVector::Ones(n)));
}

OperatorBundle laplacian_2d(const std::map<std::string, std::string>& params) {
  const long nx = param_count(params, "nx");
  const long ny = param_count(params, "ny");
  const double h = param_number(params, "h", 1.0 / (static_cast<double>(nx) + 1.0));
  if (!(h > 0.0)) throw std::invalid_argument("builtin operator: h must be positive");
  const double scale = param_number(params, "scale", 1.0);
  const double shift = param_number(params, "shift", 0.0);
  const long n = nx * ny;
  Matrix A = Matrix::Zero(n, n);
  const double d = scale / (h * h);
  auto idx = [nx](long i, long j) { return j * nx + i; };
  for (long j = 0; j < ny; ++j)
    for (long i = 0; i < nx; ++i) {
      const long k = idx(i, j);
      A(k, k) = 4.0 * d + shift;
      if (i > 0) A(k, idx(i - 1, j)) = -d;
      if (i + 1 < nx) A(k, idx(i + 1, j)) = -d;
      if (j > 0) A(k, idx(i, j - 1)) = -d;
      if (j + 1 < ny) A(k, idx(i, j + 1)) = -d;
    }
  return certify_bundle(std::move(A),
                        MeasureSpaceModel(RealVector::Constant(n, h * h), RealVector::Ones(n)));
}

}  // namespace

OperatorBundle make_builtin(const std::string& name,
                            const std::map<std::string, std::string>& params) {
  if (name == "dirichlet_laplacian_1d") return laplacian_1d(params);
  if (name == "dirichlet_laplacian_2d") return laplacian_2d(params);
  if (name == "identity") {
    const long n = param_count(params, "n");
    return certify_bundle(Matrix::Identity(n, n), MeasureSpaceModel::unit(n));
  }
  throw std::invalid_argument("unknown builtin operator '" + name + "'");
}

OperatorBundle ingest_operator(const std::string& source, const std::string& format) {
  std::string fmt = format;
  if (fmt == "auto") {
    if (source.rfind("builtin:", 0) == 0)
      fmt = "builtin";
    else if (source.size() >= 4 && source.substr(source.size() - 4) == ".csv")
      fmt = "dense-csv";
    else
      fmt = "matrix-market";
  }
  if (fmt == "builtin") {
    std::string spec = source;
    if (spec.rfind("builtin:", 0) == 0) spec = spec.substr(8);
    std::string name = spec;
    std::map<std::string, std::string> params;
    const std::size_t q = spec.find('?');
    if (q != std::string::npos) {
      name = spec.substr(0, q);
      std::string rest = spec.substr(q + 1);
      std::size_t pos = 0;
      while (pos < rest.size()) {
        std::size_t amp = rest.find('&', pos);
        if (amp == std::string::npos) amp = rest.size();
        const std::string pair = rest.substr(pos, amp - pos);
        const std::size_t eq = pair.find('=');
        if (eq == std::string::npos || eq == 0)
          throw std::invalid_argument("builtin operator: malformed parameter '" + pair + "'");
        params[pair.substr(0, eq)] = pair.substr(eq + 1);
        pos = amp + 1;
      }
    }
    return make_builtin(name, params);
  }

  Matrix A;
  if (fmt == "matrix-market")
    A = load_matrix_market(source);
  else if (fmt == "dense-csv")
    A = load_dense_csv(source);
  else
    throw std::invalid_argument("unknown operator format '" + format + "'");
  if (A.rows() != A.cols())
    throw std::invalid_argument("operator file must contain a square matrix");
  MeasureSpaceModel model = MeasureSpaceModel::unit(A.rows());
  SectorialOperator op = certify_sectorial(A, model);
  return OperatorBundle{std::move(op), std::move(model)};
}

}  // namespace fracdtn
