#include <fracdtn/matrix_io.hpp>

#include <algorithm>
#include <cctype>
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

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void bad(const std::string& what) { throw std::runtime_error("MatrixMarket: " + what); }

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t.empty()) throw std::runtime_error("parse_complex: empty entry");
  if (t.back() == 'i' || t.back() == 'I') {
    t.pop_back();
    // split at the sign of the imaginary part: last '+'/'-' that is not an
    // exponent sign and not the leading sign
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
      if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) {
      // pure imaginary, e.g. "2i" or "-3.5i"
      if (t.empty() || t == "+" || t == "-") t += "1";
      return Complex(0.0, std::stod(t));
    }
    const std::string re = t.substr(0, split);
    std::string im = t.substr(split);
    if (im == "+" || im == "-") im += "1";
    return Complex(std::stod(re), std::stod(im));
  }
  return Complex(std::stod(t), 0.0);
}

std::string format_complex(Complex v) {
  if (v.imag() == 0.0) return fmt17(v.real());
  std::string out = fmt17(v.real());
  const std::string im = fmt17(v.imag());
  if (!im.empty() && im[0] != '-') out += '+';
  out += im;
  out += 'i';
  return out;
}

Matrix read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) bad("empty stream");
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket") bad("missing %%MatrixMarket banner");
  object = lower(object);
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix") bad("unsupported object '" + object + "'");
  if (format != "coordinate" && format != "array") bad("unsupported format '" + format + "'");
  if (field == "pattern") bad("pattern matrices carry no values");
  if (field != "real" && field != "complex" && field != "integer")
    bad("unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "hermitian" &&
      symmetry != "skew-symmetric")
    bad("unsupported symmetry '" + symmetry + "'");

  auto next_data_line = [&](std::string& out_line) {
    while (std::getline(in, out_line)) {
      std::size_t p = out_line.find_first_not_of(" \t\r");
      if (p == std::string::npos) continue;
      if (out_line[p] == '%') continue;
      return true;
    }
    return false;
  };

  if (!next_data_line(line)) bad("missing size line");
  std::istringstream size(line);
  long rows = 0, cols = 0, nnz = 0;
  if (format == "coordinate") {
    if (!(size >> rows >> cols >> nnz)) bad("malformed size line");
  } else {
    if (!(size >> rows >> cols)) bad("malformed size line");
  }
  if (rows <= 0 || cols <= 0) bad("non-positive dimensions");
  Matrix A = Matrix::Zero(rows, cols);

  auto read_value = [&](std::istringstream& src) {
    if (field == "complex") {
      double re = 0.0, im = 0.0;
      if (!(src >> re >> im)) bad("malformed complex entry");
      return Complex(re, im);
    }
    double re = 0.0;
    if (!(src >> re)) bad("malformed entry");
    return Complex(re, 0.0);
  };

  auto place = [&](long i, long j, Complex v) {
    if (i < 1 || i > rows || j < 1 || j > cols) bad("index out of range");
    A(i - 1, j - 1) = v;
    if (i != j) {
      if (symmetry == "symmetric") A(j - 1, i - 1) = v;
      if (symmetry == "hermitian") A(j - 1, i - 1) = std::conj(v);
      if (symmetry == "skew-symmetric") A(j - 1, i - 1) = -v;
    }
  };

  if (format == "coordinate") {
    for (long k = 0; k < nnz; ++k) {
      if (!next_data_line(line)) bad("fewer entries than announced");
      std::istringstream entry(line);
      long i = 0, j = 0;
      if (!(entry >> i >> j)) bad("malformed coordinate entry");
      place(i, j, read_value(entry));
    }
  } else {
    const bool full = symmetry == "general";
    for (long j = 1; j <= cols; ++j) {
      const long i0 = full ? 1 : j + (symmetry == "skew-symmetric" ? 1 : 0);
      for (long i = i0; i <= rows; ++i) {
        if (!next_data_line(line)) bad("fewer entries than announced");
        std::istringstream entry(line);
        place(i, j, read_value(entry));
      }
    }
  }
  return A;
}

Matrix load_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const Matrix& A) {
  const bool complex_field = (A.imag().array() != 0.0).any();
  long nnz = 0;
  for (Index j = 0; j < A.cols(); ++j)
    for (Index i = 0; i < A.rows(); ++i)
      if (A(i, j) != Complex(0.0, 0.0)) ++nnz;
  out << "%%MatrixMarket matrix coordinate " << (complex_field ? "complex" : "real")
      << " general\n";
  out << A.rows() << ' ' << A.cols() << ' ' << nnz << "\n";
  for (Index j = 0; j < A.cols(); ++j)
    for (Index i = 0; i < A.rows(); ++i) {
      const Complex v = A(i, j);
      if (v == Complex(0.0, 0.0)) continue;
      out << (i + 1) << ' ' << (j + 1) << ' ' << fmt17(v.real());
      if (complex_field) out << ' ' << fmt17(v.imag());
      out << "\n";
    }
}

void save_matrix_market(const std::string& path, const Matrix& A) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_matrix_market(out, A);
  if (!out.good()) throw std::runtime_error("write to " + path + " failed");
}

Matrix read_dense_csv(std::istream& in) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    std::vector<Complex> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_complex(cell));
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error("dense CSV: ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("dense CSV: no data");
  Matrix A(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      A(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return A;
}

Matrix load_dense_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_dense_csv(in);
}

void write_dense_csv(std::ostream& out, const Matrix& A) {
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index j = 0; j < A.cols(); ++j) {
      if (j) out << ',';
      out << format_complex(A(i, j));
    }
    out << "\n";
  }
}

void save_dense_csv(const std::string& path, const Matrix& A) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_dense_csv(out, A);
  if (!out.good()) throw std::runtime_error("write to " + path + " failed");
}

Vector as_vector(const Matrix& A) {
  if (A.cols() == 1) return A.col(0);
  if (A.rows() == 1) return A.row(0).transpose();
  throw std::runtime_error("as_vector: matrix is not a single row or column");
}

}  // namespace fracdtn
