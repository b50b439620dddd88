#pragma once

#include <iosfwd>
#include <string>

#include <fracdtn/types.hpp>

namespace fracdtn {

// MatrixMarket reader: coordinate and array formats; real, complex, and
// integer fields; general, symmetric, hermitian, and skew-symmetric symmetry.
// Pattern matrices are rejected.
Matrix read_matrix_market(std::istream& in);
Matrix load_matrix_market(const std::string& path);

// Writes coordinate/general with %.17g entries (complex field only when some
// entry has a nonzero imaginary part); exact zeros are omitted. A write/read
// round trip reproduces every entry bit-for-bit.
void write_matrix_market(std::ostream& out, const Matrix& A);
void save_matrix_market(const std::string& path, const Matrix& A);

// Dense CSV: one row per line, '#' lines are comments. Entries are either
// plain reals or "a+bi" / "a-bi".
Matrix read_dense_csv(std::istream& in);
Matrix load_dense_csv(const std::string& path);
void write_dense_csv(std::ostream& out, const Matrix& A);
void save_dense_csv(const std::string& path, const Matrix& A);

// A dense-CSV matrix with a single row or column, flattened.
Vector as_vector(const Matrix& A);

Complex parse_complex(const std::string& text);
std::string format_complex(Complex v);

}  // namespace fracdtn
