#pragma once

#include <map>
#include <string>

#include <fracdtn/sectorial.hpp>

namespace fracdtn {

struct OperatorBundle {
  SectorialOperator op;
  MeasureSpaceModel model;
};

// Built-in operators:
//   dirichlet_laplacian_1d: n (required), h = 1/(n+1), scale = 1, shift = 0;
//     second-difference matrix (scale/h^2) tridiag(-1, 2, -1) + shift I on a
//     model with sigma = h, m = 1. Eigenvalues:
//     scale (4/h^2) sin^2(k pi / (2(n+1))) + shift.
//   dirichlet_laplacian_2d: nx, ny (required), h = 1/(nx+1), scale, shift;
//     five-point stencil on the tensor grid, sigma = h^2.
//   identity: n (required).
OperatorBundle make_builtin(const std::string& name,
                            const std::map<std::string, std::string>& params);

// source is either a file path or "builtin:<name>?k=v&k=v". format is one of
// "auto", "matrix-market", "dense-csv", "builtin"; auto picks by extension
// (.mtx/.mm -> MatrixMarket, .csv -> dense CSV) or the builtin: prefix.
// File-based operators use the unit model (sigma = m = 1). The assembled
// matrix is certified before being returned.
OperatorBundle ingest_operator(const std::string& source, const std::string& format = "auto");

}  // namespace fracdtn
