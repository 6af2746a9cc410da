#pragma once

#include "ctv/rational.hpp"

#include <cstddef>
#include <vector>

namespace ctv {

/// Dense rational matrix, row major.
struct Matrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// Rank by fraction-free (Bareiss) elimination on the cleared-denominator
/// matrix.
size_t rank(const Matrix& m);

/// Rank of a set of integer row vectors of length dim.
size_t rank_int(const std::vector<IntVec>& rows, size_t dim);

/// Integer basis of { x : r . x = 0 for every row r }.
std::vector<IntVec> kernel_basis_int(const std::vector<IntVec>& rows, size_t dim);

/// Exact solution of A x = b.
struct LinSolution {
  bool solvable = false;
  std::vector<Rational> x;                       // a particular solution
  std::vector<std::vector<Rational>> nullspace;  // basis of ker A
};
LinSolution solve_linear(const Matrix& A, const std::vector<Rational>& b);

/// True if every subset of at most k+1 of the points is affinely independent
/// (and the whole set affinely spans R^k).
bool is_general_position(const std::vector<Point>& pts, size_t k);

/// Affine rank of a point set (dimension of affine hull plus one).
size_t affine_rank(const std::vector<Point>& pts);

}  // namespace ctv
