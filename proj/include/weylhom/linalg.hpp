#pragma once

// Exact linear algebra over Q.
//
// Everything here is exact: coefficients are GMP rationals, eliminations are
// fraction-free over Z after clearing denominators row by row.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace weylhom {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (q > 0). Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

bool is_zero(const Vector& v);

/// Row-sparse matrix with exact entries. Zero entries are never stored.
class SparseMatrix {
public:
  using Row = std::map<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add_to(std::size_t r, std::size_t c, const Rational& value);

  const Row& row(std::size_t r) const { return data_[r]; }

  bool is_zero() const;
  std::size_t nonzeros() const;

  Vector apply(const Vector& v) const;
  /// Image of the basis vector e_c (column c) as a sparse map.
  std::map<std::size_t, Rational> column(std::size_t c) const;

  SparseMatrix transpose() const;

  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& operator-=(const SparseMatrix& other);
  SparseMatrix& operator*=(const Rational& scalar);

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const Rational& s) { return a *= s; }
  friend SparseMatrix operator*(const Rational& s, SparseMatrix a) { return a *= s; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix power(const SparseMatrix& a, unsigned exponent);

/// Determinant of a square integer matrix by Bareiss elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

/// Rank of the span of the given rows.
std::size_t rank(const std::vector<Vector>& rows, std::size_t ncols);

/// Basis of { x : row . x = 0 for every row }.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t ncols);

/// Incrementally maintained reduced echelon basis of a subspace of Q^n.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t ambient_dim) : n_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }

  /// Reduces v against the basis; returns the (possibly zero) remainder.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  /// Adds v if it is not already in the span. Returns true if the span grew.
  bool insert(const Vector& v);

  const std::vector<Vector>& basis() const noexcept { return basis_; }

private:
  std::size_t n_;
  std::vector<Vector> basis_;       // each normalized so its pivot entry is 1
  std::vector<std::size_t> pivots_; // pivot column of basis_[i]
};

} // namespace weylhom
