#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "weylhom/errors.hpp"
#include "weylhom/linalg.hpp"

#include <random>

using namespace weylhom;

namespace {

oracle::Rat to_oracle(const Rational& q) {
  return oracle::Rat(oracle::Int(q.get_num().get_str()), oracle::Int(q.get_den().get_str()));
}

oracle::Mat to_oracle(const std::vector<Vector>& rows, std::size_t cols) {
  oracle::Mat m;
  for (const auto& r : rows) {
    std::vector<oracle::Rat> x;
    for (std::size_t j = 0; j < cols; ++j)
      x.push_back(to_oracle(r[j]));
    m.push_back(x);
  }
  return m;
}

std::vector<Vector> random_rows(std::mt19937_64& rng, std::size_t r, std::size_t c, int sparsity) {
  std::uniform_int_distribution<int> val(-4, 4), coin(0, sparsity);
  std::vector<Vector> rows(r, Vector(c));
  for (auto& row : rows)
    for (auto& x : row)
      if (coin(rng) == 0) {
        x = Rational(val(rng), std::uniform_int_distribution<int>(1, 3)(rng));
        x.canonicalize();
      }
  return rows;
}

} // namespace

TEST_CASE("parse_rational accepts p, -p and p/q") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("sparse matrix arithmetic") {
  SparseMatrix a(2, 2), b(2, 2);
  a.set(0, 1, 1);
  b.set(1, 0, 1);
  const SparseMatrix h = commutator(a, b);
  CHECK(h.get(0, 0) == 1);
  CHECK(h.get(1, 1) == -1);
  CHECK(h.nonzeros() == 2);
  CHECK((a * b).get(0, 0) == 1);
  CHECK(power(a, 2).is_zero());
  CHECK(power(h, 0) == SparseMatrix::identity(2));
  a.set(0, 1, 0);
  CHECK(a.is_zero());

  SparseMatrix x(2, 3);
  x.set(0, 2, 5);
  x.set(1, 0, -1);
  CHECK(x.transpose().get(2, 0) == 5);
  CHECK(x.apply({1, 2, 3}) == Vector{15, -1});
  CHECK(x.column(2).at(0) == 5);
}

TEST_CASE("kron follows the row-major block convention") {
  SparseMatrix a(2, 2), b(2, 2);
  a.set(0, 1, 2);
  b.set(1, 0, 3);
  const SparseMatrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k.get(0 * 2 + 1, 1 * 2 + 0) == 6);
  CHECK(k.nonzeros() == 1);
}

TEST_CASE("Bareiss determinant matches the Leibniz expansion") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int n = 0; n <= 6; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
      std::vector<std::vector<oracle::Int>> o(n, std::vector<oracle::Int>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const int v = rep % 3 == 0 && j == 0 ? 0 : val(rng);
          m[i][j] = v;
          o[i][j] = v;
        }
      CHECK(determinant(m).get_str() == oracle::leibniz_det(o).str());
    }
  }
}

TEST_CASE("rank and nullspace agree with plain Gaussian elimination") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t r = 1 + rep % 7, c = 1 + (rep * 5) % 9;
    const auto rows = random_rows(rng, r, c, rep % 4);
    const std::size_t expected = oracle::rank(to_oracle(rows, c));
    CHECK(rank(rows, c) == expected);
    const auto ns = nullspace(rows, c);
    CHECK(ns.size() == c - expected);
    for (const auto& v : ns) {
      CHECK_FALSE(is_zero(v));
      for (const auto& row : rows) {
        Rational dot = 0;
        for (std::size_t j = 0; j < c; ++j)
          dot += row[j] * v[j];
        CHECK(dot == 0);
      }
    }
    CHECK(rank(ns, c) == ns.size());
  }
}

TEST_CASE("echelon basis tracks a span") {
  EchelonBasis basis(3);
  CHECK(basis.insert({1, 2, 3}));
  CHECK(basis.insert({0, 1, 1}));
  CHECK_FALSE(basis.insert({2, 5, 7}));
  CHECK(basis.dim() == 2);
  CHECK(basis.contains({1, 3, 4}));
  CHECK_FALSE(basis.contains({0, 0, 1}));
  CHECK(is_zero(basis.reduce({3, 7, 10})));
  CHECK_FALSE(basis.insert({0, 0, 0}));
}
