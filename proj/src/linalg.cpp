#include "weylhom/linalg.hpp"

#include "weylhom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace weylhom {

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  auto digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw ParseError("rational", std::string("expected ") + what + " in '" + text + "'");
    return text.substr(start, pos - start);
  };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Integer num(digits("numerator"));
  Integer den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = Integer(digits("denominator"));
    if (den == 0)
      throw ParseError("rational", "zero denominator in '" + text + "'");
  }
  if (pos != text.size())
    throw ParseError("rational", "trailing characters in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.data_[i].emplace(i, Rational(1));
  return m;
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Rational(0) : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (sgn(value) == 0)
    data_[r].erase(c);
  else
    data_[r][c] = value;
}

void SparseMatrix::add_to(std::size_t r, std::size_t c, const Rational& value) {
  if (sgn(value) == 0)
    return;
  auto [it, inserted] = data_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0)
      data_[r].erase(it);
  }
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_)
    n += r.size();
  return n;
}

Vector SparseMatrix::apply(const Vector& v) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[r])
      out[r] += x * v[c];
  return out;
}

std::map<std::size_t, Rational> SparseMatrix::column(std::size_t c) const {
  std::map<std::size_t, Rational> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    auto it = data_[r].find(c);
    if (it != data_[r].end())
      out.emplace(r, it->second);
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[r])
      t.data_[c].emplace(r, x);
  return t;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, x] : other.data_[r])
      add_to(r, c, x);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& other) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, x] : other.data_[r])
      add_to(r, c, -x);
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    for (auto& r : data_)
      r.clear();
    return *this;
  }
  for (auto& r : data_)
    for (auto& [c, x] : r)
      x *= scalar;
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (const auto& [k, x] : a.data_[r])
      for (const auto& [c, y] : b.data_[k])
        out.add_to(r, c, x * y);
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (const auto& [ca, x] : a.row(ra))
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (const auto& [cb, y] : b.row(rb))
          out.set(ra * b.rows() + rb, ca * b.cols() + cb, x * y);
  return out;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

SparseMatrix power(const SparseMatrix& a, unsigned exponent) {
  SparseMatrix result = SparseMatrix::identity(a.rows());
  SparseMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1u)
      result = result * base;
    exponent >>= 1;
    if (exponent > 0)
      base = base * base;
  }
  return result;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0)
        ++swap;
      if (swap == n)
        return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Clears denominators of a rational row: returns the primitive integer row.
std::vector<Integer> integer_row(const Vector& row) {
  Integer lcm = 1;
  for (const auto& x : row)
    if (sgn(x) != 0)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(row.size());
  Integer g = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    Integer num = row[i].get_num() * (lcm / row[i].get_den());
    out[i] = num;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

struct Echelon {
  std::vector<std::vector<Integer>> rows; // row echelon form over Z
  std::vector<std::size_t> pivots;
};

// Fraction-free row echelon form. Rows are kept primitive (content divided
// out) so entries stay small.
Echelon echelon(const std::vector<Vector>& input, std::size_t ncols) {
  std::vector<std::vector<Integer>> m;
  m.reserve(input.size());
  for (const auto& r : input)
    m.push_back(integer_row(r));

  Echelon e;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < m.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.size() && m[pivot][col] == 0)
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[lead], m[pivot]);
    const Integer p = m[lead][col];
    for (std::size_t i = lead + 1; i < m.size(); ++i) {
      if (m[i][col] == 0)
        continue;
      const Integer f = m[i][col];
      Integer g = 0;
      for (std::size_t j = col; j < ncols; ++j) {
        m[i][j] = m[i][j] * p - f * m[lead][j];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m[i][j].get_mpz_t());
      }
      if (g > 1)
        for (std::size_t j = col; j < ncols; ++j)
          mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), g.get_mpz_t());
    }
    e.pivots.push_back(col);
    ++lead;
  }
  m.resize(lead);
  e.rows = std::move(m);
  return e;
}

} // namespace

std::size_t rank(const std::vector<Vector>& rows, std::size_t ncols) {
  return echelon(rows, ncols).pivots.size();
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t ncols) {
  const Echelon e = echelon(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots)
    is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free])
      continue;
    Vector x(ncols);
    x[free] = 1;
    // Back substitution, bottom pivot row first.
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      const std::size_t pc = e.pivots[r];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < ncols; ++j)
        if (e.rows[r][j] != 0 && sgn(x[j]) != 0)
          acc += Rational(e.rows[r][j]) * x[j];
      x[pc] = -acc / Rational(e.rows[r][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Vector EchelonBasis::reduce(Vector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (sgn(f) == 0)
      continue;
    const Vector& b = basis_[i];
    for (std::size_t j = pivots_[i]; j < n_; ++j)
      if (sgn(b[j]) != 0)
        v[j] -= f * b[j];
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && sgn(r[p]) == 0)
    ++p;
  if (p == n_)
    return false;
  const Rational lead = r[p];
  for (std::size_t j = p; j < n_; ++j)
    r[j] /= lead;
  // Keep the basis fully reduced: clear column p from existing vectors.
  for (auto& b : basis_) {
    const Rational f = b[p];
    if (sgn(f) == 0)
      continue;
    for (std::size_t j = p; j < n_; ++j)
      if (sgn(r[j]) != 0)
        b[j] -= f * r[j];
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

} // namespace weylhom
