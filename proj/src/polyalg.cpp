#include "weylhom/polyalg.hpp"

#include "weylhom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <tuple>

namespace weylhom {

// ---------------------------------------------------------------- Exponents

Exponents Exponents::one(const Ambient& amb) {
  return {std::vector<int>(amb.k, 0), std::vector<int>(amb.l, 0)};
}

int Exponents::deg_t() const { return std::accumulate(t.begin(), t.end(), 0); }
int Exponents::deg_u() const { return std::accumulate(u.begin(), u.end(), 0); }

bool Exponents::is_one() const {
  return std::all_of(t.begin(), t.end(), [](int e) { return e == 0; }) &&
         std::all_of(u.begin(), u.end(), [](int e) { return e == 0; });
}

Exponents Exponents::t_part() const { return {t, std::vector<int>(u.size(), 0)}; }
Exponents Exponents::u_part() const { return {std::vector<int>(t.size(), 0), u}; }

Exponents Exponents::operator*(const Exponents& o) const {
  Exponents r = *this;
  for (std::size_t i = 0; i < r.t.size(); ++i)
    r.t[i] += o.t[i];
  for (std::size_t i = 0; i < r.u.size(); ++i)
    r.u[i] += o.u[i];
  return r;
}

bool operator<(const Exponents& a, const Exponents& b) {
  const int ua = a.deg_u(), ub = b.deg_u();
  if (ua != ub)
    return ua > ub;
  const int ta = a.deg_t(), tb = b.deg_t();
  if (ta != tb)
    return ta > tb;
  if (a.u != b.u)
    return a.u > b.u;
  return a.t > b.t;
}

// ---------------------------------------------------------------- Point

Point Point::base(const Ambient& amb) {
  return {std::vector<Rational>(amb.k, Rational(1)), std::vector<Rational>(amb.l, Rational(0))};
}

void Point::validate() const {
  for (std::size_t s = 0; s < t.size(); ++s)
    if (sgn(t[s]) == 0)
      throw ValidationError("t-coordinate " + std::to_string(s + 1) +
                            " of a point must be nonzero (t is a unit)");
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& x : t) {
    os << (first ? "" : ",") << x.get_str();
    first = false;
  }
  for (const auto& x : u) {
    os << (first ? "" : ",") << x.get_str();
    first = false;
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- RingElement

namespace {

void require_ambient(const Ambient& a, const Ambient& b) {
  if (!(a == b))
    throw ValidationError("ring elements live in different rings R_{" + std::to_string(a.k) + "," +
                          std::to_string(a.l) + "} and R_{" + std::to_string(b.k) + "," +
                          std::to_string(b.l) + "}");
}

void check_exponents(const Exponents& e, const Ambient& amb) {
  if (static_cast<int>(e.t.size()) != amb.k || static_cast<int>(e.u.size()) != amb.l)
    throw ValidationError("monomial does not match the ambient ring");
  for (int x : e.u)
    if (x < 0)
      throw ValidationError("u-variables cannot have negative exponents");
}

Rational rational_power(const Rational& base, int e) {
  Rational r = 1;
  Rational b = e < 0 ? Rational(1 / base) : base;
  for (int i = 0; i < std::abs(e); ++i)
    r *= b;
  return r;
}

} // namespace

RingElement::RingElement(Ambient amb, const Monomial& m) : amb_(amb) {
  check_exponents(m.exps, amb);
  add_term(m.exps, m.coeff);
}

RingElement RingElement::constant(Ambient amb, const Rational& c) {
  return RingElement(amb, Monomial{Exponents::one(amb), c});
}

RingElement RingElement::t(Ambient amb, int s, int exponent) {
  if (s < 1 || s > amb.k)
    throw ValidationError("no variable t" + std::to_string(s) + " in this ring");
  Exponents e = Exponents::one(amb);
  e.t[s - 1] = exponent;
  return RingElement(amb, Monomial{e, 1});
}

RingElement RingElement::u(Ambient amb, int r, int exponent) {
  if (r < 1 || r > amb.l)
    throw ValidationError("no variable u" + std::to_string(r) + " in this ring");
  Exponents e = Exponents::one(amb);
  e.u[r - 1] = exponent;
  return RingElement(amb, Monomial{e, 1});
}

void RingElement::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

Rational RingElement::evaluate(const Point& p) const {
  if (!(p.ambient() == amb_))
    throw ValidationError("point " + p.to_string() + " does not match the ambient ring");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (int s = 0; s < amb_.k; ++s)
      v *= rational_power(p.t[s], e.t[s]);
    for (int r = 0; r < amb_.l; ++r)
      v *= rational_power(p.u[r], e.u[r]);
    sum += v;
  }
  return sum;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  require_ambient(amb_, o.amb_);
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  require_ambient(amb_, o.amb_);
  for (const auto& [e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

RingElement& RingElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_)
    x *= c;
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_ambient(a.amb_, b.amb_);
  RingElement out(a.amb_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ea * eb, ca * cb);
  return out;
}

RingElement pow(const RingElement& a, unsigned exponent) {
  RingElement r = RingElement::constant(a.ambient(), 1);
  for (unsigned i = 0; i < exponent; ++i)
    r = r * a;
  return r;
}

// ---------------------------------------------------------------- text format

namespace {

std::string factors_text(const Exponents& e) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char var, std::size_t idx, int exp) {
    if (exp == 0)
      return;
    os << (first ? "" : "*") << var << idx + 1;
    if (exp != 1)
      os << '^' << exp;
    first = false;
  };
  for (std::size_t s = 0; s < e.t.size(); ++s)
    emit('t', s, e.t[s]);
  for (std::size_t r = 0; r < e.u.size(); ++r)
    emit('u', r, e.u[r]);
  return os.str();
}

// Body of a term with |coefficient|; the sign is emitted by the caller.
std::string term_body(const Exponents& e, const Rational& abs_coeff) {
  const bool unit = abs_coeff == 1;
  if (e.is_one())
    return abs_coeff.get_str();
  return unit ? factors_text(e) : abs_coeff.get_str() + "*" + factors_text(e);
}

template <typename Iterable, typename BodyFn>
std::string signed_sum(const Iterable& terms, BodyFn body) {
  if (terms.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const bool neg = sgn(c) < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    os << body(key, Rational(abs(c)));
    first = false;
  }
  return os.str();
}

class Parser {
public:
  Parser(const std::string& text, const Ambient& amb) : s_(text), amb_(amb) {}

  RingElement element() {
    RingElement out(amb_);
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      RingElement t = term();
      out += negative ? t * Rational(-1) : t;
      skip();
      if (pos_ == s_.size())
        break;
      const char c = s_[pos_];
      if (c != '+' && c != '-')
        fail("element", std::string("expected '+' or '-' but found '") + c + "'");
      negative = c == '-';
      ++pos_;
    }
    return out;
  }

private:
  RingElement term() {
    RingElement acc = RingElement::constant(amb_, 1);
    acc = acc * factor();
    while (true) {
      skip();
      if (peek() != '*')
        return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  RingElement factor() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits("factor");
      if (peek() == '/') {
        ++pos_;
        num += "/" + digits("factor");
      }
      return RingElement::constant(amb_, parse_rational(num));
    }
    if (c != 't' && c != 'u')
      fail("factor", c ? std::string("unexpected '") + c + "'" : "unexpected end of input");
    ++pos_;
    const int index = std::stoi(digits("variable"));
    int exponent = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      exponent = std::stoi(digits("exponent"));
      if (neg) {
        if (c == 'u')
          fail("exponent", "negative exponent on u" + std::to_string(index) +
                               " (only t-variables are invertible)");
        exponent = -exponent;
      }
    }
    if (c == 't') {
      if (index < 1 || index > amb_.k)
        fail("variable", "t" + std::to_string(index) + " is not a variable of R_{" +
                             std::to_string(amb_.k) + "," + std::to_string(amb_.l) + "}");
      return RingElement::t(amb_, index, exponent);
    }
    if (index < 1 || index > amb_.l)
      fail("variable", "u" + std::to_string(index) + " is not a variable of R_{" +
                           std::to_string(amb_.k) + "," + std::to_string(amb_.l) + "}");
    return RingElement::u(amb_, index, exponent);
  }

  std::string digits(const char* production) {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start)
      fail(production, "expected digits at position " + std::to_string(start));
    return s_.substr(start, pos_ - start);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& production, const std::string& what) const {
    throw ParseError(production, what);
  }

  const std::string& s_;
  Ambient amb_;
  std::size_t pos_ = 0;
};

} // namespace

std::string to_text(const Monomial& m) {
  RingElement e(Ambient{static_cast<int>(m.exps.t.size()), static_cast<int>(m.exps.u.size())}, m);
  return to_text(e);
}

std::string to_text(const RingElement& a) { return signed_sum(a.terms(), term_body); }

RingElement parse_ring_element(const std::string& text, const Ambient& amb) {
  return Parser(text, amb).element();
}

// ---------------------------------------------------------------- TensorPower

TensorPower TensorPower::embed(const RingElement& a, std::size_t slot, std::size_t arity) {
  if (slot >= arity)
    throw ValidationError("tensor slot out of range");
  TensorPower out(a.ambient(), arity);
  Key key(arity, Exponents::one(a.ambient()));
  for (const auto& [e, c] : a.terms()) {
    key[slot] = e;
    out.add_term(key, c);
  }
  return out;
}

TensorPower TensorPower::unit(Ambient amb, std::size_t arity) {
  TensorPower out(amb, arity);
  out.add_term(Key(arity, Exponents::one(amb)), 1);
  return out;
}

void TensorPower::add_term(const Key& key, const Rational& c) {
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

TensorPower TensorPower::permuted(const std::vector<std::size_t>& perm) const {
  TensorPower out(amb_, arity_);
  for (const auto& [key, c] : terms_) {
    Key k2(arity_);
    for (std::size_t i = 0; i < arity_; ++i)
      k2[i] = key[perm[i]];
    out.add_term(k2, c);
  }
  return out;
}

TensorPower& TensorPower::operator+=(const TensorPower& o) {
  for (const auto& [k, c] : o.terms_)
    add_term(k, c);
  return *this;
}

TensorPower& TensorPower::operator-=(const TensorPower& o) {
  for (const auto& [k, c] : o.terms_)
    add_term(k, -c);
  return *this;
}

TensorPower& TensorPower::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_)
    x *= c;
  return *this;
}

TensorPower operator*(const TensorPower& a, const TensorPower& b) {
  if (a.arity_ != b.arity_)
    throw ValidationError("tensor powers of different arity");
  require_ambient(a.amb_, b.amb_);
  TensorPower out(a.amb_, a.arity_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      TensorPower::Key k(a.arity_);
      for (std::size_t i = 0; i < a.arity_; ++i)
        k[i] = ka[i] * kb[i];
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

std::string to_text(const TensorPower& x) {
  return signed_sum(x.terms(), [](const TensorPower::Key& key, const Rational& abs_coeff) {
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i)
        out += " (x) ";
      if (i == 0 && abs_coeff != 1)
        out += key[0].is_one() ? abs_coeff.get_str() : abs_coeff.get_str() + "*" + factors_text(key[0]);
      else
        out += key[i].is_one() ? "1" : factors_text(key[i]);
    }
    return out;
  });
}

// ---------------------------------------------------------------- bialgebra

namespace {

Integer binomial(unsigned n, unsigned r) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

} // namespace

TensorElement comultiply(const Monomial& m, const Ambient& amb) {
  check_exponents(m.exps, amb);
  // Delta is multiplicative: t-part is group-like, each u_r^b expands binomially.
  const Exponents mt = m.exps.t_part();
  TensorElement out(amb, 2);
  out.add_term({mt, mt}, m.coeff);
  for (int r = 0; r < amb.l; ++r) {
    const int b = m.exps.u[r];
    if (b == 0)
      continue;
    TensorElement factor(amb, 2);
    for (int c = 0; c <= b; ++c) {
      Exponents left = Exponents::one(amb), right = Exponents::one(amb);
      left.u[r] = c;
      right.u[r] = b - c;
      factor.add_term({left, right}, Rational(binomial(b, c)));
    }
    out = out * factor;
  }
  return out;
}

TensorElement comultiply(const RingElement& a) {
  TensorElement out(a.ambient(), 2);
  for (const auto& [e, c] : a.terms())
    out += comultiply(Monomial{e, c}, a.ambient());
  return out;
}

Rational counit(const RingElement& a) {
  Rational sum = 0;
  for (const auto& [e, c] : a.terms())
    if (e.deg_u() == 0)
      sum += c;
  return sum;
}

TensorPower comultiply_slot(const TensorPower& x, std::size_t slot) {
  if (slot >= x.arity())
    throw ValidationError("tensor slot out of range");
  TensorPower out(x.ambient(), x.arity() + 1);
  for (const auto& [key, c] : x.terms()) {
    const TensorElement d = comultiply(Monomial{key[slot], c}, x.ambient());
    for (const auto& [pair, dc] : d.terms()) {
      TensorPower::Key k;
      k.reserve(x.arity() + 1);
      k.insert(k.end(), key.begin(), key.begin() + static_cast<long>(slot));
      k.push_back(pair[0]);
      k.push_back(pair[1]);
      k.insert(k.end(), key.begin() + static_cast<long>(slot) + 1, key.end());
      out.add_term(k, dc);
    }
  }
  return out;
}

TensorPower counit_slot(const TensorPower& x, std::size_t slot) {
  if (slot >= x.arity() || x.arity() < 2)
    throw ValidationError("tensor slot out of range");
  TensorPower out(x.ambient(), x.arity() - 1);
  for (const auto& [key, c] : x.terms()) {
    if (key[slot].deg_u() != 0)
      continue;
    TensorPower::Key k = key;
    k.erase(k.begin() + static_cast<long>(slot));
    out.add_term(k, c);
  }
  return out;
}

bool check_degree_bookkeeping(const Monomial& m, const Ambient& amb) {
  const int du = m.deg_u();
  if (du == 0)
    throw ValidationError("degree bookkeeping needs deg_u m > 0 (no cross terms)");
  const TensorElement d = comultiply(m, amb);
  const Exponents mt = m.exps.t_part();
  const TensorPower::Key main{m.exps, mt};
  auto it = d.terms().find(main);
  if (it == d.terms().end() || it->second != m.coeff)
    return false;
  for (const auto& [key, c] : d.terms()) {
    if (key == main)
      continue;
    const Exponents& left = key[0];
    const Exponents& right = key[1];
    if (left.t_part() != mt || right.t_part() != mt)
      return false;
    if (!(left.deg_u() < du && left.deg_u() + right.deg_u() == du))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------- symmetrizers

SymmetrizerContext::SymmetrizerContext(std::vector<int> r) : r_(std::move(r)) {
  for (int x : r_) {
    if (x < 0)
      throw ValidationError("block sizes must be nonnegative");
    offsets_.push_back(total_);
    total_ += static_cast<std::size_t>(x);
  }
}

TensorPower sym_element(const SymmetrizerContext& ctx, int block, const RingElement& a) {
  if (block < 1 || block > static_cast<int>(ctx.block_sizes().size()))
    throw ValidationError("block index " + std::to_string(block) + " out of range");
  const int size = ctx.block_sizes()[block - 1];
  if (size == 0)
    throw ValidationError("block " + std::to_string(block) + " is empty (r_i = 0)");
  TensorPower out(a.ambient(), ctx.total());
  for (int j = 0; j < size; ++j)
    out += TensorPower::embed(a, ctx.offset(block) + static_cast<std::size_t>(j), ctx.total());
  return out;
}

bool is_block_invariant(const SymmetrizerContext& ctx, const TensorPower& x) {
  if (x.arity() != ctx.total())
    throw ValidationError("tensor arity does not match r_lambda");
  std::vector<std::size_t> perm(ctx.total());
  for (std::size_t b = 0; b < ctx.block_sizes().size(); ++b) {
    const std::size_t start = ctx.offset(static_cast<int>(b) + 1);
    const std::size_t size = static_cast<std::size_t>(ctx.block_sizes()[b]);
    for (std::size_t j = 0; j + 1 < size; ++j) {
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::swap(perm[start + j], perm[start + j + 1]);
      if (!(x.permuted(perm) == x))
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- C(N,K)

std::vector<std::vector<Integer>> binom_matrix(unsigned n, unsigned k) {
  std::vector<std::vector<Integer>> m(n + 1, std::vector<Integer>(n + 1));
  for (unsigned s = 0; s <= n; ++s)
    for (unsigned r = 0; r <= n; ++r)
      m[s][r] = binomial(k + n - s, r);
  return m;
}

Integer binom_matrix_det(unsigned n, unsigned k) { return determinant(binom_matrix(n, k)); }

Integer predicted_binom_det(unsigned n) {
  return (static_cast<unsigned long>(n) * (n + 1) / 2) % 2 == 0 ? Integer(1) : Integer(-1);
}

// ---------------------------------------------------------------- automorphisms

ShiftAutomorphism::ShiftAutomorphism(Ambient amb, std::vector<Rational> t_scale,
                                     std::vector<Rational> u_shift)
    : amb_(amb), c_(std::move(t_scale)), b_(std::move(u_shift)) {
  if (static_cast<int>(c_.size()) != amb.k || static_cast<int>(b_.size()) != amb.l)
    throw ValidationError("automorphism data does not match the ambient ring");
  for (std::size_t s = 0; s < c_.size(); ++s)
    if (sgn(c_[s]) == 0)
      throw ValidationError("t" + std::to_string(s + 1) + " must map to a unit (zero scale)");
}

bool ShiftAutomorphism::is_identity() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c == 1; }) &&
         std::all_of(b_.begin(), b_.end(), [](const Rational& b) { return sgn(b) == 0; });
}

RingElement ShiftAutomorphism::apply(const RingElement& a) const {
  require_ambient(amb_, a.ambient());
  RingElement out(amb_);
  for (const auto& [e, c] : a.terms()) {
    Rational scale = c;
    for (int s = 0; s < amb_.k; ++s)
      scale *= rational_power(c_[s], e.t[s]);
    RingElement image(amb_, Monomial{e.t_part(), scale});
    for (int r = 0; r < amb_.l; ++r)
      if (e.u[r] > 0)
        image = image * pow(RingElement::u(amb_, r + 1) + RingElement::constant(amb_, b_[r]),
                            static_cast<unsigned>(e.u[r]));
    out += image;
  }
  return out;
}

ShiftAutomorphism ShiftAutomorphism::inverse() const {
  std::vector<Rational> c(c_.size()), b(b_.size());
  for (std::size_t s = 0; s < c.size(); ++s)
    c[s] = 1 / c_[s];
  for (std::size_t r = 0; r < b.size(); ++r)
    b[r] = -b_[r];
  return ShiftAutomorphism(amb_, c, b);
}

Point ShiftAutomorphism::image_point() const { return point_preimage(Point::base(amb_)); }

Point ShiftAutomorphism::point_preimage(const Point& p) const {
  // f in J_p  <=>  f(p) = 0, and phi(f)(q) = f(c q_t, q_u + b); so
  // phi(J_p) = J_q with q_t = p_t / c, q_u = p_u - b.
  Point q = p;
  for (std::size_t s = 0; s < q.t.size(); ++s)
    q.t[s] = p.t[s] / c_[s];
  for (std::size_t r = 0; r < q.u.size(); ++r)
    q.u[r] = p.u[r] - b_[r];
  return q;
}

ShiftAutomorphism shift_automorphism(const Ambient& amb, const Point& target) {
  target.validate();
  if (!(target.ambient() == amb))
    throw ValidationError("target point does not match the ambient ring");
  std::vector<Rational> c(amb.k), b(amb.l);
  for (int s = 0; s < amb.k; ++s)
    c[s] = 1 / target.t[s];
  for (int r = 0; r < amb.l; ++r)
    b[r] = -target.u[r];
  return ShiftAutomorphism(amb, c, b);
}

std::vector<RingElement> maximal_ideal_generators(const Point& p) {
  const Ambient amb = p.ambient();
  std::vector<RingElement> gens;
  for (int s = 0; s < amb.k; ++s)
    gens.push_back(RingElement::t(amb, s + 1) - RingElement::constant(amb, p.t[s]));
  for (int r = 0; r < amb.l; ++r)
    gens.push_back(RingElement::u(amb, r + 1) - RingElement::constant(amb, p.u[r]));
  return gens;
}

bool in_maximal_ideal(const RingElement& f, const Point& p) { return sgn(f.evaluate(p)) == 0; }

} // namespace weylhom
