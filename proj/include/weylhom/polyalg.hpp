#pragma once

// The ring R_{k,l} = Q[t_1^{+-1}, ..., t_k^{+-1}, u_1, ..., u_l] with its
// bialgebra structure
//
//   Delta(t_s^{+-1}) = t_s^{+-1} (x) t_s^{+-1},   Delta(u_r) = u_r (x) 1 + 1 (x) u_r,
//   eps(t_s) = 1,                               eps(u_r) = 0,
//
// tensor powers of R_{k,l}, the block-symmetrizer elements generating
// (A^{(x) r_lambda})^{S_lambda}, the binomial matrices C(N,K), and the affine
// automorphisms moving the base ideal I = (t_1-1, ..., t_k-1, u_1, ..., u_l).
//
// Text format for ring elements (printer output is canonical; the parser
// accepts it back bit-exactly):
//
//   element  := ["-"] term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := rational | variable ["^" exponent]
//   variable := ("t" | "u") index          1-based index
//   exponent := ["-"] digits               negative only on t-variables

#include "weylhom/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace weylhom {

struct Ambient {
  int k = 0; // Laurent variables t_1..t_k
  int l = 0; // polynomial variables u_1..u_l

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Exponent vector of a monomial m = m_t m_u.
struct Exponents {
  std::vector<int> t;
  std::vector<int> u; // nonnegative

  static Exponents one(const Ambient& amb);

  int deg_t() const;
  int deg_u() const;
  bool is_one() const;
  Exponents t_part() const;
  Exponents u_part() const;

  Exponents operator*(const Exponents& other) const;
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Canonical order used for all containers and printing: larger u-degree
/// first, then larger t-degree, then reverse-lexicographic on u then t.
bool operator<(const Exponents& a, const Exponents& b);

/// A point of Spec R_{k,l}: k nonzero t-coordinates and l u-coordinates.
struct Point {
  std::vector<Rational> t;
  std::vector<Rational> u;

  static Point base(const Ambient& amb); // t = 1, u = 0, the zero set of I
  Ambient ambient() const { return {static_cast<int>(t.size()), static_cast<int>(u.size())}; }
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    return a.t != b.t ? a.t < b.t : a.u < b.u;
  }
};

struct Monomial {
  Exponents exps;
  Rational coeff = 1;

  int deg_t() const { return exps.deg_t(); }
  int deg_u() const { return exps.deg_u(); }
  /// m_t, a unit of R_{k,l}
  Monomial t_part() const { return {exps.t_part(), 1}; }
  /// coeff * m_u
  Monomial u_part() const { return {exps.u_part(), coeff}; }
};

class RingElement {
public:
  using Terms = std::map<Exponents, Rational>;

  explicit RingElement(Ambient amb) : amb_(amb) {}
  RingElement(Ambient amb, const Monomial& m);

  static RingElement constant(Ambient amb, const Rational& c);
  static RingElement t(Ambient amb, int s, int exponent = 1);
  static RingElement u(Ambient amb, int r, int exponent = 1);

  const Ambient& ambient() const noexcept { return amb_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);
  Rational evaluate(const Point& p) const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const Rational& c);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const Rational& c) { return a *= c; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement&, const RingElement&) = default;

private:
  Ambient amb_;
  Terms terms_;
};

RingElement pow(const RingElement& a, unsigned exponent);

std::string to_text(const Monomial& m);
std::string to_text(const RingElement& a);
RingElement parse_ring_element(const std::string& text, const Ambient& amb);

/// Element of A^{(x) n}: sparse map from n-tuples of monomials to coefficients.
class TensorPower {
public:
  using Key = std::vector<Exponents>;

  TensorPower(Ambient amb, std::size_t arity) : amb_(amb), arity_(arity) {}

  /// 1 (x) ... (x) a (x) ... (x) 1 with a in the given slot.
  static TensorPower embed(const RingElement& a, std::size_t slot, std::size_t arity);
  /// 1 (x) ... (x) 1
  static TensorPower unit(Ambient amb, std::size_t arity);

  const Ambient& ambient() const noexcept { return amb_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Key& key, const Rational& c);
  /// Applies the slot permutation: slot i of the result is slot perm[i] of this.
  TensorPower permuted(const std::vector<std::size_t>& perm) const;

  TensorPower& operator+=(const TensorPower& o);
  TensorPower& operator-=(const TensorPower& o);
  TensorPower& operator*=(const Rational& c);
  friend TensorPower operator+(TensorPower a, const TensorPower& b) { return a += b; }
  friend TensorPower operator-(TensorPower a, const TensorPower& b) { return a -= b; }
  friend TensorPower operator*(const TensorPower& a, const TensorPower& b);
  friend bool operator==(const TensorPower&, const TensorPower&) = default;

private:
  Ambient amb_;
  std::size_t arity_;
  std::map<Key, Rational> terms_;
};

using TensorElement = TensorPower; // arity 2

std::string to_text(const TensorPower& x);

TensorElement comultiply(const Monomial& m, const Ambient& amb);
TensorElement comultiply(const RingElement& a);
Rational counit(const RingElement& a);

/// Applies Delta to one slot; the result has arity + 1.
TensorPower comultiply_slot(const TensorPower& x, std::size_t slot);
/// Applies eps to one slot; the result has arity - 1.
TensorPower counit_slot(const TensorPower& x, std::size_t slot);

/// Checks that every term of Delta(m) other than m (x) m_t has the form
/// m'_u m_t (x) m''_u m_t with deg_u m' < deg_u m and deg_u m' + deg_u m'' = deg_u m.
/// Throws ValidationError when deg_u m = 0.
bool check_degree_bookkeeping(const Monomial& m, const Ambient& amb);

/// Block structure of lambda = sum r_i omega_i: slots are split into
/// consecutive blocks of sizes r_1, ..., r_n.
class SymmetrizerContext {
public:
  explicit SymmetrizerContext(std::vector<int> r);

  const std::vector<int>& block_sizes() const noexcept { return r_; }
  std::size_t total() const noexcept { return total_; }
  std::size_t offset(int block) const { return offsets_[block - 1]; }

private:
  std::vector<int> r_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

/// sym^i_lambda(a): the sum of a over the slots of block i (1-based).
TensorPower sym_element(const SymmetrizerContext& ctx, int block, const RingElement& a);

/// Whether x is fixed by every adjacent transposition inside every block.
bool is_block_invariant(const SymmetrizerContext& ctx, const TensorPower& x);

/// C(N,K) = (binom(K+N-s, r))_{0 <= s,r <= N}
std::vector<std::vector<Integer>> binom_matrix(unsigned n, unsigned k);
/// Exact determinant of C(N,K) by fraction-free elimination.
Integer binom_matrix_det(unsigned n, unsigned k);
/// (-1)^{N(N+1)/2}
Integer predicted_binom_det(unsigned n);

/// The affine automorphism t_s -> c_s t_s, u_r -> u_r + b_r of R_{k,l}.
class ShiftAutomorphism {
public:
  /// Validates that every c_s is nonzero.
  ShiftAutomorphism(Ambient amb, std::vector<Rational> t_scale, std::vector<Rational> u_shift);

  const Ambient& ambient() const noexcept { return amb_; }
  const std::vector<Rational>& t_scale() const noexcept { return c_; }
  const std::vector<Rational>& u_shift() const noexcept { return b_; }

  bool is_identity() const;
  RingElement apply(const RingElement& a) const;
  ShiftAutomorphism inverse() const;
  /// The point whose maximal ideal is phi(I): t_s = 1/c_s, u_r = -b_r.
  Point image_point() const;
  /// phi(J_p) = J_q where q = point_preimage(p), the preimage of p under the induced map on points.
  Point point_preimage(const Point& p) const;

private:
  Ambient amb_;
  std::vector<Rational> c_;
  std::vector<Rational> b_;
};

/// The automorphism phi with phi(I) = J_target, the maximal ideal of target.
ShiftAutomorphism shift_automorphism(const Ambient& amb, const Point& target);

/// Generators t_s - p_s, u_r - p_r of the maximal ideal of p.
std::vector<RingElement> maximal_ideal_generators(const Point& p);
/// Membership in a maximal ideal of a point: f(p) = 0.
bool in_maximal_ideal(const RingElement& f, const Point& p);

} // namespace weylhom
