#pragma once

// Formal characters in Z[P] and the Hom-rank coefficients c_s(lambda).
//
// For s in Z_+^I, c_s(lambda) is the coefficient of e(lambda) in
//
//   prod_{i in I_0} e(omega_i)^{s_i}
//     * prod_{i not in I_0} ( sum_{j >= 0, i-2j >= 0} C(j+k-1, j) e(omega_{i-2j}) )^{s_i}
//
// with omega_0 = 0; it is the rank of Hom(W_A(lambda), W_A(s)) over A_s for
// A = R_{k,l}. At k = 0 we use C(-1, 0) = 1 and C(j-1, j) = 0 for j >= 1, so
// the factor for i not in I_0 collapses to e(omega_i).

#include "weylhom/rootsys.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace weylhom {

/// Sparse nonnegative-integer combination of e(mu), mu in P.
class Character {
public:
  using Coeff = std::uint64_t;

  explicit Character(RootSystemPtr rs) : rs_(std::move(rs)) {}

  /// e(mu)
  static Character monomial(const Weight& mu, Coeff coeff = 1);
  /// e(0), the unit of Z[P].
  static Character one(RootSystemPtr rs);

  const RootSystemPtr& root_system() const noexcept { return rs_; }
  /// Terms keyed by fundamental-weight coordinates, lexicographically ordered.
  const std::map<IntVector, Coeff>& terms() const noexcept { return terms_; }

  Coeff coefficient(const Weight& mu) const;
  Coeff mass() const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const IntVector& coords, Coeff coeff);

  friend bool operator==(const Character& a, const Character& b);

private:
  RootSystemPtr rs_;
  std::map<IntVector, Coeff> terms_;
};

Character char_add(const Character& a, const Character& b);
Character char_mul(const Character& a, const Character& b);
Character char_pow(const Character& a, unsigned exponent);

/// C(j+k-1, j): the number of multisets of size j from k elements.
Character::Coeff multiset_count(unsigned k, unsigned j);

/// Character of the n^+ (x) A invariants of the fundamental local Weyl module
/// for node i over R_{k,l}.
Character fundamental_invariant_character(const RootSystemPtr& rs, int node, unsigned k);

/// True when the output of fundamental_invariant_character depends on the
/// k = 0 binomial convention (k == 0 and node not in I_0).
bool convention_dependent(const RootSystem& rs, int node, unsigned k);

struct HomRankTable {
  RootSystemPtr rs;
  std::vector<long> s;
  unsigned k = 0;
  Character entries;

  Character::Coeff coefficient(const Weight& lambda) const { return entries.coefficient(lambda); }
};

/// c_s(lambda) for every lambda with nonzero coefficient. Throws
/// ValidationError on a negative or wrongly sized s.
HomRankTable hom_rank(const RootSystemPtr& rs, const std::vector<long>& s, unsigned k);

/// Whether Hom(W_A(omega_2), W_A(omega_4)) is predicted nonzero in types B_n, D_n, n >= 6.
bool remark_red_check(const RootSystemPtr& rs, unsigned k);

/// [{"weight":[...],"coeff":n}, ...] in lexicographic weight order.
nlohmann::json to_json(const Character& c);
nlohmann::json to_json(const HomRankTable& t);

} // namespace weylhom
