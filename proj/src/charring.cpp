#include "weylhom/charring.hpp"

#include "weylhom/errors.hpp"

#include <stdexcept>

namespace weylhom {

namespace {

Character::Coeff checked_add(Character::Coeff a, Character::Coeff b) {
  Character::Coeff r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("character coefficient overflow");
  return r;
}

Character::Coeff checked_mul(Character::Coeff a, Character::Coeff b) {
  Character::Coeff r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("character coefficient overflow");
  return r;
}

} // namespace

Character Character::monomial(const Weight& mu, Coeff coeff) {
  Character c(mu.root_system());
  c.add_term(mu.coords(), coeff);
  return c;
}

Character Character::one(RootSystemPtr rs) { return monomial(Weight::zero(std::move(rs))); }

Character::Coeff Character::coefficient(const Weight& mu) const {
  require_same_system(*rs_, *mu.root_system());
  auto it = terms_.find(mu.coords());
  return it == terms_.end() ? 0 : it->second;
}

Character::Coeff Character::mass() const {
  Coeff m = 0;
  for (const auto& [w, c] : terms_)
    m = checked_add(m, c);
  return m;
}

void Character::add_term(const IntVector& coords, Coeff coeff) {
  if (coeff == 0)
    return;
  if (static_cast<int>(coords.size()) != rs_->rank())
    throw ValidationError("character term has wrong number of coordinates");
  auto [it, inserted] = terms_.try_emplace(coords, coeff);
  if (!inserted)
    it->second = checked_add(it->second, coeff);
}

bool operator==(const Character& a, const Character& b) {
  return *a.rs_ == *b.rs_ && a.terms_ == b.terms_;
}

Character char_add(const Character& a, const Character& b) {
  require_same_system(*a.root_system(), *b.root_system());
  Character out = a;
  for (const auto& [w, c] : b.terms())
    out.add_term(w, c);
  return out;
}

Character char_mul(const Character& a, const Character& b) {
  require_same_system(*a.root_system(), *b.root_system());
  Character out(a.root_system());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      IntVector w = wa;
      for (std::size_t i = 0; i < w.size(); ++i)
        w[i] += wb[i];
      out.add_term(w, checked_mul(ca, cb));
    }
  }
  return out;
}

Character char_pow(const Character& a, unsigned exponent) {
  Character result = Character::one(a.root_system());
  for (unsigned e = 0; e < exponent; ++e)
    result = char_mul(result, a);
  return result;
}

Character::Coeff multiset_count(unsigned k, unsigned j) {
  if (j == 0)
    return 1;
  if (k == 0)
    return 0;
  // C(j+k-1, j) built up as a running product of exact binomials.
  Character::Coeff r = 1;
  for (unsigned m = 1; m <= j; ++m)
    r = checked_mul(r, k - 1 + m) / m;
  return r;
}

Character fundamental_invariant_character(const RootSystemPtr& rs, int node, unsigned k) {
  if (node < 1 || node > rs->rank())
    throw ValidationError("node " + std::to_string(node) + " out of range for " + rs->name());
  const auto i0 = compute_I0(*rs);
  if (i0.count(node))
    return Character::monomial(Weight::fundamental(rs, node));
  // Only types B and D have nodes outside I_0.
  Character out(rs);
  for (int j = 0; node - 2 * j >= 0; ++j)
    out.add_term(Weight::fundamental(rs, node - 2 * j).coords(), multiset_count(k, j));
  return out;
}

bool convention_dependent(const RootSystem& rs, int node, unsigned k) {
  return k == 0 && !compute_I0(rs).count(node);
}

HomRankTable hom_rank(const RootSystemPtr& rs, const std::vector<long>& s, unsigned k) {
  if (static_cast<int>(s.size()) != rs->rank())
    throw ValidationError("s has " + std::to_string(s.size()) + " entries, " + rs->name() +
                          " has " + std::to_string(rs->rank()) + " nodes");
  for (long x : s)
    if (x < 0)
      throw ValidationError("s must be nonnegative");
  Character product = Character::one(rs);
  for (int node = 1; node <= rs->rank(); ++node) {
    const long power = s[node - 1];
    if (power == 0)
      continue;
    product = char_mul(product, char_pow(fundamental_invariant_character(rs, node, k),
                                         static_cast<unsigned>(power)));
  }
  return HomRankTable{rs, s, k, std::move(product)};
}

bool remark_red_check(const RootSystemPtr& rs, unsigned k) {
  if ((rs->family() != Family::B && rs->family() != Family::D) || rs->rank() < 6)
    throw ValidationError("remark_red_check needs type B_n or D_n with n >= 6, got " + rs->name());
  std::vector<long> s(rs->rank(), 0);
  s[3] = 1;
  return hom_rank(rs, s, k).coefficient(Weight::fundamental(rs, 2)) > 0;
}

nlohmann::json to_json(const Character& c) {
  auto out = nlohmann::json::array();
  for (const auto& [w, coeff] : c.terms())
    out.push_back({{"weight", w}, {"coeff", coeff}});
  return out;
}

nlohmann::json to_json(const HomRankTable& t) { return to_json(t.entries); }

} // namespace weylhom
