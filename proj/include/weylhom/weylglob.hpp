#pragma once

// The bimodule (V (x) A)_h at window scale.
//
// V is a finite-dimensional g (x) A-module supported at the base point
// (t = 1, u = 0) and A = R_{k,l}. On V (x) A the right A-action is
// multiplication in the second slot and the left action is twisted by the
// comultiplication:
//
//   (x (x) a)(v (x) b) = sum_s (x (x) a'_s) v (x) a''_s b,   Delta(a) = sum_s a'_s (x) a''_s.
//
// Elements are kept on the finite window of monomials with u-degree <= D and
// every t-exponent in [-T, T]. Right multiplication that leaves the window
// raises WindowOverflow; left actions return unrestricted elements and
// callers decide what to do with terms outside the window.

#include "weylhom/repmod.hpp"

#include <json.hpp>

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace weylhom {

struct Window {
  int D = 0; // total u-degree cap
  int T = 0; // cap on |exponent| of each t_s
};

bool in_window(const Exponents& e, const Window& w);
/// Window monomials in canonical order.
std::vector<Exponents> window_monomials(const Ambient& amb, const Window& w);

enum class Verdict { Pass, Fail, Inconclusive };

const char* verdict_name(Verdict v);

struct CheckReport {
  std::string check;
  nlohmann::json params;
  nlohmann::json window;
  Verdict verdict = Verdict::Fail;
  std::optional<nlohmann::json> witness;

  bool passed() const { return verdict == Verdict::Pass; }
};

/// {check, params, window, verdict, witness?}
nlohmann::json to_json(const CheckReport& r);

/// Summary of a configuration: root system, ambient ring and one entry per factor.
nlohmann::json describe(const TensorConfiguration& cfg);

class TruncatedBimodule {
public:
  using Key = std::pair<std::size_t, Exponents>; // (basis index of V, monomial)
  using Element = std::map<Key, Rational>;

  /// Every factor of base must sit at the base point of R_{k,l}.
  TruncatedBimodule(TensorConfiguration base, Window window);

  const TensorConfiguration& base() const noexcept { return base_; }
  Ambient ambient() const { return base_.ambient(); }
  const Window& window() const noexcept { return window_; }
  const std::vector<Exponents>& monomials() const noexcept { return monomials_; }
  /// dim V * |window|
  std::size_t dim() const noexcept { return base_.dim() * monomials_.size(); }

  bool in_window(const Element& z) const;
  /// Coordinates in the basis v_b (x) m, index b * |window| + (index of m).
  /// Throws WindowOverflow if z has a term outside the window.
  Vector coordinates(const Element& z) const;
  Element element(const Vector& coords) const;

  Element basis_element(std::size_t b, const Exponents& m) const;
  /// w (x) 1, w the top vector of V.
  Element top() const;

  Element left_action(Generator g, int node, const RingElement& a, const Element& z) const;
  Element right_multiply(const Element& z, const RingElement& c) const;

  nlohmann::json window_json() const;

private:
  const SparseMatrix& operator_columns(Generator g, int node, const Exponents& m) const;

  TensorConfiguration base_;
  Window window_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::size_t> index_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::tuple<Generator, int, Exponents>, SparseMatrix> cache_; // transposed
};

/// Defining relations of the global Weyl module on w (x) 1 for every window
/// monomial m: (e_j (x) m)(w (x) 1) = 0, (h_j (x) m)(w (x) 1) = lambda_j w (x) m,
/// f_j^{lambda_j + 1}(w (x) 1) = 0.
CheckReport check_highest_relations(const TruncatedBimodule& tb);

struct SpanResult {
  std::size_t dim = 0;       // dim of (cyclic span) meet (inner window), a certified lower bound
  std::size_t target = 0;    // dim V * |inner window|
  std::size_t span_dim = 0;  // dim of the saturated span inside the outer window
  std::size_t discarded = 0; // generator images that left the outer window
  bool saturated = true;     // false when the budget ran out
};

/// Saturates w (x) 1 under x (x) m, x in {e_j, f_j, h_j}, m in {1, t_s^{+-1}, u_r},
/// keeping only images inside tb's window, then intersects with the inner
/// window. The inner window must be strictly smaller; V(0) is rejected.
SpanResult cyclic_span_dimension(const TruncatedBimodule& tb, const Window& inner,
                                 std::size_t budget = 1000000);
CheckReport cyclic_span_report(const TruncatedBimodule& tb, const Window& inner);

/// Rank of { (v_b (x) 1) * m : b, m in the window }.
std::size_t right_freeness_rank(const TruncatedBimodule& tb);
CheckReport freeness_report(const TruncatedBimodule& tb);

/// Window invariants { z : (e_j (x) m) z = 0 for window m } against
/// (invariants of V) (x) (window monomials). Inconclusive if the window misses
/// a monomial of degree < algebra_bound().
CheckReport invariants_equal_base(const TruncatedBimodule& tb);

/// Over R_{1,0}: whether { v : (e_j (x) t^d) v = 0 for |d| >= K } equals the
/// n^+ (x) A invariants. Uses d in [K, K+M) and (-K-M, -K], M = algebra_bound().
bool stabilization_check(const TensorConfiguration& cfg, int K);
CheckReport stabilization_report(const TensorConfiguration& cfg, int K);

/// Over R_{0,l}: whether the constraints with deg_u m in [K, K+N] cut out the
/// full window invariants, N the annihilator exponent of V. Throws
/// ValidationError if K < N and InconclusiveError if D < K + N.
bool u_degree_invariant_criterion(const TruncatedBimodule& tb, int K);
CheckReport u_degree_report(const TruncatedBimodule& tb, int K);

} // namespace weylhom
