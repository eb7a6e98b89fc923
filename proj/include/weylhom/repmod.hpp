#pragma once

// Exact finite-dimensional g-modules given by Chevalley generator matrices,
// evaluation modules at rational points, their tensor products, and the
// n^+ (x) A invariants of such tensor products.
//
// Explicit modules exist for type A only (sl_2 included); other families are
// handled at the character level by charring.

#include "weylhom/errors.hpp"
#include "weylhom/polyalg.hpp"
#include "weylhom/rootsys.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace weylhom {

enum class Generator { E, F, H };

class GModule {
public:
  /// Matrices are indexed by node (0-based vectors, node i at i-1). Checks the
  /// bracket and Serre relations, and that each h_i is diagonal with entries
  /// given by the basis weights; throws ValidationError otherwise.
  GModule(RootSystemPtr rs, std::vector<SparseMatrix> e, std::vector<SparseMatrix> f,
          std::vector<SparseMatrix> h, std::vector<IntVector> weights);

  const RootSystemPtr& root_system() const noexcept { return rs_; }
  std::size_t dim() const noexcept { return weights_.size(); }

  const SparseMatrix& matrix(Generator g, int node) const;
  const SparseMatrix& e(int node) const { return matrix(Generator::E, node); }
  const SparseMatrix& f(int node) const { return matrix(Generator::F, node); }
  const SparseMatrix& h(int node) const { return matrix(Generator::H, node); }

  const std::vector<IntVector>& weights() const noexcept { return weights_; }
  Weight weight(std::size_t b) const { return Weight(rs_, weights_[b]); }

  /// Basis indices of each weight space.
  std::map<IntVector, std::vector<std::size_t>> weight_spaces() const;

  /// The unique weight mu of the module with mu + alpha_i never a weight.
  /// Throws ValidationError if there are several.
  Weight highest_weight() const;
  /// A basis index of weight highest_weight() (the first one).
  std::size_t highest_index() const;

private:
  RootSystemPtr rs_;
  std::vector<SparseMatrix> e_, f_, h_;
  std::vector<IntVector> weights_;
};

using GModulePtr = std::shared_ptr<const GModule>;

/// V(m) for sl_2, basis v_0..v_m with h v_j = (m-2j) v_j.
GModule build_sl2_module(unsigned m);
/// Lambda^i C^n for sl_n (type A_{n-1}), basis the increasing i-subsets in
/// lexicographic order; the first basis vector has highest weight omega_i.
GModule build_sln_exterior(int n, int i);
/// The trivial one-dimensional module.
GModule trivial_module(const RootSystemPtr& rs);

/// Whether fundamental_module can build modules for this family.
bool has_explicit_modules(Family family);
/// V(omega_i); type A only (ValidationError otherwise). node 0 gives the trivial module.
GModule fundamental_module(const RootSystemPtr& rs, int node);

GModule tensor(const GModule& a, const GModule& b);

/// V (x) A / J_p^r with (x (x) a) acting as x (x) (multiplication by a).
/// jet_order 1 is the evaluation module V at p.
class EvaluationModule {
public:
  EvaluationModule(GModulePtr base, Point point, int jet_order = 1);
  EvaluationModule(const GModule& base, Point point, int jet_order = 1)
      : EvaluationModule(std::make_shared<const GModule>(base), std::move(point), jet_order) {}

  const GModule& base() const noexcept { return *base_; }
  const GModulePtr& base_ptr() const noexcept { return base_; }
  const Point& point() const noexcept { return point_; }
  int jet_order() const noexcept { return jet_order_; }
  Ambient ambient() const { return point_.ambient(); }

  /// dim A / J_p^r
  std::size_t local_dim() const noexcept { return jet_basis_.size(); }
  std::size_t dim() const noexcept { return base_->dim() * local_dim(); }

  /// Matrix of multiplication by a on A / J_p^r (basis: monomials in y = x - p).
  SparseMatrix local_action(const RingElement& a) const;

private:
  GModulePtr base_;
  Point point_;
  int jet_order_;
  std::vector<std::vector<int>> jet_basis_;
  std::vector<SparseMatrix> var_, var_inv_; // multiplication by x_i; by t_s^{-1}
};

class TensorConfiguration {
public:
  /// Factors must share one root system and one ambient ring.
  explicit TensorConfiguration(std::vector<EvaluationModule> factors);

  const std::vector<EvaluationModule>& factors() const noexcept { return factors_; }
  const RootSystemPtr& root_system() const { return factors_.front().base().root_system(); }
  Ambient ambient() const { return factors_.front().ambient(); }
  bool distinct_points() const noexcept { return distinct_; }

  std::size_t dim() const noexcept { return weights_.size(); }
  /// Sum over factors of local_dim(); the action of A factors through a
  /// quotient of at most this dimension.
  std::size_t algebra_bound() const noexcept { return algebra_bound_; }
  const std::vector<IntVector>& weights() const noexcept { return weights_; }
  std::map<IntVector, std::vector<std::size_t>> weight_spaces() const;

  /// Sum of the factors' highest weights.
  Weight top_weight() const;
  /// Tensor of the factors' highest vectors (with 1 in each local algebra).
  std::size_t top_index() const;

  /// Action of x (x) a, x the generator of the given kind at node.
  SparseMatrix loop_operator(Generator g, int node, const RingElement& a) const;

private:
  std::vector<EvaluationModule> factors_;
  bool distinct_ = true;
  std::size_t algebra_bound_ = 0;
  std::vector<IntVector> weights_;
};

/// Monomials with nonnegative exponents of total degree < bound.
std::vector<RingElement> spanning_monomials(const Ambient& amb, std::size_t bound);

struct InvariantSpace {
  std::size_t dim = 0;
  std::vector<Vector> basis; // full tensor coordinates
};

/// { v in (V_1 (x) ... (x) V_m)_mu : (e_i (x) a) v = 0 for all i and a in A }.
///
/// It suffices to take a among the monomials of degree < M, with M =
/// algebra_bound(). A acts through a quotient A/J of dimension at most M. Let
/// F_d be the image of the monomials of degree <= d; if F_d = F_{d+1} then F_d
/// is closed under the variables, hence under t_s^{-1} (a polynomial in t_s
/// on A/J), so F_d = A/J. The dimensions increase strictly until then, so
/// F_{M-1} = A/J. Finally n^+ (x) A is generated as a Lie algebra by the
/// e_i (x) a, as [e_i (x) a, e_j (x) b] = [e_i, e_j] (x) ab.
InvariantSpace loop_invariants(const TensorConfiguration& cfg, const Weight& mu);
/// The same condition on the whole tensor product (all weights).
InvariantSpace loop_invariants_all(const TensorConfiguration& cfg);

/// Raised by annihilator_exponent when the factors sit at several points:
/// the annihilator is then the product of one primary ideal per point.
class MixedPointsError : public ValidationError {
public:
  struct Component {
    Point point;
    int exponent;
  };
  explicit MixedPointsError(std::vector<Component> components);
  const std::vector<Component>& components() const noexcept { return components_; }

private:
  std::vector<Component> components_;
};

/// Minimal N with (g (x) J_p^N) acting as zero, p the common point. It is
/// enough to test e_i and f_i: they generate g, and [y (x) 1, z (x) a] = [y, z] (x) a.
int annihilator_exponent(const TensorConfiguration& cfg);

struct WeightCheck {
  Weight mu;
  std::size_t computed;
  std::uint64_t predicted;
};

struct FactorizationReport {
  Weight top;
  std::size_t top_dim = 0;                  // (a): expected 1
  std::vector<WeightCheck> below;           // (b): dominant mu < top
  std::size_t cyclic_dim = 0, total_dim = 0; // (c): expected equal
  std::optional<std::string> failure;       // first failing check, if any

  bool passed() const { return !failure; }
};

/// Checks the tensor-factorization statements on an evaluation-module
/// configuration: one-dimensional invariants at the top weight, invariant
/// dimensions equal to c_s(mu) below it, and cyclicity of the top vector
/// under f_i (x) A.
FactorizationReport verify_tensor_factorization(const TensorConfiguration& cfg);

/// Dimension of the span of U(n^- (x) A) applied to the top vector.
std::size_t lowering_span_dimension(const TensorConfiguration& cfg);

// ---------------------------------------------------------------- configuration text
//
//   config := family ":" rank ";" factor ("," factor)*
//   factor := node "@" rational
//
// e.g. "A:2; 1@0, 2@1". Points are u-coordinates over R_{0,1}, or nonzero
// t-coordinates over R_{1,0} when laurent is set.

struct ConfigSpec {
  Family family;
  int rank;
  std::vector<std::pair<int, Rational>> factors;
};

ConfigSpec parse_config_spec(const std::string& text);
TensorConfiguration build_configuration(const ConfigSpec& spec, bool laurent,
                                        int max_rank = kDefaultMaxRank);

} // namespace weylhom
