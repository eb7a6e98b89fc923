#include "weylhom/repmod.hpp"

#include "weylhom/charring.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace weylhom {

namespace {

// ad(x)^n (y)
SparseMatrix ad_power(const SparseMatrix& x, SparseMatrix y, long n) {
  for (long i = 0; i < n; ++i)
    y = commutator(x, y);
  return y;
}

IntVector simple_root_weight(const RootSystem& rs, int node) {
  IntVector a(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    a[i] = rs.cartan()[i][node - 1];
  return a;
}

IntVector add(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

} // namespace

// ---------------------------------------------------------------- GModule

GModule::GModule(RootSystemPtr rs, std::vector<SparseMatrix> e, std::vector<SparseMatrix> f,
                 std::vector<SparseMatrix> h, std::vector<IntVector> weights)
    : rs_(std::move(rs)), e_(std::move(e)), f_(std::move(f)), h_(std::move(h)),
      weights_(std::move(weights)) {
  const int n = rs_->rank();
  const std::size_t d = weights_.size();
  if (d == 0)
    throw ValidationError("a module must have positive dimension");
  if (static_cast<int>(e_.size()) != n || static_cast<int>(f_.size()) != n ||
      static_cast<int>(h_.size()) != n)
    throw ValidationError("need one e, f and h matrix per node of " + rs_->name());
  for (const auto* mats : {&e_, &f_, &h_})
    for (const auto& m : *mats)
      if (m.rows() != d || m.cols() != d)
        throw ValidationError("generator matrix has the wrong size");
  for (const auto& w : weights_)
    if (static_cast<int>(w.size()) != n)
      throw ValidationError("basis weight has the wrong number of coordinates");

  auto fail = [&](const std::string& what) {
    throw ValidationError("generator relations fail: " + what);
  };
  for (int i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < d; ++b) {
      const auto& row = h_[i].row(b);
      for (const auto& [c, x] : row)
        if (c != b)
          fail("h" + std::to_string(i + 1) + " is not diagonal");
      if (h_[i].get(b, b) != weights_[b][i])
        fail("h" + std::to_string(i + 1) + " does not match the weight of basis vector " +
             std::to_string(b));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const long a = rs_->cartan()[i][j];
      if (!(commutator(h_[i], e_[j]) == e_[j] * Rational(a)))
        fail("[h" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + "]");
      if (!(commutator(h_[i], f_[j]) == f_[j] * Rational(-a)))
        fail("[h" + std::to_string(i + 1) + ", f" + std::to_string(j + 1) + "]");
      const SparseMatrix ef = commutator(e_[i], f_[j]);
      if (i == j ? !(ef == h_[i]) : !ef.is_zero())
        fail("[e" + std::to_string(i + 1) + ", f" + std::to_string(j + 1) + "]");
      if (i != j) {
        if (!ad_power(e_[i], e_[j], 1 - a).is_zero())
          fail("Serre relation for e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1));
        if (!ad_power(f_[i], f_[j], 1 - a).is_zero())
          fail("Serre relation for f" + std::to_string(i + 1) + ", f" + std::to_string(j + 1));
      }
    }
  }
}

const SparseMatrix& GModule::matrix(Generator g, int node) const {
  if (node < 1 || node > rs_->rank())
    throw ValidationError("node " + std::to_string(node) + " out of range for " + rs_->name());
  switch (g) {
  case Generator::E: return e_[node - 1];
  case Generator::F: return f_[node - 1];
  case Generator::H: break;
  }
  return h_[node - 1];
}

std::map<IntVector, std::vector<std::size_t>> GModule::weight_spaces() const {
  std::map<IntVector, std::vector<std::size_t>> out;
  for (std::size_t b = 0; b < weights_.size(); ++b)
    out[weights_[b]].push_back(b);
  return out;
}

Weight GModule::highest_weight() const {
  const auto spaces = weight_spaces();
  std::vector<IntVector> maximal;
  for (const auto& [w, idx] : spaces) {
    bool top = true;
    for (int i = 1; i <= rs_->rank() && top; ++i)
      top = !spaces.count(add(w, simple_root_weight(*rs_, i)));
    if (top)
      maximal.push_back(w);
  }
  if (maximal.size() != 1)
    throw ValidationError("module has " + std::to_string(maximal.size()) + " maximal weights");
  return Weight(rs_, maximal.front());
}

std::size_t GModule::highest_index() const {
  const IntVector top = highest_weight().coords();
  return static_cast<std::size_t>(std::find(weights_.begin(), weights_.end(), top) - weights_.begin());
}

// ---------------------------------------------------------------- constructions

GModule build_sl2_module(unsigned m) {
  auto rs = build_root_system(Family::A, 1);
  const std::size_t d = m + 1;
  SparseMatrix e(d, d), f(d, d), h(d, d);
  std::vector<IntVector> weights;
  for (std::size_t j = 0; j < d; ++j) {
    const long wt = static_cast<long>(m) - 2 * static_cast<long>(j);
    h.set(j, j, wt);
    weights.push_back({wt});
    if (j > 0)
      e.set(j - 1, j, static_cast<long>(m - j + 1));
    if (j + 1 < d)
      f.set(j + 1, j, static_cast<long>(j + 1));
  }
  return GModule(rs, {e}, {f}, {h}, weights);
}

namespace {

GModule exterior_module(const RootSystemPtr& rs, int i) {
  const int n = rs->rank() + 1;
  // Increasing i-subsets of {1..n} in lexicographic order.
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur(i);
  for (int j = 0; j < i; ++j)
    cur[j] = j + 1;
  while (true) {
    subsets.push_back(cur);
    int j = i - 1;
    while (j >= 0 && cur[j] == n - i + j + 1)
      --j;
    if (j < 0)
      break;
    ++cur[j];
    for (int t = j + 1; t < i; ++t)
      cur[t] = cur[t - 1] + 1;
  }
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t b = 0; b < subsets.size(); ++b)
    index[subsets[b]] = b;

  const std::size_t d = subsets.size();
  const int r = rs->rank();
  std::vector<SparseMatrix> e(r, SparseMatrix(d, d)), f(r, SparseMatrix(d, d)), h(r, SparseMatrix(d, d));
  std::vector<IntVector> weights(d, IntVector(r, 0));
  // E_a = E_{a,a+1} sends e_{a+1} to e_a; replacing a+1 by a keeps the wedge sorted.
  for (std::size_t b = 0; b < d; ++b) {
    const std::vector<int>& s = subsets[b];
    auto has = [&](int x) { return std::binary_search(s.begin(), s.end(), x); };
    for (int a = 1; a <= r; ++a) {
      const long wt = (has(a) ? 1 : 0) - (has(a + 1) ? 1 : 0);
      weights[b][a - 1] = wt;
      h[a - 1].set(b, b, wt);
      if (has(a + 1) && !has(a)) {
        std::vector<int> t = s;
        *std::find(t.begin(), t.end(), a + 1) = a;
        e[a - 1].set(index.at(t), b, 1);
      }
      if (has(a) && !has(a + 1)) {
        std::vector<int> t = s;
        *std::find(t.begin(), t.end(), a) = a + 1;
        f[a - 1].set(index.at(t), b, 1);
      }
    }
  }
  return GModule(rs, e, f, h, weights);
}

} // namespace

GModule build_sln_exterior(int n, int i) {
  if (n < 2)
    throw ValidationError("sl_n needs n >= 2");
  if (i < 1 || i > n - 1)
    throw ValidationError("exterior power " + std::to_string(i) + " out of range 1.." +
                          std::to_string(n - 1));
  return exterior_module(build_root_system(Family::A, n - 1, std::max(n - 1, kDefaultMaxRank)), i);
}

GModule trivial_module(const RootSystemPtr& rs) {
  const int r = rs->rank();
  return GModule(rs, std::vector<SparseMatrix>(r, SparseMatrix(1, 1)),
                 std::vector<SparseMatrix>(r, SparseMatrix(1, 1)),
                 std::vector<SparseMatrix>(r, SparseMatrix(1, 1)), {IntVector(r, 0)});
}

bool has_explicit_modules(Family family) { return family == Family::A; }

GModule fundamental_module(const RootSystemPtr& rs, int node) {
  if (!has_explicit_modules(rs->family()))
    throw ValidationError("explicit modules are only available for type A (got " + rs->name() + ")");
  if (node < 0 || node > rs->rank())
    throw ValidationError("node " + std::to_string(node) + " out of range for " + rs->name());
  return node == 0 ? trivial_module(rs) : exterior_module(rs, node);
}

GModule tensor(const GModule& a, const GModule& b) {
  require_same_system(*a.root_system(), *b.root_system());
  const int r = a.root_system()->rank();
  const SparseMatrix ia = SparseMatrix::identity(a.dim()), ib = SparseMatrix::identity(b.dim());
  std::vector<SparseMatrix> e, f, h;
  for (int i = 1; i <= r; ++i) {
    e.push_back(kron(a.e(i), ib) + kron(ia, b.e(i)));
    f.push_back(kron(a.f(i), ib) + kron(ia, b.f(i)));
    h.push_back(kron(a.h(i), ib) + kron(ia, b.h(i)));
  }
  std::vector<IntVector> weights;
  for (const auto& wa : a.weights())
    for (const auto& wb : b.weights())
      weights.push_back(add(wa, wb));
  return GModule(a.root_system(), e, f, h, weights);
}

// ---------------------------------------------------------------- EvaluationModule

EvaluationModule::EvaluationModule(GModulePtr base, Point point, int jet_order)
    : base_(std::move(base)), point_(std::move(point)), jet_order_(jet_order) {
  if (!base_)
    throw ValidationError("evaluation module without a base module");
  point_.validate();
  if (jet_order_ < 1)
    throw ValidationError("jet order must be at least 1");

  const Ambient amb = point_.ambient();
  const int nv = amb.k + amb.l;
  // Exponent vectors of total degree < jet_order, by degree then lexicographically.
  std::vector<std::vector<int>> layer{std::vector<int>(nv, 0)};
  for (int deg = 0; deg < jet_order_; ++deg) {
    jet_basis_.insert(jet_basis_.end(), layer.begin(), layer.end());
    std::set<std::vector<int>> next;
    for (const auto& a : layer)
      for (int v = 0; v < nv; ++v) {
        auto b = a;
        ++b[v];
        next.insert(b);
      }
    layer.assign(next.begin(), next.end());
  }
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t j = 0; j < jet_basis_.size(); ++j)
    index[jet_basis_[j]] = j;

  const std::size_t ld = jet_basis_.size();
  for (int v = 0; v < nv; ++v) {
    const Rational& p = v < amb.k ? point_.t[v] : point_.u[v - amb.k];
    SparseMatrix y(ld, ld);
    for (std::size_t j = 0; j < ld; ++j) {
      auto b = jet_basis_[j];
      ++b[v];
      auto it = index.find(b);
      if (it != index.end())
        y.set(it->second, j, 1);
    }
    var_.push_back(SparseMatrix::identity(ld) * p + y);
    if (v < amb.k) {
      // (p + y)^{-1} = p^{-1} sum_j (-y/p)^j, finite since y is nilpotent.
      const SparseMatrix q = y * Rational(-1 / p);
      SparseMatrix term = SparseMatrix::identity(ld), sum(ld, ld);
      while (!term.is_zero()) {
        sum += term;
        term = term * q;
      }
      var_inv_.push_back(sum * Rational(1 / p));
    }
  }
}

SparseMatrix EvaluationModule::local_action(const RingElement& a) const {
  if (!(a.ambient() == ambient()))
    throw ValidationError("ring element does not match the ambient ring of the point");
  const std::size_t ld = local_dim();
  if (ld == 1) {
    SparseMatrix m(1, 1);
    m.set(0, 0, a.evaluate(point_));
    return m;
  }
  const Ambient amb = ambient();
  SparseMatrix out(ld, ld);
  for (const auto& [e, c] : a.terms()) {
    SparseMatrix m = SparseMatrix::identity(ld) * c;
    for (int s = 0; s < amb.k; ++s)
      if (e.t[s] != 0)
        m = m * power(e.t[s] > 0 ? var_[s] : var_inv_[s], static_cast<unsigned>(std::abs(e.t[s])));
    for (int r = 0; r < amb.l; ++r)
      if (e.u[r] != 0)
        m = m * power(var_[amb.k + r], static_cast<unsigned>(e.u[r]));
    out += m;
  }
  return out;
}

// ---------------------------------------------------------------- TensorConfiguration

TensorConfiguration::TensorConfiguration(std::vector<EvaluationModule> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty())
    throw ValidationError("a configuration needs at least one factor");
  const auto& rs = *factors_.front().base().root_system();
  const Ambient amb = factors_.front().ambient();
  for (const auto& f : factors_) {
    require_same_system(rs, *f.base().root_system());
    if (!(f.ambient() == amb))
      throw ValidationError("factors live over different rings");
  }
  std::set<Point> seen;
  for (const auto& f : factors_) {
    if (!seen.insert(f.point()).second)
      distinct_ = false;
    algebra_bound_ += f.local_dim();
  }

  weights_ = {IntVector(rs.rank(), 0)};
  for (const auto& f : factors_) {
    std::vector<IntVector> next;
    next.reserve(weights_.size() * f.dim());
    for (const auto& w : weights_)
      for (std::size_t b = 0; b < f.base().dim(); ++b)
        for (std::size_t j = 0; j < f.local_dim(); ++j)
          next.push_back(add(w, f.base().weights()[b]));
    weights_ = std::move(next);
  }
}

std::map<IntVector, std::vector<std::size_t>> TensorConfiguration::weight_spaces() const {
  std::map<IntVector, std::vector<std::size_t>> out;
  for (std::size_t b = 0; b < weights_.size(); ++b)
    out[weights_[b]].push_back(b);
  return out;
}

Weight TensorConfiguration::top_weight() const {
  Weight top = Weight::zero(root_system());
  for (const auto& f : factors_)
    top = top + f.base().highest_weight();
  return top;
}

std::size_t TensorConfiguration::top_index() const {
  std::size_t idx = 0;
  for (const auto& f : factors_)
    idx = idx * f.dim() + f.base().highest_index() * f.local_dim();
  return idx;
}

SparseMatrix TensorConfiguration::loop_operator(Generator g, int node, const RingElement& a) const {
  SparseMatrix out(dim(), dim());
  std::size_t before = 1;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const auto& f = factors_[j];
    const std::size_t after = dim() / (before * f.dim());
    const SparseMatrix& x = f.base().matrix(g, node);
    if (!x.is_zero()) {
      const SparseMatrix local = f.local_action(a);
      if (!local.is_zero())
        out += kron(kron(SparseMatrix::identity(before), kron(x, local)),
                    SparseMatrix::identity(after));
    }
    before *= f.dim();
  }
  return out;
}

// ---------------------------------------------------------------- invariants

std::vector<RingElement> spanning_monomials(const Ambient& amb, std::size_t bound) {
  std::vector<RingElement> out;
  const int nv = amb.k + amb.l;
  std::vector<std::vector<int>> layer{std::vector<int>(nv, 0)};
  for (std::size_t deg = 0; deg < bound; ++deg) {
    for (const auto& a : layer) {
      Exponents e = Exponents::one(amb);
      for (int v = 0; v < nv; ++v)
        (v < amb.k ? e.t[v] : e.u[v - amb.k]) = a[v];
      out.emplace_back(amb, Monomial{e, 1});
    }
    std::set<std::vector<int>> next;
    for (const auto& a : layer)
      for (int v = 0; v < nv; ++v) {
        auto b = a;
        ++b[v];
        next.insert(b);
      }
    layer.assign(next.begin(), next.end());
  }
  return out;
}

namespace {

// Null space of the stacked operators restricted to the given columns.
InvariantSpace restricted_nullspace(const std::vector<SparseMatrix>& ops,
                                    const std::vector<std::size_t>& cols, std::size_t full_dim) {
  std::map<std::size_t, std::size_t> local;
  for (std::size_t j = 0; j < cols.size(); ++j)
    local[cols[j]] = j;
  std::vector<Vector> rows;
  for (const auto& op : ops) {
    for (std::size_t r = 0; r < op.rows(); ++r) {
      Vector row(cols.size());
      bool any = false;
      for (const auto& [c, x] : op.row(r)) {
        auto it = local.find(c);
        if (it != local.end()) {
          row[it->second] = x;
          any = true;
        }
      }
      if (any)
        rows.push_back(std::move(row));
    }
  }
  InvariantSpace out;
  for (const auto& v : nullspace(rows, cols.size())) {
    Vector full(full_dim);
    for (std::size_t j = 0; j < cols.size(); ++j)
      full[cols[j]] = v[j];
    out.basis.push_back(std::move(full));
  }
  out.dim = out.basis.size();
  return out;
}

std::vector<SparseMatrix> raising_constraints(const TensorConfiguration& cfg) {
  std::vector<SparseMatrix> ops;
  const auto monomials = spanning_monomials(cfg.ambient(), cfg.algebra_bound());
  for (int i = 1; i <= cfg.root_system()->rank(); ++i)
    for (const auto& m : monomials)
      ops.push_back(cfg.loop_operator(Generator::E, i, m));
  return ops;
}

} // namespace

InvariantSpace loop_invariants(const TensorConfiguration& cfg, const Weight& mu) {
  require_same_system(*cfg.root_system(), *mu.root_system());
  const auto spaces = cfg.weight_spaces();
  auto it = spaces.find(mu.coords());
  if (it == spaces.end())
    return {};
  return restricted_nullspace(raising_constraints(cfg), it->second, cfg.dim());
}

InvariantSpace loop_invariants_all(const TensorConfiguration& cfg) {
  std::vector<std::size_t> cols(cfg.dim());
  for (std::size_t j = 0; j < cols.size(); ++j)
    cols[j] = j;
  return restricted_nullspace(raising_constraints(cfg), cols, cfg.dim());
}

// ---------------------------------------------------------------- annihilators

namespace {

std::string describe(const std::vector<MixedPointsError::Component>& comps) {
  std::ostringstream os;
  os << "factors sit at " << comps.size() << " distinct points; annihilator is";
  for (const auto& c : comps)
    os << " J" << c.point.to_string() << "^" << c.exponent;
  return os.str();
}

// All products of n ideal generators (as multisets).
std::vector<RingElement> ideal_power_generators(const std::vector<RingElement>& gens, int n,
                                                const Ambient& amb) {
  std::vector<std::pair<RingElement, std::size_t>> layer{{RingElement::constant(amb, 1), 0}};
  for (int step = 0; step < n; ++step) {
    std::vector<std::pair<RingElement, std::size_t>> next;
    for (const auto& [p, first] : layer)
      for (std::size_t g = first; g < gens.size(); ++g)
        next.emplace_back(p * gens[g], g);
    layer = std::move(next);
  }
  std::vector<RingElement> out;
  for (auto& [p, first] : layer)
    out.push_back(std::move(p));
  return out;
}

} // namespace

MixedPointsError::MixedPointsError(std::vector<Component> components)
    : ValidationError(describe(components)), components_(std::move(components)) {}

int annihilator_exponent(const TensorConfiguration& cfg) {
  std::map<Point, std::vector<EvaluationModule>> by_point;
  for (const auto& f : cfg.factors())
    by_point[f.point()].push_back(f);
  if (by_point.size() > 1) {
    std::vector<MixedPointsError::Component> comps;
    for (const auto& [p, fs] : by_point)
      comps.push_back({p, annihilator_exponent(TensorConfiguration(fs))});
    throw MixedPointsError(std::move(comps));
  }

  const Point& p = cfg.factors().front().point();
  const Ambient amb = cfg.ambient();
  const auto gens = maximal_ideal_generators(p);
  const auto monomials = spanning_monomials(amb, cfg.algebra_bound());
  int upper = 0;
  for (const auto& f : cfg.factors())
    upper = std::max(upper, f.jet_order());

  for (int n = 0; n < upper; ++n) {
    bool kills = true;
    for (const auto& g : ideal_power_generators(gens, n, amb)) {
      for (const auto& m : monomials) {
        const RingElement a = g * m;
        for (int i = 1; i <= cfg.root_system()->rank() && kills; ++i)
          kills = cfg.loop_operator(Generator::E, i, a).is_zero() &&
                  cfg.loop_operator(Generator::F, i, a).is_zero();
        if (!kills)
          break;
      }
      if (!kills)
        break;
    }
    if (kills)
      return n;
  }
  return upper; // J_p^r kills A / J_p^r
}

// ---------------------------------------------------------------- factorization

std::size_t lowering_span_dimension(const TensorConfiguration& cfg) {
  std::vector<SparseMatrix> ops;
  for (int i = 1; i <= cfg.root_system()->rank(); ++i)
    for (const auto& m : spanning_monomials(cfg.ambient(), cfg.algebra_bound()))
      ops.push_back(cfg.loop_operator(Generator::F, i, m));

  EchelonBasis span(cfg.dim());
  Vector top(cfg.dim());
  top[cfg.top_index()] = 1;
  std::deque<Vector> todo;
  span.insert(top);
  todo.push_back(top);
  while (!todo.empty()) {
    const Vector v = std::move(todo.front());
    todo.pop_front();
    for (const auto& op : ops) {
      Vector w = op.apply(v);
      if (span.insert(w))
        todo.push_back(std::move(w));
    }
  }
  return span.dim();
}

FactorizationReport verify_tensor_factorization(const TensorConfiguration& cfg) {
  for (const auto& f : cfg.factors())
    if (f.jet_order() != 1)
      throw ValidationError("tensor factorization is stated for evaluation modules (jet order 1)");
  const auto& rs = cfg.root_system();
  FactorizationReport rep{cfg.top_weight(), 0, {}, 0, 0, std::nullopt};
  rep.top_dim = loop_invariants(cfg, rep.top).dim;
  if (rep.top_dim != 1)
    rep.failure = "(a) top weight (" + rep.top.to_string() + "): dim " +
                  std::to_string(rep.top_dim) + ", expected 1";

  const HomRankTable predicted = hom_rank(rs, rep.top.coords(), static_cast<unsigned>(cfg.ambient().k));
  std::set<IntVector> candidates;
  for (const auto& [w, idx] : cfg.weight_spaces())
    if (Weight(rs, w).is_dominant())
      candidates.insert(w);
  for (const auto& [w, c] : predicted.entries.terms())
    candidates.insert(w);
  candidates.erase(rep.top.coords());
  for (const auto& w : candidates) {
    const Weight mu(rs, w);
    WeightCheck wc{mu, loop_invariants(cfg, mu).dim, predicted.coefficient(mu)};
    if (!rep.failure && wc.computed != wc.predicted)
      rep.failure = "(b) at mu = (" + mu.to_string() + "): dim " + std::to_string(wc.computed) +
                    ", predicted " + std::to_string(wc.predicted);
    rep.below.push_back(std::move(wc));
  }

  rep.total_dim = cfg.dim();
  rep.cyclic_dim = lowering_span_dimension(cfg);
  if (!rep.failure && rep.cyclic_dim != rep.total_dim)
    rep.failure = "(c) cyclic span of the top vector has dim " + std::to_string(rep.cyclic_dim) +
                  " < " + std::to_string(rep.total_dim);
  return rep;
}

// ---------------------------------------------------------------- configuration text

namespace {

class ConfigParser {
public:
  explicit ConfigParser(const std::string& s) : s_(s) {}

  ConfigSpec parse() {
    skip();
    const char fam = peek();
    if (std::string("ABCDabcd").find(fam) == std::string::npos || fam == '\0')
      fail("family", "expected a family letter A, B, C or D");
    ++pos_;
    ConfigSpec spec{parse_family(std::string(1, fam)), 0, {}};
    expect(':', "config");
    spec.rank = integer("rank");
    expect(';', "config");
    while (true) {
      const int node = integer("node");
      expect('@', "factor");
      spec.factors.emplace_back(node, rational());
      skip();
      if (pos_ == s_.size())
        break;
      expect(',', "factor");
    }
    return spec;
  }

private:
  int integer(const char* production) {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail(production, "expected a nonnegative integer at position " + std::to_string(start));
    return std::stoi(s_.substr(start, pos_ - start));
  }

  Rational rational() {
    skip();
    const std::size_t start = pos_;
    if (peek() == '-')
      ++pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
      ++pos_;
    const std::string text = s_.substr(start, pos_ - start);
    try {
      return parse_rational(text);
    } catch (const ValidationError&) {
      fail("point", "'" + text + "' at position " + std::to_string(start) + " is not a rational");
    }
  }

  void expect(char c, const char* production) {
    skip();
    if (peek() != c)
      fail(production, std::string("expected '") + c + "' at position " + std::to_string(pos_));
    ++pos_;
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
  std::size_t pos_ = 0;
};

} // namespace

ConfigSpec parse_config_spec(const std::string& text) { return ConfigParser(text).parse(); }

TensorConfiguration build_configuration(const ConfigSpec& spec, bool laurent, int max_rank) {
  const auto rs = build_root_system(spec.family, spec.rank, max_rank);
  std::map<int, GModulePtr> modules;
  std::vector<EvaluationModule> factors;
  for (const auto& [node, p] : spec.factors) {
    if (node < 1 || node > rs->rank())
      throw ValidationError("node " + std::to_string(node) + " out of range for " + rs->name());
    auto& mod = modules[node];
    if (!mod)
      mod = std::make_shared<const GModule>(fundamental_module(rs, node));
    Point pt = laurent ? Point{{p}, {}} : Point{{}, {p}};
    factors.emplace_back(mod, pt);
  }
  return TensorConfiguration(std::move(factors));
}

} // namespace weylhom
