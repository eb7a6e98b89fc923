#include "weylhom/weylglob.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace weylhom {

using nlohmann::json;

bool in_window(const Exponents& e, const Window& w) {
  if (e.deg_u() > w.D)
    return false;
  return std::all_of(e.t.begin(), e.t.end(), [&](int x) { return std::abs(x) <= w.T; });
}

std::vector<Exponents> window_monomials(const Ambient& amb, const Window& w) {
  if (w.D < 0 || w.T < 0)
    throw ValidationError("window bounds must be nonnegative");
  std::set<Exponents> out;
  Exponents e = Exponents::one(amb);
  // Odometer over t-exponents in [-T, T] and u-exponents in [0, D].
  for (auto& x : e.t)
    x = -w.T;
  while (true) {
    if (e.deg_u() <= w.D)
      out.insert(e);
    int v = 0;
    const int nv = amb.k + amb.l;
    for (; v < nv; ++v) {
      int& x = v < amb.k ? e.t[v] : e.u[v - amb.k];
      const int hi = v < amb.k ? w.T : w.D;
      const int lo = v < amb.k ? -w.T : 0;
      if (x < hi) {
        ++x;
        break;
      }
      x = lo;
    }
    if (v == nv)
      break;
  }
  return {out.begin(), out.end()};
}

const char* verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Pass: return "pass";
  case Verdict::Fail: return "fail";
  case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

json to_json(const CheckReport& r) {
  json out{{"check", r.check}, {"params", r.params}, {"window", r.window},
           {"verdict", verdict_name(r.verdict)}};
  if (r.witness)
    out["witness"] = *r.witness;
  return out;
}

json describe(const TensorConfiguration& cfg) {
  json factors = json::array();
  for (const auto& f : cfg.factors())
    factors.push_back({{"highest_weight", f.base().highest_weight().coords()},
                       {"point", f.point().to_string()},
                       {"jet_order", f.jet_order()}});
  return {{"type", cfg.root_system()->name()},
          {"ring", {{"k", cfg.ambient().k}, {"l", cfg.ambient().l}}},
          {"factors", factors}};
}

namespace {

std::string monomial_text(const Exponents& e) { return to_text(Monomial{e, 1}); }

json element_json(const TruncatedBimodule::Element& z) {
  json out = json::array();
  for (const auto& [key, c] : z)
    out.push_back({{"basis", key.first}, {"monomial", monomial_text(key.second)}, {"coeff", c.get_str()}});
  return out;
}

void add_to(TruncatedBimodule::Element& z, const TruncatedBimodule::Key& k, const Rational& c) {
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = z.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      z.erase(it);
  }
}

TruncatedBimodule::Element scaled(TruncatedBimodule::Element z, const Rational& c) {
  if (sgn(c) == 0)
    return {};
  for (auto& [k, x] : z)
    x *= c;
  return z;
}

TruncatedBimodule::Element minus(TruncatedBimodule::Element a, const TruncatedBimodule::Element& b) {
  for (const auto& [k, c] : b)
    add_to(a, k, -c);
  return a;
}

} // namespace

// ---------------------------------------------------------------- TruncatedBimodule

TruncatedBimodule::TruncatedBimodule(TensorConfiguration base, Window window)
    : base_(std::move(base)), window_(window) {
  const Point origin = Point::base(ambient());
  for (const auto& f : base_.factors())
    if (!(f.point() == origin))
      throw ValidationError("bimodule factors must sit at the base point " + origin.to_string() +
                            ", got " + f.point().to_string() + " (normalize with shift_automorphism)");
  monomials_ = window_monomials(ambient(), window_);
  for (std::size_t j = 0; j < monomials_.size(); ++j)
    index_[monomials_[j]] = j;
}

bool TruncatedBimodule::in_window(const Element& z) const {
  return std::all_of(z.begin(), z.end(),
                     [&](const auto& kv) { return index_.count(kv.first.second) > 0; });
}

Vector TruncatedBimodule::coordinates(const Element& z) const {
  Vector v(dim());
  for (const auto& [key, c] : z) {
    auto it = index_.find(key.second);
    if (it == index_.end())
      throw WindowOverflow("term v" + std::to_string(key.first) + " (x) " +
                           monomial_text(key.second) + " lies outside the window");
    v[key.first * monomials_.size() + it->second] = c;
  }
  return v;
}

TruncatedBimodule::Element TruncatedBimodule::element(const Vector& coords) const {
  Element z;
  const std::size_t w = monomials_.size();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0)
      z[{i / w, monomials_[i % w]}] = coords[i];
  return z;
}

TruncatedBimodule::Element TruncatedBimodule::basis_element(std::size_t b, const Exponents& m) const {
  if (b >= base_.dim())
    throw ValidationError("basis index out of range");
  return Element{{{b, m}, Rational(1)}};
}

TruncatedBimodule::Element TruncatedBimodule::top() const {
  return basis_element(base_.top_index(), Exponents::one(ambient()));
}

const SparseMatrix& TruncatedBimodule::operator_columns(Generator g, int node, const Exponents& m) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto key = std::make_tuple(g, node, m);
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, base_.loop_operator(g, node, RingElement(ambient(), Monomial{m, 1})).transpose())
             .first;
  return it->second;
}

TruncatedBimodule::Element TruncatedBimodule::left_action(Generator g, int node, const RingElement& a,
                                                          const Element& z) const {
  Element out;
  for (const auto& [me, mc] : a.terms()) {
    const TensorElement delta = comultiply(Monomial{me, 1}, ambient());
    for (const auto& [pair, dc] : delta.terms()) {
      const SparseMatrix& cols = operator_columns(g, node, pair[0]);
      for (const auto& [key, c] : z) {
        const Exponents shifted = pair[1] * key.second;
        for (const auto& [b, x] : cols.row(key.first))
          add_to(out, {b, shifted}, mc * dc * c * x);
      }
    }
  }
  return out;
}

TruncatedBimodule::Element TruncatedBimodule::right_multiply(const Element& z, const RingElement& c) const {
  Element out;
  for (const auto& [key, x] : z)
    for (const auto& [e, y] : c.terms()) {
      const Exponents m = key.second * e;
      if (!index_.count(m))
        throw WindowOverflow("right multiplication by " + to_text(c) + " leaves the window at " +
                             monomial_text(m));
      add_to(out, {key.first, m}, x * y);
    }
  return out;
}

json TruncatedBimodule::window_json() const {
  return {{"D", window_.D}, {"T", window_.T}, {"k", ambient().k}, {"l", ambient().l},
          {"monomials", monomials_.size()}};
}

// ---------------------------------------------------------------- checks

namespace {

CheckReport make_report(const std::string& check, const TruncatedBimodule& tb, json extra = json::object()) {
  json params = describe(tb.base());
  for (auto& [k, v] : extra.items())
    params[k] = v;
  return CheckReport{check, params, tb.window_json(), Verdict::Pass, std::nullopt};
}

void require_window_sizes(const TruncatedBimodule& tb) {
  const Ambient amb = tb.ambient();
  if ((amb.l > 0 && tb.window().D < 1) || (amb.k > 0 && tb.window().T < 1))
    throw ValidationError("window needs D >= 1 (when l > 0) and T >= 1 (when k > 0)");
}

// Does the window contain every monomial (nonnegative exponents) of degree < bound?
bool window_spans_action(const TruncatedBimodule& tb) {
  const Window& w = tb.window();
  for (const auto& m : spanning_monomials(tb.ambient(), tb.base().algebra_bound()))
    if (!in_window(m.terms().begin()->first, w))
      return false;
  return true;
}

// Null space of z -> ((e_j (x) m) z)_{j, m in monomials} on the window.
std::vector<Vector> window_invariants(const TruncatedBimodule& tb, const std::vector<Exponents>& monomials) {
  std::vector<Vector> rows;
  const std::size_t n = tb.dim();
  const Ambient amb = tb.ambient();
  std::vector<TruncatedBimodule::Element> images(n);
  for (int j = 1; j <= tb.base().root_system()->rank(); ++j) {
    for (const auto& m : monomials) {
      const RingElement a(amb, Monomial{m, 1});
      std::map<TruncatedBimodule::Key, Vector> by_output;
      for (std::size_t col = 0; col < n; ++col) {
        const std::size_t w = tb.monomials().size();
        const auto img = tb.left_action(Generator::E, j, a, tb.basis_element(col / w, tb.monomials()[col % w]));
        for (const auto& [key, c] : img) {
          auto& row = by_output[key];
          if (row.empty())
            row.resize(n);
          row[col] = c;
        }
      }
      for (auto& [key, row] : by_output)
        rows.push_back(std::move(row));
    }
  }
  return nullspace(rows, n);
}

} // namespace

CheckReport check_highest_relations(const TruncatedBimodule& tb) {
  require_window_sizes(tb);
  CheckReport rep = make_report("highest_relations", tb);
  const Ambient amb = tb.ambient();
  const Weight lambda = tb.base().top_weight();
  const auto w1 = tb.top();
  const std::size_t top = tb.base().top_index();
  const int n = tb.base().root_system()->rank();
  auto fail = [&](const std::string& relation, int node, const Exponents& m,
                  const TruncatedBimodule::Element& value) {
    rep.verdict = Verdict::Fail;
    rep.witness = json{{"relation", relation}, {"node", node}, {"monomial", monomial_text(m)},
                       {"value", element_json(value)}};
  };

  for (const auto& m : tb.monomials()) {
    const RingElement a(amb, Monomial{m, 1});
    for (int j = 1; j <= n; ++j) {
      const auto ez = tb.left_action(Generator::E, j, a, w1);
      if (!ez.empty()) {
        fail("(e_j (x) m)(w (x) 1) = 0", j, m, ez);
        return rep;
      }
      const auto hz = tb.left_action(Generator::H, j, a, w1);
      const auto expected = scaled(tb.basis_element(top, m), lambda[j]);
      if (hz != expected) {
        fail("(h_j (x) m)(w (x) 1) = lambda_j w (x) m", j, m, minus(hz, expected));
        return rep;
      }
    }
  }
  const RingElement one = RingElement::constant(amb, 1);
  for (int j = 1; j <= n; ++j) {
    auto z = w1;
    for (long p = 0; p <= lambda[j] && !z.empty(); ++p)
      z = tb.left_action(Generator::F, j, one, z);
    if (!z.empty()) {
      fail("f_j^(lambda_j + 1)(w (x) 1) = 0", j, Exponents::one(amb), z);
      return rep;
    }
  }
  return rep;
}

SpanResult cyclic_span_dimension(const TruncatedBimodule& tb, const Window& inner, std::size_t budget) {
  const Ambient amb = tb.ambient();
  const Weight lambda = tb.base().top_weight();
  if (std::all_of(lambda.coords().begin(), lambda.coords().end(), [](long x) { return x == 0; }))
    throw ValidationError("cyclic span is not defined for the trivial module V(0)");
  if (inner.D < 0 || inner.T < 0 || (amb.l > 0 && inner.D >= tb.window().D) ||
      (amb.k > 0 && inner.T >= tb.window().T))
    throw ValidationError("inner window must lie strictly inside the bimodule window");

  std::vector<RingElement> ms{RingElement::constant(amb, 1)};
  for (int s = 1; s <= amb.k; ++s) {
    ms.push_back(RingElement::t(amb, s, 1));
    ms.push_back(RingElement::t(amb, s, -1));
  }
  for (int r = 1; r <= amb.l; ++r)
    ms.push_back(RingElement::u(amb, r));

  SpanResult res;
  EchelonBasis span(tb.dim());
  std::deque<Vector> todo;
  const Vector start = tb.coordinates(tb.top());
  span.insert(start);
  todo.push_back(start);
  std::size_t steps = 0;
  const int n = tb.base().root_system()->rank();
  while (!todo.empty() && res.saturated) {
    const auto z = tb.element(todo.front());
    todo.pop_front();
    for (Generator g : {Generator::E, Generator::F, Generator::H})
      for (int j = 1; j <= n; ++j)
        for (const auto& m : ms) {
          if (++steps > budget) {
            res.saturated = false;
            break;
          }
          const auto img = tb.left_action(g, j, m, z);
          if (!tb.in_window(img)) {
            ++res.discarded;
            continue;
          }
          Vector v = tb.coordinates(img);
          if (span.insert(v))
            todo.push_back(std::move(v));
        }
  }

  // dim(S meet inner) = dim S - rank of S projected to the coordinates outside inner.
  const std::size_t w = tb.monomials().size();
  std::vector<bool> outside(tb.dim());
  std::size_t inner_count = 0;
  for (std::size_t j = 0; j < w; ++j) {
    const bool in = in_window(tb.monomials()[j], inner);
    inner_count += in;
    for (std::size_t b = 0; b < tb.base().dim(); ++b)
      outside[b * w + j] = !in;
  }
  std::vector<Vector> projected;
  for (const auto& v : span.basis()) {
    Vector p(tb.dim());
    for (std::size_t i = 0; i < p.size(); ++i)
      if (outside[i])
        p[i] = v[i];
    projected.push_back(std::move(p));
  }
  res.span_dim = span.dim();
  res.dim = span.dim() - rank(projected, tb.dim());
  res.target = tb.base().dim() * inner_count;
  return res;
}

CheckReport cyclic_span_report(const TruncatedBimodule& tb, const Window& inner) {
  CheckReport rep = make_report("cyclic_span", tb, {{"inner", {{"D", inner.D}, {"T", inner.T}}}});
  const SpanResult res = cyclic_span_dimension(tb, inner);
  json detail{{"dim", res.dim}, {"target", res.target}, {"span_dim", res.span_dim},
              {"discarded", res.discarded}, {"saturated", res.saturated}};
  if (res.dim == res.target)
    rep.verdict = Verdict::Pass;
  else
    rep.verdict = res.saturated ? Verdict::Fail : Verdict::Inconclusive;
  rep.witness = detail;
  return rep;
}

std::size_t right_freeness_rank(const TruncatedBimodule& tb) {
  const Ambient amb = tb.ambient();
  std::vector<Vector> rows;
  for (std::size_t b = 0; b < tb.base().dim(); ++b) {
    const auto vb = tb.basis_element(b, Exponents::one(amb));
    for (const auto& m : tb.monomials())
      rows.push_back(tb.coordinates(tb.right_multiply(vb, RingElement(amb, Monomial{m, 1}))));
  }
  return rank(rows, tb.dim());
}

CheckReport freeness_report(const TruncatedBimodule& tb) {
  CheckReport rep = make_report("right_freeness", tb);
  const std::size_t r = right_freeness_rank(tb);
  rep.witness = json{{"rank", r}, {"expected", tb.dim()}};
  rep.verdict = r == tb.dim() ? Verdict::Pass : Verdict::Fail;
  return rep;
}

CheckReport invariants_equal_base(const TruncatedBimodule& tb) {
  CheckReport rep = make_report("invariants_equal_base", tb);
  if (!window_spans_action(tb)) {
    rep.verdict = Verdict::Inconclusive;
    rep.witness = json{{"reason", "window misses monomials of degree < " +
                                      std::to_string(tb.base().algebra_bound())}};
    return rep;
  }
  const auto z = window_invariants(tb, tb.monomials());
  const auto base = loop_invariants_all(tb.base());

  EchelonBasis zspan(tb.dim()), expected(tb.dim());
  for (const auto& v : z)
    zspan.insert(v);
  const std::size_t w = tb.monomials().size();
  for (const auto& v : base.basis)
    for (std::size_t j = 0; j < w; ++j) {
      Vector x(tb.dim());
      for (std::size_t b = 0; b < v.size(); ++b)
        x[b * w + j] = v[b];
      expected.insert(x);
    }

  rep.witness = json{{"dim", zspan.dim()}, {"expected", expected.dim()}, {"base_dim", base.dim}};
  for (const auto& v : expected.basis())
    if (!zspan.contains(v)) {
      rep.verdict = Verdict::Fail;
      (*rep.witness)["not_invariant"] = element_json(tb.element(v));
      return rep;
    }
  for (const auto& v : zspan.basis())
    if (!expected.contains(v)) {
      rep.verdict = Verdict::Fail;
      (*rep.witness)["extra_invariant"] = element_json(tb.element(v));
      return rep;
    }
  return rep;
}

// ---------------------------------------------------------------- stabilization

namespace {

std::size_t stabilized_dim(const TensorConfiguration& cfg, int K) {
  const Ambient amb = cfg.ambient();
  if (amb.k != 1 || amb.l != 0)
    throw ValidationError("stabilization_check needs the Laurent ring R_{1,0}");
  if (K < 0)
    throw ValidationError("K must be nonnegative");
  const int M = static_cast<int>(cfg.algebra_bound());
  std::vector<int> degrees;
  for (int d = K; d < K + M; ++d) {
    degrees.push_back(d);
    degrees.push_back(-d);
  }
  std::vector<Vector> rows;
  for (int j = 1; j <= cfg.root_system()->rank(); ++j)
    for (int d : degrees) {
      const SparseMatrix op = cfg.loop_operator(Generator::E, j, RingElement::t(amb, 1, d));
      for (std::size_t r = 0; r < op.rows(); ++r) {
        if (op.row(r).empty())
          continue;
        Vector row(cfg.dim());
        for (const auto& [c, x] : op.row(r))
          row[c] = x;
        rows.push_back(std::move(row));
      }
    }
  return nullspace(rows, cfg.dim()).size();
}

} // namespace

bool stabilization_check(const TensorConfiguration& cfg, int K) {
  return stabilized_dim(cfg, K) == loop_invariants_all(cfg).dim;
}

CheckReport stabilization_report(const TensorConfiguration& cfg, int K) {
  const std::size_t stab = stabilized_dim(cfg, K);
  const std::size_t full = loop_invariants_all(cfg).dim;
  json params = describe(cfg);
  params["K"] = K;
  const int M = static_cast<int>(cfg.algebra_bound());
  CheckReport rep{"stabilization", params,
                  json{{"degrees", {{"from", K}, {"to", K + M - 1}, {"symmetric", true}}}},
                  stab == full ? Verdict::Pass : Verdict::Fail,
                  json{{"dim_geq_K", stab}, {"dim_invariants", full}}};
  return rep;
}

namespace {

struct UDegreeResult {
  std::size_t dim_k, dim_full, expected;
  int N;
};

UDegreeResult u_degree_dims(const TruncatedBimodule& tb, int K) {
  const Ambient amb = tb.ambient();
  if (amb.l < 1 || amb.k != 0)
    throw ValidationError("u_degree_invariant_criterion needs R_{0,l} with l >= 1");
  const int N = annihilator_exponent(tb.base());
  if (K < N)
    throw ValidationError("K = " + std::to_string(K) + " is below the annihilator exponent N = " +
                          std::to_string(N));
  if (tb.window().D < K + N)
    throw InconclusiveError("window D = " + std::to_string(tb.window().D) + " is below K + N = " +
                            std::to_string(K + N));
  if (!window_spans_action(tb))
    throw InconclusiveError("window misses monomials of degree < " +
                            std::to_string(tb.base().algebra_bound()));
  std::vector<Exponents> band;
  for (const auto& m : tb.monomials())
    if (m.deg_u() >= K && m.deg_u() <= K + N)
      band.push_back(m);
  return {window_invariants(tb, band).size(), window_invariants(tb, tb.monomials()).size(),
          loop_invariants_all(tb.base()).dim * tb.monomials().size(), N};
}

} // namespace

bool u_degree_invariant_criterion(const TruncatedBimodule& tb, int K) {
  const auto r = u_degree_dims(tb, K);
  return r.dim_k == r.dim_full && r.dim_full == r.expected;
}

CheckReport u_degree_report(const TruncatedBimodule& tb, int K) {
  CheckReport rep = make_report("u_degree_criterion", tb, {{"K", K}});
  try {
    const auto r = u_degree_dims(tb, K);
    rep.verdict = r.dim_k == r.dim_full && r.dim_full == r.expected ? Verdict::Pass : Verdict::Fail;
    rep.witness = json{{"N", r.N}, {"dim_band", r.dim_k}, {"dim_window", r.dim_full},
                       {"expected", r.expected}};
  } catch (const InconclusiveError& e) {
    rep.verdict = Verdict::Inconclusive;
    rep.witness = json{{"reason", e.what()}};
  }
  return rep;
}

} // namespace weylhom
