#include "weylhom/acceptance.hpp"

#include "weylhom/charring.hpp"
#include "weylhom/polyalg.hpp"
#include "weylhom/repmod.hpp"
#include "weylhom/weylglob.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace weylhom {

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

// Nonnegative integer vectors of length n with sum <= total.
void bounded_vectors(int n, long total, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (long x = 0; x <= total; ++x) {
    cur.push_back(x);
    bounded_vectors(n, total - x, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<long>> bounded_vectors(int n, long total) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  bounded_vectors(n, total, cur, out);
  return out;
}

// Nondecreasing node sequences of the given length.
void node_multisets(int rank, int length, int from, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i <= rank; ++i) {
    cur.push_back(i);
    node_multisets(rank, length, i, cur, out);
    cur.pop_back();
  }
}

Character expected_collapse(const RootSystemPtr& rs, const std::vector<long>& s) {
  return Character::monomial(Weight(rs, s));
}

Outcome hom_rank_collapse() {
  std::size_t checks = 0;
  for (Family f : {Family::A, Family::C}) {
    for (int n = f == Family::A ? 1 : 2; n <= 5; ++n) {
      const auto rs = build_root_system(f, n);
      for (const auto& s : bounded_vectors(n, 4))
        for (unsigned k = 0; k <= 2; ++k) {
          const auto table = hom_rank(rs, s, k);
          if (!(table.entries == expected_collapse(rs, s)))
            return {false, rs->name() + " s=(" + Weight(rs, s).to_string() + ") k=" +
                               std::to_string(k) + " is not a single term"};
          ++checks;
        }
    }
  }
  return {true, std::to_string(checks) + " (family, s, k) cases collapse to e(sum s_i omega_i)"};
}

Outcome fundamental_tables() {
  const auto b3 = build_root_system(Family::B, 3);
  const auto d6 = build_root_system(Family::D, 6);
  auto table = [](const RootSystemPtr& rs, std::vector<std::pair<int, Character::Coeff>> terms) {
    Character c(rs);
    for (auto [node, coeff] : terms)
      c.add_term(Weight::fundamental(rs, node).coords(), coeff);
    return c;
  };
  if (!(fundamental_invariant_character(b3, 2, 1) == table(b3, {{2, 1}, {0, 1}})))
    return {false, "B3 node 2, k=1"};
  if (!(fundamental_invariant_character(b3, 2, 2) == table(b3, {{2, 1}, {0, 2}})))
    return {false, "B3 node 2, k=2"};
  if (!(fundamental_invariant_character(d6, 4, 1) == table(d6, {{4, 1}, {2, 1}, {0, 1}})))
    return {false, "D6 node 4, k=1"};
  if (!remark_red_check(d6, 1))
    return {false, "Hom(W(omega_2), W(omega_4)) predicted zero in D6"};
  return {true, "B3 (k=1,2), D6 node 4 and the omega_2 -> omega_4 Hom in D6 match"};
}

Outcome determinant_identity() {
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 0; k <= 8; ++k)
      if (binom_matrix_det(n, k) != predicted_binom_det(n))
        return {false, "det C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                           binom_matrix_det(n, k).get_str()};
  return {true, "81 determinants equal (-1)^{N(N+1)/2}"};
}

Outcome oracle_agreement() {
  std::size_t pairs = 0, configs = 0;
  const std::vector<Rational> u_points{0, 1, Rational(-1, 2)};
  const std::vector<Rational> t_points{2, -1, Rational(1, 3)};
  for (int n = 1; n <= 3; ++n) {
    const auto rs = build_root_system(Family::A, n);
    std::vector<GModulePtr> modules{nullptr};
    for (int i = 1; i <= n; ++i)
      modules.push_back(std::make_shared<const GModule>(fundamental_module(rs, i)));
    for (bool laurent : {false, true}) {
      if (laurent && n == 3)
        continue;
      for (int len = 1; len <= 3; ++len) {
        std::vector<std::vector<int>> seqs;
        std::vector<int> cur;
        node_multisets(n, len, 1, cur, seqs);
        for (const auto& seq : seqs) {
          std::vector<EvaluationModule> factors;
          for (std::size_t j = 0; j < seq.size(); ++j) {
            const Rational& p = laurent ? t_points[j] : u_points[j];
            factors.emplace_back(modules[seq[j]], laurent ? Point{{p}, {}} : Point{{}, {p}});
          }
          const TensorConfiguration cfg(std::move(factors));
          const Weight top = cfg.top_weight();
          const auto predicted = hom_rank(rs, top.coords(), laurent ? 1 : 0);
          std::set<IntVector> mus;
          for (const auto& [w, idx] : cfg.weight_spaces())
            if (Weight(rs, w).is_dominant())
              mus.insert(w);
          for (const auto& [w, c] : predicted.entries.terms())
            mus.insert(w);
          for (const auto& w : mus) {
            const Weight mu(rs, w);
            const std::size_t got = loop_invariants(cfg, mu).dim;
            if (got != predicted.coefficient(mu))
              return {false, rs->name() + " config " + describe(cfg).dump() + " mu=(" + mu.to_string() +
                                 "): dim " + std::to_string(got) + " vs c_s " +
                                 std::to_string(predicted.coefficient(mu))};
            ++pairs;
          }
          ++configs;
        }
      }
    }
  }
  if (pairs < 30)
    return {false, "only " + std::to_string(pairs) + " pairs checked"};
  return {true, std::to_string(pairs) + " (configuration, mu) pairs over " + std::to_string(configs) +
                    " configurations agree"};
}

Outcome distinct_point_necessity() {
  const auto v1 = std::make_shared<const GModule>(build_sl2_module(1));
  const TensorConfiguration same({EvaluationModule(v1, Point{{}, {3}}), EvaluationModule(v1, Point{{}, {3}})});
  const auto& rs = same.root_system();
  const Weight zero = Weight::zero(rs);
  const std::size_t got = loop_invariants(same, zero).dim;
  const auto predicted = hom_rank(rs, {2}, 0).coefficient(zero);
  if (same.distinct_points())
    return {false, "configuration reported distinct points"};
  if (got != 1 || predicted != 0)
    return {false, "same-point dim " + std::to_string(got) + ", c_s(0) = " + std::to_string(predicted)};
  return {true, "same point: dim 1 at mu = 0 while c_s(0) = 0"};
}

Outcome bialgebra_laws(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::size_t tested = 0, bookkeeping = 0;
  while (tested < 240) {
    const Ambient amb{uniform(0, 2), uniform(0, 2)};
    if (amb.k + amb.l == 0)
      continue;
    auto random_monomial = [&] {
      Exponents e = Exponents::one(amb);
      for (auto& x : e.t)
        x = uniform(-3, 3);
      int budget = uniform(0, 6);
      for (auto& x : e.u) {
        x = uniform(0, budget);
        budget -= x;
      }
      int c = 0;
      while (c == 0)
        c = uniform(-4, 4);
      return Monomial{e, c};
    };
    const Monomial m = random_monomial(), m2 = random_monomial();
    const RingElement a(amb, m), b(amb, m2);
    const TensorElement d = comultiply(a);
    const std::string where = "at " + to_text(a);
    if (!(comultiply_slot(d, 0) == comultiply_slot(d, 1)))
      return {false, "coassociativity fails " + where};
    const TensorPower id = TensorPower::embed(a, 0, 1);
    if (!(counit_slot(d, 0) == id) || !(counit_slot(d, 1) == id))
      return {false, "counit law fails " + where};
    if (!(comultiply(a * b) == d * comultiply(b)) || !(comultiply(a + b) == d + comultiply(b)))
      return {false, "Delta is not multiplicative " + where + " and " + to_text(b)};
    if (counit(a * b) != counit(a) * counit(b))
      return {false, "eps is not multiplicative " + where};
    if (m.deg_u() > 0) {
      if (!check_degree_bookkeeping(m, amb))
        return {false, "degree bookkeeping fails " + where};
      ++bookkeeping;
    }
    ++tested;
  }
  return {true, std::to_string(tested) + " random monomials (" + std::to_string(bookkeeping) +
                    " with deg_u > 0)"};
}

Outcome global_weyl_window() {
  std::size_t cases = 0;
  const std::vector<std::pair<int, int>> modules{{1, 1}, {2, 1}, {2, 2}};
  for (auto [rank, node] : modules) {
    const auto rs = build_root_system(Family::A, rank);
    const auto v = std::make_shared<const GModule>(fundamental_module(rs, node));
    for (bool laurent : {false, true}) {
      const Ambient amb{laurent ? 1 : 0, laurent ? 0 : 1};
      const Window window = laurent ? Window{0, 4} : Window{4, 0};
      const TruncatedBimodule tb(TensorConfiguration({EvaluationModule(v, Point::base(amb))}), window);
      const std::string where = rs->name() + " node " + std::to_string(node) + (laurent ? " R_{1,0}" : " R_{0,1}");
      const auto hr = check_highest_relations(tb);
      if (!hr.passed())
        return {false, "highest relations fail for " + where + ": " + to_json(hr).dump()};
      for (const Window inner : {laurent ? Window{0, 2} : Window{3, 0}, Window{0, 0}}) {
        const SpanResult span = cyclic_span_dimension(tb, inner);
        if (span.dim != span.target)
          return {false, "cyclic span " + std::to_string(span.dim) + " != " + std::to_string(span.target) +
                             " for " + where};
      }
      if (right_freeness_rank(tb) != tb.dim())
        return {false, "right module is not free of rank dim V * |window| for " + where};
      const auto inv = invariants_equal_base(tb);
      if (!inv.passed())
        return {false, "invariants differ from the base for " + where + ": " + to_json(inv).dump()};
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " (module, ring) cases: relations, cyclic span, freeness, invariants"};
}

Outcome stabilization() {
  const auto v1 = std::make_shared<const GModule>(build_sl2_module(1));
  const auto a2 = build_root_system(Family::A, 2);
  const auto w1 = std::make_shared<const GModule>(fundamental_module(a2, 1));
  const auto w2 = std::make_shared<const GModule>(fundamental_module(a2, 2));
  auto at_t = [](const Rational& t) { return Point{{t}, {}}; };
  const std::vector<TensorConfiguration> laurent{
      TensorConfiguration({EvaluationModule(v1, at_t(2)), EvaluationModule(v1, at_t(3))}),
      TensorConfiguration({EvaluationModule(v1, at_t(2))}),
      TensorConfiguration({EvaluationModule(w1, at_t(Rational(1, 2))), EvaluationModule(w2, at_t(-1))}),
  };
  std::size_t checks = 0;
  for (const auto& cfg : laurent)
    for (int K = 0; K <= 4; ++K) {
      if (!stabilization_check(cfg, K))
        return {false, "stabilization fails for " + describe(cfg).dump() + " at K=" + std::to_string(K)};
      ++checks;
    }

  const Point origin{{}, {0}};
  struct Case {
    TensorConfiguration cfg;
    int K, D, expected_N;
  };
  const std::vector<Case> cases{
      {TensorConfiguration({EvaluationModule(v1, origin)}), 1, 4, 1},
      {TensorConfiguration({EvaluationModule(v1, origin), EvaluationModule(v1, origin)}), 2, 6, 1},
      {TensorConfiguration({EvaluationModule(v1, origin, 2)}), 2, 6, 2},
  };
  for (const auto& c : cases) {
    const int N = annihilator_exponent(c.cfg);
    if (N != c.expected_N)
      return {false, "annihilator exponent " + std::to_string(N) + " for " + describe(c.cfg).dump()};
    const TruncatedBimodule tb(c.cfg, Window{c.D, 0});
    if (!u_degree_invariant_criterion(tb, c.K))
      return {false, "u-degree criterion fails for " + describe(c.cfg).dump()};
    ++checks;
  }
  return {true, std::to_string(checks) + " stabilization and u-degree checks"};
}

Outcome freeness_rank_consistency() {
  const auto v1 = std::make_shared<const GModule>(build_sl2_module(1));
  const TensorConfiguration cfg({EvaluationModule(v1, Point{{}, {0}}), EvaluationModule(v1, Point{{}, {1}})});
  const auto& rs = cfg.root_system();
  const Weight lambda = cfg.top_weight();
  std::size_t d_lambda = 1;
  for (int i = 1; i <= rs->rank(); ++i)
    for (long r = 0; r < lambda[i]; ++r)
      d_lambda *= fundamental_module(rs, i).dim();
  if (d_lambda != 4 || cfg.dim() != d_lambda)
    return {false, "d_lambda = " + std::to_string(d_lambda) + ", tensor dim " + std::to_string(cfg.dim())};
  std::size_t total = 0;
  for (const auto& [w, idx] : cfg.weight_spaces())
    if (Weight(rs, w).is_dominant())
      total += loop_invariants(cfg, Weight(rs, w)).dim;
  if (total != 1)
    return {false, "loop invariants sum to " + std::to_string(total)};
  return {true, "d_lambda = 4 = dim V(1)_a (x) V(1)_b; invariants sum to 1"};
}

Outcome symmetrizer_algebra(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const Ambient amb{1, 1};
  std::vector<RingElement> elems;
  for (int n = 0; n < 60; ++n) {
    RingElement a(amb);
    const int terms = uniform(1, 3);
    for (int j = 0; j < terms; ++j) {
      Exponents e = Exponents::one(amb);
      e.t[0] = uniform(-2, 2);
      e.u[0] = uniform(0, 2);
      a.add_term(e, uniform(-3, 3));
    }
    if (a.is_zero())
      a = RingElement::constant(amb, 1);
    elems.push_back(std::move(a));
  }
  std::size_t lambdas = 0, checks = 0;
  for (const auto& r : bounded_vectors(3, 4)) {
    std::vector<int> sizes(r.begin(), r.end());
    SymmetrizerContext ctx(sizes);
    if (ctx.total() == 0)
      continue;
    ++lambdas;
    std::vector<int> blocks;
    for (int i = 1; i <= 3; ++i)
      if (sizes[i - 1] > 0)
        blocks.push_back(i);
    for (std::size_t n = 0; n < elems.size(); ++n) {
      const int bi = blocks[n % blocks.size()], bj = blocks[(n / 2) % blocks.size()];
      const TensorPower x = sym_element(ctx, bi, elems[n]);
      const TensorPower y = sym_element(ctx, bj, elems[(n + 1) % elems.size()]);
      if (!is_block_invariant(ctx, x) || !is_block_invariant(ctx, x * y) || !is_block_invariant(ctx, x + y))
        return {false, "invariance fails for r = (" + std::to_string(sizes[0]) + "," +
                           std::to_string(sizes[1]) + "," + std::to_string(sizes[2]) + ")"};
      ++checks;
    }
  }
  // lambda = omega_i: A_{omega_i} = A via the single slot.
  for (int i = 1; i <= 3; ++i) {
    std::vector<int> sizes(3, 0);
    sizes[i - 1] = 1;
    SymmetrizerContext ctx(sizes);
    for (const auto& a : elems)
      if (!(sym_element(ctx, i, a) == TensorPower::embed(a, 0, 1)))
        return {false, "sym for omega_" + std::to_string(i) + " is not the slot embedding"};
  }
  return {true, std::to_string(checks) + " invariance checks over " + std::to_string(lambdas) +
                    " lambdas, " + std::to_string(elems.size()) + " random elements"};
}

struct Spec {
  const char* name;
  double limit;
  std::function<Outcome(std::uint64_t)> run;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> all{
      {"hom-rank collapse for A and C", 5, [](auto) { return hom_rank_collapse(); }},
      {"fundamental invariant tables (B3, D6)", 1, [](auto) { return fundamental_tables(); }},
      {"binomial determinant identity", 1, [](auto) { return determinant_identity(); }},
      {"loop invariants agree with hom-rank", 30, [](auto) { return oracle_agreement(); }},
      {"distinct points are necessary", 1, [](auto) { return distinct_point_necessity(); }},
      {"bialgebra laws and degree bookkeeping", 5, bialgebra_laws},
      {"global Weyl reconstruction at window scale", 30, [](auto) { return global_weyl_window(); }},
      {"stabilization criteria", 10, [](auto) { return stabilization(); }},
      {"freeness rank consistency", 1, [](auto) { return freeness_rank_consistency(); }},
      {"symmetrizer algebra", 5, symmetrizer_algebra},
  };
  return all;
}

} // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount)
    throw ValidationError("no acceptance criterion " + std::to_string(id));
  const Spec& spec = specs()[id - 1];
  CriterionResult res;
  res.id = id;
  res.name = spec.name;
  res.limit = spec.limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = spec.run(seed);
    res.correct = o.ok;
    res.detail = o.detail;
  } catch (const std::exception& e) {
    res.correct = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (res.correct && res.seconds >= res.limit)
    res.detail += " (over the time limit)";
  return res;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << r.seconds << " s / "
     << r.limit << " s): " << r.detail;
  return os.str();
}

nlohmann::json to_json(const std::vector<CriterionResult>& results) {
  auto arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed()}, {"correct", r.correct},
                   {"seconds", r.seconds}, {"limit", r.limit}, {"detail", r.detail}});
    all = all && r.passed();
  }
  return {{"criteria", arr}, {"passed", all}};
}

} // namespace weylhom
