// weylhom: command-line front end.
//
// Exit codes: 0 success, 1 check failure, 2 validation error, 3 inconclusive.

#include "weylhom/acceptance.hpp"
#include "weylhom/charring.hpp"
#include "weylhom/errors.hpp"
#include "weylhom/polyalg.hpp"
#include "weylhom/repmod.hpp"
#include "weylhom/weylglob.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

using nlohmann::json;
using namespace weylhom;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInvalid = 2, kInconclusive = 3 };

int max_rank_from_env() {
  const char* env = std::getenv("WEYLHOM_MAX_RANK");
  if (!env || !*env)
    return kDefaultMaxRank;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 1)
      throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string("WEYLHOM_MAX_RANK must be a positive integer, got '") + env + "'");
  }
}

std::vector<long> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw ParseError(what, "'" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty())
    throw ParseError(what, "empty list");
  return out;
}

std::string root_coords_text(const Weight& w) {
  std::string out;
  for (const auto& q : w.root_coords())
    out += (out.empty() ? "" : ",") + q.get_str();
  return out;
}

struct Common {
  bool json = false;
  bool root_coords = false;
  int window_u = 4;
  int window_t = 4;
  std::uint64_t seed = 1;
};

void emit(const Common& c, const std::string& command, const json& params, const json& result,
          const std::string& table) {
  if (c.json)
    std::cout << json{{"command", command}, {"params", params}, {"result", result}}.dump(2) << "\n";
  else
    std::cout << table;
}

std::string character_table(const Character& ch, bool root_coords) {
  std::ostringstream os;
  os << "lambda\tc" << (root_coords ? "\troot_coords" : "") << "\n";
  for (const auto& [w, c] : ch.terms()) {
    const Weight wt(ch.root_system(), w);
    os << wt.to_string() << "\t" << c;
    if (root_coords)
      os << "\t" << root_coords_text(wt);
    os << "\n";
  }
  return os.str();
}

int verdict_exit(Verdict v) {
  switch (v) {
  case Verdict::Pass: return kOk;
  case Verdict::Fail: return kCheckFailed;
  case Verdict::Inconclusive: return kInconclusive;
  }
  return kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for Weyl modules of current and loop algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Print JSON instead of a table");
  app.add_flag("--root-coords", common.root_coords, "Also print weights in simple-root coordinates");
  app.add_option("--window-u", common.window_u, "u-degree cap D of the bimodule window");
  app.add_option("--window-t", common.window_t, "t-exponent cap T of the bimodule window");
  app.add_option("--seed", common.seed, "Seed for randomized sampling");

  // homrank
  std::string family, s_text;
  int rank = 0;
  unsigned k = 0;
  auto* homrank = app.add_subcommand("homrank", "Hom-rank coefficients c_s(lambda)");
  homrank->add_option("family", family)->required();
  homrank->add_option("rank", rank)->required();
  homrank->add_option("--s", s_text, "Comma-separated s_i (one per node)")->required();
  homrank->add_option("--k", k, "Number of Laurent variables");

  // fundchar
  int node = 0;
  auto* fundchar = app.add_subcommand("fundchar", "Character of the invariants of a fundamental local Weyl module");
  fundchar->add_option("family", family)->required();
  fundchar->add_option("rank", rank)->required();
  fundchar->add_option("node", node)->required();
  fundchar->add_option("--k", k, "Number of Laurent variables");

  // detcnk
  unsigned det_n = 0, det_k = 0;
  auto* detcnk = app.add_subcommand("detcnk", "Determinant of the binomial matrix C(N,K)");
  detcnk->add_option("N", det_n)->required();
  detcnk->add_option("K", det_k)->required();

  // coexpand
  std::string element_text;
  int ring_k = 0, ring_l = 0;
  auto* coexpand = app.add_subcommand("coexpand", "Comultiplication of an element of R_{k,l}");
  coexpand->add_option("element", element_text)->required();
  coexpand->add_option("--k", ring_k, "Number of Laurent variables t");
  coexpand->add_option("--l", ring_l, "Number of polynomial variables u");

  // invdim
  std::string config_text, mu_text;
  bool laurent = false;
  auto* invdim = app.add_subcommand("invdim", "Dimension of the n+ (x) A invariants of weight mu");
  invdim->add_option("config", config_text, "e.g. \"A:2; 1@0, 2@1\"")->required();
  invdim->add_option("--mu", mu_text, "Weight in fundamental coordinates")->required();
  invdim->add_flag("--laurent", laurent, "Points are t-coordinates over R_{1,0}");

  // weylglob
  std::string check_name;
  int K = 1, inner_u = -1, inner_t = -1, jet = 1;
  auto* weylglob = app.add_subcommand("weylglob", "Window-scale checks on (V (x) A)_h");
  weylglob->add_option("check", check_name)
      ->required()
      ->check(CLI::IsMember({"highest-relations", "cyclic-span", "freeness", "invariants",
                             "stabilization", "u-degree"}));
  weylglob->add_option("config", config_text, "Configuration at the base point, e.g. \"A:1; 1@0\"")->required();
  weylglob->add_flag("--laurent", laurent, "Work over R_{1,0} instead of R_{0,1}");
  weylglob->add_option("--K", K, "Degree threshold for stabilization and u-degree");
  weylglob->add_option("--inner-u", inner_u, "Inner window u-degree cap (default D-1)");
  weylglob->add_option("--inner-t", inner_t, "Inner window t cap (default T-2)");
  weylglob->add_option("--jet", jet, "Jet order r of every factor (V (x) A/J^r)");

  // symcheck
  std::string r_text;
  int samples = 50;
  auto* symcheck = app.add_subcommand("symcheck", "Block invariance and closure of sym_lambda elements");
  symcheck->add_option("--r", r_text, "Block sizes r_1,...,r_n of lambda")->required();
  symcheck->add_option("--samples", samples, "Number of random ring elements");

  auto* suite = app.add_subcommand("check-suite", "Run the acceptance battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    const int max_rank = max_rank_from_env();

    if (*homrank) {
      const auto rs = build_root_system(parse_family(family), rank, max_rank);
      const auto s = parse_int_list(s_text, "s");
      const auto table = hom_rank(rs, s, k);
      emit(common, "homrank", {{"family", rs->name()}, {"s", s}, {"k", k}}, to_json(table),
           character_table(table.entries, common.root_coords));
      return kOk;
    }

    if (*fundchar) {
      const auto rs = build_root_system(parse_family(family), rank, max_rank);
      const auto ch = fundamental_invariant_character(rs, node, k);
      const bool conv = convention_dependent(*rs, node, k);
      std::string table = character_table(ch, common.root_coords);
      if (conv)
        table += "note: convention-dependent (k = 0 uses C(-1,0) = 1, C(j-1,j) = 0)\n";
      emit(common, "fundchar", {{"family", rs->name()}, {"node", node}, {"k", k}},
           {{"character", to_json(ch)}, {"convention_dependent", conv}}, table);
      return kOk;
    }

    if (*detcnk) {
      const Integer det = binom_matrix_det(det_n, det_k), predicted = predicted_binom_det(det_n);
      const bool match = det == predicted;
      emit(common, "detcnk", {{"N", det_n}, {"K", det_k}},
           {{"det", det.get_str()}, {"predicted", predicted.get_str()}, {"match", match}},
           "det = " + det.get_str() + ", predicted = " + predicted.get_str() + ", " +
               (match ? "match" : "mismatch") + "\n");
      return match ? kOk : kCheckFailed;
    }

    if (*coexpand) {
      if (ring_k < 0 || ring_l < 0)
        throw ValidationError("--k and --l must be nonnegative");
      const Ambient amb{ring_k, ring_l};
      const RingElement a = parse_ring_element(element_text, amb);
      const std::string text = to_text(comultiply(a));
      emit(common, "coexpand", {{"element", to_text(a)}, {"k", ring_k}, {"l", ring_l}},
           {{"coproduct", text}, {"counit", counit(a).get_str()}}, text + "\n");
      return kOk;
    }

    if (*invdim) {
      const TensorConfiguration cfg = build_configuration(parse_config_spec(config_text), laurent, max_rank);
      const Weight mu(cfg.root_system(), parse_int_list(mu_text, "mu"));
      const InvariantSpace inv = loop_invariants(cfg, mu);
      json basis = json::array();
      for (const auto& v : inv.basis) {
        json entries = json::array();
        for (std::size_t i = 0; i < v.size(); ++i)
          if (sgn(v[i]) != 0)
            entries.push_back({{"index", i}, {"coeff", v[i].get_str()}});
        basis.push_back(entries);
      }
      emit(common, "invdim", {{"config", describe(cfg)}, {"mu", mu.coords()}},
           {{"dim", inv.dim}, {"distinct_points", cfg.distinct_points()}, {"basis", basis}},
           "dim = " + std::to_string(inv.dim) + "\n");
      return kOk;
    }

    if (*weylglob) {
      const ConfigSpec spec = parse_config_spec(config_text);
      TensorConfiguration plain = build_configuration(spec, laurent, max_rank);
      std::vector<EvaluationModule> factors;
      for (const auto& f : plain.factors())
        factors.emplace_back(f.base_ptr(), f.point(), jet);
      const TensorConfiguration cfg(std::move(factors));

      CheckReport rep;
      if (check_name == "stabilization") {
        rep = stabilization_report(cfg, K);
      } else {
        const Window window{laurent ? 0 : common.window_u, laurent ? common.window_t : 0};
        const TruncatedBimodule tb(cfg, window);
        if (check_name == "highest-relations")
          rep = check_highest_relations(tb);
        else if (check_name == "cyclic-span")
          rep = cyclic_span_report(
              tb, Window{laurent ? 0 : (inner_u >= 0 ? inner_u : window.D - 1),
                         laurent ? (inner_t >= 0 ? inner_t : window.T - 2) : 0});
        else if (check_name == "freeness")
          rep = freeness_report(tb);
        else if (check_name == "invariants")
          rep = invariants_equal_base(tb);
        else
          rep = u_degree_report(tb, K);
      }
      const json j = to_json(rep);
      std::string table = rep.check + ": " + verdict_name(rep.verdict) + "\n";
      if (rep.witness)
        table += "witness: " + rep.witness->dump() + "\n";
      emit(common, "weylglob", {{"check", check_name}, {"config", config_text}}, j, table);
      return verdict_exit(rep.verdict);
    }

    if (*symcheck) {
      const auto r_long = parse_int_list(r_text, "r");
      std::vector<int> r(r_long.begin(), r_long.end());
      SymmetrizerContext ctx(r);
      if (ctx.total() == 0)
        throw ValidationError("r_lambda must be positive");
      if (samples < 1)
        throw ValidationError("--samples must be positive");
      std::mt19937_64 rng(common.seed);
      auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
      const Ambient amb{1, 1};
      std::vector<int> blocks;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] > 0)
          blocks.push_back(static_cast<int>(i) + 1);
      std::size_t invariant = 0, closed = 0;
      for (int n = 0; n < samples; ++n) {
        RingElement a(amb), b(amb);
        for (auto* x : {&a, &b})
          for (int j = 0, terms = uniform(1, 3); j < terms; ++j) {
            Exponents e = Exponents::one(amb);
            e.t[0] = uniform(-2, 2);
            e.u[0] = uniform(0, 2);
            x->add_term(e, uniform(-3, 3));
          }
        const TensorPower x = sym_element(ctx, blocks[n % blocks.size()], a);
        const TensorPower y = sym_element(ctx, blocks[uniform(0, static_cast<int>(blocks.size()) - 1)], b);
        invariant += is_block_invariant(ctx, x) && is_block_invariant(ctx, y);
        closed += is_block_invariant(ctx, x * y) && is_block_invariant(ctx, x + y);
      }
      const bool ok = invariant == static_cast<std::size_t>(samples) && closed == invariant;
      std::ostringstream table;
      table << "samples = " << samples << ", invariant = " << invariant << ", closed = " << closed << ", "
            << (ok ? "pass" : "fail") << "\n";
      emit(common, "symcheck", {{"r", r}, {"samples", samples}, {"seed", common.seed}},
           {{"invariant", invariant}, {"closed", closed}, {"passed", ok}}, table.str());
      return ok ? kOk : kCheckFailed;
    }

    if (*suite) {
      const auto results = run_acceptance(common.seed);
      bool all = true;
      std::string table;
      for (const auto& r : results) {
        table += format_line(r) + "\n";
        all = all && r.passed();
      }
      emit(common, "check-suite", {{"seed", common.seed}}, to_json(results), table);
      return all ? kOk : kCheckFailed;
    }
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const WindowOverflow& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
