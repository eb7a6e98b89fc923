#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylhom/errors.hpp"
#include "weylhom/rootsys.hpp"

#include <set>

using namespace weylhom;

namespace {

using Cartan = std::vector<std::vector<long>>;

std::size_t expected_positive_roots(Family f, int n) {
  switch (f) {
  case Family::A: return static_cast<std::size_t>(n * (n + 1) / 2);
  case Family::B:
  case Family::C: return static_cast<std::size_t>(n * n);
  case Family::D: return static_cast<std::size_t>(n * (n - 1));
  }
  return 0;
}

IntVector expected_theta(Family f, int n) {
  IntVector t(n, 2);
  switch (f) {
  case Family::A: return IntVector(n, 1);
  case Family::B: t[0] = 1; return t;
  case Family::C: t[n - 1] = 1; return t;
  case Family::D: t[0] = t[n - 2] = t[n - 1] = 1; return t;
  }
  return t;
}

std::vector<std::pair<Family, int>> all_systems(int max_rank) {
  std::vector<std::pair<Family, int>> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = f == Family::A ? 1 : f == Family::D ? 3 : 2; n <= max_rank; ++n)
      out.emplace_back(f, n);
  return out;
}

} // namespace

TEST_CASE("Cartan matrices in Bourbaki numbering") {
  CHECK(build_root_system(Family::A, 2)->cartan() == Cartan{{2, -1}, {-1, 2}});
  CHECK(build_root_system(Family::B, 3)->cartan() == Cartan{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(build_root_system(Family::C, 3)->cartan() == Cartan{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  CHECK(build_root_system(Family::D, 4)->cartan() ==
        Cartan{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  CHECK(build_root_system(Family::B, 3)->cartan(3, 2) == -2);
}

TEST_CASE("root counts, highest roots and normalization for every system up to rank 8") {
  for (auto [f, n] : all_systems(8)) {
    CAPTURE(family_letter(f));
    CAPTURE(n);
    const auto rs = build_root_system(f, n);
    CHECK(rs->positive_roots().size() == expected_positive_roots(f, n));
    CHECK(rs->theta() == expected_theta(f, n));
    CHECK(rs->form(rs->theta(), rs->theta()) == 2);
    CHECK(rs->name() == std::string(1, family_letter(f)) + std::to_string(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(rs->symmetrizers()[i] * rs->cartan()[i][j] == rs->symmetrizers()[j] * rs->cartan()[j][i]);
  }
}

TEST_CASE("short roots sit where Bourbaki puts them") {
  const auto b4 = build_root_system(Family::B, 4);
  CHECK(b4->root_length2(4) == 1);
  CHECK(b4->root_length2(1) == 2);
  const auto c4 = build_root_system(Family::C, 4);
  CHECK(c4->root_length2(1) == 1);
  CHECK(c4->root_length2(4) == 2);
}

TEST_CASE("positive roots are closed under simple reflections") {
  for (auto [f, n] : all_systems(6)) {
    const auto rs = build_root_system(f, n);
    const auto& roots = rs->positive_roots();
    const std::set<IntVector> set(roots.begin(), roots.end());
    for (const auto& beta : roots) {
      const Rational len = rs->form(beta, beta);
      CHECK((len == 2 || len == 1));
      for (int i = 1; i <= n; ++i) {
        long pairing = 0;
        for (int j = 1; j <= n; ++j)
          pairing += rs->cartan(i, j) * beta[j - 1];
        IntVector image = beta;
        image[i - 1] -= pairing;
        IntVector minus_simple(n, 0);
        minus_simple[i - 1] = -1;
        CHECK((set.count(image) || image == minus_simple));
      }
    }
  }
}

TEST_CASE("I_0 membership") {
  CHECK(compute_I0(*build_root_system(Family::B, 3)) == std::set<int>{1, 3});
  CHECK(compute_I0(*build_root_system(Family::D, 6)) == std::set<int>{1, 5, 6});
  CHECK(compute_I0(*build_root_system(Family::A, 4)) == std::set<int>{1, 2, 3, 4});
  CHECK(compute_I0(*build_root_system(Family::C, 4)) == std::set<int>{1, 2, 3, 4});
  for (auto [f, n] : all_systems(8)) {
    const auto i0 = compute_I0(*build_root_system(f, n));
    if (f == Family::A || f == Family::C)
      CHECK(i0.size() == static_cast<std::size_t>(n));
    else
      CHECK(i0.size() == (f == Family::B ? 2u : 3u));
  }
}

TEST_CASE("illegal ranks and the rank cap") {
  CHECK_THROWS_AS(build_root_system(Family::A, 0), ValidationError);
  CHECK_THROWS_AS(build_root_system(Family::B, 1), ValidationError);
  CHECK_THROWS_AS(build_root_system(Family::C, 1), ValidationError);
  CHECK_THROWS_AS(build_root_system(Family::D, 2), ValidationError);
  CHECK_THROWS_AS(build_root_system(Family::A, 9), ValidationError);
  CHECK_NOTHROW(build_root_system(Family::A, 9, 9));
  CHECK_THROWS_AS(parse_family("E"), ValidationError);
  CHECK(parse_family("d") == Family::D);
}

TEST_CASE("weights, dominance and height") {
  const auto a2 = build_root_system(Family::A, 2);
  const Weight w1 = Weight::fundamental(a2, 1), w2 = Weight::fundamental(a2, 2);
  const Weight theta = Weight::from_root_coords(a2, a2->theta());
  CHECK(theta == w1 + w2);
  CHECK(theta.to_string() == "1,1");
  CHECK(dominance_leq(Weight::zero(a2), theta));
  CHECK(height(theta) == 2);
  CHECK_FALSE(dominance_leq(w1, w2));
  CHECK_FALSE(dominance_leq(w2, w1));
  CHECK_THROWS_AS(height(w1 - w2), ValidationError);
  CHECK(w1.root_coords() == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
  CHECK(Weight::fundamental(a2, 0) == Weight::zero(a2));
  CHECK((w1 * 3)[1] == 3);
  CHECK_FALSE((w1 - w2).is_dominant());

  const auto b3 = build_root_system(Family::B, 3);
  CHECK(Weight::from_root_coords(b3, b3->theta()) == Weight::fundamental(b3, 2));
  CHECK(dominance_leq(Weight::zero(b3), Weight::fundamental(b3, 2)));
  CHECK_THROWS_AS(Weight(b3, {1, 0}), ValidationError);
  CHECK_THROWS_AS(w1 + Weight::fundamental(b3, 1), ValidationError);
}
