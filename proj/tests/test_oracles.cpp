#include <doctest.h>

#include <set>

#include "rectcolor/errors.hpp"
#include "rectcolor/oracles.hpp"
#include "support.hpp"

using namespace rectcolor;
using support::rect;

namespace {

bool is_clique(const Instance& inst, std::uint32_t mask) {
  for (int i = 0; i < inst.size(); ++i)
    for (int j = i + 1; j < inst.size(); ++j)
      if ((mask >> i & 1) && (mask >> j & 1) && !support::direct_intersect(inst.rect(i), inst.rect(j)))
        return false;
  return true;
}

bool colorable(const Instance& inst, int k) {
  const int n = inst.size();
  std::vector<int> color(n, 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n; ++j)
        if (color[i] == color[j] && support::direct_intersect(inst.rect(i), inst.rect(j))) {
          ok = false;
          break;
        }
    if (ok) return true;
    int pos = 0;
    while (pos < n && ++color[pos] == k) color[pos++] = 0;
    if (pos == n) return false;
  }
}

}  // namespace

TEST_CASE("exact MWIS examples") {
  const Instance two({rect("a", 0, 0, 1, 1, 1), rect("b", 2, 2, 3, 3, 2)});
  const MwisSolution s2 = exact_mwis(two);
  CHECK(s2.chosen == std::vector<int>{0, 1});
  CHECK(s2.weight == 3);

  const Instance clique({rect("a", 0, 0, 4, 4, 1), rect("b", 1, 1, 5, 5, 2), rect("c", 2, 2, 6, 6, 3)});
  const MwisSolution sc = exact_mwis(clique);
  CHECK(sc.chosen == std::vector<int>{2});
  CHECK(sc.weight == 3);

  const Instance grid({rect("A", 0, 1, 10, 2), rect("B", 0, 5, 10, 6), rect("C", 1, 0, 2, 10),
                       rect("D", 5, 0, 6, 10)});
  CHECK(exact_mwis(grid).weight == 2);
  CHECK(exact_mwis(Instance()).weight == 0);
}

TEST_CASE("exact MWIS equals subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = support::random_family(seed, 1 + static_cast<int>(seed % 14), 12, true);
    const MwisSolution s = exact_mwis(inst);
    CHECK(s.weight == support::enumerate_mwis(inst));
    CHECK_FALSE(validate_independent(inst, s.chosen).has_value());
    Scalar w = 0;
    for (int i : s.chosen) w += inst.rect(i).weight;
    CHECK(w == s.weight);
  }
}

TEST_CASE("oracles refuse oversized input") {
  const Instance big = support::random_family(1, 25, 100);
  CHECK_THROWS_AS(exact_mwis(big), BudgetExceeded);
  CHECK_THROWS_AS(exact_chromatic(big), BudgetExceeded);
  CHECK_THROWS_AS(exact_clique_graph(support::random_family(1, 41, 100)), BudgetExceeded);
  CHECK_NOTHROW(exact_mwis(big, {30}));
}

TEST_CASE("exact chromatic number") {
  CHECK(exact_chromatic(Instance({rect("a", 0, 0, 1, 1), rect("b", 2, 0, 3, 1)})) == 1);
  std::vector<Rect> four;
  for (int i = 0; i < 4; ++i) four.push_back(rect("c" + std::to_string(i), i, i, 10, 10));
  CHECK(exact_chromatic(Instance(four)) == 4);
  CHECK(exact_chromatic(Instance({rect("w", 0, 4, 10, 6), rect("t", 4, 0, 6, 10),
                                  rect("z", 20, 20, 21, 21)})) == 2);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Instance inst = support::random_family(seed, 1 + static_cast<int>(seed % 8), 8);
    const int chi = exact_chromatic(inst);
    CHECK(colorable(inst, chi));
    if (chi > 1) CHECK_FALSE(colorable(inst, chi - 1));
  }
}

TEST_CASE("exact clique number") {
  std::vector<Rect> chain;
  for (int i = 0; i < 5; ++i) chain.push_back(rect("n" + std::to_string(i), i, i, 20 - i, 20 - i));
  CHECK(exact_clique_graph(Instance(chain)) == 5);
  CHECK(exact_clique_graph(Instance({rect("a", 0, 0, 1, 1), rect("b", 2, 0, 3, 1)})) == 1);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = support::random_family(seed, 1 + static_cast<int>(seed % 12), 10);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << inst.size()); ++mask)
      if (is_clique(inst, mask)) best = std::max(best, std::popcount(mask));
    CHECK(exact_clique_graph(inst) == best);
  }
}

TEST_CASE("graph maximal cliques equal subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = support::random_family(seed, 1 + static_cast<int>(seed % 10), 8);
    const int n = inst.size();
    std::set<std::vector<int>> expected;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (!is_clique(inst, mask)) continue;
      bool maximal = true;
      for (int v = 0; v < n && maximal; ++v)
        if (!(mask >> v & 1) && is_clique(inst, mask | 1u << v)) maximal = false;
      if (!maximal) continue;
      std::vector<int> c;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) c.push_back(v);
      expected.insert(c);
    }
    const auto got = graph_maximal_cliques(inst);
    CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == expected);
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("validate coloring") {
  const Instance indep({rect("a", 0, 0, 1, 1), rect("b", 2, 0, 3, 1)});
  Coloring one;
  one.color = {0, 0};
  CHECK_FALSE(validate_coloring(indep, one).has_value());

  const Instance cross({rect("w", 0, 4, 10, 6), rect("t", 4, 0, 6, 10)});
  const auto bad = validate_coloring(cross, one);
  REQUIRE(bad.has_value());
  CHECK(*bad == std::make_pair(0, 1));

  Coloring partial;
  partial.color = {0, -1};
  CHECK_THROWS_AS(validate_coloring(cross, partial), MissingAssignment);
  Coloring short_one;
  short_one.color = {0};
  CHECK_THROWS_AS(validate_coloring(cross, short_one), MissingAssignment);
}

TEST_CASE("validate independent set") {
  const Instance inst({rect("a", 0, 0, 1, 1), rect("b", 1, 0, 2, 1), rect("c", 5, 5, 6, 6)});
  CHECK_FALSE(validate_independent(inst, std::vector<int>{}).has_value());
  CHECK(validate_independent(inst, std::vector<int>{0, 1}).has_value());
  CHECK_FALSE(validate_independent(inst, std::vector<int>{0, 2}).has_value());
  const std::vector<std::string> ids{"a", "c"};
  CHECK_FALSE(validate_independent(inst, std::span<const std::string>(ids)).has_value());
  const std::vector<std::string> ghost{"a", "zz"};
  CHECK_THROWS_AS(validate_independent(inst, std::span<const std::string>(ghost)), UnknownId);
  const std::vector<std::string> twice{"c", "c"};
  CHECK(validate_independent(inst, std::span<const std::string>(twice)).has_value());
}
