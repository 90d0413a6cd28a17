#include <doctest.h>

#include <set>

#include "rectcolor/cliques.hpp"
#include "rectcolor/coloring.hpp"
#include "rectcolor/errors.hpp"
#include "rectcolor/oracles.hpp"
#include "support.hpp"

using namespace rectcolor;
using support::rect;

namespace {

Instance generated(GeneratorKind kind, int n, std::uint64_t seed, long grid = 10000) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.seed = seed;
  spec.grid = grid;
  return perturb(generate(spec));
}

bool proper(const Instance& inst, const Coloring& c) { return !validate_coloring(inst, c); }

/// Largest minimum degree over all subfamilies, by repeatedly deleting a
/// minimum-degree vertex.
int degeneracy(const Instance& inst) {
  std::vector<char> gone(inst.size(), 0);
  int best = 0;
  for (int step = 0; step < inst.size(); ++step) {
    int pick = -1, low = 0;
    for (int i = 0; i < inst.size(); ++i) {
      if (gone[i]) continue;
      int d = 0;
      for (int j : inst.neighbors(i)) d += !gone[j];
      if (pick < 0 || d < low) {
        pick = i;
        low = d;
      }
    }
    best = std::max(best, low);
    gone[pick] = 1;
  }
  return best;
}

}  // namespace

TEST_CASE("degeneracy greedy on a path uses two colors") {
  const Instance path({rect("a", 0, 0, 2, 1), rect("b", 2, 0, 4, 1), rect("c", 4, 0, 6, 1)});
  const Coloring c = degeneracy_greedy(path, path.all_indices());
  CHECK(c.num_colors == 2);
  CHECK(proper(path, c));
  CHECK(c.algorithm == "sparse");
}

TEST_CASE("degeneracy greedy respects the degeneracy bound") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = support::random_family(seed, 10 + static_cast<int>(seed % 50), 30);
    const Coloring c = degeneracy_greedy(inst, inst.all_indices());
    CHECK(proper(inst, c));
    CHECK(c.num_colors <= 1 + degeneracy(inst));
  }
}

TEST_CASE("degeneracy greedy on a subfamily leaves others uncolored") {
  const Instance inst({rect("a", 0, 0, 2, 2), rect("b", 1, 1, 3, 3), rect("c", 2, 2, 4, 4)});
  const std::vector<int> members{0, 2};
  const Coloring c = degeneracy_greedy(inst, members);
  CHECK(c.color[1] == -1);
  // a and c touch at (2, 2); a is peeled first, so c is colored first.
  CHECK(c.color[2] == 0);
  CHECK(c.color[0] == 1);
}

TEST_CASE("corner coloring rejects crossing pairs") {
  const Instance cross({rect("w", 0, 4, 10, 6), rect("t", 4, 0, 6, 10)});
  try {
    corner_coloring(cross, cross.all_indices());
    FAIL("expected PreconditionViolated");
  } catch (const PreconditionViolated& e) {
    CHECK(e.pair() == std::make_pair(0, 1));
  }
}

TEST_CASE("corner coloring of squares stays within 4(omega-1)") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = generated(GeneratorKind::Squares, 30 + static_cast<int>(seed), seed);
    const Coloring c = corner_coloring(inst, inst.all_indices());
    const int omega = clique_number(inst);
    CHECK(proper(inst, c));
    CHECK(c.num_colors <= std::max(4 * (omega - 1), 1));
  }
}

TEST_CASE("crossing chain levels have no internal crossing") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = generated(GeneratorKind::Uniform, 40, seed);
    const auto level = crossing_chain_levels(inst, inst.all_indices());
    const int omega = clique_number(inst);
    for (int r = 0; r < inst.size(); ++r) {
      CHECK(level[r] >= 1);
      CHECK(level[r] <= omega);
      for (int j : crossing_set(inst, r)) CHECK(level[r] > level[j]);
    }
  }
}

TEST_CASE("agb coloring is proper and within 4 omega (omega - 1)") {
  const Instance cross({rect("w", 0, 4, 10, 6), rect("t", 4, 0, 6, 10)});
  const Coloring two = agb_coloring(perturb(cross), cross.all_indices());
  CHECK(two.num_colors == 2);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = generated(seed % 2 ? GeneratorKind::Uniform : GeneratorKind::CrossGrid,
                                    20 + static_cast<int>(seed), seed);
    const Coloring c = agb_coloring(inst, inst.all_indices());
    const int omega = clique_number(inst);
    CHECK(proper(inst, c));
    CHECK(c.num_colors <= std::max(4 * omega * (omega - 1), 1));
    CHECK(c.palette_offsets.front() == 0);
  }
}

TEST_CASE("warm-up levels need distinct heights") {
  const Instance tie({rect("a", 0, 0, 1, 1), rect("b", 3, 0, 4, 1)});
  CHECK_THROWS_AS(warmup_levels(tie, tie.all_indices()), PreconditionViolated);
}

TEST_CASE("warm-up levels of a nested chain") {
  // Five rectangles nested by height with a common point: level = rank.
  std::vector<Rect> chain;
  for (int i = 0; i < 5; ++i) chain.push_back(rect("n" + std::to_string(i), i, i, 20 - i, 20 - i));
  const Instance inst(chain);
  const WarmupLevels lv = warmup_levels(inst, inst.all_indices());
  for (int i = 0; i < 5; ++i) CHECK(lv.level[i] == i + 1);
  CHECK(lv.max_level == 5);
  CHECK(lv.witness_clique[0].empty());
  CHECK(lv.witness_clique[4] == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("warm-up level witnesses") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = generated(GeneratorKind::Uniform, 35, seed, 50);
    const WarmupLevels lv = warmup_levels(inst, inst.all_indices());
    const auto points = candidate_points(inst);
    const int omega = clique_number(inst);
    for (int r = 0; r < inst.size(); ++r) {
      const int l = lv.level[r];
      CHECK(l >= 1);
      CHECK(l <= omega);
      const auto vert = vertical_set(inst, r);
      const std::set<int> vset(vert.begin(), vert.end());
      const auto& wc = lv.witness_clique[r];
      std::set<int> levels;
      for (int j : wc) {
        CHECK(vset.count(j) == 1);
        levels.insert(lv.level[j]);
      }
      auto with_r = wc;
      with_r.push_back(r);
      CHECK(support::share_point(inst, with_r));
      for (int j = 1; j < l; ++j) CHECK(levels.count(j) == 1);
      // No point of R sees V(R) members covering levels 1..l.
      for (const Point& p : points) {
        if (!contains(inst.rect(r), p)) continue;
        std::set<int> seen;
        for (int j : vert)
          if (contains(inst.rect(j), p)) seen.insert(lv.level[j]);
        int covered = 0;
        while (seen.count(covered + 1)) ++covered;
        CHECK(covered < l);
      }
    }
  }
}

TEST_CASE("warm-up coloring of crossing/containment families uses omega colors") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = generated(GeneratorKind::Concentric, 10 + static_cast<int>(seed), seed);
    const Coloring c = warmup_color_cc(inst, inst.all_indices());
    CHECK(proper(inst, c));
    CHECK(c.num_colors == clique_number(inst));
  }
  const Instance corner({rect("a", 0, 0, 2, 2), rect("b", 1, 1, 3, 4)});
  CHECK_THROWS_AS(warmup_color_cc(corner, corner.all_indices()), PreconditionViolated);
}

TEST_CASE("warm-up coloring of vertical families uses at most 3 omega - 2 colors") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = generated(GeneratorKind::Vertical, 10 + static_cast<int>(seed), seed);
    const Coloring c = warmup_color_vertical(inst, inst.all_indices());
    CHECK(proper(inst, c));
    CHECK(c.num_colors <= std::max(3 * clique_number(inst) - 2, 1));
  }
  const Instance corner({rect("a", 0, 0, 2, 2), rect("b", 1, 1, 3, 4)});
  CHECK_THROWS_AS(warmup_color_vertical(corner, corner.all_indices()), PreconditionViolated);
}

TEST_CASE("colorings never beat the chromatic number") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = perturb(support::random_family(seed, 12, 10));
    const int chi = exact_chromatic(inst);
    CHECK(chi >= clique_number(inst));
    CHECK(degeneracy_greedy(inst, inst.all_indices()).num_colors >= chi);
    CHECK(agb_coloring(inst, inst.all_indices()).num_colors >= chi);
  }
}
