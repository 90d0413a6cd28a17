#pragma once

#include <span>
#include <string>
#include <vector>

#include "rectcolor/cliques.hpp"
#include "rectcolor/geom.hpp"

namespace rectcolor {

/// Color per instance index (-1 for rectangles outside the colored family).
struct Coloring {
  std::vector<int> color;
  int num_colors = 0;  // 1 + largest color index in use
  std::string algorithm;
  std::vector<int> palette_offsets;

  int colors_used() const;
};

/// Coloring of `members` with every other entry -1.
Coloring empty_coloring(const Instance& inst, std::string algorithm);
void recount(Coloring& c);

/// Smallest-last greedy: peel minimum-degree rectangles (ties by index), then
/// color in reverse peeling order with the least free color. At most
/// 1 + degeneracy colors; at most (2s+4)(omega-1) on an s-sparse family.
Coloring degeneracy_greedy(const Instance& inst, std::span<const int> members);

/// degeneracy_greedy for families without crossing pairs (at most 4(omega-1)
/// colors). Throws PreconditionViolated naming a crossing pair.
Coloring corner_coloring(const Instance& inst, std::span<const int> members);

/// Antichain levels of R < R' iff R' in X(R), longest chain by height order.
/// Level l of the result holds the rectangles with level value l + 1.
std::vector<int> crossing_chain_levels(const Instance& inst, std::span<const int> members);

/// Levels of the crossing order colored separately by corner_coloring, with
/// disjoint consecutive palettes: at most max(4 omega (omega-1), 1) colors.
Coloring agb_coloring(const Instance& inst, std::span<const int> members);

struct WarmupLevels {
  std::vector<int> level;                       // 1-based, 0 outside members
  std::vector<std::vector<int>> witness_clique;  // C(R): empty on level 1
  int max_level = 0;
};

/// Processes members by decreasing height; R goes to level i where i - 1 is
/// the largest j such that a clique of already placed rectangles from V(R)
/// covers levels 1..j. Throws PreconditionViolated on equal heights.
WarmupLevels warmup_levels(const Instance& inst, std::span<const int> members);

/// One color per warm-up level; needs crossing/containment-only input.
Coloring warmup_color_cc(const Instance& inst, std::span<const int> members);

/// Warm-up levels, level 1 in one color and every further level 3-colored
/// greedily by decreasing height: at most 3 omega - 2 colors. Needs an input
/// where every intersection is vertical.
Coloring warmup_color_vertical(const Instance& inst, std::span<const int> members);

}  // namespace rectcolor
