#include "rectcolor/coloring.hpp"

#include <algorithm>

#include "rectcolor/errors.hpp"

namespace rectcolor {

namespace {

std::vector<char> membership(const Instance& inst, std::span<const int> members) {
  std::vector<char> in(inst.size(), 0);
  for (int i : members) in[i] = 1;
  return in;
}

/// Members sorted by decreasing height, ties by index.
std::vector<int> by_height(const Instance& inst, std::span<const int> members) {
  std::vector<int> order(members.begin(), members.end());
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return inst.height_rank(a) < inst.height_rank(b); });
  return order;
}

void require_distinct_heights(const Instance& inst, std::span<const int> members, const char* op) {
  auto order = by_height(inst, members);
  for (std::size_t k = 1; k < order.size(); ++k) {
    int a = order[k - 1], b = order[k];
    if (inst.rect(a).height() == inst.rect(b).height())
      throw PreconditionViolated(std::string(op) + ": '" + inst.rect(a).id + "' and '" +
                                     inst.rect(b).id + "' have equal heights (perturb first)",
                                 a, b);
  }
}

int least_free(const std::vector<int>& taken_stamp, int stamp) {
  int c = 0;
  while (c < static_cast<int>(taken_stamp.size()) && taken_stamp[c] == stamp) ++c;
  return c;
}

}  // namespace

int Coloring::colors_used() const {
  std::vector<int> seen;
  for (int c : color)
    if (c >= 0) seen.push_back(c);
  std::sort(seen.begin(), seen.end());
  return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

Coloring empty_coloring(const Instance& inst, std::string algorithm) {
  Coloring c;
  c.color.assign(inst.size(), -1);
  c.algorithm = std::move(algorithm);
  return c;
}

void recount(Coloring& c) {
  int top = -1;
  for (int v : c.color) top = std::max(top, v);
  c.num_colors = top + 1;
}

Coloring degeneracy_greedy(const Instance& inst, std::span<const int> members) {
  Coloring out = empty_coloring(inst, "sparse");
  const auto in = membership(inst, members);
  std::vector<int> alive(members.begin(), members.end());
  std::sort(alive.begin(), alive.end());
  std::vector<int> degree(inst.size(), 0);
  for (int i : alive)
    for (int j : inst.neighbors(i))
      if (in[j]) ++degree[i];

  std::vector<char> removed(inst.size(), 0);
  std::vector<int> peel;
  peel.reserve(alive.size());
  for (std::size_t step = 0; step < alive.size(); ++step) {
    int best = -1;
    for (int i : alive)
      if (!removed[i] && (best < 0 || degree[i] < degree[best])) best = i;
    removed[best] = 1;
    peel.push_back(best);
    for (int j : inst.neighbors(best))
      if (in[j] && !removed[j]) --degree[j];
  }

  std::vector<int> stamp(alive.size() + 1, -1);
  for (std::size_t k = peel.size(); k-- > 0;) {
    int r = peel[k];
    for (int j : inst.neighbors(r))
      if (in[j] && out.color[j] >= 0 && out.color[j] < static_cast<int>(stamp.size()))
        stamp[out.color[j]] = r;
    out.color[r] = least_free(stamp, r);
  }
  recount(out);
  return out;
}

Coloring corner_coloring(const Instance& inst, std::span<const int> members) {
  const auto in = membership(inst, members);
  for (int i : members)
    for (int j : inst.neighbors(i))
      if (i < j && in[j] && crosses(inst.grid(i), inst.grid(j)))
        throw PreconditionViolated("corner coloring: '" + inst.rect(i).id + "' and '" +
                                       inst.rect(j).id + "' cross",
                                   i, j);
  Coloring out = degeneracy_greedy(inst, members);
  out.algorithm = "corner";
  return out;
}

std::vector<int> crossing_chain_levels(const Instance& inst, std::span<const int> members) {
  const auto in = membership(inst, members);
  std::vector<int> level(inst.size(), 0);
  // Members of X(R) are strictly taller than R, so they are finished first.
  for (int r : by_height(inst, members)) {
    int best = 0;
    for (int j : crossing_set(inst, r))
      if (in[j]) best = std::max(best, level[j]);
    level[r] = best + 1;
  }
  return level;
}

Coloring agb_coloring(const Instance& inst, std::span<const int> members) {
  Coloring out = empty_coloring(inst, "agb");
  const auto level = crossing_chain_levels(inst, members);
  int levels = 0;
  for (int i : members) levels = std::max(levels, level[i]);
  int offset = 0;
  for (int l = 1; l <= levels; ++l) {
    std::vector<int> part;
    for (int i : members)
      if (level[i] == l) part.push_back(i);
    Coloring sub = corner_coloring(inst, part);
    out.palette_offsets.push_back(offset);
    for (int i : part) out.color[i] = offset + sub.color[i];
    offset += sub.num_colors;
  }
  recount(out);
  return out;
}

WarmupLevels warmup_levels(const Instance& inst, std::span<const int> members) {
  require_distinct_heights(inst, members, "warm-up levels");
  const auto in = membership(inst, members);
  WarmupLevels out;
  out.level.assign(inst.size(), 0);
  out.witness_clique.assign(inst.size(), {});
  std::vector<char> present;

  for (int r : by_height(inst, members)) {
    const GridRect& g = inst.grid(r);
    std::vector<int> vert;
    for (int j : vertical_set(inst, r))
      if (in[j] && out.level[j] > 0) vert.push_back(j);

    // Any clique of V(R) together with R has a common point whose top-left
    // corner sits on R's top side at the left edge of some member.
    std::vector<int> xs{g.x_lo};
    for (int j : vert)
      if (g.contains_x(inst.grid(j).x_lo)) xs.push_back(inst.grid(j).x_lo);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    int best_j = 0, best_x = g.x_lo;
    for (int x : xs) {
      present.assign(vert.size() + 2, 0);
      for (int j : vert)
        if (inst.grid(j).contains(x, g.y_hi) && out.level[j] < static_cast<int>(present.size()))
          present[out.level[j]] = 1;
      int covered = 0;
      while (covered + 1 < static_cast<int>(present.size()) && present[covered + 1]) ++covered;
      if (covered > best_j) {
        best_j = covered;
        best_x = x;
      }
    }
    out.level[r] = best_j + 1;
    out.max_level = std::max(out.max_level, best_j + 1);
    for (int j : vert)
      if (out.level[j] <= best_j && inst.grid(j).contains(best_x, g.y_hi))
        out.witness_clique[r].push_back(j);
  }
  return out;
}

Coloring warmup_color_cc(const Instance& inst, std::span<const int> members) {
  const auto in = membership(inst, members);
  for (int i : members)
    for (int j : inst.neighbors(i)) {
      if (i >= j || !in[j]) continue;
      auto kind = classify(inst.rect(i), inst.rect(j)).kind;
      if (kind != IntersectionKind::Crossing && kind != IntersectionKind::Containment)
        throw PreconditionViolated("warm-up cc coloring: '" + inst.rect(i).id + "' and '" +
                                       inst.rect(j).id + "' have a corner intersection",
                                   i, j);
    }
  const auto levels = warmup_levels(inst, members);
  Coloring out = empty_coloring(inst, "warmup-cc");
  for (int i : members) out.color[i] = levels.level[i] - 1;
  recount(out);
  return out;
}

Coloring warmup_color_vertical(const Instance& inst, std::span<const int> members) {
  const auto in = membership(inst, members);
  for (int i : members)
    for (int j : inst.neighbors(i))
      if (i < j && in[j] && !classify(inst.rect(i), inst.rect(j)).vertical)
        throw PreconditionViolated("warm-up vertical coloring: '" + inst.rect(i).id + "' and '" +
                                       inst.rect(j).id + "' intersect non-vertically",
                                   i, j);
  const auto levels = warmup_levels(inst, members);
  Coloring out = empty_coloring(inst, "warmup-vertical");
  for (int l = 1; l <= levels.max_level; ++l) out.palette_offsets.push_back(l == 1 ? 0 : 3 * l - 5);

  for (int r : by_height(inst, members)) {
    int l = levels.level[r];
    if (l == 1) {
      out.color[r] = 0;
      continue;
    }
    const int offset = 3 * l - 5;
    bool used[4] = {false, false, false, false};
    for (int j : inst.neighbors(r))
      if (in[j] && levels.level[j] == l && out.color[j] >= 0) used[out.color[j] - offset] = true;
    int c = 0;
    while (used[c]) ++c;
    if (c == 3)
      throw InternalBoundExceeded("warm-up vertical coloring: level " + std::to_string(l) +
                                  " needs a fourth color at '" + inst.rect(r).id + "'");
    out.color[r] = offset + c;
  }
  recount(out);
  return out;
}

}  // namespace rectcolor
