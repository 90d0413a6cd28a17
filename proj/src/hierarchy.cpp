#include "rectcolor/hierarchy.hpp"

#include <algorithm>

#include "rectcolor/cliques.hpp"
#include "rectcolor/errors.hpp"

namespace rectcolor {

namespace {

long pow2(int e) { return e < 0 ? 0 : 1L << e; }

int ceil_log2(int v) {
  int k = 0;
  while ((1L << k) < v) ++k;
  return k;
}

std::string cell_name(const Instance& inst, int i, Word w, int r) {
  return "S_" + std::to_string(i) + "(" + word_string(i, w) + "), '" + inst.rect(r).id + "'";
}

}  // namespace

std::string word_string(int length, Word w) {
  if (length == 0) return "eps";
  std::string s(length, '0');
  for (int b = 0; b < length; ++b)
    if (w >> (length - 1 - b) & 1U) s[b] = '1';
  return s;
}

std::vector<GridPoint> DecompositionTree::witnesses(const Instance& inst, int i, int r) const {
  std::vector<GridPoint> out;
  for (int x : witness_x[i][r]) out.push_back({x, inst.grid(r).y_hi});
  return out;
}

DecompositionTree build_decomposition(const Instance& inst) {
  inst.require_distinct_heights("hierarchical decomposition");
  const int n = inst.size();
  DecompositionTree tree;
  tree.omega = clique_number(inst);
  tree.k = ceil_log2(std::max(tree.omega, 1));
  const int k = tree.k;

  tree.vertical.resize(n);
  for (int r = 0; r < n; ++r) tree.vertical[r] = vertical_set(inst, r);

  tree.cells.resize(k + 1);
  tree.cell_of.assign(k + 1, std::vector<Word>(n, 0));
  tree.witness_x.assign(k + 1, std::vector<std::vector<int>>(n));
  tree.cells[0] = {inst.height_order()};
  for (int r = 0; r < n; ++r) {
    const GridRect& g = inst.grid(r);
    auto& p0 = tree.witness_x[0][r];
    p0 = {g.x_lo, g.x_hi};
    for (int j : tree.vertical[r])
      for (int x : {inst.grid(j).x_lo, inst.grid(j).x_hi})
        if (g.contains_x(x)) p0.push_back(x);
    std::sort(p0.begin(), p0.end());
    p0.erase(std::unique(p0.begin(), p0.end()), p0.end());
  }

  constexpr Word kUnplaced = ~Word{0};
  for (int i = 1; i <= k; ++i) {
    const long threshold = pow2(k - i);
    auto& place = tree.cell_of[i];
    std::fill(place.begin(), place.end(), kUnplaced);
    tree.cells[i].assign(std::size_t{1} << i, {});
    for (Word u = 0; u < tree.cells[i - 1].size(); ++u) {
      const Word zero = 2 * u, one = 2 * u + 1;
      for (int r : tree.cells[i - 1][u]) {
        const int y = inst.grid(r).y_hi;
        std::vector<int> heavy;
        for (int x : tree.witness_x[i - 1][r]) {
          long count = 0;
          for (int j : tree.vertical[r])
            if (place[j] == zero && inst.grid(j).contains(x, y)) ++count;
          if (count >= threshold) heavy.push_back(x);
        }
        if (!heavy.empty()) {
          place[r] = one;
          tree.witness_x[i][r] = std::move(heavy);
        } else {
          place[r] = zero;
          tree.witness_x[i][r] = tree.witness_x[i - 1][r];
        }
        tree.cells[i][place[r]].push_back(r);
      }
    }
  }
  return tree;
}

Check check_tree_structure(const DecompositionTree& tree, const Instance& inst) {
  const int n = inst.size();
  for (int i = 0; i <= tree.k; ++i) {
    std::vector<int> seen(n, 0);
    for (Word w = 0; w < tree.cells[i].size(); ++w)
      for (int r : tree.cells[i][w]) {
        ++seen[r];
        if (tree.cell_of[i][r] != w) return {false, cell_name(inst, i, w, r) + " misfiled"};
        if (i > 0 && tree.cell_of[i - 1][r] != w / 2)
          return {false, cell_name(inst, i, w, r) + " not inside its parent cell"};
      }
    for (int r = 0; r < n; ++r) {
      if (seen[r] != 1) return {false, "level " + std::to_string(i) + " is not a partition"};
      const auto& p = tree.witness_x[i][r];
      if (p.empty()) return {false, cell_name(inst, i, tree.cell_of[i][r], r) + " has no witnesses"};
      for (int x : p)
        if (!inst.grid(r).contains_x(x))
          return {false, cell_name(inst, i, tree.cell_of[i][r], r) + " witness off the top side"};
      if (i > 0) {
        const auto& q = tree.witness_x[i - 1][r];
        if (!std::includes(q.begin(), q.end(), p.begin(), p.end()))
          return {false, cell_name(inst, i, tree.cell_of[i][r], r) + " witnesses not nested"};
        if ((tree.cell_of[i][r] & 1U) == 0 && p != q)
          return {false, cell_name(inst, i, tree.cell_of[i][r], r) + " changed witnesses in a 0-child"};
      }
    }
  }
  return {};
}

Check check_partition_lemma(const DecompositionTree& tree, const Instance& inst) {
  for (int i = 0; i <= tree.k; ++i) {
    const long bound = pow2(tree.k - i);
    for (Word w = 0; w < tree.cells[i].size(); ++w)
      for (int r : tree.cells[i][w])
        for (GridPoint p : tree.witnesses(inst, i, r)) {
          long count = 0;
          for (int j : tree.vertical[r])
            if (tree.cell_of[i][j] == w && inst.grid(j).contains(p.x, p.y)) ++count;
          if (count >= bound)
            return {false, cell_name(inst, i, w, r) + ": witness in " + std::to_string(count) +
                               " >= " + std::to_string(bound) + " rectangles of V(R)"};
        }
  }
  return {};
}

Check check_witness_corollary(const DecompositionTree& tree, const Instance& inst) {
  const int n = inst.size();
  for (int i = 0; i <= tree.k; ++i) {
    // For every R' and p' in P_i(R'): the box R' intersected with all members
    // of V(R') containing p'. Independent of the partner R.
    std::vector<std::vector<GridRect>> boxes(n);
    for (int rp = 0; rp < n; ++rp)
      for (GridPoint pp : tree.witnesses(inst, i, rp)) {
        GridRect box = inst.grid(rp);
        for (int j : tree.vertical[rp]) {
          const GridRect& g = inst.grid(j);
          if (!g.contains(pp.x, pp.y)) continue;
          box = {std::max(box.x_lo, g.x_lo), std::min(box.x_hi, g.x_hi), std::max(box.y_lo, g.y_lo),
                 std::min(box.y_hi, g.y_hi)};
        }
        boxes[rp].push_back(box);
      }

    for (int r = 0; r < n; ++r) {
      const Word w = tree.cell_of[i][r];
      const auto& px = tree.witness_x[i][r];
      const int y = inst.grid(r).y_hi;
      auto hits = [&](const GridRect& box) {
        if (box.x_lo > box.x_hi || box.y_lo > box.y_hi || y < box.y_lo || y > box.y_hi) return false;
        auto it = std::lower_bound(px.begin(), px.end(), box.x_lo);
        return it != px.end() && *it <= box.x_hi;
      };
      for (int rp : crossing_set(inst, r)) {
        if (tree.cell_of[i][rp] != w) continue;
        if (!hits(inst.grid(rp)))
          return {false, cell_name(inst, i, w, r) + ": no witness inside '" + inst.rect(rp).id + "'"};
        for (const GridRect& box : boxes[rp])
          if (!hits(box))
            return {false, cell_name(inst, i, w, r) + ": no aligned witness for a point of '" +
                               inst.rect(rp).id + "'"};
      }
    }
  }
  return {};
}

Check check_clique_lemma(const DecompositionTree& tree, const Instance& inst) {
  for (int i = 0; i <= tree.k; ++i) {
    const long bound = pow2(tree.k - i + 1);
    for (int r = 0; r < inst.size(); ++r) {
      std::vector<int> part;
      for (int j : crossing_set(inst, r))
        if (tree.cell_of[i][j] == tree.cell_of[i][r]) part.push_back(j);
      int depth = clique_number(inst, part);
      if (depth > bound)
        return {false, cell_name(inst, i, tree.cell_of[i][r], r) + ": clique of " +
                           std::to_string(depth) + " in X(R)"};
    }
  }
  return {};
}

std::optional<CoveringWitness> alpha_covering(const Instance& inst, std::span<const int> family,
                                              int r, long alpha) {
  const GridRect& g = inst.grid(r);
  std::vector<int> near;  // members of the family meeting R, R excluded
  for (int j : family)
    if (j != r && inst.adjacent(r, j)) near.push_back(j);

  long top_pool = 0, bottom_pool = 0;
  for (int j : near) {
    if (inst.grid(j).y_hi >= g.y_hi) ++top_pool;
    if (inst.grid(j).y_lo <= g.y_lo) ++bottom_pool;
  }
  if (top_pool < alpha || bottom_pool < alpha) return std::nullopt;

  std::vector<int> xs{g.x_lo}, ys{g.y_hi};
  for (int j : near) {
    const GridRect& o = inst.grid(j);
    if (g.contains_x(o.x_lo)) xs.push_back(o.x_lo);
    if (g.y_lo <= o.y_hi && o.y_hi <= g.y_hi) ys.push_back(o.y_hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<int> top_lo, bottom_hi;
  for (int x : xs) {
    // With p = (x, y) inside R, a member containing p meets the top side of R
    // iff it reaches above it, and the bottom side iff it reaches below it.
    top_lo.clear();
    bottom_hi.clear();
    for (int j : near) {
      const GridRect& o = inst.grid(j);
      if (!o.contains_x(x)) continue;
      if (o.y_hi >= g.y_hi) top_lo.push_back(o.y_lo);
      if (o.y_lo <= g.y_lo) bottom_hi.push_back(o.y_hi);
    }
    if (static_cast<long>(top_lo.size()) < alpha || static_cast<long>(bottom_hi.size()) < alpha)
      continue;
    std::sort(top_lo.begin(), top_lo.end());
    std::sort(bottom_hi.begin(), bottom_hi.end());
    for (int y : ys) {
      long top = std::upper_bound(top_lo.begin(), top_lo.end(), y) - top_lo.begin();
      long bottom = bottom_hi.end() - std::lower_bound(bottom_hi.begin(), bottom_hi.end(), y);
      if (top < alpha) continue;
      if (bottom < alpha) break;  // only shrinks as y grows
      CoveringWitness cw{{x, y}, {}, {}};
      for (int j : near) {
        const GridRect& o = inst.grid(j);
        if (!o.contains(x, y)) continue;
        if (o.y_hi >= g.y_hi) cw.top_hits.push_back(j);
        if (o.y_lo <= g.y_lo) cw.bottom_hits.push_back(j);
      }
      return cw;
    }
  }
  return std::nullopt;
}

CoveredSet compute_T(const DecompositionTree& tree, const Instance& inst, int i, Word w) {
  CoveredSet out;
  const auto& family = tree.cell(i, w);
  const long alpha = pow2(tree.k - i + 2);
  std::vector<int> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  for (int r : sorted)
    if (auto cw = alpha_covering(inst, family, r, alpha)) {
      out.members.push_back(r);
      out.witnesses.emplace(r, std::move(*cw));
    }
  return out;
}

SparseCertificate sparse_certificate(const DecompositionTree& tree, const Instance& inst, int i,
                                     Word w, const CoveredSet& covered) {
  SparseCertificate cert;
  for (int r : covered.members) {
    const auto& px = tree.witness_x[i][r];
    const int y = inst.grid(r).y_hi;
    cert.points[r] = {{px.front(), y}, {px.back(), y}, covered.witnesses.at(r).center};
  }
  for (std::size_t a = 0; a < covered.members.size(); ++a)
    for (std::size_t b = a + 1; b < covered.members.size(); ++b) {
      const int r = covered.members[a], s = covered.members[b];
      const GridRect &gr = inst.grid(r), &gs = inst.grid(s);
      if (!gr.intersects(gs) || !crosses(gr, gs)) continue;
      bool hit = false;
      for (int owner : {r, s})
        for (GridPoint p : cert.points[owner])
          if (gr.contains(p.x, p.y) && gs.contains(p.x, p.y)) hit = true;
      if (!hit)
        throw CertificateInvalid("3-sparse certificate of " + cell_name(inst, i, w, r) +
                                     " misses crossing partner '" + inst.rect(s).id + "'",
                                 r, s);
    }
  return cert;
}

long hierarchical_color_bound(int k) { return pow2(k) * (160L * k + 224); }

long round_palette_width(int k, int i) { return std::max(10 * (pow2(k - i + 4) - 1), 1L); }

Coloring hierarchical_coloring(const Instance& inst) {
  return hierarchical_coloring(inst, build_decomposition(inst));
}

Coloring hierarchical_coloring(const Instance& inst, const DecompositionTree& tree) {
  Coloring out = empty_coloring(inst, "hier");
  const int k = tree.k;
  std::vector<char> removed(inst.size(), 0);
  long offset = 0;

  for (int i = 1; i <= k; ++i) {
    const long width = round_palette_width(k, i);
    std::vector<int> round_removed;
    for (Word w = 0; w < tree.cells[i].size(); ++w) {
      const CoveredSet covered = compute_T(tree, inst, i, w);
      std::vector<int> part;
      for (int r : covered.members)
        if (!removed[r]) part.push_back(r);
      Coloring sub = degeneracy_greedy(inst, part);
      if (sub.num_colors > width)
        throw InternalBoundExceeded("round " + std::to_string(i) + " cell " + word_string(i, w) +
                                    " used " + std::to_string(sub.num_colors) + " > " +
                                    std::to_string(width) + " colors");
      out.palette_offsets.push_back(static_cast<int>(offset));
      for (int r : part) out.color[r] = static_cast<int>(offset) + sub.color[r];
      offset += width;
      round_removed.insert(round_removed.end(), part.begin(), part.end());
    }
    for (int r : round_removed) removed[r] = 1;
  }

  for (Word w = 0; w < tree.cells[k].size(); ++w) {
    std::vector<int> part;
    for (int r : tree.cells[k][w])
      if (!removed[r]) part.push_back(r);
    Coloring sub = agb_coloring(inst, part);
    if (sub.num_colors > kFinalPaletteWidth)
      throw InternalBoundExceeded("final cell " + word_string(k, w) + " used " +
                                  std::to_string(sub.num_colors) + " > 224 colors");
    out.palette_offsets.push_back(static_cast<int>(offset));
    for (int r : part) out.color[r] = static_cast<int>(offset) + sub.color[r];
    offset += kFinalPaletteWidth;
  }
  recount(out);
  return out;
}

}  // namespace rectcolor
