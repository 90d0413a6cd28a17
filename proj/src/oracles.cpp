#include "rectcolor/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>

#include "rectcolor/cliques.hpp"
#include "rectcolor/errors.hpp"

namespace rectcolor {

namespace {

using Mask = std::uint64_t;

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}
  void check(const char* who) {
    if ((++ticks_ & 1023) == 0 && std::chrono::steady_clock::now() > end_)
      throw BudgetExceeded(std::string(who) + ": time limit exceeded");
  }

 private:
  std::chrono::steady_clock::time_point end_;
  unsigned ticks_ = 0;
};

void require_size(const Instance& inst, const OracleBudget& budget, const char* who) {
  if (inst.size() > budget.max_n || inst.size() > 64)
    throw BudgetExceeded(std::string(who) + ": n = " + std::to_string(inst.size()) + " exceeds cap " +
                         std::to_string(std::min(budget.max_n, 64)));
}

std::vector<Mask> neighbor_masks(const Instance& inst) {
  std::vector<Mask> nb(inst.size(), 0);
  for (int i = 0; i < inst.size(); ++i)
    for (int j : inst.neighbors(i)) nb[i] |= Mask{1} << j;
  return nb;
}

Mask bit(int i) { return Mask{1} << i; }

}  // namespace

MwisSolution exact_mwis(const Instance& inst, OracleBudget budget) {
  require_size(inst, budget, "exact MWIS");
  const int n = inst.size();
  const auto nb = neighbor_masks(inst);
  Deadline deadline(budget.time_limit_s);
  Scalar best = -1;
  Mask best_set = 0;

  std::function<void(Mask, Mask, const Scalar&)> search = [&](Mask open, Mask taken, const Scalar& value) {
    deadline.check("exact MWIS");
    Scalar bound = value;
    for (Mask m = open; m; m &= m - 1) bound += inst.rect(std::countr_zero(m)).weight;
    if (bound <= best) return;
    int pivot = -1, degree = -1;
    for (Mask m = open; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int d = std::popcount(nb[v] & open);
      if (d > degree) {
        degree = d;
        pivot = v;
      }
    }
    if (degree <= 0) {  // open is independent (or empty): take everything
      best = bound;
      best_set = taken | open;
      return;
    }
    search(open & ~bit(pivot) & ~nb[pivot], taken | bit(pivot), value + inst.rect(pivot).weight);
    search(open & ~bit(pivot), taken, value);
  };
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  search(all, 0, Scalar(0));

  MwisSolution out;
  out.weight = best < 0 ? Scalar(0) : best;
  for (int i = 0; i < n; ++i)
    if (best_set & bit(i)) out.chosen.push_back(i);
  return out;
}

int exact_chromatic(const Instance& inst, OracleBudget budget) {
  require_size(inst, budget, "exact chromatic number");
  const int n = inst.size();
  if (n == 0) return 0;
  Deadline deadline(budget.time_limit_s);
  std::vector<int> order = inst.all_indices();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.neighbors(a).size() > inst.neighbors(b).size();
  });
  std::vector<int> color(n, -1);

  std::function<bool(int, int, int)> place = [&](int pos, int used, int k) {
    deadline.check("exact chromatic number");
    if (pos == n) return true;
    const int v = order[pos];
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      bool free = true;
      for (int j : inst.neighbors(v))
        if (color[j] == c) {
          free = false;
          break;
        }
      if (!free) continue;
      color[v] = c;
      if (place(pos + 1, std::max(used, c + 1), k)) return true;
      color[v] = -1;
    }
    return false;
  };
  for (int k = std::max(1, clique_number(inst));; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (place(0, 0, k)) return k;
  }
}

int exact_clique_graph(const Instance& inst, OracleBudget budget) {
  require_size(inst, budget, "exact clique number");
  const auto nb = neighbor_masks(inst);
  Deadline deadline(budget.time_limit_s);
  int best = 0;
  std::function<void(Mask, Mask, Mask, int)> expand = [&](Mask r, Mask p, Mask x, int size) {
    deadline.check("exact clique number");
    if (!p && !x) {
      best = std::max(best, size);
      return;
    }
    if (size + std::popcount(p) <= best) return;
    Mask px = p | x;
    int pivot = std::countr_zero(px), most = -1;
    for (Mask m = px; m; m &= m - 1) {
      int u = std::countr_zero(m);
      int c = std::popcount(p & nb[u]);
      if (c > most) {
        most = c;
        pivot = u;
      }
    }
    for (Mask m = p & ~nb[pivot]; m; m &= m - 1) {
      int v = std::countr_zero(m);
      expand(r | bit(v), p & nb[v], x & nb[v], size + 1);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  const int n = inst.size();
  expand(0, n == 64 ? ~Mask{0} : bit(n) - 1, 0, 0);
  return best;
}

std::vector<std::vector<int>> graph_maximal_cliques(const Instance& inst, OracleBudget budget) {
  require_size(inst, budget, "graph maximal cliques");
  const auto nb = neighbor_masks(inst);
  std::vector<std::vector<int>> out;
  std::function<void(Mask, Mask, Mask)> expand = [&](Mask r, Mask p, Mask x) {
    if (!p && !x) {
      std::vector<int> c;
      for (Mask m = r; m; m &= m - 1) c.push_back(std::countr_zero(m));
      out.push_back(std::move(c));
      return;
    }
    Mask px = p | x;
    int pivot = std::countr_zero(px);
    for (Mask m = p & ~nb[pivot]; m; m &= m - 1) {
      int v = std::countr_zero(m);
      expand(r | bit(v), p & nb[v], x & nb[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  const int n = inst.size();
  if (n > 0) expand(0, n == 64 ? ~Mask{0} : bit(n) - 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Violation validate_coloring(const Instance& inst, const Coloring& coloring) {
  if (static_cast<int>(coloring.color.size()) != inst.size())
    throw MissingAssignment("coloring covers " + std::to_string(coloring.color.size()) + " of " +
                            std::to_string(inst.size()) + " rectangles");
  for (int i = 0; i < inst.size(); ++i)
    if (coloring.color[i] < 0) throw MissingAssignment("rectangle '" + inst.rect(i).id + "' has no color");
  for (int i = 0; i < inst.size(); ++i)
    for (int j : inst.neighbors(i))
      if (i < j && coloring.color[i] == coloring.color[j]) return std::make_pair(i, j);
  return std::nullopt;
}

Violation validate_independent(const Instance& inst, std::span<const int> chosen) {
  for (std::size_t a = 0; a < chosen.size(); ++a)
    for (std::size_t b = a + 1; b < chosen.size(); ++b)
      if (chosen[a] == chosen[b] || inst.adjacent(chosen[a], chosen[b]))
        return std::make_pair(chosen[a], chosen[b]);
  return std::nullopt;
}

Violation validate_independent(const Instance& inst, std::span<const std::string> ids) {
  std::vector<int> chosen;
  for (const auto& id : ids) {
    auto idx = inst.index_of(id);
    if (!idx) throw UnknownId("unknown rectangle id '" + id + "'");
    chosen.push_back(*idx);
  }
  return validate_independent(inst, chosen);
}

}  // namespace rectcolor
