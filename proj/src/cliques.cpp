#include "rectcolor/cliques.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace rectcolor {

std::vector<GridPoint> candidate_grid_points(const Instance& inst, std::span<const int> members) {
  std::vector<int> xs, ys;
  for (int i : members) {
    xs.push_back(inst.grid(i).x_lo);
    ys.push_back(inst.grid(i).y_hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<GridPoint> out;
  out.reserve(xs.size() * ys.size());
  for (int x : xs)
    for (int y : ys) out.push_back({x, y});
  return out;
}

std::vector<Point> candidate_points(const Instance& inst) {
  auto all = inst.all_indices();
  std::vector<Point> out;
  for (GridPoint p : candidate_grid_points(inst, all)) out.push_back(inst.to_point(p));
  return out;
}

std::vector<int> containing_set(const Instance& inst, const Point& p, std::span<const int> within) {
  std::vector<int> out;
  for (int i : within)
    if (contains(inst.rect(i), p)) out.push_back(i);
  return out;
}

std::vector<int> containing_set(const Instance& inst, GridPoint p, std::span<const int> within) {
  std::vector<int> out;
  for (int i : within)
    if (inst.grid(i).contains(p.x, p.y)) out.push_back(i);
  return out;
}

DepthResult max_depth(const Instance& inst, std::span<const int> members) {
  DepthResult best;
  std::vector<int> lefts;
  for (int i : members) lefts.push_back(inst.grid(i).x_lo);
  std::sort(lefts.begin(), lefts.end());
  lefts.erase(std::unique(lefts.begin(), lefts.end()), lefts.end());
  // (y, kind): kind 0 opens before kind 1 closes at the same y (closed sets).
  std::vector<std::pair<int, int>> events;
  for (int x : lefts) {
    events.clear();
    for (int i : members) {
      const GridRect& g = inst.grid(i);
      if (!g.contains_x(x)) continue;
      events.emplace_back(g.y_lo, 0);
      events.emplace_back(g.y_hi, 1);
    }
    std::sort(events.begin(), events.end());
    int depth = 0;
    for (auto [y, kind] : events) {
      if (kind == 0) {
        if (++depth > best.depth) best = {depth, {x, y}};
      } else {
        --depth;
      }
    }
  }
  return best;
}

int clique_number(const Instance& inst, std::span<const int> members) {
  return max_depth(inst, members).depth;
}

int clique_number(const Instance& inst) {
  auto all = inst.all_indices();
  return clique_number(inst, all);
}

CliqueList maximal_cliques(const Instance& inst) {
  const int n = inst.size();
  auto all = inst.all_indices();
  std::map<std::vector<int>, GridPoint> found;
  for (GridPoint p : candidate_grid_points(inst, all)) {
    std::vector<int> c;
    for (int i = 0; i < n; ++i)
      if (inst.grid(i).contains(p.x, p.y)) c.push_back(i);
    if (!c.empty()) found.emplace(std::move(c), p);
  }
  CliqueList out;
  std::vector<char> in_clique(n, 0);
  for (auto& [members, point] : found) {
    for (int i : members) in_clique[i] = 1;
    bool maximal = true;
    for (int j = 0; j < n && maximal; ++j) {
      if (in_clique[j]) continue;
      bool all_adjacent = true;
      for (int i : members)
        if (!inst.adjacent(i, j)) {
          all_adjacent = false;
          break;
        }
      if (all_adjacent) maximal = false;
    }
    for (int i : members) in_clique[i] = 0;
    if (maximal) out.cliques.push_back({members, point});
  }
  return out;
}

}  // namespace rectcolor
