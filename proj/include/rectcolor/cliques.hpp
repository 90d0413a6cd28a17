#pragma once

#include <span>
#include <vector>

#include "rectcolor/geom.hpp"

namespace rectcolor {

struct Clique {
  std::vector<int> members;  // ascending indices
  GridPoint point;           // common point of all members
};

/// Inclusion-maximal cliques, each with a witnessing common point.
struct CliqueList {
  std::vector<Clique> cliques;
  std::size_t size() const { return cliques.size(); }
};

/// (x_lo(A), y_hi(B)) over all ordered pairs, deduplicated, ascending (x, y).
std::vector<Point> candidate_points(const Instance& inst);
std::vector<GridPoint> candidate_grid_points(const Instance& inst, std::span<const int> members);

std::vector<int> containing_set(const Instance& inst, const Point& p, std::span<const int> within);
std::vector<int> containing_set(const Instance& inst, GridPoint p, std::span<const int> within);

struct DepthResult {
  int depth = 0;
  GridPoint point{0, 0};
};

/// Deepest point of a subfamily: a sweep over the left sides, then a closed
/// interval-overlap scan along y. Pairwise-intersecting boxes share a point,
/// so depth equals the clique number of the subfamily.
DepthResult max_depth(const Instance& inst, std::span<const int> members);

int clique_number(const Instance& inst);
int clique_number(const Instance& inst, std::span<const int> members);

CliqueList maximal_cliques(const Instance& inst);

}  // namespace rectcolor
