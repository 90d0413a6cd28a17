#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rectcolor/scalar.hpp"

namespace rectcolor {

/// Closed axis-parallel rectangle [x_lo, x_hi] x [y_lo, y_hi] with exact corners.
struct Rect {
  std::string id;
  Scalar x_lo, x_hi, y_lo, y_hi;
  Scalar weight{1};

  Scalar width() const { return x_hi - x_lo; }
  Scalar height() const { return y_hi - y_lo; }
  bool valid() const { return x_lo < x_hi && y_lo < y_hi && weight >= 0; }
};

struct Point {
  Scalar x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class IntersectionKind { Disjoint, Crossing, Corner, Containment };

struct Intersection {
  IntersectionKind kind = IntersectionKind::Disjoint;
  bool vertical = false;
  friend bool operator==(const Intersection&, const Intersection&) = default;
};

const char* to_string(IntersectionKind kind);

bool intersects(const Rect& a, const Rect& b);
Intersection classify(const Rect& a, const Rect& b);
bool contains(const Rect& r, const Point& p);

/// Rectangle in rank space: every coordinate is replaced by its rank among the
/// distinct x (resp. y) values of the instance. Order, and hence every
/// intersection predicate, is preserved exactly.
struct GridRect {
  int x_lo, x_hi, y_lo, y_hi;

  bool contains(int x, int y) const { return x_lo <= x && x <= x_hi && y_lo <= y && y <= y_hi; }
  bool contains_x(int x) const { return x_lo <= x && x <= x_hi; }
  bool overlaps_x(const GridRect& o) const { return x_lo <= o.x_hi && o.x_lo <= x_hi; }
  bool overlaps_y(const GridRect& o) const { return y_lo <= o.y_hi && o.y_lo <= y_hi; }
  bool intersects(const GridRect& o) const { return overlaps_x(o) && overlaps_y(o); }
  /// o spans this rectangle vertically and meets it: o hits both horizontal sides.
  bool spanned_by(const GridRect& o) const {
    return overlaps_x(o) && o.y_lo <= y_lo && y_hi <= o.y_hi;
  }
};

struct GridPoint {
  int x, y;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Immutable rectangle family with its intersection graph.
///
/// Rectangles are addressed by their position (index) in the family; ids are
/// only used at the boundary. Index order is the deterministic tie-break used
/// throughout.
class Instance {
 public:
  Instance() = default;
  /// Throws ValidationError on degenerate rectangles or duplicate ids.
  explicit Instance(std::vector<Rect> rects, bool perturbed = false);

  int size() const { return static_cast<int>(rects_.size()); }
  bool empty() const { return rects_.empty(); }
  const std::vector<Rect>& rects() const { return rects_; }
  const Rect& rect(int i) const { return rects_[i]; }
  const GridRect& grid(int i) const { return grid_[i]; }
  const std::vector<GridRect>& grid() const { return grid_; }

  bool adjacent(int a, int b) const { return adj_[static_cast<std::size_t>(a) * rects_.size() + b] != 0; }
  const std::vector<int>& neighbors(int i) const { return nbrs_[i]; }
  std::size_t edge_count() const;

  /// Indices by strictly decreasing height, ties by index.
  const std::vector<int>& height_order() const { return height_order_; }
  /// Position of each index in height_order().
  int height_rank(int i) const { return height_rank_[i]; }
  bool heights_distinct() const { return heights_distinct_; }
  bool perturbed() const { return perturbed_; }

  const Scalar& x_value(int rank) const { return xs_[rank]; }
  const Scalar& y_value(int rank) const { return ys_[rank]; }
  Point to_point(GridPoint p) const { return {xs_[p.x], ys_[p.y]}; }
  int x_rank_count() const { return static_cast<int>(xs_.size()); }
  int y_rank_count() const { return static_cast<int>(ys_.size()); }

  std::optional<int> index_of(const std::string& id) const;
  std::vector<int> all_indices() const;

  /// Checks the strict-height precondition of the level-based algorithms.
  void require_distinct_heights(const char* op) const;

 private:
  std::vector<Rect> rects_;
  std::vector<GridRect> grid_;
  std::vector<Scalar> xs_, ys_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<int> height_order_, height_rank_;
  std::unordered_map<std::string, int> by_id_;
  bool heights_distinct_ = true;
  bool perturbed_ = false;
};

/// V(R): rectangles other than R meeting both the top and the bottom side of R.
std::vector<int> vertical_set(const Instance& inst, int r);
/// X(R): members of V(R) that cross R.
std::vector<int> crossing_set(const Instance& inst, int r);

bool crosses(const GridRect& a, const GridRect& b);

/// Same ids and intersection graph, pairwise distinct heights.
///
/// Rectangle i (1-based) is stretched by i*delta at the bottom and the top,
/// delta = g / (8(n+1)) with g the least positive gap among all y-coordinates
/// and heights. Total stretch stays below g, so no gap closes.
Instance perturb(const Instance& inst);

}  // namespace rectcolor
