#include "rectcolor/geom.hpp"

#include <algorithm>
#include <numeric>

#include "rectcolor/errors.hpp"

namespace rectcolor {

namespace {

template <class R, class P>
bool holds(const R& r, const P& x, const P& y) {
  return r.x_lo <= x && x <= r.x_hi && r.y_lo <= y && y <= r.y_hi;
}

template <class R>
bool holds_corner_of(const R& a, const R& b) {
  return holds(a, b.x_lo, b.y_lo) || holds(a, b.x_lo, b.y_hi) || holds(a, b.x_hi, b.y_lo) ||
         holds(a, b.x_hi, b.y_hi);
}

template <class R>
bool includes(const R& outer, const R& inner) {
  return outer.x_lo <= inner.x_lo && inner.x_hi <= outer.x_hi && outer.y_lo <= inner.y_lo &&
         inner.y_hi <= outer.y_hi;
}

template <class R>
bool meets(const R& a, const R& b) {
  return a.x_lo <= b.x_hi && b.x_lo <= a.x_hi && a.y_lo <= b.y_hi && b.y_lo <= a.y_hi;
}

template <class R>
Intersection classify_impl(const R& a, const R& b) {
  Intersection out;
  if (!meets(a, b)) return out;
  if (includes(a, b) || includes(b, a))
    out.kind = IntersectionKind::Containment;
  else if (holds_corner_of(a, b) || holds_corner_of(b, a))
    out.kind = IntersectionKind::Corner;
  else
    out.kind = IntersectionKind::Crossing;
  out.vertical = (a.y_lo <= b.y_lo && b.y_hi <= a.y_hi) || (b.y_lo <= a.y_lo && a.y_hi <= b.y_hi);
  return out;
}

std::vector<Scalar> sorted_unique(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int rank_of(const std::vector<Scalar>& values, const Scalar& v) {
  return static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin());
}

}  // namespace

const char* to_string(IntersectionKind kind) {
  switch (kind) {
    case IntersectionKind::Disjoint: return "disjoint";
    case IntersectionKind::Crossing: return "crossing";
    case IntersectionKind::Corner: return "corner";
    case IntersectionKind::Containment: return "containment";
  }
  return "?";
}

bool intersects(const Rect& a, const Rect& b) { return meets(a, b); }

Intersection classify(const Rect& a, const Rect& b) { return classify_impl(a, b); }

bool contains(const Rect& r, const Point& p) { return holds(r, p.x, p.y); }

bool crosses(const GridRect& a, const GridRect& b) {
  return classify_impl(a, b).kind == IntersectionKind::Crossing;
}

Instance::Instance(std::vector<Rect> rects, bool perturbed)
    : rects_(std::move(rects)), perturbed_(perturbed) {
  const int n = size();
  std::vector<Scalar> xs, ys;
  xs.reserve(2 * n);
  ys.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    const Rect& r = rects_[i];
    if (!(r.x_lo < r.x_hi) || !(r.y_lo < r.y_hi))
      throw ValidationError("rectangle '" + r.id + "' is degenerate (need x1 < x2 and y1 < y2)");
    if (r.weight < 0) throw ValidationError("rectangle '" + r.id + "' has negative weight");
    if (!by_id_.emplace(r.id, i).second) throw ValidationError("duplicate id '" + r.id + "'");
    xs.push_back(r.x_lo);
    xs.push_back(r.x_hi);
    ys.push_back(r.y_lo);
    ys.push_back(r.y_hi);
  }
  xs_ = sorted_unique(std::move(xs));
  ys_ = sorted_unique(std::move(ys));
  grid_.resize(n);
  for (int i = 0; i < n; ++i) {
    const Rect& r = rects_[i];
    grid_[i] = {rank_of(xs_, r.x_lo), rank_of(xs_, r.x_hi), rank_of(ys_, r.y_lo),
                rank_of(ys_, r.y_hi)};
  }

  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  nbrs_.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (grid_[i].intersects(grid_[j])) {
        adj_[static_cast<std::size_t>(i) * n + j] = adj_[static_cast<std::size_t>(j) * n + i] = 1;
        nbrs_[i].push_back(j);
        nbrs_[j].push_back(i);
      }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());

  std::vector<Scalar> heights(n);
  for (int i = 0; i < n; ++i) heights[i] = rects_[i].height();
  height_order_.resize(n);
  std::iota(height_order_.begin(), height_order_.end(), 0);
  std::stable_sort(height_order_.begin(), height_order_.end(),
                   [&](int a, int b) { return heights[a] > heights[b]; });
  height_rank_.resize(n);
  for (int pos = 0; pos < n; ++pos) height_rank_[height_order_[pos]] = pos;
  for (int pos = 1; pos < n; ++pos)
    if (heights[height_order_[pos]] == heights[height_order_[pos - 1]]) heights_distinct_ = false;
}

std::size_t Instance::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : nbrs_) twice += list.size();
  return twice / 2;
}

std::optional<int> Instance::index_of(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Instance::all_indices() const {
  std::vector<int> all(rects_.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

void Instance::require_distinct_heights(const char* op) const {
  for (int pos = 1; pos < size(); ++pos) {
    int a = height_order_[pos - 1], b = height_order_[pos];
    if (rects_[a].height() == rects_[b].height())
      throw PreconditionViolated(std::string(op) + ": rectangles '" + rects_[a].id + "' and '" +
                                     rects_[b].id + "' have equal heights (perturb first)",
                                 a, b);
  }
}

std::vector<int> vertical_set(const Instance& inst, int r) {
  std::vector<int> out;
  const GridRect& g = inst.grid(r);
  for (int j : inst.neighbors(r))
    if (g.spanned_by(inst.grid(j))) out.push_back(j);
  return out;
}

std::vector<int> crossing_set(const Instance& inst, int r) {
  std::vector<int> out;
  const GridRect& g = inst.grid(r);
  for (int j : inst.neighbors(r))
    if (g.spanned_by(inst.grid(j)) && crosses(g, inst.grid(j))) out.push_back(j);
  return out;
}

Instance perturb(const Instance& inst) {
  const int n = inst.size();
  std::vector<Scalar> values;
  values.reserve(3 * n);
  for (const Rect& r : inst.rects()) {
    values.push_back(r.y_lo);
    values.push_back(r.y_hi);
    values.push_back(r.height());
  }
  std::sort(values.begin(), values.end());
  std::optional<Scalar> gap;
  for (std::size_t i = 1; i < values.size(); ++i) {
    Scalar d = values[i] - values[i - 1];
    if (d > 0 && (!gap || d < *gap)) gap = d;
  }
  Scalar delta = gap ? Scalar(*gap / (8 * (n + 1))) : Scalar(1);
  std::vector<Rect> out = inst.rects();
  for (int i = 0; i < n; ++i) {
    Scalar shift = delta * (i + 1);
    out[i].y_lo -= shift;
    out[i].y_hi += shift;
  }
  return Instance(std::move(out), true);
}

}  // namespace rectcolor
