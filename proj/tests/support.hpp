#pragma once

// Fixtures and brute-force reference computations shared by the test binaries.
// Nothing here calls the library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "rectcolor/geom.hpp"
#include "rectcolor/io.hpp"

namespace support {

using rectcolor::Instance;
using rectcolor::Rect;
using rectcolor::Scalar;

inline Rect rect(std::string id, long x1, long y1, long x2, long y2, long weight = 1) {
  Rect r;
  r.id = std::move(id);
  r.x_lo = x1;
  r.y_lo = y1;
  r.x_hi = x2;
  r.y_hi = y2;
  r.weight = weight;
  return r;
}

/// Random family on a coarse grid, so coordinates repeat often.
inline Instance random_family(std::uint64_t seed, int n, long grid, bool weighted = false) {
  rectcolor::Rng rng(seed);
  std::vector<Rect> rects;
  for (int i = 0; i < n; ++i) {
    long x1 = rng.uniform(0, grid - 1), y1 = rng.uniform(0, grid - 1);
    long x2 = rng.uniform(x1 + 1, std::min(grid, x1 + 1 + grid / 2));
    long y2 = rng.uniform(y1 + 1, std::min(grid, y1 + 1 + grid / 2));
    rects.push_back(rect("q" + std::to_string(i), x1, y1, x2, y2, weighted ? rng.uniform(1, 50) : 1));
  }
  return Instance(std::move(rects));
}

inline bool direct_intersect(const Rect& a, const Rect& b) {
  return a.x_lo <= b.x_hi && b.x_lo <= a.x_hi && a.y_lo <= b.y_hi && b.y_lo <= a.y_hi;
}

/// Interval Helly on each axis: the members share a point iff the largest low
/// end does not pass the smallest high end.
inline bool share_point(const Instance& inst, const std::vector<int>& members) {
  if (members.empty()) return true;
  Scalar xl = inst.rect(members[0]).x_lo, xh = inst.rect(members[0]).x_hi;
  Scalar yl = inst.rect(members[0]).y_lo, yh = inst.rect(members[0]).y_hi;
  for (int i : members) {
    xl = std::max(xl, inst.rect(i).x_lo);
    xh = std::min(xh, inst.rect(i).x_hi);
    yl = std::max(yl, inst.rect(i).y_lo);
    yh = std::min(yh, inst.rect(i).y_hi);
  }
  return xl <= xh && yl <= yh;
}

/// P(sum > threshold) by summing over all 2^n outcomes.
inline Scalar enumerate_tail(const std::vector<Scalar>& probs, long threshold) {
  const int n = static_cast<int>(probs.size());
  Scalar total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Scalar p = 1;
    long ones = 0;
    for (int j = 0; j < n; ++j) {
      if (mask >> j & 1) {
        p *= probs[j];
        ++ones;
      } else {
        p *= 1 - probs[j];
      }
    }
    if (ones > threshold) total += p;
  }
  return total;
}

/// Maximum weight of a pairwise-disjoint subfamily by subset enumeration.
inline Scalar enumerate_mwis(const Instance& inst) {
  const int n = inst.size();
  Scalar best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    Scalar w = 0;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      w += inst.rect(i).weight;
      for (int j = i + 1; j < n; ++j)
        if ((mask >> j & 1) && direct_intersect(inst.rect(i), inst.rect(j))) {
          ok = false;
          break;
        }
    }
    if (ok) best = std::max(best, w);
  }
  return best;
}

}  // namespace support
