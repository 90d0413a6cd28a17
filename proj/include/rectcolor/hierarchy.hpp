#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rectcolor/coloring.hpp"
#include "rectcolor/geom.hpp"

namespace rectcolor {

/// Binary word of a given length, stored as an integer whose most significant
/// of the `length` bits is the first letter. Children of u are 2u and 2u + 1.
using Word = std::uint32_t;

std::string word_string(int length, Word w);

/// Levels 0..k of the divide-and-conquer partition of an instance.
struct DecompositionTree {
  int omega = 0;
  int k = 0;
  /// cells[i][w] = S_i(w), ordered by decreasing height.
  std::vector<std::vector<std::vector<int>>> cells;
  /// cell_of[i][r] = w with r in S_i(w).
  std::vector<std::vector<Word>> cell_of;
  /// witness_x[i][r] = x ranks of P_i(R), ascending. Every witness point lies
  /// on the top side of R, so its y rank is grid(r).y_hi.
  std::vector<std::vector<std::vector<int>>> witness_x;
  /// V(R) over the whole instance.
  std::vector<std::vector<int>> vertical;

  const std::vector<int>& cell(int i, Word w) const { return cells[i][w]; }
  std::vector<GridPoint> witnesses(const Instance& inst, int i, int r) const;
};

/// Rounds i = 1..k split every S_{i-1}(u) by decreasing height: R moves to
/// S_i(u1) when one of its witness points lies in at least 2^(k-i) members of
/// V(R) already sent to S_i(u0), keeping only those heavy points.
/// Throws PreconditionViolated on equal heights.
DecompositionTree build_decomposition(const Instance& inst);

/// Outcome of one of the diagnostic lemma scans.
struct Check {
  bool ok = true;
  std::string violation;
  explicit operator bool() const { return ok; }
};

/// Structural properties: partitions, refinement, nested nonempty witness sets
/// on the top sides.
Check check_tree_structure(const DecompositionTree& tree, const Instance& inst);
/// Every witness point of R in S_i(w) lies in fewer than 2^(k-i) members of V(R) in S_i(w).
Check check_partition_lemma(const DecompositionTree& tree, const Instance& inst);
/// For R' in X(R) within one cell, P_i(R) has a point inside R' and, for each
/// p' in P_i(R'), inside R' and every member of V(R') containing p'.
Check check_witness_corollary(const DecompositionTree& tree, const Instance& inst);
/// Cliques inside X(R) restricted to R's cell have at most 2^(k-i+1) members.
Check check_clique_lemma(const DecompositionTree& tree, const Instance& inst);

struct CoveringWitness {
  GridPoint center;
  std::vector<int> top_hits;     // members other than R meeting R's top side
  std::vector<int> bottom_hits;  // members other than R meeting R's bottom side
};

/// A clique inside `family` containing R with at least `alpha` other members
/// meeting the top side of R and at least `alpha` meeting its bottom side, or
/// nothing. The clique is the set of members containing `center`.
std::optional<CoveringWitness> alpha_covering(const Instance& inst, std::span<const int> family,
                                              int r, long alpha);

struct CoveredSet {
  std::vector<int> members;
  std::map<int, CoveringWitness> witnesses;
};

/// T_i(w): members of S_i(w) with a 2^(k-i+2)-covering inside S_i(w).
CoveredSet compute_T(const DecompositionTree& tree, const Instance& inst, int i, Word w);

struct SparseCertificate {
  /// Three designated points per member: leftmost and rightmost witness point
  /// and the covering center.
  std::map<int, std::vector<GridPoint>> points;
};

/// Builds the 3-point certificate of T_i(w) and checks every crossing pair.
/// Throws CertificateInvalid naming the pair that no designated point hits.
SparseCertificate sparse_certificate(const DecompositionTree& tree, const Instance& inst, int i,
                                     Word w, const CoveredSet& covered);

/// Explicit color budget of hierarchical_coloring: 2^k (160k + 224).
long hierarchical_color_bound(int k);
/// Palette width of one round-i cell: max(10 (2^(k-i+4) - 1), 1).
long round_palette_width(int k, int i);
inline constexpr int kFinalPaletteWidth = 224;

/// k rounds peel the covered sets T_i(w) (each 3-sparse, colored by
/// degeneracy_greedy); what is left of each S_k(w) has clique number <= 8 and
/// is colored by agb_coloring. Every cell gets its own palette.
/// Throws InternalBoundExceeded if a cell outgrows its palette.
Coloring hierarchical_coloring(const Instance& inst);
Coloring hierarchical_coloring(const Instance& inst, const DecompositionTree& tree);

}  // namespace rectcolor
