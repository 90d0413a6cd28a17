#pragma once

#include <span>
#include <vector>

#include "rectcolor/cliques.hpp"
#include "rectcolor/coloring.hpp"
#include "rectcolor/geom.hpp"

namespace rectcolor {

inline constexpr double kDefaultFeasTol = 1e-9;
inline constexpr double kDefaultOptTol = 1e-7;

/// Fractional optimum of the clique-constrained packing LP, rationalized:
/// every x[i] is a multiple of 2^-64 and every clique sum is <= 1 exactly.
struct LpSolution {
  std::vector<Scalar> x;
  Scalar w_star;             // sum of w_i x[i] for the rationalized x
  double float_objective = 0;  // objective reported by the simplex
  double dual_bound = 0;       // certified upper bound on the LP optimum
  CliqueList cliques;
  double feas_tol = kDefaultFeasTol;
  double opt_tol = kDefaultOptTol;
};

/// Throws PreconditionViolated on non-positive weights, SolverFailure when the
/// simplex result misses the tolerance contract.
LpSolution solve_lp(const Instance& inst, double feas_tol = kDefaultFeasTol,
                    double opt_tol = kDefaultOptTol);

/// P(sum of independent Bernoulli(p_j) > threshold), exact.
Scalar poisson_binomial_tail(std::span<const Scalar> probs, long threshold);

/// Tail of a sum of Bernoulli variables under incremental fixing: fixing a
/// variable to 1 lowers the threshold, fixing it to 0 just drops it.
class BernoulliSumTail {
 public:
  BernoulliSumTail(std::vector<Scalar> probs, long threshold);

  long threshold() const { return threshold_; }
  bool is_fixed(std::size_t j) const { return fixed_[j]; }
  /// Current tail P(sum of unfixed > threshold).
  Scalar tail() const;
  /// Tail after fixing variable j to `value`, without committing.
  Scalar tail_if_fixed(std::size_t j, bool value) const;
  void fix(std::size_t j, bool value);

 private:
  std::vector<Scalar> probs_;
  std::vector<bool> fixed_;
  long threshold_;
};

/// m = ceil(9 ln n), with m = 1 for n <= 1.
int rounding_multiplier(int n);

struct MultiplicityVector {
  std::vector<int> y;
  int m = 0;
  bool heavy_shortcut = false;
  /// E[xi] before the first fixing and after each fixing step (empty with the
  /// shortcut), exact.
  std::vector<Scalar> expectations;
};

/// Derandomized rounding of m x* by conditional expectations of
/// xi = sum w y - (m n w*/2) * #(overflowing cliques), fixing fractional bits
/// in index order.
MultiplicityVector round_derandomized(const Instance& inst, const LpSolution& lp);

/// Exact value of xi for a fixed y.
Scalar rounding_objective(const Instance& inst, const LpSolution& lp, std::span<const int> y, int m);

struct ExpandedInstance {
  Instance instance;        // perturbed, so copies of one rectangle nest
  std::vector<int> origin;  // index in the source instance of every copy
};

ExpandedInstance expand_multiset(const Instance& inst, const MultiplicityVector& mv);

struct ApproxResult {
  std::vector<int> chosen;  // ascending indices, pairwise disjoint
  Scalar weight;
  Scalar w_star;
  int m = 0;
  int multiset_colors = 0;          // non-empty color classes of the copy family
  int multiset_palette = 0;         // num_colors of that coloring
  Scalar multiset_weight;           // sum of w_i y_i
  std::vector<Scalar> class_weights;  // per non-empty class, by color index
  Scalar certified_lower_bound;       // m w* (1 - opt_tol - feas_tol) / (2 multiset_colors)
  MultiplicityVector multiplicity;
};

/// LP, derandomized rounding, coloring of the copy family, heaviest class.
ApproxResult approximate_mwis(const Instance& inst, double feas_tol = kDefaultFeasTol,
                              double opt_tol = kDefaultOptTol);

}  // namespace rectcolor
