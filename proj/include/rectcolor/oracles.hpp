#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rectcolor/coloring.hpp"
#include "rectcolor/geom.hpp"

namespace rectcolor {

/// Size and wall-clock caps; oracles refuse larger inputs with BudgetExceeded.
struct OracleBudget {
  int max_n;
  double time_limit_s = 60.0;
};

inline constexpr OracleBudget kMwisBudget{24};
inline constexpr OracleBudget kChromaticBudget{14};
inline constexpr OracleBudget kCliqueBudget{40};

struct MwisSolution {
  std::vector<int> chosen;  // ascending indices
  Scalar weight;
};

/// Branch and bound on the intersection graph: branch on a maximum-degree
/// vertex, prune with the total weight still available.
MwisSolution exact_mwis(const Instance& inst, OracleBudget budget = kMwisBudget);

/// Iterative deepening from the clique number with backtracking.
int exact_chromatic(const Instance& inst, OracleBudget budget = kChromaticBudget);

/// Bron-Kerbosch with pivoting on the intersection graph.
int exact_clique_graph(const Instance& inst, OracleBudget budget = kCliqueBudget);

/// All maximal cliques of the intersection graph (Bron-Kerbosch), each sorted,
/// the list sorted lexicographically.
std::vector<std::vector<int>> graph_maximal_cliques(const Instance& inst,
                                                    OracleBudget budget = {20});

/// Empty optional when valid, else one offending pair of indices.
using Violation = std::optional<std::pair<int, int>>;

/// Throws MissingAssignment if some rectangle has no color.
Violation validate_coloring(const Instance& inst, const Coloring& coloring);

Violation validate_independent(const Instance& inst, std::span<const int> chosen);
/// Id-based variant; throws UnknownId.
Violation validate_independent(const Instance& inst, std::span<const std::string> ids);

}  // namespace rectcolor
