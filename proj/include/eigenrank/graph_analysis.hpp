#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eigenrank/matrix.hpp"
#include "eigenrank/scoring.hpp"

namespace eigenrank {

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;
};

/// SCCs of the digraph with an edge j -> i whenever M(i, j) > 0 (column feeds
/// row, matching the random-walk reading of a hyperlink matrix).
///
/// Components come back in topological order of the condensation; when several
/// components are simultaneously ready the one containing the smallest node
/// index goes first. Members of each component are sorted ascending.
std::vector<std::vector<std::size_t>> strongly_connected_components(const NonNegMatrix& m);

/// Adjacency-list overload: adj[from] lists successor nodes.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& adj);

/// True iff the digraph of M is strongly connected. A 1x1 matrix is
/// irreducible by convention regardless of its entry.
bool is_irreducible(const NonNegMatrix& m);

/// Indices of all-zero columns, ascending.
std::vector<std::size_t> dangling_columns(const NonNegMatrix& m);

/// Checks the round-robin shape: zero diagonal, and every off-diagonal pair
/// summing to win+loss (decisive game) or 2*draw (draw). Violations are
/// reported as data, not errors.
ValidationReport validate_round_robin(const NonNegMatrix& m, const ScoringScheme& scheme);

}  // namespace eigenrank
