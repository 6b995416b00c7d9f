#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "eigenrank/matrix.hpp"
#include "eigenrank/tournament.hpp"

namespace eigenrank {

/// Directed multigraph of pages. Edge counts t_ij accumulate; self-links are
/// dropped at ingestion (counted for the warning) and never contribute to the
/// outlink total L_j. Pages are indexed by first appearance.
class LinkGraph {
public:
    std::size_t add_page(const std::string& id);
    void add_link(const std::string& src, const std::string& dst, std::int64_t count = 1);

    std::size_t page_count() const noexcept { return ids_.size(); }
    const std::vector<std::string>& pages() const noexcept { return ids_; }
    std::int64_t outlink_total(std::size_t j) const { return outlink_total_.at(j); }
    std::size_t dropped_self_links() const noexcept { return dropped_self_links_; }

    /// Outgoing links of page j as (target, count), ascending by target.
    const std::map<std::size_t, std::int64_t>& links_from(std::size_t j) const {
        return out_.at(j);
    }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::map<std::size_t, std::int64_t>> out_;
    std::vector<std::int64_t> outlink_total_;
    std::size_t dropped_self_links_ = 0;
};

/// H(i, j) = t_ij / L_j for pages with outlinks; dangling pages give an
/// all-zero column. Every nonzero column sums to 1. Sparse by column.
NonNegMatrix hyperlink_matrix(const LinkGraph& g);

/// Implicit column-stochastic completion of a hyperlink matrix: dangling
/// columns are read as uniform 1/n columns without materializing them, so
/// S x = H x + (sum of x over dangling pages) / n * ones.
class StochasticOperator {
public:
    /// Validates that every column of h sums to 0 or 1 (within 1e-12).
    explicit StochasticOperator(NonNegMatrix h);

    std::size_t dim() const noexcept { return h_.dim(); }
    ScoreVector apply(const ScoreVector& x) const;
    const std::vector<std::size_t>& dangling() const noexcept { return dangling_; }
    const NonNegMatrix& hyperlink() const noexcept { return h_; }

private:
    NonNegMatrix h_;
    std::vector<std::size_t> dangling_;
};

/// Convenience spelling of the construction above.
StochasticOperator stochastic_fix(NonNegMatrix h);

/// (1-alpha) * S x + alpha * (sum x / n) * ones -- the damped random-walk
/// product G x without materializing G. alpha is the uniform-teleport weight
/// (the conventional damping factor is d = 1 - alpha).
ScoreVector google_matvec(const StochasticOperator& s, double alpha, const ScoreVector& x);

struct GoogleParams {
    double alpha = 0.15;  // teleport weight
    double tol = 1e-12;
    std::size_t max_iter = 100000;
};

/// Power iteration on the implicit Google matrix from the uniform start.
/// The report's eigenvalue is 1 (column-stochastic G); the measured residual
/// ||G r - r||_1 lands in diagnostics. Structural diagnostics describe S's
/// support. alpha = 0 is allowed; uniqueness then depends on irreducibility.
RankReport pagerank(const LinkGraph& g, const GoogleParams& p = {});

}  // namespace eigenrank
