#include "eigenrank/web.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "eigenrank/graph_analysis.hpp"
#include "eigenrank/spectral.hpp"

namespace eigenrank {

std::size_t LinkGraph::add_page(const std::string& id) {
    if (id.empty()) throw std::invalid_argument("page id must not be empty");
    const auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    const std::size_t idx = ids_.size();
    ids_.push_back(id);
    index_.emplace(id, idx);
    out_.emplace_back();
    outlink_total_.push_back(0);
    return idx;
}

void LinkGraph::add_link(const std::string& src, const std::string& dst, std::int64_t count) {
    if (count <= 0) throw std::invalid_argument("link count must be positive");
    const std::size_t j = add_page(src);
    const std::size_t i = add_page(dst);
    if (i == j) {
        ++dropped_self_links_;  // self-links never contribute
        return;
    }
    out_[j][i] += count;
    outlink_total_[j] += count;
}

NonNegMatrix hyperlink_matrix(const LinkGraph& g) {
    const std::size_t n = g.page_count();
    if (n == 0) throw std::invalid_argument("link graph has no pages");
    std::vector<Triplet> trips;
    for (std::size_t j = 0; j < n; ++j) {
        const auto total = g.outlink_total(j);
        if (total == 0) continue;  // dangling page: all-zero column
        for (const auto& [i, count] : g.links_from(j))
            trips.push_back({i, j, static_cast<double>(count) / static_cast<double>(total)});
    }
    return NonNegMatrix::sparse_from_triplets(n, std::move(trips));
}

StochasticOperator::StochasticOperator(NonNegMatrix h) : h_(std::move(h)) {
    const std::size_t n = h_.dim();
    for (std::size_t j = 0; j < n; ++j) {
        const double s = h_.column_sum(j);
        if (s == 0.0) {
            dangling_.push_back(j);
        } else if (std::abs(s - 1.0) > 1e-12) {
            std::ostringstream msg;
            msg << "column " << j << " sums to " << s << "; expected 0 or 1";
            throw std::invalid_argument(msg.str());
        }
    }
}

ScoreVector StochasticOperator::apply(const ScoreVector& x) const {
    if (x.size() != dim()) throw std::invalid_argument("stochastic operator: dimension mismatch");
    ScoreVector y = h_.mat_vec(x);
    double dangling_mass = 0.0;
    for (const std::size_t j : dangling_) dangling_mass += x[j];
    if (dangling_mass != 0.0) {
        const double spread = dangling_mass / static_cast<double>(dim());
        for (double& v : y) v += spread;
    }
    return y;
}

StochasticOperator stochastic_fix(NonNegMatrix h) { return StochasticOperator(std::move(h)); }

ScoreVector google_matvec(const StochasticOperator& s, double alpha, const ScoreVector& x) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
    ScoreVector y = s.apply(x);
    const double keep = 1.0 - alpha;
    const double teleport = alpha * sum(x) / static_cast<double>(s.dim());
    for (double& v : y) v = keep * v + teleport;
    return y;
}

namespace {

// Diagnostics describe the support of S: the hyperlink structure plus the
// uniform completion of dangling columns.
Diagnostics stochastic_support_diagnostics(const StochasticOperator& s) {
    const std::size_t n = s.dim();
    std::vector<std::vector<std::size_t>> adj(n);
    s.hyperlink().for_each_nonzero([&](std::size_t i, std::size_t j, double) {
        if (i != j) adj[j].push_back(i);
    });
    for (const std::size_t j : s.dangling())
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) adj[j].push_back(i);

    Diagnostics d;
    const auto comps = strongly_connected_components(adj);
    d.scc_count = comps.size();
    d.irreducible = comps.size() == 1;
    d.dangling = s.dangling();
    d.validation.valid = true;  // column sums were checked at construction
    return d;
}

}  // namespace

RankReport pagerank(const LinkGraph& g, const GoogleParams& p) {
    if (g.page_count() == 0) throw std::invalid_argument("pagerank: graph has no pages");
    if (!(p.alpha >= 0.0 && p.alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0, 1]");
    if (!(p.tol > 0.0)) throw std::invalid_argument("tol must be positive");

    const std::size_t n = g.page_count();
    const StochasticOperator s = stochastic_fix(hyperlink_matrix(g));

    ScoreVector y(n, 1.0 / static_cast<double>(n));
    std::size_t iterations = 0;
    IterationStatus status = IterationStatus::MaxIterations;
    while (iterations < p.max_iter) {
        ScoreVector z = google_matvec(s, p.alpha, y);
        const double total = sum(z);  // 1 up to rounding: G is column-stochastic
        for (double& v : z) v /= total;
        ++iterations;
        if (l1_distance(z, y) <= p.tol) {
            y = std::move(z);
            status = IterationStatus::Converged;
            break;
        }
        y = std::move(z);
    }

    RankReport r;
    r.method = "pagerank";
    r.labels = g.pages();
    r.scores = y;
    r.shares = y;
    r.ranking = rank_players(y, kDefaultTieTol);
    for (RankedPlayer& pl : r.ranking) pl.share = y[pl.index];
    r.eigenvalue = 1.0;  // column-stochastic G
    r.diagnostics = stochastic_support_diagnostics(s);
    const ScoreVector gy = google_matvec(s, p.alpha, y);
    r.diagnostics.residual = l1_distance(gy, y);
    r.convergence.iterations = iterations;
    r.convergence.status = status;
    if (status != IterationStatus::Converged)
        r.note = "pagerank hit the iteration cap; reporting the partial vector";
    return r;
}

}  // namespace eigenrank
