#include "eigenrank/graph_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace eigenrank {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> order(n, npos), low(n, 0), comp_of(n, npos);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next child)
    std::vector<std::vector<std::size_t>> comps;
    std::size_t counter = 0;

    // Iterative Tarjan; recursion would overflow on long path graphs.
    for (std::size_t root = 0; root < n; ++root) {
        if (order[root] != npos) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            const std::size_t v = call.back().first;
            if (call.back().second == 0) {
                order[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (call.back().second < adj[v].size()) {
                const std::size_t w = adj[v][call.back().second++];
                if (order[w] == npos) {
                    call.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], order[w]);
            }
            if (descended) continue;
            if (low[v] == order[v]) {
                std::vector<std::size_t> comp;
                while (true) {
                    const std::size_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp_of[w] = comps.size();
                    comp.push_back(w);
                    if (w == v) break;
                }
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[v]);
        }
    }

    // Condensation edges, then Kahn's algorithm with the smallest contained
    // node index as tie-break: a deterministic topological order.
    const std::size_t nc = comps.size();
    std::vector<std::set<std::size_t>> succ(nc);
    std::vector<std::size_t> indegree(nc, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (const std::size_t w : adj[v])
            if (comp_of[v] != comp_of[w] && succ[comp_of[v]].insert(comp_of[w]).second)
                ++indegree[comp_of[w]];

    using Entry = std::pair<std::size_t, std::size_t>;  // (min member, comp id)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (std::size_t c = 0; c < nc; ++c)
        if (indegree[c] == 0) ready.emplace(comps[c].front(), c);

    std::vector<std::vector<std::size_t>> result;
    result.reserve(nc);
    while (!ready.empty()) {
        const std::size_t c = ready.top().second;
        ready.pop();
        result.push_back(comps[c]);
        for (const std::size_t d : succ[c])
            if (--indegree[d] == 0) ready.emplace(comps[d].front(), d);
    }
    return result;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const NonNegMatrix& m) {
    std::vector<std::vector<std::size_t>> adj(m.dim());
    m.for_each_nonzero([&](std::size_t i, std::size_t j, double) {
        if (i != j) adj[j].push_back(i);  // M(i, j) > 0 means an edge j -> i
    });
    return strongly_connected_components(adj);
}

bool is_irreducible(const NonNegMatrix& m) {
    // n = 1 is irreducible by convention; its single node is one component.
    return strongly_connected_components(m).size() == 1;
}

std::vector<std::size_t> dangling_columns(const NonNegMatrix& m) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m.dim(); ++j)
        if (m.column_is_zero(j)) cols.push_back(j);
    return cols;
}

ValidationReport validate_round_robin(const NonNegMatrix& m, const ScoringScheme& scheme) {
    scheme.validate();
    ValidationReport rep;
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = m(i, i);
        if (d != 0.0) {
            std::ostringstream msg;
            msg << "diagonal entry for player " << (i + 1) << " is " << d << ", expected 0";
            rep.violations.push_back(msg.str());
        }
    }
    const double decisive = scheme.win + scheme.loss;
    const double drawn = 2.0 * scheme.draw;
    const double tol = 1e-12 * std::max({1.0, decisive, drawn});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double s = m(i, j) + m(j, i);
            if (std::abs(s - decisive) <= tol || std::abs(s - drawn) <= tol) continue;
            std::ostringstream msg;
            msg << "players " << (i + 1) << " and " << (j + 1) << ": points sum to " << s
                << ", expected " << decisive;
            if (drawn != decisive) msg << " (decisive) or " << drawn << " (draw)";
            rep.violations.push_back(msg.str());
        }
    }
    rep.valid = rep.violations.empty();
    return rep;
}

}  // namespace eigenrank
