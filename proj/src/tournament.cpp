#include "eigenrank/tournament.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace eigenrank {

std::string to_string(PerturbationKind k) {
    return k == PerturbationKind::DecisivePairs ? "decisive-pairs" : "uniform-off-diagonal";
}

std::vector<double> default_epsilon_schedule() {
    return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9};
}

std::vector<RankedPlayer> rank_players(const ScoreVector& scores, double tie_tol) {
    if (scores.empty()) throw std::invalid_argument("rank_players: empty score vector");
    if (!(tie_tol >= 0.0)) throw std::invalid_argument("rank_players: tie_tol must be nonnegative");
    for (double s : scores)
        if (!std::isfinite(s)) throw std::invalid_argument("rank_players: scores must be finite");

    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });

    const double max_score = scores[order.front()];
    const double thresh = tie_tol * std::max(1.0, max_score);

    // Tie groups chain along the sorted order; each group's rank is the
    // position of its first member (competition ranking: 1, 2, 2, 4).
    std::vector<RankedPlayer> out;
    out.reserve(n);
    std::size_t group = 0, group_rank = 1, group_begin = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        if (pos == 0 || scores[order[pos - 1]] - scores[order[pos]] > thresh) {
            ++group;
            group_rank = pos + 1;
            group_begin = pos;
        }
        out.push_back({order[pos], scores[order[pos]], std::nullopt, group_rank, group});
        // Re-sort the group by index once it is complete (display order).
        const bool group_ends =
            pos + 1 == n || scores[order[pos]] - scores[order[pos + 1]] > thresh;
        if (group_ends && pos > group_begin) {
            std::sort(out.begin() + static_cast<std::ptrdiff_t>(group_begin), out.end(),
                      [](const RankedPlayer& a, const RankedPlayer& b) { return a.index < b.index; });
        }
    }
    return out;
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
    return labels;
}

Diagnostics analyze_matrix(const NonNegMatrix& a, const ScoringScheme& scheme) {
    Diagnostics d;
    const auto comps = strongly_connected_components(a);
    d.scc_count = comps.size();
    d.irreducible = comps.size() == 1;
    d.dangling = dangling_columns(a);
    d.validation = validate_round_robin(a, scheme);
    return d;
}

RankReport assemble_report(std::string method, const NonNegMatrix& a, ScoreVector scores,
                           const ScoringScheme& scheme, double tie_tol) {
    RankReport r;
    r.method = std::move(method);
    r.labels = default_labels(a.dim());
    r.diagnostics = analyze_matrix(a, scheme);
    r.ranking = rank_players(scores, tie_tol);
    const double total = sum(scores);
    if (a.dim() == 1) {
        r.shares = ScoreVector{1.0};  // a single participant owns the whole pool
    } else if (total > 0.0) {
        r.shares = normalize_1(scores);
    } else {
        r.note = "raw scores sum to zero; shares omitted";
    }
    if (r.shares)
        for (RankedPlayer& p : r.ranking) p.share = (*r.shares)[p.index];
    r.scores = std::move(scores);
    return r;
}

// --- epsilon-limit machinery -------------------------------------------------

NonNegMatrix perturb_decisive_pairs(const NonNegMatrix& a, double eps) {
    const std::size_t n = a.dim();
    NonNegMatrix dense = a.to_dense();
    std::vector<double> data = dense.dense_data();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = data[i * n + j];
            const double l = data[j * n + i];
            if (w > l) {
                const double d = w - l;
                data[i * n + j] = w - eps * d;
                data[j * n + i] = l + eps * d;
            } else if (l > w) {
                const double d = l - w;
                data[j * n + i] = l - eps * d;
                data[i * n + j] = w + eps * d;
            }
        }
    }
    return NonNegMatrix::dense(n, std::move(data));
}

NonNegMatrix perturb_uniform(const NonNegMatrix& a, double eps) {
    const std::size_t n = a.dim();
    NonNegMatrix dense = a.to_dense();
    std::vector<double> data = dense.dense_data();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) data[i * n + j] += eps;
    return NonNegMatrix::dense(n, std::move(data));
}

std::vector<ScoreVector> aitken_round(const std::vector<ScoreVector>& s) {
    std::vector<ScoreVector> out;
    const std::size_t dim = s.front().size();
    for (std::size_t k = 0; k + 2 < s.size(); ++k) {
        ScoreVector t(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            const double d1 = s[k + 1][c] - s[k][c];
            const double d2 = s[k + 2][c] - s[k + 1][c];
            const double den = d2 - d1;
            double value = s[k + 2][c];
            if (den != 0.0) {
                const double corr = d2 * d2 / den;
                if (std::isfinite(corr)) value = s[k + 2][c] - corr;
            }
            t[c] = value;
        }
        out.push_back(std::move(t));
    }
    return out;
}

struct Extrapolated {
    ScoreVector value;
    double resolution;  // 1-norm agreement of the accepted table entries
};

// Iterated Aitken over the geometric epsilon schedule. Each round removes the
// currently dominant error mode (the shares of a perturbed reducible matrix
// follow a Puiseux series in eps, so modes like eps^(1/3) decay geometrically
// along the schedule). The round whose tail agrees best is accepted; deeper
// rounds amplify rounding noise and are rejected by the same measure.
Extrapolated extrapolate_limit(const std::vector<ScoreVector>& seq) {
    std::vector<std::vector<ScoreVector>> table{seq};
    while (table.back().size() >= 3) table.push_back(aitken_round(table.back()));

    Extrapolated best{seq.back(),
                      seq.size() >= 2 ? l1_distance(seq.back(), seq[seq.size() - 2])
                                      : std::numeric_limits<double>::infinity()};
    for (std::size_t r = 1; r < table.size(); ++r) {
        const auto& row = table[r];
        const double q = row.size() >= 2 ? l1_distance(row.back(), row[row.size() - 2])
                                         : l1_distance(row.back(), table[r - 1].back());
        if (q < best.resolution) best = {row.back(), q};
    }
    return best;
}

}  // namespace

EpsilonLimitResult epsilon_limit_score(const NonNegMatrix& a, const LandauOptions& opts) {
    const auto& schedule = opts.epsilon_schedule;
    if (schedule.empty()) throw std::invalid_argument("epsilon schedule must not be empty");
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        if (!(schedule[k] > 0.0 && schedule[k] < 0.5))
            throw std::invalid_argument("epsilon values must lie in (0, 1/2)");
        if (k > 0 && !(schedule[k] < schedule[k - 1]))
            throw std::invalid_argument("epsilon schedule must be strictly decreasing");
    }

    const bool round_robin = validate_round_robin(a, opts.scheme).valid;
    const PerturbationKind kind =
        round_robin ? PerturbationKind::DecisivePairs : PerturbationKind::UniformOffDiagonal;

    // The perturbed matrices keep their eigenvectors under a diagonal shift,
    // which separates the near-tied subdominant modes these families have and
    // lets every run converge quickly.
    PowerOptions inner{std::min(opts.tol, 1e-13), opts.max_iter};

    std::vector<EpsilonStep> trace;
    std::vector<ScoreVector> shares_seq;
    std::vector<ScoreVector> lambda_seq;
    std::size_t total_iterations = 0;
    for (const double eps : schedule) {
        const NonNegMatrix perturbed = kind == PerturbationKind::DecisivePairs
                                           ? perturb_decisive_pairs(a, eps)
                                           : perturb_uniform(a, eps);
        const double shift = std::max(1.0, perturbed.max_row_sum()) / 2.0;
        SpectralResult res = detail::power_iterate(perturbed, ones(a.dim()), inner, shift);
        total_iterations += res.iterations;
        trace.push_back({eps, res.eigenvalue, res.vector, res.iterations, res.status});
        if (res.status != IterationStatus::Converged) break;  // keep the converged prefix
        shares_seq.push_back(std::move(res.vector));
        lambda_seq.push_back({trace.back().eigenvalue});
    }

    if (shares_seq.empty()) throw EpsilonLimitDiverged(std::move(trace));
    const Extrapolated sh = extrapolate_limit(shares_seq);
    const Extrapolated lm = extrapolate_limit(lambda_seq);
    if (!(sh.resolution <= opts.limit_tol)) throw EpsilonLimitDiverged(std::move(trace));

    // Components below the extrapolation's own resolution are numerically
    // indistinguishable from the limit value 0; report them as exact zeros.
    ScoreVector shares = sh.value;
    double max_share = 0.0;
    for (double v : shares) max_share = std::max(max_share, v);
    const double floor = std::min(std::max(10.0 * sh.resolution, 1e-13), 0.5 * max_share);
    for (double& v : shares)
        if (v < floor) v = 0.0;
    shares = normalize_1(shares);

    double lambda = lm.value.front();
    if (lambda < std::max(10.0 * lm.resolution, 1e-13)) lambda = 0.0;

    EpsilonLimitResult out;
    out.shares = std::move(shares);
    out.eigenvalue = lambda;
    out.epsilon_used = trace[shares_seq.size() - 1].epsilon;
    out.resolution = sh.resolution;
    out.perturbation = kind;
    out.trace = std::move(trace);
    out.total_iterations = total_iterations;
    return out;
}

RankReport row_sum_score(const NonNegMatrix& a, const ScoringScheme& scheme, double tie_tol) {
    return kendall_score(a, 1, scheme, tie_tol);
}

RankReport wei_score(const NonNegMatrix& a, const ScoringScheme& scheme, double tie_tol) {
    return kendall_score(a, 2, scheme, tie_tol);
}

RankReport kendall_score(const NonNegMatrix& a, std::size_t k, const ScoringScheme& scheme,
                         double tie_tol) {
    if (k == 0) throw std::invalid_argument("kendall_score: k must be at least 1");
    ScoreVector scores = iterate_k(a, k);
    const bool vanished = sum(scores) == 0.0;
    std::string method = k == 1 ? "rowsum" : (k == 2 ? "wei" : "iterate:" + std::to_string(k));
    RankReport r = assemble_report(std::move(method), a, std::move(scores), scheme, tie_tol);
    r.convergence.iterations = k;
    r.convergence.status = vanished ? IterationStatus::ZeroIterate : IterationStatus::Converged;
    if (vanished && a.dim() > 1) r.note = "iterate vanished (nilpotent matrix); shares omitted";
    return r;
}

RankReport landau_score(const NonNegMatrix& a, const LandauOptions& opts) {
    const bool irreducible = is_irreducible(a);
    if (irreducible) {
        SpectralResult res = power_method(a, PowerOptions{opts.tol, opts.max_iter});
        RankReport r = assemble_report("landau", a, res.vector, opts.scheme, opts.tie_tol);
        r.eigenvalue = res.eigenvalue;
        r.convergence.iterations = res.iterations;
        r.convergence.status = res.status;
        if (res.status == IterationStatus::Oscillating)
            r.note = "power iteration oscillates (periodic matrix); result is the last iterate";
        else if (res.status == IterationStatus::MaxIterations)
            r.note = "power iteration hit the iteration cap before converging";
        return r;
    }

    try {
        EpsilonLimitResult el = epsilon_limit_score(a, opts);
        RankReport r = assemble_report("landau", a, el.shares, opts.scheme, opts.tie_tol);
        r.eigenvalue = el.eigenvalue;
        r.convergence.iterations = el.total_iterations;
        r.convergence.status = IterationStatus::Converged;
        r.convergence.epsilon_used = el.epsilon_used;
        r.epsilon_perturbation = el.perturbation;
        return r;
    } catch (const EpsilonLimitDiverged& e) {
        // Non-convergence surfaces as a status, not an exception.
        const EpsilonStep* last = nullptr;
        for (const auto& step : e.trace)
            if (step.status == IterationStatus::Converged) last = &step;
        ScoreVector scores =
            last ? last->shares : ScoreVector(a.dim(), 1.0 / static_cast<double>(a.dim()));
        RankReport r = assemble_report("landau", a, std::move(scores), opts.scheme, opts.tie_tol);
        std::size_t iters = 0;
        for (const auto& step : e.trace) iters += step.iterations;
        r.eigenvalue = last ? std::optional<double>(last->eigenvalue) : std::nullopt;
        r.convergence.iterations = iters;
        r.convergence.status = IterationStatus::MaxIterations;
        if (last) r.convergence.epsilon_used = last->epsilon;
        r.note = "epsilon limit did not stabilize; reporting the smallest converged epsilon";
        return r;
    }
}

}  // namespace eigenrank
