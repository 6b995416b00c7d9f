#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eigenrank/graph_analysis.hpp"
#include "eigenrank/matrix.hpp"
#include "eigenrank/scoring.hpp"
#include "eigenrank/spectral.hpp"

namespace eigenrank {

struct RankedPlayer {
    std::size_t index;  // 0-based participant index
    double score;       // raw score
    std::optional<double> share;
    std::size_t rank;       // competition ranks: 1, 2, 2, 4
    std::size_t tie_group;  // 1-based group ordinal
};

struct Diagnostics {
    bool irreducible = false;
    std::size_t scc_count = 0;
    std::vector<std::size_t> dangling;
    ValidationReport validation;
    std::optional<double> residual;  // measured fixed-point residual (pagerank)
};

struct Convergence {
    std::size_t iterations = 0;
    IterationStatus status = IterationStatus::Converged;
    std::optional<double> epsilon_used;
};

enum class PerturbationKind { DecisivePairs, UniformOffDiagonal };

std::string to_string(PerturbationKind k);

struct RankReport {
    std::string method;
    std::vector<std::string> labels;  // participant ids; "1".."n" when unnamed
    ScoreVector scores;               // raw scores
    std::optional<ScoreVector> shares;  // 1-normalized; absent when raw scores sum to 0
    std::vector<RankedPlayer> ranking;  // ordered by rank, index-ascending within ties
    std::optional<double> eigenvalue;
    Diagnostics diagnostics;
    Convergence convergence;
    std::optional<PerturbationKind> epsilon_perturbation;
    std::string note;  // explanatory flag (zero scores, non-convergence, ...)
};

inline constexpr double kDefaultTieTol = 1e-9;

/// Descending ranking with tie groups. Two adjacent scores tie when they
/// differ by at most tie_tol * max(1, max_score); tie groups chain along the
/// sorted order. Display order inside a group is index-ascending.
std::vector<RankedPlayer> rank_players(const ScoreVector& scores, double tie_tol = kDefaultTieTol);

std::vector<double> default_epsilon_schedule();

struct LandauOptions {
    double tol = 1e-12;
    std::size_t max_iter = 100000;
    std::vector<double> epsilon_schedule = default_epsilon_schedule();
    double limit_tol = 1e-6;
    double tie_tol = kDefaultTieTol;
    ScoringScheme scheme = ScoringScheme::chess();
};

struct EpsilonStep {
    double epsilon;
    double eigenvalue;
    ScoreVector shares;
    std::size_t iterations;
    IterationStatus status;
};

struct EpsilonLimitResult {
    ScoreVector shares;  // extrapolated limit, sums to 1
    double eigenvalue;   // extrapolated limit, clamped to >= 0
    double epsilon_used;        // smallest epsilon evaluated
    double resolution;          // agreement of the accepted extrapolants (1-norm)
    PerturbationKind perturbation;
    std::vector<EpsilonStep> trace;
    std::size_t total_iterations;
};

/// Thrown when the epsilon schedule is exhausted without the extrapolated
/// score vector stabilizing to limit_tol. Carries the full trace.
class EpsilonLimitDiverged : public std::runtime_error {
public:
    explicit EpsilonLimitDiverged(std::vector<EpsilonStep> steps)
        : std::runtime_error("EpsilonLimitDiverged: schedule exhausted without stabilization"),
          trace(std::move(steps)) {}
    std::vector<EpsilonStep> trace;
};

/// Landau's limiting argument for reducible result matrices.
///
/// For each epsilon in the schedule the matrix is made irreducible: on a valid
/// round-robin every decisive pair (w, l), w > l, becomes
/// (w - eps*(w-l), l + eps*(w-l)) -- the chess perturbation (1, 0) -> (1-eps,
/// eps); otherwise the generic fallback A + eps*(ones - I) is used. Each
/// perturbed matrix gets a (shift-accelerated) power run, and the limit
/// eps -> 0 is taken by iterated Aitken extrapolation of the score and
/// eigenvalue sequences. Components below the extrapolation's own resolution
/// are reported as exact zeros.
EpsilonLimitResult epsilon_limit_score(const NonNegMatrix& a, const LandauOptions& opts = {});

// --- Scoring methods ---------------------------------------------------------

/// Classical scoring: row sums A*1, i.e. total points per player.
RankReport row_sum_score(const NonNegMatrix& a, const ScoringScheme& scheme = ScoringScheme::chess(),
                         double tie_tol = kDefaultTieTol);

/// Second-order scoring A(A*1): full credit for beaten opponents' scores,
/// half for drawn ones.
RankReport wei_score(const NonNegMatrix& a, const ScoringScheme& scheme = ScoringScheme::chess(),
                     double tie_tol = kDefaultTieTol);

/// k-step iterate A^k * 1. k = 1 reproduces row_sum_score, k = 2 wei_score.
RankReport kendall_score(const NonNegMatrix& a, std::size_t k,
                         const ScoringScheme& scheme = ScoringScheme::chess(),
                         double tie_tol = kDefaultTieTol);

/// Dominant-eigenvector scoring. Irreducible matrices go through the power
/// method directly; reducible ones take the epsilon-limit path, recorded in
/// the report. Non-convergence surfaces as a status, never an exception.
RankReport landau_score(const NonNegMatrix& a, const LandauOptions& opts = {});

}  // namespace eigenrank
