#pragma once

#include <cstddef>
#include <string>

#include "eigenrank/matrix.hpp"

namespace eigenrank {

enum class IterationStatus { Converged, MaxIterations, ZeroIterate, Oscillating };

std::string to_string(IterationStatus s);

struct PowerOptions {
    double tol = 1e-12;
    std::size_t max_iter = 100000;
};

struct SpectralResult {
    double eigenvalue = 0.0;
    ScoreVector vector;  // normalized to sum 1 (last nonzero iterate on ZeroIterate)
    std::size_t iterations = 0;
    IterationStatus status = IterationStatus::MaxIterations;
};

/// Power iteration x_{k+1} = M x_k with iterates normalized to sum 1.
///
/// Stops when consecutive normalized iterates differ by at most tol in the
/// 1-norm (Converged), when an iterate vanishes (ZeroIterate, legitimate for
/// nilpotent inputs), after max_iter steps (MaxIterations), or when a period-2
/// detector fires 32 times in a row (Oscillating; typical for periodic
/// irreducible matrices such as a 2-cycle permutation). No shift is applied;
/// callers wanting M + cI pass it themselves.
///
/// The eigenvalue estimate is sum(M v) for the returned vector v, exact for a
/// nonnegative fixed point.
SpectralResult power_method(const NonNegMatrix& m, const ScoreVector& x0,
                            const PowerOptions& opt = {});

/// Power iteration from the all-ones vector, the public entry point.
SpectralResult power_method(const NonNegMatrix& m, const PowerOptions& opt = {});

/// The unnormalized iterate M^k * 1, computed by k successive mat_vec calls.
ScoreVector iterate_k(const NonNegMatrix& m, std::size_t k);

namespace detail {
/// Shared iteration core. A positive shift iterates on M + shift*I, which has
/// the same eigenvectors; the reported eigenvalue refers to M itself.
SpectralResult power_iterate(const NonNegMatrix& m, const ScoreVector& x0,
                             const PowerOptions& opt, double shift);
}  // namespace detail

}  // namespace eigenrank
