#include "eigenrank/spectral.hpp"

#include <cmath>
#include <utility>

namespace eigenrank {

std::string to_string(IterationStatus s) {
    switch (s) {
        case IterationStatus::Converged: return "converged";
        case IterationStatus::MaxIterations: return "max-iterations";
        case IterationStatus::ZeroIterate: return "zero-iterate";
        case IterationStatus::Oscillating: return "oscillating";
    }
    return "unknown";
}

namespace detail {

SpectralResult power_iterate(const NonNegMatrix& m, const ScoreVector& x0,
                             const PowerOptions& opt, double shift) {
    if (x0.size() != m.dim()) throw std::invalid_argument("power_method: dimension mismatch");
    if (!(opt.tol > 0.0)) throw std::invalid_argument("power_method: tol must be positive");

    ScoreVector y = normalize_1(x0);  // throws ZeroVectorError on an all-zero start
    ScoreVector y_prev;               // y_{k-1}, for the period-2 detector
    std::size_t oscillating_streak = 0;

    auto finish = [&](ScoreVector v, std::size_t k, IterationStatus status) {
        SpectralResult r;
        r.eigenvalue = sum(m.mat_vec(v));  // sum ratio with sum(v) = 1
        r.vector = std::move(v);
        r.iterations = k;
        r.status = status;
        return r;
    };

    for (std::size_t k = 1; k <= opt.max_iter; ++k) {
        ScoreVector z = m.mat_vec(y);
        if (shift != 0.0)
            for (std::size_t i = 0; i < z.size(); ++i) z[i] += shift * y[i];
        const double s = sum(z);
        if (s == 0.0) return finish(std::move(y), k, IterationStatus::ZeroIterate);

        for (double& v : z) v /= s;
        const double diff = l1_distance(z, y);
        if (diff <= opt.tol) return finish(std::move(z), k, IterationStatus::Converged);

        if (!y_prev.empty()) {
            // Period-2 signature: same-parity iterates agree while consecutive
            // ones do not, e.g. on a cyclic permutation matrix.
            if (l1_distance(z, y_prev) <= opt.tol) {
                if (++oscillating_streak >= 32)
                    return finish(std::move(z), k, IterationStatus::Oscillating);
            } else {
                oscillating_streak = 0;
            }
        }
        y_prev = std::move(y);
        y = std::move(z);
    }
    return finish(std::move(y), opt.max_iter, IterationStatus::MaxIterations);
}

}  // namespace detail

SpectralResult power_method(const NonNegMatrix& m, const ScoreVector& x0, const PowerOptions& opt) {
    return detail::power_iterate(m, x0, opt, 0.0);
}

SpectralResult power_method(const NonNegMatrix& m, const PowerOptions& opt) {
    return detail::power_iterate(m, ones(m.dim()), opt, 0.0);
}

ScoreVector iterate_k(const NonNegMatrix& m, std::size_t k) {
    ScoreVector x = ones(m.dim());
    for (std::size_t step = 0; step < k; ++step) x = m.mat_vec(x);
    return x;
}

}  // namespace eigenrank
