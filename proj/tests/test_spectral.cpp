#include <cmath>
#include <random>

#include <doctest.h>

#include "eigenrank/spectral.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using eigenrank::IterationStatus;
using eigenrank::NonNegMatrix;
using eigenrank::PowerOptions;
using eigenrank::ScoreVector;
using eigenrank::SpectralResult;

namespace {

double residual_1norm(const NonNegMatrix& m, const SpectralResult& r) {
    const ScoreVector mv = m.mat_vec(r.vector);
    double s = 0.0;
    for (std::size_t i = 0; i < mv.size(); ++i) s += std::abs(mv[i] - r.eigenvalue * r.vector[i]);
    return s;
}

}  // namespace

TEST_CASE("power method on the hyperlink example") {
    const SpectralResult r = eigenrank::power_method(fixtures::patent_h());
    CHECK(r.status == IterationStatus::Converged);
    CHECK(std::abs(r.eigenvalue - 1.0) <= 1e-10);
    CHECK(eigenrank::l1_distance(r.vector, {0.4, 0.2, 0.4}) <= 1e-9);
}

TEST_CASE("power method reports the vanished iterate of a nilpotent matrix") {
    const SpectralResult r = eigenrank::power_method(fixtures::a2());
    CHECK(r.status == IterationStatus::ZeroIterate);
    CHECK(r.iterations == 3);  // A^3 * 1 = 0
    CHECK(r.vector == ScoreVector{1.0, 0.0, 0.0});
    CHECK(r.eigenvalue == 0.0);
}

TEST_CASE("power method on the drawn-pair example") {
    const SpectralResult r = eigenrank::power_method(fixtures::a1());
    CHECK(r.status == IterationStatus::Converged);
    CHECK(std::abs(r.eigenvalue - 0.5) <= 1e-12);
    CHECK(eigenrank::l1_distance(r.vector, {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0}) <= 1e-12);
}

TEST_CASE("power method input validation") {
    CHECK_THROWS_AS(eigenrank::power_method(fixtures::a1(), ScoreVector{1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(eigenrank::power_method(fixtures::a1(), ScoreVector{0.0, 0.0, 0.0}),
                    eigenrank::ZeroVectorError);
}

TEST_CASE("period-2 inputs are flagged as oscillating") {
    const NonNegMatrix swap = NonNegMatrix::dense_from_rows({{0, 1}, {1, 0}});
    const SpectralResult r = eigenrank::power_method(swap, ScoreVector{2.0, 1.0});
    CHECK(r.status == IterationStatus::Oscillating);
}

TEST_CASE("period-3 inputs run to the iteration cap") {
    const NonNegMatrix cycle = NonNegMatrix::dense_from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    PowerOptions opt;
    opt.max_iter = 500;
    const SpectralResult r = eigenrank::power_method(cycle, ScoreVector{1.0, 2.0, 3.0}, opt);
    CHECK(r.status == IterationStatus::MaxIterations);
    CHECK(r.iterations == 500);
}

TEST_CASE("iterate_k reproduces the 6x6 iterates exactly") {
    const NonNegMatrix a = fixtures::kendall6();
    CHECK(eigenrank::iterate_k(a, 0) == eigenrank::ones(6));
    CHECK(eigenrank::iterate_k(a, 1) == ScoreVector{4.5, 2.5, 4.5, 1.5, 2.5, 2.5});
    CHECK(eigenrank::iterate_k(a, 2) == ScoreVector{14.25, 5.25, 11.25, 5.25, 5.25, 5.25});

    const ScoreVector x3 = eigenrank::iterate_k(a, 3);
    CHECK(x3[3] == 16.875);
    CHECK(x3[1] == 13.125);
    CHECK(x3[4] == 13.125);
    CHECK(x3[5] == 13.125);
    CHECK(x3[3] > x3[1]);
    CHECK(x3[3] > x3[4]);
    CHECK(x3[3] > x3[5]);
}

TEST_CASE("iterate_k at k = 1 is the row-sum vector exactly") {
    std::mt19937_64 rng(111);
    for (int trial = 0; trial < 30; ++trial) {
        const NonNegMatrix m = oracle::random_nonneg(rng, 1 + rng() % 20, 0.5);
        CHECK(eigenrank::iterate_k(m, 1) == m.row_sums());
    }
}

TEST_CASE("converged results satisfy the residual bound") {
    const PowerOptions opt;
    for (const NonNegMatrix& m :
         {fixtures::patent_h(), fixtures::a1(), fixtures::first_round_robin()}) {
        const SpectralResult r = eigenrank::power_method(m, opt);
        REQUIRE(r.status == IterationStatus::Converged);
        CHECK(std::abs(eigenrank::sum(r.vector) - 1.0) <= 1e-12);
        CHECK(residual_1norm(m, r) <= 10.0 * opt.tol * std::max(r.eigenvalue, 1e-300));
    }
}

TEST_CASE("power method agrees with the characteristic-polynomial oracle") {
    std::mt19937_64 rng(222);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 7;
        const NonNegMatrix m = oracle::random_irreducible_aperiodic(rng, n);
        const SpectralResult got = eigenrank::power_method(m);
        REQUIRE(got.status == IterationStatus::Converged);
        const oracle::EigenPair want = oracle::dominant_eigenpair(m);
        CHECK(std::abs(got.eigenvalue - want.value) <= 1e-8 * std::max(want.value, 1e-300));
        CHECK(eigenrank::l1_distance(got.vector, want.vector) <= 1e-6);

        // Perron vectors of irreducible matrices are strictly positive.
        for (const double v : got.vector) CHECK(v > 0.0);
    }
}

TEST_CASE("eigenvalue scales with the matrix, the vector does not") {
    std::mt19937_64 rng(333);
    for (int trial = 0; trial < 20; ++trial) {
        const NonNegMatrix m = oracle::random_irreducible_aperiodic(rng, 2 + rng() % 7);
        const SpectralResult base = eigenrank::power_method(m);
        REQUIRE(base.status == IterationStatus::Converged);
        for (const double c : {0.5, 2.0, 3.0}) {
            const SpectralResult scaled = eigenrank::power_method(m.scaled(c));
            REQUIRE(scaled.status == IterationStatus::Converged);
            CHECK(std::abs(scaled.eigenvalue - c * base.eigenvalue) <=
                  1e-10 * std::max(1.0, c * base.eigenvalue));
            CHECK(eigenrank::l1_distance(scaled.vector, base.vector) <= 1e-10);
        }
    }
}

TEST_CASE("the angle to the dominant eigenvector decays along the iteration") {
    std::mt19937_64 rng(444);
    std::vector<NonNegMatrix> cases{fixtures::patent_h(), fixtures::first_round_robin()};
    for (int trial = 0; trial < 10; ++trial)
        cases.push_back(oracle::random_irreducible_aperiodic(rng, 3 + rng() % 5));

    for (const NonNegMatrix& m : cases) {
        const oracle::EigenPair dom = oracle::dominant_eigenpair(m);
        auto angle_to_dominant = [&](const ScoreVector& y) {
            double dot = 0.0, ny = 0.0, nv = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i) {
                dot += y[i] * dom.vector[i];
                ny += y[i] * y[i];
                nv += dom.vector[i] * dom.vector[i];
            }
            const double c = std::min(1.0, dot / std::sqrt(ny * nv));
            return std::acos(c);
        };

        ScoreVector y = eigenrank::normalize_1(eigenrank::ones(m.dim()));
        double prev = angle_to_dominant(y);
        for (int k = 1; k <= 60; ++k) {
            const ScoreVector z = m.mat_vec(y);
            if (eigenrank::sum(z) == 0.0) break;
            y = eigenrank::normalize_1(z);
            const double cur = angle_to_dominant(y);
            if (k > 5) CHECK(cur <= prev + 1e-12);
            prev = cur;
            if (cur < 1e-13) break;
        }
    }
}
