#include <cmath>
#include <random>

#include <doctest.h>

#include "eigenrank/tournament.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using eigenrank::EpsilonLimitResult;
using eigenrank::IterationStatus;
using eigenrank::LandauOptions;
using eigenrank::NonNegMatrix;
using eigenrank::PerturbationKind;
using eigenrank::RankReport;
using eigenrank::RankedPlayer;
using eigenrank::ScoreVector;
using eigenrank::ScoringScheme;

namespace {

std::vector<std::size_t> ranks_by_index(const std::vector<RankedPlayer>& ranking) {
    std::vector<std::size_t> ranks(ranking.size(), 0);
    for (const RankedPlayer& p : ranking) ranks[p.index] = p.rank;
    return ranks;
}

std::vector<std::size_t> ranks_by_index(const RankReport& r) { return ranks_by_index(r.ranking); }

double fixed_point_residual(const NonNegMatrix& a, const ScoreVector& s, double lambda) {
    const ScoreVector as = a.mat_vec(s);
    double r = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) r += std::abs(as[i] - lambda * s[i]);
    return r;
}

}  // namespace

TEST_CASE("rank_players produces competition ranks with tie groups") {
    const auto shares = eigenrank::rank_players({2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0});
    CHECK(ranks_by_index(shares) == std::vector<std::size_t>{1, 2, 2});

    const auto kendall = eigenrank::rank_players({4.5, 2.5, 4.5, 1.5, 2.5, 2.5});
    CHECK(ranks_by_index(kendall) == std::vector<std::size_t>{1, 3, 1, 6, 3, 3});
    CHECK(kendall[0].index == 0);  // display order: index-ascending inside ties
    CHECK(kendall[1].index == 2);
    CHECK(kendall[2].index == 1);
    CHECK(kendall[3].index == 4);
    CHECK(kendall[4].index == 5);
    CHECK(kendall[5].index == 3);

    const auto equal = eigenrank::rank_players({3.0, 3.0, 3.0});
    for (const RankedPlayer& p : equal) {
        CHECK(p.rank == 1);
        CHECK(p.tie_group == 1);
    }

    CHECK_THROWS_AS(eigenrank::rank_players({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("ranking is invariant under positive scaling") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> value(2.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 10;
        ScoreVector s(n);
        for (double& v : s) v = value(rng);
        s[rng() % n] = s[0];  // force at least one exact tie
        const auto base = eigenrank::rank_players(s);
        for (const double c : {0.5, 2.0, 10.0}) {
            ScoreVector scaled(n);
            for (std::size_t i = 0; i < n; ++i) scaled[i] = c * s[i];
            const auto got = eigenrank::rank_players(scaled);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(got[i].index == base[i].index);
                CHECK(got[i].rank == base[i].rank);
                CHECK(got[i].tie_group == base[i].tie_group);
            }
        }
    }
}

TEST_CASE("row sums score the 6x6 example") {
    const RankReport r = eigenrank::row_sum_score(fixtures::kendall6());
    CHECK(r.scores == ScoreVector{4.5, 2.5, 4.5, 1.5, 2.5, 2.5});
    const auto ranks = ranks_by_index(r);
    CHECK(ranks[0] == 1);
    CHECK(ranks[2] == 1);
    CHECK(ranks[3] == 6);
}

TEST_CASE("row sums of the first example and a zero matrix") {
    CHECK(eigenrank::row_sum_score(fixtures::first_round_robin()).scores ==
          ScoreVector{1.5, 1.0, 0.5});

    const RankReport zero = eigenrank::row_sum_score(NonNegMatrix::dense(2, {0, 0, 0, 0}));
    CHECK(zero.scores == ScoreVector{0.0, 0.0});
    CHECK_FALSE(zero.shares.has_value());
    CHECK_FALSE(zero.note.empty());
    for (const RankedPlayer& p : zero.ranking) CHECK(p.rank == 1);
}

TEST_CASE("wei scores") {
    const RankReport r = eigenrank::wei_score(fixtures::kendall6());
    CHECK(r.scores == ScoreVector{14.25, 5.25, 11.25, 5.25, 5.25, 5.25});
    const auto ranks = ranks_by_index(r);
    CHECK(ranks == std::vector<std::size_t>{1, 3, 2, 3, 3, 3});

    CHECK(eigenrank::wei_score(fixtures::a1()).scores == ScoreVector{1.0, 0.25, 0.25});
    CHECK(eigenrank::wei_score(NonNegMatrix::dense(2, {0, 0, 0, 0})).scores ==
          ScoreVector{0.0, 0.0});
}

TEST_CASE("k-step scores") {
    const RankReport k3 = eigenrank::kendall_score(fixtures::kendall6(), 3);
    CHECK(ranks_by_index(k3)[3] == 3);  // beating the winner pays off at k = 3

    const RankReport vanished = eigenrank::kendall_score(fixtures::a2(), 3);
    CHECK(vanished.scores == ScoreVector{0.0, 0.0, 0.0});
    CHECK(vanished.convergence.status == IterationStatus::ZeroIterate);
    CHECK_FALSE(vanished.shares.has_value());

    CHECK_THROWS_AS(eigenrank::kendall_score(fixtures::a2(), 0), std::invalid_argument);
}

TEST_CASE("k = 1 and k = 2 reproduce the simpler methods exactly") {
    std::mt19937_64 rng(666);
    std::vector<NonNegMatrix> cases{fixtures::kendall6(), fixtures::a1(), fixtures::a2(),
                                    fixtures::first_round_robin()};
    for (int trial = 0; trial < 100; ++trial)
        cases.push_back(oracle::random_round_robin(rng, 2 + rng() % 9, ScoringScheme::chess()));

    for (const NonNegMatrix& a : cases) {
        const RankReport k1 = eigenrank::kendall_score(a, 1);
        const RankReport rs = eigenrank::row_sum_score(a);
        CHECK(k1.scores == rs.scores);
        CHECK(ranks_by_index(k1) == ranks_by_index(rs));

        const RankReport k2 = eigenrank::kendall_score(a, 2);
        const RankReport we = eigenrank::wei_score(a);
        CHECK(k2.scores == we.scores);
        CHECK(ranks_by_index(k2) == ranks_by_index(we));
    }
}

TEST_CASE("landau scoring of the drawn-pair example") {
    const RankReport r = eigenrank::landau_score(fixtures::a1());
    REQUIRE(r.shares.has_value());
    CHECK(eigenrank::l1_distance(*r.shares, {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0}) <= 1e-8);
    REQUIRE(r.eigenvalue.has_value());
    CHECK(std::abs(*r.eigenvalue - 0.5) <= 1e-9);
    CHECK(r.convergence.status == IterationStatus::Converged);
    CHECK(r.convergence.epsilon_used.has_value());  // reducible: limit path
    CHECK(r.epsilon_perturbation == PerturbationKind::DecisivePairs);
    CHECK_FALSE(r.diagnostics.irreducible);

    // players 2 and 3 earn the same positive share
    CHECK((*r.shares)[1] == (*r.shares)[2]);
    CHECK((*r.shares)[1] > 0.0);
}

TEST_CASE("landau scoring of the nilpotent example") {
    const RankReport r = eigenrank::landau_score(fixtures::a2());
    REQUIRE(r.shares.has_value());
    CHECK(eigenrank::l1_distance(*r.shares, {1.0, 0.0, 0.0}) <= 1e-6);
    CHECK((*r.shares)[1] == 0.0);  // winning against player 3 pays nothing
    CHECK((*r.shares)[2] == 0.0);
    REQUIRE(r.eigenvalue.has_value());
    CHECK(*r.eigenvalue == 0.0);
    const auto ranks = ranks_by_index(r);
    CHECK(ranks == std::vector<std::size_t>{1, 2, 2});
    CHECK(r.ranking[1].tie_group == r.ranking[2].tie_group);
    CHECK(r.convergence.epsilon_used.has_value());
}

TEST_CASE("landau scoring of an irreducible matrix takes the direct path") {
    const RankReport r = eigenrank::landau_score(fixtures::first_round_robin());
    REQUIRE(r.shares.has_value());
    for (const double s : *r.shares) CHECK(s > 0.0);
    CHECK_FALSE(r.convergence.epsilon_used.has_value());
    CHECK(r.diagnostics.irreducible);

    const oracle::EigenPair want = oracle::dominant_eigenpair(fixtures::first_round_robin());
    CHECK(std::abs(*r.eigenvalue - want.value) <= 1e-8 * want.value);
}

TEST_CASE("landau fixed point") {
    const LandauOptions opts;
    for (const NonNegMatrix& a :
         {fixtures::first_round_robin(), fixtures::patent_h(), fixtures::a1(), fixtures::a2()}) {
        const RankReport r = eigenrank::landau_score(a, opts);
        REQUIRE(r.convergence.status == IterationStatus::Converged);
        REQUIRE(r.shares.has_value());
        const double bound = r.convergence.epsilon_used
                                 ? opts.limit_tol  // limit-path accuracy target
                                 : 10.0 * opts.tol * std::max(*r.eigenvalue, 1e-300);
        CHECK(fixed_point_residual(a, *r.shares, *r.eigenvalue) <= bound);
    }
}

TEST_CASE("landau on a single participant") {
    const RankReport r = eigenrank::landau_score(NonNegMatrix::dense(1, {0.0}));
    REQUIRE(r.shares.has_value());
    CHECK(*r.shares == ScoreVector{1.0});
    CHECK(r.ranking.front().rank == 1);
}

TEST_CASE("epsilon limit matches the printed limits") {
    const EpsilonLimitResult a2 = eigenrank::epsilon_limit_score(fixtures::a2());
    CHECK(eigenrank::l1_distance(a2.shares, {1.0, 0.0, 0.0}) <= 1e-6);
    CHECK(a2.perturbation == PerturbationKind::DecisivePairs);
    CHECK(a2.eigenvalue == 0.0);

    const EpsilonLimitResult a1 = eigenrank::epsilon_limit_score(fixtures::a1());
    CHECK(eigenrank::l1_distance(a1.shares, {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0}) <= 1e-6);
    CHECK(std::abs(a1.eigenvalue - 0.5) <= 1e-9);
}

TEST_CASE("epsilon limit works on the documented seven-point schedule") {
    LandauOptions opts;
    opts.epsilon_schedule = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
    const EpsilonLimitResult a2 = eigenrank::epsilon_limit_score(fixtures::a2(), opts);
    CHECK(eigenrank::l1_distance(a2.shares, {1.0, 0.0, 0.0}) <= opts.limit_tol);
    const EpsilonLimitResult a1 = eigenrank::epsilon_limit_score(fixtures::a1(), opts);
    CHECK(eigenrank::l1_distance(a1.shares, {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0}) <= opts.limit_tol);
}

TEST_CASE("missing pairings leave zeros but landau still ranks") {
    // players 1 and 3 never met: not a valid round robin, reducible or not,
    // the limit path still produces shares
    const NonNegMatrix m = NonNegMatrix::dense_from_rows({{0, 1, 0}, {0, 0, 0.5}, {0, 0.5, 0}});
    CHECK_FALSE(eigenrank::validate_round_robin(m, ScoringScheme::chess()).valid);
    const RankReport r = eigenrank::landau_score(m);
    CHECK(r.convergence.status == IterationStatus::Converged);
    REQUIRE(r.shares.has_value());
    CHECK(std::abs(eigenrank::sum(*r.shares) - 1.0) <= 1e-12);
    CHECK(r.epsilon_perturbation == PerturbationKind::UniformOffDiagonal);
}

TEST_CASE("epsilon limit of an already-irreducible matrix matches the direct run") {
    const LandauOptions opts;
    const NonNegMatrix a = fixtures::first_round_robin();
    const EpsilonLimitResult limit = eigenrank::epsilon_limit_score(a, opts);
    const RankReport direct = eigenrank::landau_score(a, opts);
    REQUIRE(direct.shares.has_value());
    CHECK(eigenrank::l1_distance(limit.shares, *direct.shares) <= opts.limit_tol);
    CHECK(std::abs(limit.eigenvalue - *direct.eigenvalue) <= opts.limit_tol);
}

TEST_CASE("epsilon limit validates its schedule and reports divergence") {
    LandauOptions opts;
    opts.epsilon_schedule = {0.5, 0.1};
    CHECK_THROWS_AS(eigenrank::epsilon_limit_score(fixtures::a2(), opts), std::invalid_argument);
    opts.epsilon_schedule = {1e-3, 1e-2};
    CHECK_THROWS_AS(eigenrank::epsilon_limit_score(fixtures::a2(), opts), std::invalid_argument);
    opts.epsilon_schedule = {};
    CHECK_THROWS_AS(eigenrank::epsilon_limit_score(fixtures::a2(), opts), std::invalid_argument);

    // two far-apart epsilons cannot stabilize the nilpotent family
    opts.epsilon_schedule = {1e-2, 1e-3};
    CHECK_THROWS_AS(eigenrank::epsilon_limit_score(fixtures::a2(), opts),
                    eigenrank::EpsilonLimitDiverged);

    // landau_score surfaces the same situation as a status
    const RankReport r = eigenrank::landau_score(fixtures::a2(), opts);
    CHECK(r.convergence.status == IterationStatus::MaxIterations);
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("raw epsilon scores stabilize monotonically on the fixtures") {
    for (const NonNegMatrix& a : {fixtures::a1(), fixtures::a2()}) {
        const EpsilonLimitResult res = eigenrank::epsilon_limit_score(a);
        REQUIRE(res.trace.size() >= 3);
        double prev = -1.0;
        for (std::size_t k = 0; k + 1 < res.trace.size(); ++k) {
            REQUIRE(res.trace[k].status == IterationStatus::Converged);
            const double diff =
                eigenrank::l1_distance(res.trace[k + 1].shares, res.trace[k].shares);
            if (prev >= 0.0) CHECK(diff <= prev + 1e-15);
            prev = diff;
        }
    }
}

TEST_CASE("uniform fallback perturbation handles non-round-robin matrices") {
    // a reducible matrix that is not a chess round robin
    const NonNegMatrix m = NonNegMatrix::dense_from_rows({{0, 2, 0}, {0, 0, 0}, {0, 1, 0}});
    const EpsilonLimitResult res = eigenrank::epsilon_limit_score(m);
    CHECK(res.perturbation == PerturbationKind::UniformOffDiagonal);
    CHECK(std::abs(eigenrank::sum(res.shares) - 1.0) <= 1e-12);

    const RankReport r = eigenrank::landau_score(m);
    CHECK(r.convergence.status == IterationStatus::Converged);
    CHECK(r.epsilon_perturbation == PerturbationKind::UniformOffDiagonal);
}

TEST_CASE("football scheme scales the anti-sports example") {
    // the same tournaments under 3/1/0 scoring keep the share pattern
    const NonNegMatrix a1_football =
        NonNegMatrix::dense_from_rows({{0, 3, 3}, {0, 0, 1}, {0, 1, 0}});
    LandauOptions opts;
    opts.scheme = ScoringScheme::football();
    const RankReport r = eigenrank::landau_score(a1_football, opts);
    REQUIRE(r.shares.has_value());
    CHECK((*r.shares)[1] == (*r.shares)[2]);
    CHECK((*r.shares)[1] > 0.0);
    CHECK(r.epsilon_perturbation == PerturbationKind::DecisivePairs);
}
