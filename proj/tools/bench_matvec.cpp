// Benchmark: serial reference kernels vs the OpenMP row-parallel ones, with a
// bit-for-bit equality check between every pair of results.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <CLI11.hpp>

#include "eigenrank/matrix.hpp"
#include "eigenrank/matvec.hpp"

using eigenrank::NonNegMatrix;
using eigenrank::ScoreVector;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_per_call(const NonNegMatrix& m, const ScoreVector& x, bool serial, int reps) {
    ScoreVector y;
    const auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) y = serial ? m.mat_vec_serial(x) : m.mat_vec(x);
    const auto t1 = Clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

bool bitwise_equal(const ScoreVector& a, const ScoreVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

void report(const char* name, double flops, double serial_s, double parallel_s, bool equal) {
    std::printf("%-14s serial %8.3f ms (%6.2f GF/s)   omp %8.3f ms (%6.2f GF/s)   speedup %.2fx   %s\n",
                name, serial_s * 1e3, flops / serial_s * 1e-9, parallel_s * 1e3,
                flops / parallel_s * 1e-9, serial_s / parallel_s,
                equal ? "bitwise-equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matvec kernel benchmark"};
    std::size_t dense_n = 2048;
    std::size_t sparse_n = 200000;
    std::size_t nnz_per_col = 20;
    int reps = 20;
    app.add_option("--dense-n", dense_n, "Dense matrix dimension");
    app.add_option("--sparse-n", sparse_n, "Sparse matrix dimension");
    app.add_option("--nnz-per-col", nnz_per_col, "Nonzeros per sparse column");
    app.add_option("--reps", reps, "Repetitions per timing");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d (OpenMP %s)\n", eigenrank::kernels::omp_thread_count(),
                eigenrank::kernels::omp_enabled() ? "on" : "off");

    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> value(0.0, 1.0);

    {
        std::vector<double> data(dense_n * dense_n);
        for (double& v : data) v = value(rng);
        const NonNegMatrix m = NonNegMatrix::dense(dense_n, std::move(data));
        ScoreVector x(dense_n);
        for (double& v : x) v = value(rng);
        const double serial_s = seconds_per_call(m, x, true, reps);
        const double parallel_s = seconds_per_call(m, x, false, reps);
        report("dense", 2.0 * dense_n * dense_n, serial_s, parallel_s,
               bitwise_equal(m.mat_vec_serial(x), m.mat_vec(x)));
    }

    {
        std::uniform_int_distribution<std::size_t> row(0, sparse_n - 1);
        std::vector<eigenrank::Triplet> trips;
        trips.reserve(sparse_n * nnz_per_col);
        for (std::size_t j = 0; j < sparse_n; ++j)
            for (std::size_t k = 0; k < nnz_per_col; ++k)
                trips.push_back({row(rng), j, value(rng) + 0.01});
        // duplicate (row, col) pairs collapse: keep first occurrence
        std::sort(trips.begin(), trips.end(), [](const auto& a, const auto& b) {
            return a.col != b.col ? a.col < b.col : a.row < b.row;
        });
        trips.erase(std::unique(trips.begin(), trips.end(),
                                [](const auto& a, const auto& b) {
                                    return a.col == b.col && a.row == b.row;
                                }),
                    trips.end());
        const double nnz = static_cast<double>(trips.size());
        const NonNegMatrix m = NonNegMatrix::sparse_from_triplets(sparse_n, std::move(trips));
        ScoreVector x(sparse_n);
        for (double& v : x) v = value(rng);
        const double serial_s = seconds_per_call(m, x, true, reps);
        const double parallel_s = seconds_per_call(m, x, false, reps);
        report("sparse", 2.0 * nnz, serial_s, parallel_s,
               bitwise_equal(m.mat_vec_serial(x), m.mat_vec(x)));
    }
    return 0;
}
