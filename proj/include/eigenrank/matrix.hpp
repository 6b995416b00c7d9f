#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace eigenrank {

/// Score per participant (player quality, page rank, iterate entry).
/// Entries are nonnegative finite doubles; length matches the matrix dimension.
using ScoreVector = std::vector<double>;

/// Thrown when an operation needs a vector with at least one positive entry
/// but receives all zeros (e.g. a vanished power iterate of a nilpotent matrix).
class ZeroVectorError : public std::runtime_error {
public:
    ZeroVectorError() : std::runtime_error("ZeroVector: vector has no positive entry") {}
};

enum class Storage { Dense, SparseByColumn };

struct Triplet {
    std::size_t row;
    std::size_t col;
    double value;
};

/// Square matrix with nonnegative finite entries, stored dense (row-major) or
/// sparse by column (CSC). Both representations produce bit-for-bit identical
/// mat_vec results: every row sum is accumulated in ascending column order and
/// zero entries are exact no-ops under IEEE addition of nonnegative terms.
///
/// Sparse matrices keep a CSR mirror so the row-parallel kernel can preserve
/// the same within-row summation order as the dense reference.
class NonNegMatrix {
public:
    static NonNegMatrix dense(std::size_t n, std::vector<double> row_major);
    static NonNegMatrix dense_from_rows(const std::vector<std::vector<double>>& rows);
    static NonNegMatrix sparse_from_triplets(std::size_t n, std::vector<Triplet> entries);

    std::size_t dim() const noexcept { return n_; }
    Storage storage() const noexcept { return storage_; }

    /// Entry (i, j). O(1) dense, O(log nnz(column j)) sparse.
    double operator()(std::size_t i, std::size_t j) const;

    /// M * v with row sums accumulated in ascending column order.
    /// Dispatches to the OpenMP kernel for large dimensions; the result is
    /// always identical to mat_vec_serial.
    ScoreVector mat_vec(const ScoreVector& v) const;

    /// Serial reference kernel (dense row loop / CSC column scatter).
    ScoreVector mat_vec_serial(const ScoreVector& v) const;

    ScoreVector row_sums() const;
    double max_row_sum() const;
    double column_sum(std::size_t j) const;
    bool column_is_zero(std::size_t j) const;

    NonNegMatrix scaled(double c) const;
    NonNegMatrix to_dense() const;
    NonNegMatrix to_sparse() const;

    /// Visit every stored nonzero as f(row, col, value). Sparse matrices are
    /// visited column by column; dense matrices row by row, skipping zeros.
    template <typename F>
    void for_each_nonzero(F&& f) const {
        if (storage_ == Storage::Dense) {
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    if (dense_[i * n_ + j] != 0.0) f(i, j, dense_[i * n_ + j]);
        } else {
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k)
                    f(row_idx_[k], j, val_[k]);
        }
    }

    // Raw views used by the kernels and tests.
    const std::vector<double>& dense_data() const { return dense_; }
    const std::vector<std::size_t>& col_ptr() const { return col_ptr_; }
    const std::vector<std::size_t>& row_idx() const { return row_idx_; }
    const std::vector<double>& values() const { return val_; }

private:
    NonNegMatrix() = default;

    std::size_t n_ = 0;
    Storage storage_ = Storage::Dense;

    std::vector<double> dense_;  // row-major, n*n

    // CSC (primary sparse layout: web ranking consumes columns).
    std::vector<std::size_t> col_ptr_;
    std::vector<std::size_t> row_idx_;
    std::vector<double> val_;
    // CSR mirror, entries sorted by (row, col).
    std::vector<std::size_t> row_ptr_;
    std::vector<std::size_t> col_idx_;
    std::vector<double> row_val_;
};

/// The all-ones vector, the canonical power-iteration start.
ScoreVector ones(std::size_t n);

/// Scale v so its entries sum to 1. Throws ZeroVectorError on an all-zero input.
ScoreVector normalize_1(const ScoreVector& v);

double sum(const ScoreVector& v);
double l1_distance(const ScoreVector& a, const ScoreVector& b);

}  // namespace eigenrank
