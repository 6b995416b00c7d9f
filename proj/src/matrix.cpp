#include "eigenrank/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "eigenrank/matvec.hpp"

namespace eigenrank {

namespace {

void check_entry(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("matrix entry is not finite");
    if (v < 0.0) throw std::invalid_argument("matrix entry is negative");
}

// Canonicalize -0.0 to +0.0 so zero entries are exact no-ops in row sums.
double canonical(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

NonNegMatrix NonNegMatrix::dense(std::size_t n, std::vector<double> row_major) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be at least 1");
    if (row_major.size() != n * n)
        throw std::invalid_argument("dense storage size does not match dimension");
    for (double& v : row_major) {
        check_entry(v);
        v = canonical(v);
    }
    NonNegMatrix m;
    m.n_ = n;
    m.storage_ = Storage::Dense;
    m.dense_ = std::move(row_major);
    return m;
}

NonNegMatrix NonNegMatrix::dense_from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    std::vector<double> data;
    data.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
        data.insert(data.end(), row.begin(), row.end());
    }
    return dense(n, std::move(data));
}

NonNegMatrix NonNegMatrix::sparse_from_triplets(std::size_t n, std::vector<Triplet> entries) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be at least 1");
    for (const Triplet& t : entries) {
        if (t.row >= n || t.col >= n) throw std::invalid_argument("triplet index out of range");
        check_entry(t.value);
    }
    // Explicit zeros are dropped: a stored zero would break the all-zero
    // column test without changing any product.
    entries.erase(std::remove_if(entries.begin(), entries.end(),
                                 [](const Triplet& t) { return t.value == 0.0; }),
                  entries.end());
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    for (std::size_t k = 1; k < entries.size(); ++k)
        if (entries[k].col == entries[k - 1].col && entries[k].row == entries[k - 1].row)
            throw std::invalid_argument("duplicate triplet for the same entry");

    NonNegMatrix m;
    m.n_ = n;
    m.storage_ = Storage::SparseByColumn;
    m.col_ptr_.assign(n + 1, 0);
    m.row_idx_.reserve(entries.size());
    m.val_.reserve(entries.size());
    for (const Triplet& t : entries) {
        ++m.col_ptr_[t.col + 1];
        m.row_idx_.push_back(t.row);
        m.val_.push_back(t.value);
    }
    for (std::size_t j = 0; j < n; ++j) m.col_ptr_[j + 1] += m.col_ptr_[j];

    // CSR mirror for the row-parallel kernel.
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    m.row_ptr_.assign(n + 1, 0);
    m.col_idx_.reserve(entries.size());
    m.row_val_.reserve(entries.size());
    for (const Triplet& t : entries) {
        ++m.row_ptr_[t.row + 1];
        m.col_idx_.push_back(t.col);
        m.row_val_.push_back(t.value);
    }
    for (std::size_t i = 0; i < n; ++i) m.row_ptr_[i + 1] += m.row_ptr_[i];
    return m;
}

double NonNegMatrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
    if (storage_ == Storage::Dense) return dense_[i * n_ + j];
    const auto begin = row_idx_.begin() + static_cast<std::ptrdiff_t>(col_ptr_[j]);
    const auto end = row_idx_.begin() + static_cast<std::ptrdiff_t>(col_ptr_[j + 1]);
    const auto it = std::lower_bound(begin, end, i);
    if (it == end || *it != i) return 0.0;
    return val_[static_cast<std::size_t>(it - row_idx_.begin())];
}

ScoreVector NonNegMatrix::mat_vec_serial(const ScoreVector& v) const {
    if (v.size() != n_) throw std::invalid_argument("mat_vec: dimension mismatch");
    ScoreVector y(n_, 0.0);
    if (storage_ == Storage::Dense) {
        kernels::dense_matvec_serial(n_, dense_.data(), v.data(), y.data());
    } else {
        kernels::csc_matvec_serial(n_, col_ptr_.data(), row_idx_.data(), val_.data(), v.data(),
                                   y.data());
    }
    return y;
}

ScoreVector NonNegMatrix::mat_vec(const ScoreVector& v) const {
    if (v.size() != n_) throw std::invalid_argument("mat_vec: dimension mismatch");
    if (!kernels::omp_enabled() || n_ < kernels::kParallelCutoff) return mat_vec_serial(v);
    ScoreVector y(n_, 0.0);
    if (storage_ == Storage::Dense) {
        kernels::dense_matvec_omp(n_, dense_.data(), v.data(), y.data());
    } else {
        kernels::csr_matvec_omp(n_, row_ptr_.data(), col_idx_.data(), row_val_.data(), v.data(),
                                y.data());
    }
    return y;
}

ScoreVector NonNegMatrix::row_sums() const { return mat_vec(ones(n_)); }

double NonNegMatrix::max_row_sum() const {
    const ScoreVector s = row_sums();
    return *std::max_element(s.begin(), s.end());
}

double NonNegMatrix::column_sum(std::size_t j) const {
    if (j >= n_) throw std::out_of_range("column index out of range");
    double s = 0.0;
    if (storage_ == Storage::Dense) {
        for (std::size_t i = 0; i < n_; ++i) s += dense_[i * n_ + j];
    } else {
        for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) s += val_[k];
    }
    return s;
}

bool NonNegMatrix::column_is_zero(std::size_t j) const {
    if (j >= n_) throw std::out_of_range("column index out of range");
    if (storage_ == Storage::SparseByColumn) return col_ptr_[j] == col_ptr_[j + 1];
    for (std::size_t i = 0; i < n_; ++i)
        if (dense_[i * n_ + j] != 0.0) return false;
    return true;
}

NonNegMatrix NonNegMatrix::scaled(double c) const {
    if (!std::isfinite(c) || c <= 0.0)
        throw std::invalid_argument("scale factor must be positive and finite");
    if (storage_ == Storage::Dense) {
        std::vector<double> data = dense_;
        for (double& v : data) v *= c;
        return dense(n_, std::move(data));
    }
    std::vector<Triplet> trips;
    trips.reserve(val_.size());
    for_each_nonzero([&](std::size_t i, std::size_t j, double v) { trips.push_back({i, j, v * c}); });
    return sparse_from_triplets(n_, std::move(trips));
}

NonNegMatrix NonNegMatrix::to_dense() const {
    if (storage_ == Storage::Dense) return *this;
    std::vector<double> data(n_ * n_, 0.0);
    for_each_nonzero([&](std::size_t i, std::size_t j, double v) { data[i * n_ + j] = v; });
    return dense(n_, std::move(data));
}

NonNegMatrix NonNegMatrix::to_sparse() const {
    if (storage_ == Storage::SparseByColumn) return *this;
    std::vector<Triplet> trips;
    for_each_nonzero([&](std::size_t i, std::size_t j, double v) { trips.push_back({i, j, v}); });
    return sparse_from_triplets(n_, std::move(trips));
}

ScoreVector ones(std::size_t n) {
    if (n == 0) throw std::invalid_argument("vector dimension must be at least 1");
    return ScoreVector(n, 1.0);
}

double sum(const ScoreVector& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

ScoreVector normalize_1(const ScoreVector& v) {
    const double s = sum(v);
    if (s <= 0.0) throw ZeroVectorError();
    ScoreVector y(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) y[i] = v[i] / s;
    return y;
}

double l1_distance(const ScoreVector& a, const ScoreVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("l1_distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

}  // namespace eigenrank
