#include "eigenrank/matvec.hpp"

namespace eigenrank::kernels {

void dense_matvec_serial(std::size_t n, const double* m, const double* x, double* y) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = m + i * n;
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

// Column scatter in ascending column order. Each y[i] receives exactly the
// nonzero terms of row i, ascending in j, which matches the dense loop bit
// for bit: the skipped terms are +0.0 and adding +0.0 never changes a
// nonnegative partial sum.
void csc_matvec_serial(std::size_t n, const std::size_t* col_ptr, const std::size_t* row_idx,
                       const double* val, const double* x, double* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double xj = x[j];
        for (std::size_t k = col_ptr[j]; k < col_ptr[j + 1]; ++k) y[row_idx[k]] += val[k] * xj;
    }
}

}  // namespace eigenrank::kernels
