#pragma once

#include <cstddef>

namespace eigenrank::kernels {

// Serial reference kernels. Row sums accumulate in ascending column order;
// these define the numerical contract the parallel kernels must reproduce
// bit for bit.
void dense_matvec_serial(std::size_t n, const double* m, const double* x, double* y);
void csc_matvec_serial(std::size_t n, const std::size_t* col_ptr, const std::size_t* row_idx,
                       const double* val, const double* x, double* y);

// OpenMP row-parallel kernels. Each row keeps the serial within-row order,
// so the output is identical to the serial reference for any thread count.
void dense_matvec_omp(std::size_t n, const double* m, const double* x, double* y);
void csr_matvec_omp(std::size_t n, const std::size_t* row_ptr, const std::size_t* col_idx,
                    const double* val, const double* x, double* y);

bool omp_enabled();
int omp_thread_count();

// Dimension at or above which mat_vec dispatches to the parallel kernels.
inline constexpr std::size_t kParallelCutoff = 512;

}  // namespace eigenrank::kernels
