#include "eigenrank/matvec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eigenrank::kernels {

bool omp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int omp_thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Rows are independent; each keeps the serial ascending-column accumulation,
// so the result is identical to the serial reference for any thread count.
void dense_matvec_omp(std::size_t n, const double* m, const double* x, double* y) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const double* row = m + static_cast<std::size_t>(i) * n;
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

void csr_matvec_omp(std::size_t n, const std::size_t* row_ptr, const std::size_t* col_idx,
                    const double* val, const double* x, double* y) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        double acc = 0.0;
        for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) acc += val[k] * x[col_idx[k]];
        y[i] = acc;
    }
}

}  // namespace eigenrank::kernels
