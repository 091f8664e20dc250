#include <cmath>
#include <cstring>

#include "srg/oracle/kernels.hpp"

namespace srg::kernels {
namespace {

void gemm(std::size_t n, const double* a, const double* b, double* c) {
    std::memset(c, 0, n * n * sizeof(double));
    for (std::size_t i = 0; i < n; ++i) {
        double* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i * n + k];
            if (aik == 0.0) continue;
            const double* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void hadamard(std::size_t len, const double* a, const double* b, double* out) {
    for (std::size_t i = 0; i < len; ++i) out[i] = a[i] * b[i];
}

void axpby(std::size_t len, double alpha, const double* x, double beta, const double* y, double* out) {
    for (std::size_t i = 0; i < len; ++i) out[i] = alpha * x[i] + beta * y[i];
}

void scale(std::size_t len, double alpha, const double* x, double* out) {
    for (std::size_t i = 0; i < len; ++i) out[i] = alpha * x[i];
}

double dot(std::size_t len, const double* a, const double* b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) acc += a[i] * b[i];
    return acc;
}

double max_abs_diff(std::size_t len, const double* a, const double* b) {
    double m = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double d = std::abs(a[i] - b[i]);
        if (d > m || std::isnan(d)) m = d;  // NaN is sticky
    }
    return m;
}

constexpr KernelTable table{"scalar", gemm, hadamard, axpby, scale, dot, max_abs_diff};

}  // namespace

const KernelTable& scalar() { return table; }

}  // namespace srg::kernels
