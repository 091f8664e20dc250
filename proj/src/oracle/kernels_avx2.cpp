// Compiled with -mavx2 -mfma; only reached through the runtime dispatcher.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <vector>

#include "srg/oracle/kernels.hpp"

namespace srg::kernels {
namespace {

// Register-blocked GEMM: 6x8 micro-tile (12 ymm accumulators), A packed in
// 6-row panels and B in 8-column panels, cache blocked over (NC, KC, MC).
constexpr std::size_t kMR = 6;
constexpr std::size_t kNR = 8;
constexpr std::size_t kKC = 256;
constexpr std::size_t kMC = 120;
constexpr std::size_t kNC = 4096;

void pack_a(const double* a, std::size_t lda, std::size_t mc, std::size_t kc, double* out) {
    for (std::size_t ir = 0; ir < mc; ir += kMR) {
        const std::size_t rows = std::min(kMR, mc - ir);
        for (std::size_t p = 0; p < kc; ++p) {
            for (std::size_t i = 0; i < rows; ++i) out[i] = a[(ir + i) * lda + p];
            for (std::size_t i = rows; i < kMR; ++i) out[i] = 0.0;
            out += kMR;
        }
    }
}

void pack_b(const double* b, std::size_t ldb, std::size_t kc, std::size_t nc, double* out) {
    for (std::size_t jr = 0; jr < nc; jr += kNR) {
        const std::size_t cols = std::min(kNR, nc - jr);
        for (std::size_t p = 0; p < kc; ++p) {
            const double* src = b + p * ldb + jr;
            if (cols == kNR) {
                _mm256_storeu_pd(out, _mm256_loadu_pd(src));
                _mm256_storeu_pd(out + 4, _mm256_loadu_pd(src + 4));
            } else {
                for (std::size_t j = 0; j < cols; ++j) out[j] = src[j];
                for (std::size_t j = cols; j < kNR; ++j) out[j] = 0.0;
            }
            out += kNR;
        }
    }
}

// c[0:mr, 0:nr] += (packed a panel) * (packed b panel)
void micro_kernel(std::size_t kc, const double* pa, const double* pb, double* c, std::size_t ldc,
                  std::size_t mr, std::size_t nr) {
    __m256d c00 = _mm256_setzero_pd(), c01 = _mm256_setzero_pd();
    __m256d c10 = _mm256_setzero_pd(), c11 = _mm256_setzero_pd();
    __m256d c20 = _mm256_setzero_pd(), c21 = _mm256_setzero_pd();
    __m256d c30 = _mm256_setzero_pd(), c31 = _mm256_setzero_pd();
    __m256d c40 = _mm256_setzero_pd(), c41 = _mm256_setzero_pd();
    __m256d c50 = _mm256_setzero_pd(), c51 = _mm256_setzero_pd();
    for (std::size_t p = 0; p < kc; ++p) {
        const __m256d b0 = _mm256_loadu_pd(pb);
        const __m256d b1 = _mm256_loadu_pd(pb + 4);
        __m256d av = _mm256_broadcast_sd(pa + 0);
        c00 = _mm256_fmadd_pd(av, b0, c00);
        c01 = _mm256_fmadd_pd(av, b1, c01);
        av = _mm256_broadcast_sd(pa + 1);
        c10 = _mm256_fmadd_pd(av, b0, c10);
        c11 = _mm256_fmadd_pd(av, b1, c11);
        av = _mm256_broadcast_sd(pa + 2);
        c20 = _mm256_fmadd_pd(av, b0, c20);
        c21 = _mm256_fmadd_pd(av, b1, c21);
        av = _mm256_broadcast_sd(pa + 3);
        c30 = _mm256_fmadd_pd(av, b0, c30);
        c31 = _mm256_fmadd_pd(av, b1, c31);
        av = _mm256_broadcast_sd(pa + 4);
        c40 = _mm256_fmadd_pd(av, b0, c40);
        c41 = _mm256_fmadd_pd(av, b1, c41);
        av = _mm256_broadcast_sd(pa + 5);
        c50 = _mm256_fmadd_pd(av, b0, c50);
        c51 = _mm256_fmadd_pd(av, b1, c51);
        pa += kMR;
        pb += kNR;
    }
    const __m256d acc[kMR][2] = {{c00, c01}, {c10, c11}, {c20, c21}, {c30, c31}, {c40, c41}, {c50, c51}};
    if (mr == kMR && nr == kNR) {
        for (std::size_t i = 0; i < kMR; ++i) {
            double* row = c + i * ldc;
            _mm256_storeu_pd(row, _mm256_add_pd(_mm256_loadu_pd(row), acc[i][0]));
            _mm256_storeu_pd(row + 4, _mm256_add_pd(_mm256_loadu_pd(row + 4), acc[i][1]));
        }
        return;
    }
    alignas(32) double tile[kMR][kNR];
    for (std::size_t i = 0; i < kMR; ++i) {
        _mm256_store_pd(tile[i], acc[i][0]);
        _mm256_store_pd(tile[i] + 4, acc[i][1]);
    }
    for (std::size_t i = 0; i < mr; ++i)
        for (std::size_t j = 0; j < nr; ++j) c[i * ldc + j] += tile[i][j];
}

void gemm(std::size_t n, const double* a, const double* b, double* c) {
    std::memset(c, 0, n * n * sizeof(double));
    if (n == 0) return;
    const std::size_t nc_max = std::min(kNC, n);
    std::vector<double> packed_b(kKC * ((nc_max + kNR - 1) / kNR) * kNR);
    std::vector<double> packed_a(kKC * ((std::min(kMC, n) + kMR - 1) / kMR) * kMR);
    for (std::size_t jc = 0; jc < n; jc += kNC) {
        const std::size_t nc = std::min(kNC, n - jc);
        for (std::size_t pc = 0; pc < n; pc += kKC) {
            const std::size_t kc = std::min(kKC, n - pc);
            pack_b(b + pc * n + jc, n, kc, nc, packed_b.data());
            for (std::size_t ic = 0; ic < n; ic += kMC) {
                const std::size_t mc = std::min(kMC, n - ic);
                pack_a(a + ic * n + pc, n, mc, kc, packed_a.data());
                for (std::size_t jr = 0; jr < nc; jr += kNR) {
                    const double* pb = packed_b.data() + jr * kc;
                    for (std::size_t ir = 0; ir < mc; ir += kMR) {
                        micro_kernel(kc, packed_a.data() + ir * kc, pb, c + (ic + ir) * n + jc + jr, n,
                                     std::min(kMR, mc - ir), std::min(kNR, nc - jr));
                    }
                }
            }
        }
    }
}

void hadamard(std::size_t len, const double* a, const double* b, double* out) {
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < len; ++i) out[i] = a[i] * b[i];
}

void axpby(std::size_t len, double alpha, const double* x, double beta, const double* y, double* out) {
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d vb = _mm256_set1_pd(beta);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        // Same rounding as the scalar path: two products, one add.
        const __m256d ax = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        const __m256d by = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(out + i, _mm256_add_pd(ax, by));
    }
    for (; i < len; ++i) out[i] = alpha * x[i] + beta * y[i];
}

void scale(std::size_t len, double alpha, const double* x, double* out) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) _mm256_storeu_pd(out + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < len; ++i) out[i] = alpha * x[i];
}

double dot(std::size_t len, const double* a, const double* b) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < len; ++i) sum += a[i] * b[i];
    return sum;
}

double max_abs_diff(std::size_t len, const double* a, const double* b) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d m = _mm256_setzero_pd();
    __m256d nan_seen = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256d d = _mm256_andnot_pd(sign_mask, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
        nan_seen = _mm256_or_pd(nan_seen, _mm256_cmp_pd(d, d, _CMP_UNORD_Q));
        m = _mm256_max_pd(m, d);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, m);
    double out = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    if (_mm256_movemask_pd(nan_seen) != 0) out = std::numeric_limits<double>::quiet_NaN();
    for (; i < len; ++i) {
        const double d = std::abs(a[i] - b[i]);
        if (d > out || std::isnan(d)) out = d;
    }
    return out;
}

constexpr KernelTable table{"avx2", gemm, hadamard, axpby, scale, dot, max_abs_diff};

}  // namespace

const KernelTable* avx2_table() { return &table; }

}  // namespace srg::kernels
