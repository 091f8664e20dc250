#pragma once

#include <cstddef>

// Dense double-precision kernels behind the matrix oracle. Every routine has a
// portable scalar reference; an AVX2/FMA variant is compiled on x86-64 and
// picked at runtime when the CPU supports it. Setting SRG_KREIN_KERNELS=scalar
// forces the reference path.

namespace srg::kernels {

struct KernelTable {
    const char* name;
    /// c = a * b for square row-major matrices of order n. c must not alias a or b.
    void (*gemm)(std::size_t n, const double* a, const double* b, double* c);
    /// out[i] = a[i] * b[i]
    void (*hadamard)(std::size_t len, const double* a, const double* b, double* out);
    /// out[i] = alpha * x[i] + beta * y[i]
    void (*axpby)(std::size_t len, double alpha, const double* x, double beta, const double* y, double* out);
    /// out[i] = alpha * x[i]
    void (*scale)(std::size_t len, double alpha, const double* x, double* out);
    double (*dot)(std::size_t len, const double* a, const double* b);
    double (*max_abs_diff)(std::size_t len, const double* a, const double* b);
};

const KernelTable& scalar();
/// nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2();
/// The table used by DenseMatrix operations; resolved once.
const KernelTable& active();

}  // namespace srg::kernels
