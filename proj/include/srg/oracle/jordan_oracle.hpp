#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "srg/krein.hpp"
#include "srg/oracle/dense_matrix.hpp"
#include "srg/srg_core.hpp"

namespace srg::oracle {

class UnknownGraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BadPaleyModulus : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SizeCapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// ---------------------------------------------------------------------------
// Graph catalog

struct GraphCatalogEntry {
    std::string name;
    SrgParams params;
    DenseMatrix adjacency;
};

/// "c5", "petersen", "lattice-3", "triangular-5", or "paley-q" for a prime
/// q = 1 (mod 4) with q <= 101.
GraphCatalogEntry build_graph(std::string_view name);

/// Names accepted by build_graph, Paley graphs listed up to `paley_max`.
std::vector<std::string> catalog_names(int paley_max = 13);

/// Whitespace-separated 0/1 text: first token n, then n*n entries.
DenseMatrix read_adjacency(std::istream& in);

/// Reads (n,p;a,c) off a symmetric 0/1 matrix; throws std::invalid_argument if
/// the graph is not strongly regular.
SrgParams infer_params(const DenseMatrix& adjacency);

/// Max |A^2 - (p-c)I - (a-c)A - cJ| computed in integer arithmetic.
long long regularity_residual(const DenseMatrix& adjacency, const SrgParams& params);

// ---------------------------------------------------------------------------
// Jordan frame

struct Frame {
    DenseMatrix e1;
    DenseMatrix e2;
    DenseMatrix e3;

    const DenseMatrix& operator[](int i) const;
};

/// E_1, E_2, E_3 from the quadratic polynomials in A vanishing on the other eigenvalues.
Frame idempotents_from_adjacency(const DenseMatrix& adjacency, const SrgParams& params);

/// Dense matrix x I + y A + z (J - A - I) from exact basis coordinates.
DenseMatrix expand_coords(const BasisCoords& coords, const DenseMatrix& adjacency);

struct FrameReport {
    std::array<double, 3> idempotency{};    // |E_i^2 - E_i|
    std::array<double, 3> orthogonality{};  // |E_1E_2|, |E_1E_3|, |E_2E_3|
    double completeness = 0.0;              // |E_1 + E_2 + E_3 - I|
    double tol = 0.0;

    double max_residual() const;
    bool pass() const { return max_residual() < tol; }
};

FrameReport verify_frame(const DenseMatrix& e1, const DenseMatrix& e2, const DenseMatrix& e3, double tol);

// ---------------------------------------------------------------------------
// Kronecker powers and principal submatrices

/// Largest dense order the oracle will build: SRG_KREIN_SIZE_CAP or 4096.
std::size_t size_cap();

DenseMatrix kronecker_power(const DenseMatrix& m, unsigned k, std::size_t cap = size_cap());
/// E^{(x)m} (x) F^{(x)n}
DenseMatrix kronecker_mixed(const DenseMatrix& e, unsigned m, const DenseMatrix& f, unsigned n,
                            std::size_t cap = size_cap());

/// 0-based rows (i, i, ..., i) of an order^k Kronecker power: i (order^k - 1)/(order - 1).
std::vector<std::size_t> principal_indices(std::size_t order, unsigned k);

/// Max |M^{ok} - M^{(x)k}[idx, idx]|.
double principal_submatrix_residual(const DenseMatrix& m, unsigned k, std::size_t cap = size_cap());
/// Max |E^{om} o F^{on} - (E^{(x)m} (x) F^{(x)n})[idx, idx]|.
double mixed_principal_submatrix_residual(const DenseMatrix& e, unsigned m, const DenseMatrix& f,
                                          unsigned n, std::size_t cap = size_cap());
bool principal_submatrix_check(const DenseMatrix& m, unsigned k, double tol = 1e-12,
                               std::size_t cap = size_cap());

// ---------------------------------------------------------------------------
// Krein values by trace projection

using FloatTriple = std::array<double, 3>;

/// The dense Hadamard product named by `spec`.
DenseMatrix dense_product(const Frame& frame, const ProductSpec& spec);

/// q^i = tr(M E_i) / m_i with M = dense_product(frame, spec).
FloatTriple oracle_krein(const Frame& frame, const FloatTriple& multiplicities, const ProductSpec& spec);

/// Matrix traces of E_1, E_2, E_3.
FloatTriple frame_multiplicities(const Frame& frame);

/// Eigenvalues of M[indices, indices] interlace those of M (within `slack`).
bool interlacing_check(const DenseMatrix& m, std::span<const std::size_t> indices, double slack = 1e-8);

// ---------------------------------------------------------------------------
// Verification suite

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct SuiteOptions {
    unsigned degree_cap = 4;
    /// 0 selects 3 for graphs of order <= 5 and 2 otherwise.
    unsigned kronecker_k = 0;
    double tol = 1e-9;
    std::size_t cap = size_cap();
};

struct SuiteReport {
    std::string graph;
    SrgParams params;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool pass() const;
};

SuiteReport run_oracle_suite(const GraphCatalogEntry& graph, const SuiteOptions& options = {});

}  // namespace srg::oracle
