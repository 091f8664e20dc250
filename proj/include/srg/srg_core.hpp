#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "srg/quad_num.hpp"

namespace srg {

/// Rejection of a raw (n,p;a,c) tuple.
class ParamError : public std::invalid_argument {
public:
    enum class Kind { range_violation, counting_identity_violation };
    ParamError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/*
 * Validated parameter set of a strongly regular graph: order n, degree p,
 * a common neighbours of adjacent pairs, c of non-adjacent pairs.
 * Construct through validate_params().
 */
struct SrgParams {
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::int64_t a = 0;
    std::int64_t c = 0;

    /// (a-c)^2 + 4(p-c), the radicand of both non-principal eigenvalues.
    std::int64_t discriminant() const { return (a - c) * (a - c) + 4 * (p - c); }

    friend bool operator==(const SrgParams&, const SrgParams&) = default;
    friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
};

std::string to_string(const SrgParams& params);

struct ValidationOptions {
    /// p(p-a-1) = (n-p-1)c. Disable to treat the formulas as pure algebra.
    bool require_counting_identity = true;
};

/// Throws ParamError naming the first violated constraint.
SrgParams validate_params(std::int64_t n, std::int64_t p, std::int64_t a, std::int64_t c,
                          ValidationOptions options = {});

/// The three distinct adjacency eigenvalues p > r > 0 > s.
struct Spectrum {
    QuadNum p;
    QuadNum r;
    QuadNum s;
    std::int64_t d = 0;
};

Spectrum spectrum(const SrgParams& params);

/// Coordinates in the disjoint-support basis {I, A, J - A - I}.
struct BasisCoords {
    QuadNum x;  // I
    QuadNum y;  // A
    QuadNum z;  // J - A - I

    friend bool operator==(const BasisCoords&, const BasisCoords&) = default;
};

BasisCoords operator+(const BasisCoords& lhs, const BasisCoords& rhs);

/// Primitive idempotent E_i, i in 1..3 (E_1 = J/n, E_2 for r, E_3 for s).
BasisCoords idempotent_coords(const SrgParams& params, int i);

/// E_u + E_v for 1 <= u < v <= 3.
BasisCoords sum_idempotent_coords(const SrgParams& params, int u, int v);

/// |A|^x = alpha I + beta A + gamma E_1, where |A|^x = p^x E_1 + r^x E_2 + |s|^x E_3.
struct AbsPowerCoords {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double x = 0.0;
};

AbsPowerCoords abs_power_coords(const SrgParams& params, double x);

/// Exact coordinates of A^k in the basis {I, A, E_1}, solved from the spectral
/// decomposition A^k = p^k E_1 + r^k E_2 + s^k E_3.
std::array<QuadNum, 3> power_coords(const SrgParams& params, unsigned k);

/// Eigenvalue multiplicities (1, m_r, m_s). `integral` is false when m_r or m_s
/// is not a nonnegative integer; the exact values are kept either way.
struct Multiplicities {
    QuadNum m_r;
    QuadNum m_s;
    bool integral = false;
};

Multiplicities multiplicities(const SrgParams& params);

}  // namespace srg
