#pragma once

#include <string>
#include <variant>
#include <vector>

#include "srg/srg_core.hpp"

namespace srg {

/*
 * Hadamard products of Jordan-frame idempotents. Indices are 1-based
 * (E_1 = J/n), exponents are entrywise powers:
 *
 *   JJ       E_j^{o k}
 *   UV       E_u^{o k} o E_v^{o l}                 (u < v)
 *   PlusUV   (E_u + E_v)^{o k}                     (u < v)
 *   JPlusUV  E_j^{o k} o (E_u + E_v)^{o l}         (u < v)
 */
namespace spec {
struct JJ {
    int j = 1;
    unsigned k = 1;
};
struct UV {
    int u = 1;
    int v = 2;
    unsigned k = 1;
    unsigned l = 1;
};
struct PlusUV {
    int u = 1;
    int v = 2;
    unsigned k = 1;
};
struct JPlusUV {
    int j = 1;
    int u = 1;
    int v = 2;
    unsigned k = 1;
    unsigned l = 1;
};
}  // namespace spec

using ProductSpec = std::variant<spec::JJ, spec::UV, spec::PlusUV, spec::JPlusUV>;

/// Throws IndexOutOfRange or std::invalid_argument on bad indices/exponents.
void validate_spec(const ProductSpec& spec);
/// Sum of all exponents (k, or k + l).
unsigned total_degree(const ProductSpec& spec);
/// Compact label such as "33_2", "12_11", "(+13)_3", "3(+13)_21".
std::string label(const ProductSpec& spec);
/// Every valid spec whose total degree is at most `max_degree`, in a fixed order.
std::vector<ProductSpec> all_specs(unsigned max_degree);

/// Coordinates (q^1, q^2, q^3) of an element in the frame {E_1, E_2, E_3}.
/// Values follow the unnormalized Jordan-frame convention.
struct KreinTriple {
    QuadNum q1;
    QuadNum q2;
    QuadNum q3;

    const QuadNum& operator[](int i) const;
    friend bool operator==(const KreinTriple&, const KreinTriple&) = default;
};

/// Entrywise product of two elements; exact because I, A, J-A-I are 0/1
/// matrices with disjoint supports.
BasisCoords hadamard_combine(const BasisCoords& lhs, const BasisCoords& rhs);
/// Entrywise k-th power, k >= 1.
BasisCoords hadamard_power(const BasisCoords& base, unsigned k);

/// Eigenvalues of the element on the three eigenspaces:
/// q^1 = x + p y + (n-p-1) z, q^2 = x + r y - (r+1) z, q^3 = x + s y - (s+1) z.
KreinTriple eigen_project(const BasisCoords& coords, const SrgParams& params);
/// Inverse of eigen_project: sum_i q^i E_i in the disjoint-support basis.
BasisCoords frame_to_basis(const KreinTriple& triple, const SrgParams& params);

/// Basis coordinates of the Hadamard product named by `spec`.
BasisCoords product_coords(const SrgParams& params, const ProductSpec& spec);
KreinTriple generalized_krein(const SrgParams& params, const ProductSpec& spec);

struct LabelledTriple {
    ProductSpec spec;
    KreinTriple value;
};

/// JJ(j,2) for j = 1..3 followed by UV(u,v,1,1) for u < v.
std::vector<LabelledTriple> krein_classical(const SrgParams& params);

}  // namespace srg
