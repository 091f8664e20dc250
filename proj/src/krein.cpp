#include "srg/krein.hpp"

#include <stdexcept>

namespace srg {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_index(int i) {
    if (i < 1 || i > 3) throw IndexOutOfRange("idempotent index out of range: " + std::to_string(i));
}

void check_pair(int u, int v) {
    check_index(u);
    check_index(v);
    if (u >= v) throw IndexOutOfRange("need u < v, got " + std::to_string(u) + "," + std::to_string(v));
}

void check_exponent(unsigned k) {
    if (k == 0) throw std::invalid_argument("Hadamard exponents must be >= 1");
}

}  // namespace

void validate_spec(const ProductSpec& spec) {
    std::visit(overloaded{
                   [](const spec::JJ& s) {
                       check_index(s.j);
                       check_exponent(s.k);
                   },
                   [](const spec::UV& s) {
                       check_pair(s.u, s.v);
                       check_exponent(s.k);
                       check_exponent(s.l);
                   },
                   [](const spec::PlusUV& s) {
                       check_pair(s.u, s.v);
                       check_exponent(s.k);
                   },
                   [](const spec::JPlusUV& s) {
                       check_index(s.j);
                       check_pair(s.u, s.v);
                       check_exponent(s.k);
                       check_exponent(s.l);
                   },
               },
               spec);
}

unsigned total_degree(const ProductSpec& spec) {
    return std::visit(overloaded{
                          [](const spec::JJ& s) { return s.k; },
                          [](const spec::UV& s) { return s.k + s.l; },
                          [](const spec::PlusUV& s) { return s.k; },
                          [](const spec::JPlusUV& s) { return s.k + s.l; },
                      },
                      spec);
}

std::string label(const ProductSpec& spec) {
    const auto str = [](auto x) { return std::to_string(x); };
    return std::visit(overloaded{
                          [&](const spec::JJ& s) { return str(s.j) + str(s.j) + "_" + str(s.k); },
                          [&](const spec::UV& s) {
                              return str(s.u) + str(s.v) + "_" + str(s.k) + str(s.l);
                          },
                          [&](const spec::PlusUV& s) {
                              return "(+" + str(s.u) + str(s.v) + ")_" + str(s.k);
                          },
                          [&](const spec::JPlusUV& s) {
                              return str(s.j) + "(+" + str(s.u) + str(s.v) + ")_" + str(s.k) + str(s.l);
                          },
                      },
                      spec);
}

std::vector<ProductSpec> all_specs(unsigned max_degree) {
    static constexpr int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    std::vector<ProductSpec> out;
    for (int j = 1; j <= 3; ++j)
        for (unsigned k = 1; k <= max_degree; ++k) out.emplace_back(spec::JJ{j, k});
    for (const auto& [u, v] : pairs)
        for (unsigned k = 1; k < max_degree; ++k)
            for (unsigned l = 1; k + l <= max_degree; ++l) out.emplace_back(spec::UV{u, v, k, l});
    for (const auto& [u, v] : pairs)
        for (unsigned k = 1; k <= max_degree; ++k) out.emplace_back(spec::PlusUV{u, v, k});
    for (int j = 1; j <= 3; ++j)
        for (const auto& [u, v] : pairs)
            for (unsigned k = 1; k < max_degree; ++k)
                for (unsigned l = 1; k + l <= max_degree; ++l)
                    out.emplace_back(spec::JPlusUV{j, u, v, k, l});
    return out;
}

const QuadNum& KreinTriple::operator[](int i) const {
    switch (i) {
        case 1: return q1;
        case 2: return q2;
        case 3: return q3;
        default: throw IndexOutOfRange("KreinTriple index out of range: " + std::to_string(i));
    }
}

BasisCoords hadamard_combine(const BasisCoords& lhs, const BasisCoords& rhs) {
    return {lhs.x * rhs.x, lhs.y * rhs.y, lhs.z * rhs.z};
}

BasisCoords hadamard_power(const BasisCoords& base, unsigned k) {
    check_exponent(k);
    return {pow(base.x, k), pow(base.y, k), pow(base.z, k)};
}

KreinTriple eigen_project(const BasisCoords& c, const SrgParams& params) {
    const Spectrum sp = spectrum(params);
    const QuadNum one(1);
    const QuadNum complement_degree(params.n - params.p - 1);
    return {
        c.x + c.y * sp.p + c.z * complement_degree,
        c.x + c.y * sp.r - c.z * (sp.r + one),
        c.x + c.y * sp.s - c.z * (sp.s + one),
    };
}

BasisCoords frame_to_basis(const KreinTriple& t, const SrgParams& params) {
    const BasisCoords e1 = idempotent_coords(params, 1);
    const BasisCoords e2 = idempotent_coords(params, 2);
    const BasisCoords e3 = idempotent_coords(params, 3);
    return {
        t.q1 * e1.x + t.q2 * e2.x + t.q3 * e3.x,
        t.q1 * e1.y + t.q2 * e2.y + t.q3 * e3.y,
        t.q1 * e1.z + t.q2 * e2.z + t.q3 * e3.z,
    };
}

BasisCoords product_coords(const SrgParams& params, const ProductSpec& spec) {
    validate_spec(spec);
    return std::visit(
        overloaded{
            [&](const spec::JJ& s) { return hadamard_power(idempotent_coords(params, s.j), s.k); },
            [&](const spec::UV& s) {
                return hadamard_combine(hadamard_power(idempotent_coords(params, s.u), s.k),
                                        hadamard_power(idempotent_coords(params, s.v), s.l));
            },
            [&](const spec::PlusUV& s) {
                return hadamard_power(sum_idempotent_coords(params, s.u, s.v), s.k);
            },
            [&](const spec::JPlusUV& s) {
                return hadamard_combine(hadamard_power(idempotent_coords(params, s.j), s.k),
                                        hadamard_power(sum_idempotent_coords(params, s.u, s.v), s.l));
            },
        },
        spec);
}

KreinTriple generalized_krein(const SrgParams& params, const ProductSpec& spec) {
    return eigen_project(product_coords(params, spec), params);
}

std::vector<LabelledTriple> krein_classical(const SrgParams& params) {
    std::vector<LabelledTriple> out;
    out.reserve(6);
    for (int j = 1; j <= 3; ++j) {
        const ProductSpec s = spec::JJ{j, 2};
        out.push_back({s, generalized_krein(params, s)});
    }
    for (const auto& [u, v] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        const ProductSpec s = spec::UV{u, v, 1, 1};
        out.push_back({s, generalized_krein(params, s)});
    }
    return out;
}

}  // namespace srg
