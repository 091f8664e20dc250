#include "srg/srg_core.hpp"

#include <cmath>

namespace srg {

std::string to_string(const SrgParams& params) {
    return "(" + std::to_string(params.n) + "," + std::to_string(params.p) + ";" +
           std::to_string(params.a) + "," + std::to_string(params.c) + ")";
}

SrgParams validate_params(std::int64_t n, std::int64_t p, std::int64_t a, std::int64_t c,
                          ValidationOptions options) {
    const SrgParams params{n, p, a, c};
    if (!(0 < c && c < p && p < n - 1) || a < 0) {
        throw ParamError(ParamError::Kind::range_violation,
                         "range violation: need 0 < c < p < n-1 and a >= 0, got " + to_string(params));
    }
    if (options.require_counting_identity) {
        const std::int64_t lhs = p * (p - a - 1);
        const std::int64_t rhs = (n - p - 1) * c;
        if (lhs != rhs) {
            throw ParamError(ParamError::Kind::counting_identity_violation,
                             "counting identity violation: p(p-a-1) = " + std::to_string(lhs) +
                                 " but (n-p-1)c = " + std::to_string(rhs) + " for " +
                                 to_string(params));
        }
    }
    return params;
}

Spectrum spectrum(const SrgParams& params) {
    const std::int64_t d = params.discriminant();
    const Rational half(1, 2);
    const Rational mid = Rational(static_cast<long>(params.a - params.c)) * half;
    return Spectrum{
        QuadNum(Rational(static_cast<long>(params.p)), Rational(0), d),
        QuadNum(mid, half, d),
        QuadNum(mid, -half, d),
        d,
    };
}

BasisCoords operator+(const BasisCoords& lhs, const BasisCoords& rhs) {
    return {lhs.x + rhs.x, lhs.y + rhs.y, lhs.z + rhs.z};
}

BasisCoords idempotent_coords(const SrgParams& params, int i) {
    const Spectrum sp = spectrum(params);
    const QuadNum n(params.n);
    const QuadNum& p = sp.p;
    const QuadNum& r = sp.r;
    const QuadNum& s = sp.s;
    const QuadNum scale = n * (r - s);
    switch (i) {
        case 1: {
            const QuadNum e(Rational(1, static_cast<long>(params.n)), Rational(0), sp.d);
            return {e, e, e};
        }
        case 2:
            return {(-s * n + s - p) / scale, (n + s - p) / scale, (s - p) / scale};
        case 3:
            return {(r * n + p - r) / scale, (-n + p - r) / scale, (p - r) / scale};
        default:
            throw IndexOutOfRange("idempotent index must be 1, 2 or 3, got " + std::to_string(i));
    }
}

BasisCoords sum_idempotent_coords(const SrgParams& params, int u, int v) {
    if (u < 1 || v > 3 || u >= v) {
        throw IndexOutOfRange("need 1 <= u < v <= 3, got u=" + std::to_string(u) +
                              " v=" + std::to_string(v));
    }
    return idempotent_coords(params, u) + idempotent_coords(params, v);
}

AbsPowerCoords abs_power_coords(const SrgParams& params, double x) {
    const Spectrum sp = spectrum(params);
    const double p = static_cast<double>(params.p);
    const double r = sp.r.to_double();
    const double abs_s = -sp.s.to_double();
    const double gap = r + abs_s;  // r - s
    const double rx = std::pow(r, x);
    const double sx = std::pow(abs_s, x);
    const double pc = static_cast<double>(params.p - params.c);
    AbsPowerCoords out;
    out.x = x;
    out.alpha = pc * (std::pow(r, x - 1.0) + std::pow(abs_s, x - 1.0)) / gap;
    out.beta = -(sx - rx) / gap;
    out.gamma = std::pow(p, x) - rx + (p - r) * (sx - rx) / gap;
    return out;
}

std::array<QuadNum, 3> power_coords(const SrgParams& params, unsigned k) {
    const Spectrum sp = spectrum(params);
    const QuadNum rk = pow(sp.r, k);
    const QuadNum sk = pow(sp.s, k);
    const QuadNum pk = pow(sp.p, k);
    // r^k = alpha + r beta, s^k = alpha + s beta, p^k = alpha + p beta + gamma.
    const QuadNum beta = (rk - sk) / (sp.r - sp.s);
    const QuadNum alpha = rk - sp.r * beta;
    const QuadNum gamma = pk - alpha - sp.p * beta;
    return {alpha, beta, gamma};
}

Multiplicities multiplicities(const SrgParams& params) {
    const Spectrum sp = spectrum(params);
    const QuadNum n1(params.n - 1);
    Multiplicities m;
    m.m_r = (n1 * -sp.s - sp.p) / (sp.r - sp.s);
    m.m_s = n1 - m.m_r;
    m.integral = m.m_r.is_integer() && m.m_s.is_integer() && m.m_r.sign() != Sign::negative &&
                 m.m_s.sign() != Sign::negative;
    return m;
}

}  // namespace srg
