#include "srg/quad_num.hpp"

#include <cmath>
#include <ostream>

namespace srg {

MixedDiscriminant::MixedDiscriminant(std::int64_t lhs, std::int64_t rhs)
    : std::invalid_argument("cannot combine sqrt(" + std::to_string(lhs) + ") with sqrt(" +
                            std::to_string(rhs) + ")") {}

bool is_perfect_square(std::int64_t d) {
    if (d < 0) return false;
    const Integer z(static_cast<long>(d));
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

QuadNum::QuadNum(Rational u, Rational v, std::int64_t d) : u_(std::move(u)), v_(std::move(v)), d_(d) {
    if (d < 0) throw std::invalid_argument("QuadNum: negative discriminant");
    u_.canonicalize();
    v_.canonicalize();
    normalize();
}

QuadNum QuadNum::sqrt_of(std::int64_t d) { return QuadNum(Rational(0), Rational(1), d); }

void QuadNum::normalize() {
    if (sgn(v_) == 0 || !is_perfect_square(d_)) return;
    Integer root;
    const Integer z(static_cast<long>(d_));
    mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
    u_ += v_ * Rational(root);
    v_ = 0;
}

bool QuadNum::is_integer() const { return is_rational() && u_.get_den() == 1; }

QuadNum QuadNum::conjugate() const {
    QuadNum out = *this;
    out.v_ = -out.v_;
    return out;
}

Rational QuadNum::norm() const {
    Rational n = u_ * u_ - v_ * v_ * Rational(static_cast<long>(d_));
    n.canonicalize();
    return n;
}

Sign QuadNum::sign() const {
    const int su = sgn(u_);
    const int sv = sgn(v_);
    if (sv == 0) return static_cast<Sign>(su);
    if (su == 0 || su == sv) return static_cast<Sign>(sv);
    // Opposite signs: the larger magnitude wins; compare u^2 with v^2 d.
    const int cmp_mag = cmp(u_ * u_, v_ * v_ * Rational(static_cast<long>(d_)));
    if (cmp_mag == 0) return Sign::zero;
    return static_cast<Sign>(cmp_mag > 0 ? su : sv);
}

namespace {

std::string rational_string(const Rational& q) { return q.get_str(); }

// mpq get_d truncates; refine with the exact remainder to round to nearest.
double nearest_double(const Rational& q) {
    const mpf_class wide(q, 256);
    const double head = wide.get_d();
    const mpf_class rest = wide - mpf_class(head, 256);
    return head + rest.get_d();
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("QuadNum::parse: empty rational");
    Rational q;
    if (q.set_str(std::string(text), 10) != 0) {
        throw std::invalid_argument("QuadNum::parse: bad rational '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("QuadNum::parse: zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace

double QuadNum::to_double() const {
    if (is_rational()) return nearest_double(u_);
    const double root = std::sqrt(static_cast<double>(d_));
    const double u = nearest_double(u_);
    const double v = nearest_double(v_);
    if (sgn(u_) * sgn(v_) >= 0) return u + v * root;
    // Opposite signs: avoid cancellation via u + v√d = norm / (u - v√d).
    return nearest_double(norm()) / (u - v * root);
}


std::string QuadNum::to_string() const {
    if (is_rational()) return rational_string(u_);
    std::string out = rational_string(u_);
    if (sgn(v_) > 0) out += '+';
    out += rational_string(v_);
    out += "*sqrt(" + std::to_string(d_) + ")";
    return out;
}

QuadNum QuadNum::parse(std::string_view text) {
    const auto star = text.find("*sqrt(");
    if (star == std::string_view::npos) return QuadNum(parse_rational(text));
    if (text.back() != ')') throw std::invalid_argument("QuadNum::parse: missing ')'");
    const std::string_view radicand = text.substr(star + 6, text.size() - star - 7);
    const std::int64_t d = std::stoll(std::string(radicand));
    const std::string_view head = text.substr(0, star);
    // Split at the sign that starts the radical coefficient (never position 0).
    const auto split = head.find_last_of("+-");
    if (split == std::string_view::npos || split == 0) {
        throw std::invalid_argument("QuadNum::parse: missing rational part");
    }
    const Rational u = parse_rational(head.substr(0, split));
    std::string_view vtext = head.substr(split);
    if (vtext.front() == '+') vtext.remove_prefix(1);
    return QuadNum(u, parse_rational(vtext), d);
}

std::int64_t QuadNum::joint_discriminant(const QuadNum& a, const QuadNum& b) {
    if (a.d_ == b.d_) return a.d_;
    const bool ra = a.is_rational();
    const bool rb = b.is_rational();
    if (!ra && !rb) throw MixedDiscriminant(a.d_, b.d_);
    if (!ra) return a.d_;
    if (!rb) return b.d_;
    return a.d_ != 0 ? a.d_ : b.d_;
}

QuadNum QuadNum::operator-() const {
    QuadNum out = *this;
    out.u_ = -out.u_;
    out.v_ = -out.v_;
    return out;
}

QuadNum& QuadNum::operator+=(const QuadNum& rhs) {
    d_ = joint_discriminant(*this, rhs);
    u_ += rhs.u_;
    v_ += rhs.v_;
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& rhs) {
    d_ = joint_discriminant(*this, rhs);
    u_ -= rhs.u_;
    v_ -= rhs.v_;
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& rhs) {
    const std::int64_t d = joint_discriminant(*this, rhs);
    Rational u = u_ * rhs.u_ + v_ * rhs.v_ * Rational(static_cast<long>(d));
    Rational v = u_ * rhs.v_ + v_ * rhs.u_;
    u_ = std::move(u);
    v_ = std::move(v);
    d_ = d;
    return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& rhs) {
    if (rhs.is_zero()) throw std::domain_error("QuadNum: division by zero");
    if (rhs.is_rational()) {
        d_ = joint_discriminant(*this, rhs);
        u_ /= rhs.u_;
        v_ /= rhs.u_;
        return *this;
    }
    const Rational n = rhs.norm();
    *this *= rhs.conjugate();
    u_ /= n;
    v_ /= n;
    return *this;
}

bool operator==(const QuadNum& lhs, const QuadNum& rhs) {
    if (lhs.u_ != rhs.u_ || lhs.v_ != rhs.v_) return false;
    return lhs.is_rational() || lhs.d_ == rhs.d_;
}

std::strong_ordering operator<=>(const QuadNum& lhs, const QuadNum& rhs) {
    switch ((lhs - rhs).sign()) {
        case Sign::negative: return std::strong_ordering::less;
        case Sign::zero: return std::strong_ordering::equal;
        case Sign::positive: break;
    }
    return std::strong_ordering::greater;
}

QuadNum pow(QuadNum base, unsigned exponent) {
    QuadNum result(Rational(1), Rational(0), base.discriminant());
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

QuadNum abs(const QuadNum& x) { return x.sign() == Sign::negative ? -x : x; }

std::ostream& operator<<(std::ostream& os, const QuadNum& x) { return os << x.to_string(); }

}  // namespace srg
