#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace srg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when two numbers with distinct radicals are combined.
class MixedDiscriminant : public std::invalid_argument {
public:
    MixedDiscriminant(std::int64_t lhs, std::int64_t rhs);
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

/*
 * Exact element u + v*sqrt(d) of the real quadratic field Q(sqrt(d)).
 *
 * Invariants:
 *   - u, v are canonical GMP rationals (lowest terms, positive denominator);
 *   - d >= 0 is the discriminant context shared by a computation;
 *   - if d is a perfect square then v == 0 (the radical is folded into u).
 *
 * Two numbers may be combined when their d agree or when at least one of
 * them is rational (v == 0); the result carries the radical operand's d.
 */
class QuadNum {
public:
    QuadNum() = default;
    QuadNum(std::int64_t value) : u_(static_cast<long>(value)) {}  // NOLINT: implicit by intent
    QuadNum(Rational value) : u_(std::move(value)) { u_.canonicalize(); }  // NOLINT
    QuadNum(Rational u, Rational v, std::int64_t d);

    /// sqrt(d) as a field element.
    static QuadNum sqrt_of(std::int64_t d);

    const Rational& rational_part() const { return u_; }
    const Rational& radical_part() const { return v_; }
    std::int64_t discriminant() const { return d_; }
    bool is_rational() const { return sgn(v_) == 0; }
    bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
    /// True when rational with denominator 1.
    bool is_integer() const;

    /// Galois conjugate u - v*sqrt(d).
    QuadNum conjugate() const;
    /// Field norm u^2 - d v^2 (always rational).
    Rational norm() const;

    Sign sign() const;
    /// Nearest double. Reporting only; exact decisions go through sign().
    double to_double() const;

    /// "u" or "u+v*sqrt(d)" with u, v written as "num/den" (or "num" when integral).
    std::string to_string() const;
    /// Inverse of to_string(). Throws std::invalid_argument on malformed input.
    static QuadNum parse(std::string_view text);

    QuadNum operator-() const;
    QuadNum& operator+=(const QuadNum& rhs);
    QuadNum& operator-=(const QuadNum& rhs);
    QuadNum& operator*=(const QuadNum& rhs);
    /// Throws std::domain_error on division by zero.
    QuadNum& operator/=(const QuadNum& rhs);

    friend QuadNum operator+(QuadNum lhs, const QuadNum& rhs) { return lhs += rhs; }
    friend QuadNum operator-(QuadNum lhs, const QuadNum& rhs) { return lhs -= rhs; }
    friend QuadNum operator*(QuadNum lhs, const QuadNum& rhs) { return lhs *= rhs; }
    friend QuadNum operator/(QuadNum lhs, const QuadNum& rhs) { return lhs /= rhs; }

    /// Value equality; the discriminant only matters when a radical part is present.
    friend bool operator==(const QuadNum& lhs, const QuadNum& rhs);
    friend std::strong_ordering operator<=>(const QuadNum& lhs, const QuadNum& rhs);

private:
    void normalize();
    static std::int64_t joint_discriminant(const QuadNum& a, const QuadNum& b);

    Rational u_{0};
    Rational v_{0};
    std::int64_t d_ = 0;
};

QuadNum pow(QuadNum base, unsigned exponent);
QuadNum abs(const QuadNum& x);

std::ostream& operator<<(std::ostream& os, const QuadNum& x);

/// True when d is a square of an integer (d >= 0).
bool is_perfect_square(std::int64_t d);

}  // namespace srg
