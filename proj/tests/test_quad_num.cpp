#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "srg/quad_num.hpp"
#include "srg/srg_core.hpp"
#include "support.hpp"

using srg::QuadNum;
using srg::Rational;
using srg::Sign;

namespace {

QuadNum q(long un, long ud, long vn, long vd, std::int64_t d) {
    return QuadNum(Rational(un, ud), Rational(vn, vd), d);
}

const std::int64_t discriminants[] = {2, 3, 5, 13, 17, 21, 33, 37, 9, 36};

}  // namespace

TEST_CASE("addition examples") {
    CHECK(QuadNum(1) + QuadNum::sqrt_of(5) == q(1, 1, 1, 1, 5));
    CHECK(q(1, 2, 1, 2, 5) + q(1, 2, -1, 2, 5) == QuadNum(1));
    CHECK((q(1, 2, 1, 2, 5) + q(1, 2, -1, 2, 5)).is_rational());

    const auto sp = srg::spectrum(srg::validate_params(5, 2, 0, 1));
    CHECK(sp.r + sp.s == QuadNum(0 - 1));
}

TEST_CASE("multiplication examples") {
    CHECK(QuadNum::sqrt_of(5) * QuadNum::sqrt_of(5) == QuadNum(5));
    const auto sp = srg::spectrum(srg::validate_params(5, 2, 0, 1));
    CHECK(sp.r * sp.s == QuadNum(-1));

    // d = 9 is folded on construction, so any product stays rational.
    const QuadNum three_halves = q(1, 2, 1, 3, 9);
    CHECK(three_halves.is_rational());
    CHECK(three_halves == QuadNum(Rational(3, 2)));
    CHECK((QuadNum(1) * three_halves).is_rational());
}

TEST_CASE("powers") {
    const auto petersen = srg::spectrum(srg::validate_params(10, 3, 0, 1));
    CHECK(pow(petersen.r, 2) == QuadNum(1));

    const QuadNum golden = q(-1, 2, 1, 2, 5);
    CHECK(pow(golden, 2) == q(3, 2, -1, 2, 5));
    CHECK(pow(golden, 2) == golden * golden);
    CHECK(pow(golden, 0) == QuadNum(1));
    CHECK(pow(QuadNum(0), 0) == QuadNum(1));
}

TEST_CASE("sign") {
    CHECK(q(-1, 2, 1, 2, 5).sign() == Sign::positive);
    CHECK(q(-1, 2, -1, 2, 5).sign() == Sign::negative);
    CHECK(q(0, 1, 0, 1, 13).sign() == Sign::zero);
    // Near-cancellation: 985^2 * 2 = 1393^2 + 1, so 985 sqrt(2) - 1393 ~ 3.6e-4.
    CHECK(q(-1393, 1, 985, 1, 2).sign() == Sign::positive);
    CHECK(q(1393, 1, -985, 1, 2).sign() == Sign::negative);
}

TEST_CASE("to_double") {
    CHECK(q(-1, 2, 1, 2, 5).to_double() == doctest::Approx(0.6180339887).epsilon(1e-10));
    CHECK(q(1, 1, 0, 1, 9).to_double() == 1.0);
    CHECK(q(-1, 2, -1, 2, 13).to_double() == doctest::Approx(-2.3027756377).epsilon(1e-10));
    CHECK(QuadNum(Rational(2, 5)).to_double() == 0.4);
    // Cancellation-safe: relative error stays at double precision.
    const double tiny = q(1393, 1, -985, 1, 2).to_double();
    CHECK(tiny == doctest::Approx(-1.0 / (1393.0 + 985.0 * std::sqrt(2.0))).epsilon(1e-14));
}

TEST_CASE("mixed discriminants are rejected") {
    CHECK_THROWS_AS(QuadNum::sqrt_of(5) + QuadNum::sqrt_of(13), srg::MixedDiscriminant);
    CHECK_THROWS_AS(QuadNum::sqrt_of(2) * QuadNum::sqrt_of(3), srg::MixedDiscriminant);
    // A rational operand adopts the other's radical.
    CHECK_NOTHROW(QuadNum(3) * QuadNum::sqrt_of(13));
    CHECK_THROWS_AS(QuadNum(1) / QuadNum(0), std::domain_error);
}

TEST_CASE("string round trip") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const QuadNum x = support::random_quad(rng, discriminants[i % 10]);
        CHECK(QuadNum::parse(x.to_string()) == x);
    }
    CHECK(q(-1, 2, 1, 2, 5).to_string() == "-1/2+1/2*sqrt(5)");
    CHECK(QuadNum(7).to_string() == "7");
    CHECK_THROWS_AS(QuadNum::parse("1/2+*sqrt(5)"), std::invalid_argument);
    CHECK_THROWS_AS(QuadNum::parse(""), std::invalid_argument);
}

TEST_CASE("property: float evaluation is additive") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t d = discriminants[i % 10];
        const QuadNum a = support::random_quad(rng, d);
        const QuadNum b = support::random_quad(rng, d);
        const double lhs = (a + b).to_double();
        const double rhs = a.to_double() + b.to_double();
        const double scale = std::max({std::abs(a.to_double()), std::abs(b.to_double()), 1.0});
        CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
    }
}

TEST_CASE("property: exact sign agrees with float sign") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 5000; ++i) {
        const QuadNum a = support::random_quad(rng, discriminants[i % 10], 20);
        const double f = a.to_double();
        if (std::abs(f) <= 1e-9) continue;
        CHECK(a.sign() == (f > 0 ? Sign::positive : Sign::negative));
    }
}

TEST_CASE("property: pow equals repeated multiplication") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const QuadNum a = support::random_quad(rng, discriminants[i % 10], 9);
        QuadNum acc(1);
        for (unsigned k = 0; k <= 8; ++k) {
            CHECK(pow(a, k) == acc);
            acc *= a;
        }
    }
}

TEST_CASE("property: conjugation is a ring homomorphism") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t d = discriminants[i % 8];
        const QuadNum a = support::random_quad(rng, d);
        const QuadNum b = support::random_quad(rng, d);
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a - b).conjugate() == a.conjugate() - b.conjugate());
        CHECK(QuadNum(a.norm()) == a * a.conjugate());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("ordering matches float ordering") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const std::int64_t d = discriminants[i % 8];
        const QuadNum a = support::random_quad(rng, d, 20);
        const QuadNum b = support::random_quad(rng, d, 20);
        if (std::abs(a.to_double() - b.to_double()) < 1e-9) continue;
        CHECK((a < b) == (a.to_double() < b.to_double()));
    }
}
