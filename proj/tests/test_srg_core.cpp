#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "srg/krein.hpp"
#include "srg/oracle/jordan_oracle.hpp"
#include "srg/srg_core.hpp"
#include "support.hpp"

using namespace srg;
using oracle::DenseMatrix;

namespace {

QuadNum rat(long num, long den = 1) { return QuadNum(Rational(num, den)); }

BasisCoords coords(QuadNum x, QuadNum y, QuadNum z) { return {std::move(x), std::move(y), std::move(z)}; }

// Distinct eigenvalues (clustered at 1e-8) with their counts, ascending.
std::vector<std::pair<double, int>> eigen_clusters(const DenseMatrix& m) {
    std::vector<std::pair<double, int>> out;
    for (double v : oracle::symmetric_eigenvalues(m)) {
        if (!out.empty() && std::abs(out.back().first - v) < 1e-8) {
            ++out.back().second;
        } else {
            out.emplace_back(v, 1);
        }
    }
    return out;
}

// (A - aI)(A - bI) / ((t - a)(t - b)): the dense idempotent for eigenvalue t.
DenseMatrix lagrange_idempotent(const DenseMatrix& adj, double t, double a, double b) {
    const auto id = DenseMatrix::identity(adj.order());
    const DenseMatrix left = linear_combination(1.0, adj, -a, id);
    const DenseMatrix right = linear_combination(1.0, adj, -b, id);
    return (1.0 / ((t - a) * (t - b))) * (left * right);
}

// Reads x, y, z off a dense member of span{I, A, J-A-I}: diagonal, an edge, a non-edge.
std::array<double, 3> read_coords(const DenseMatrix& m, const DenseMatrix& adj) {
    std::array<double, 3> out{m(0, 0), 0.0, 0.0};
    for (std::size_t j = 1; j < adj.order(); ++j) {
        (adj(0, j) != 0.0 ? out[1] : out[2]) = m(0, j);
    }
    return out;
}

}  // namespace

TEST_CASE("validate_params") {
    CHECK(validate_params(5, 2, 0, 1) == SrgParams{5, 2, 0, 1});
    CHECK(validate_params(10, 3, 0, 1) == SrgParams{10, 3, 0, 1});

    try {
        validate_params(10, 3, 0, 2);
        FAIL("expected a counting identity violation");
    } catch (const ParamError& e) {
        CHECK(e.kind() == ParamError::Kind::counting_identity_violation);
    }
    for (auto [n, p, a, c] : {std::array<long, 4>{10, 3, 0, 0}, {10, 3, 0, 3}, {10, 9, 0, 1}, {10, 3, -1, 1}}) {
        try {
            validate_params(n, p, a, c);
            FAIL("expected a range violation");
        } catch (const ParamError& e) {
            CHECK(e.kind() == ParamError::Kind::range_violation);
        }
    }
    CHECK_NOTHROW(validate_params(10, 3, 0, 2, ValidationOptions{false}));
}

TEST_CASE("spectrum against dense eigenvalues") {
    for (const char* name : {"c5", "petersen", "lattice-3", "triangular-5", "paley-13", "paley-17"}) {
        CAPTURE(name);
        const auto g = oracle::build_graph(name);
        const Spectrum sp = spectrum(g.params);
        const auto clusters = eigen_clusters(g.adjacency);
        REQUIRE(clusters.size() == 3);
        CHECK(clusters[0].first == doctest::Approx(sp.s.to_double()).epsilon(1e-12));
        CHECK(clusters[1].first == doctest::Approx(sp.r.to_double()).epsilon(1e-12));
        CHECK(clusters[2].first == doctest::Approx(static_cast<double>(g.params.p)).epsilon(1e-12));

        const Multiplicities m = multiplicities(g.params);
        CHECK(m.integral);
        CHECK(m.m_s == QuadNum(clusters[0].second));
        CHECK(m.m_r == QuadNum(clusters[1].second));
        CHECK(clusters[2].second == 1);
    }
}

TEST_CASE("spectrum examples") {
    const Spectrum pet = spectrum(validate_params(10, 3, 0, 1));
    CHECK(pet.r == rat(1));
    CHECK(pet.s == rat(-2));
    CHECK(pet.r.is_rational());
    CHECK(pet.d == 9);

    const Spectrum c5 = spectrum(validate_params(5, 2, 0, 1));
    CHECK(c5.r == QuadNum(Rational(-1, 2), Rational(1, 2), 5));
    CHECK(c5.s == QuadNum(Rational(-1, 2), Rational(-1, 2), 5));

    const Spectrum p13 = spectrum(validate_params(13, 6, 2, 3));
    CHECK(p13.r == QuadNum(Rational(-1, 2), Rational(1, 2), 13));
    CHECK(p13.s == QuadNum(Rational(-1, 2), Rational(-1, 2), 13));
}

TEST_CASE("idempotent coordinates") {
    const SrgParams pet = validate_params(10, 3, 0, 1);
    CHECK(idempotent_coords(pet, 1) == coords(rat(1, 10), rat(1, 10), rat(1, 10)));
    CHECK(idempotent_coords(pet, 2) == coords(rat(1, 2), rat(1, 6), rat(-1, 6)));
    CHECK(idempotent_coords(pet, 3) == coords(rat(2, 5), rat(-4, 15), rat(1, 15)));
    CHECK_THROWS_AS(idempotent_coords(pet, 0), IndexOutOfRange);
    CHECK_THROWS_AS(idempotent_coords(pet, 4), IndexOutOfRange);

    CHECK(sum_idempotent_coords(pet, 2, 3) == coords(rat(9, 10), rat(-1, 10), rat(-1, 10)));
    CHECK(sum_idempotent_coords(pet, 1, 2) == coords(rat(3, 5), rat(4, 15), rat(-1, 15)));
    CHECK(sum_idempotent_coords(pet, 1, 2) + idempotent_coords(pet, 3) == coords(rat(1), rat(0), rat(0)));
    CHECK_THROWS_AS(sum_idempotent_coords(pet, 2, 2), IndexOutOfRange);
    CHECK_THROWS_AS(sum_idempotent_coords(pet, 3, 1), IndexOutOfRange);
}

TEST_CASE("idempotent coordinates against dense Lagrange polynomials") {
    for (const char* name : {"c5", "petersen", "lattice-3", "triangular-5", "paley-13"}) {
        CAPTURE(name);
        const auto g = oracle::build_graph(name);
        const Spectrum sp = spectrum(g.params);
        const double p = static_cast<double>(g.params.p), r = sp.r.to_double(), s = sp.s.to_double();
        const DenseMatrix dense[3] = {lagrange_idempotent(g.adjacency, p, r, s),
                                      lagrange_idempotent(g.adjacency, r, p, s),
                                      lagrange_idempotent(g.adjacency, s, p, r)};
        for (int i = 1; i <= 3; ++i) {
            const BasisCoords c = idempotent_coords(g.params, i);
            const auto got = read_coords(dense[i - 1], g.adjacency);
            CHECK(got[0] == doctest::Approx(c.x.to_double()).epsilon(1e-12));
            CHECK(got[1] == doctest::Approx(c.y.to_double()).epsilon(1e-12));
            CHECK(got[2] == doctest::Approx(c.z.to_double()).epsilon(1e-12));
            CHECK(max_abs_diff(dense[i - 1], oracle::expand_coords(c, g.adjacency)) < 1e-12);
        }
    }
}

TEST_CASE("abs_power_coords examples") {
    const SrgParams pet = validate_params(10, 3, 0, 1);
    const AbsPowerCoords zero = abs_power_coords(pet, 0.0);
    CHECK(zero.alpha == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(zero.beta) < 1e-14);
    CHECK(std::abs(zero.gamma) < 1e-14);

    const AbsPowerCoords two = abs_power_coords(pet, 2.0);
    CHECK(two.alpha == doctest::Approx(2.0));
    CHECK(two.beta == doctest::Approx(-1.0));
    CHECK(two.gamma == doctest::Approx(10.0));

    const AbsPowerCoords one = abs_power_coords(pet, 1.0);
    CHECK(one.alpha == doctest::Approx(4.0 / 3.0));
    CHECK(one.beta == doctest::Approx(-1.0 / 3.0));
    CHECK(one.gamma == doctest::Approx(8.0 / 3.0));
}

TEST_CASE("abs_power_coords against dense |A|^x") {
    for (const char* name : {"c5", "petersen", "paley-13"}) {
        CAPTURE(name);
        const auto g = oracle::build_graph(name);
        const Spectrum sp = spectrum(g.params);
        const double p = static_cast<double>(g.params.p), r = sp.r.to_double(), s = sp.s.to_double();
        const DenseMatrix e1 = lagrange_idempotent(g.adjacency, p, r, s);
        const DenseMatrix e2 = lagrange_idempotent(g.adjacency, r, p, s);
        const DenseMatrix e3 = lagrange_idempotent(g.adjacency, s, p, r);
        for (double x : {0.5, 1.0, 1.5, 3.0}) {
            CAPTURE(x);
            const DenseMatrix target = std::pow(p, x) * e1 + std::pow(r, x) * e2 + std::pow(-s, x) * e3;
            const AbsPowerCoords c = abs_power_coords(g.params, x);
            const DenseMatrix got = c.alpha * DenseMatrix::identity(g.adjacency.order()) + c.beta * g.adjacency +
                                    c.gamma * e1;
            CHECK(max_abs_diff(target, got) < 1e-9);
        }
    }
}

TEST_CASE("power_coords reproduce A^k densely") {
    for (const char* name : {"c5", "petersen", "lattice-3", "paley-13"}) {
        CAPTURE(name);
        const auto g = oracle::build_graph(name);
        const std::size_t n = g.adjacency.order();
        DenseMatrix ak = DenseMatrix::identity(n);
        for (unsigned k = 0; k <= 6; ++k) {
            const auto c = power_coords(g.params, k);
            const DenseMatrix got = c[0].to_double() * DenseMatrix::identity(n) + c[1].to_double() * g.adjacency +
                                    (c[2].to_double() / static_cast<double>(n)) * DenseMatrix::ones(n);
            CHECK(max_abs_diff(ak, got) < 1e-9);
            ak = ak * g.adjacency;
        }
    }
}

TEST_CASE("multiplicities examples") {
    const Multiplicities pet = multiplicities(validate_params(10, 3, 0, 1));
    CHECK(pet.m_r == rat(5));
    CHECK(pet.m_s == rat(4));
    const Multiplicities c5 = multiplicities(validate_params(5, 2, 0, 1));
    CHECK(c5.m_r == rat(2));
    CHECK(c5.m_s == rat(2));
    const Multiplicities p13 = multiplicities(validate_params(13, 6, 2, 3));
    CHECK(p13.m_r == rat(6));
    CHECK(p13.m_s == rat(6));
    // (28,9,0,4) passes the counting identity; m_r = 21, m_s = 6.
    const Multiplicities w = multiplicities(validate_params(28, 9, 0, 4));
    CHECK(w.integral);
    CHECK(w.m_r == rat(21));
}

TEST_CASE("property: structural identities on every tuple up to n = 60") {
    const auto tuples = support::valid_tuples(60);
    REQUIRE(tuples.size() > 50);
    const BasisCoords unit = coords(rat(1), rat(0), rat(0));
    for (const SrgParams& params : tuples) {
        CAPTURE(to_string(params));
        const Spectrum sp = spectrum(params);
        CHECK(sp.r.sign() == Sign::positive);
        CHECK(sp.s.sign() == Sign::negative);
        CHECK(sp.r + sp.s == QuadNum(params.a - params.c));
        CHECK(sp.r * sp.s == QuadNum(params.c - params.p));

        BasisCoords total = idempotent_coords(params, 1) + idempotent_coords(params, 2) + idempotent_coords(params, 3);
        CHECK(total == unit);

        for (int i = 1; i <= 3; ++i) {
            const KreinTriple e = eigen_project(idempotent_coords(params, i), params);
            for (int j = 1; j <= 3; ++j) CHECK(e[j] == QuadNum(i == j ? 1 : 0));
        }

        const Multiplicities m = multiplicities(params);
        CHECK(QuadNum(1) + m.m_r + m.m_s == QuadNum(params.n));

        const AbsPowerCoords z = abs_power_coords(params, 0.0);
        CHECK(std::abs(z.alpha - 1.0) < 1e-12);
        CHECK(std::abs(z.beta) < 1e-12);
        CHECK(std::abs(z.gamma) < 1e-12);
    }
}
