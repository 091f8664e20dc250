#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "srg/oracle/jordan_oracle.hpp"

using namespace srg;
using namespace srg::oracle;

namespace {

DenseMatrix diag(std::initializer_list<double> d) {
    DenseMatrix m(d.size());
    std::size_t i = 0;
    for (double v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

// A^2 - (p-c)I - (a-c)A - cJ computed entry by entry from neighbour counts.
bool regular_by_counting(const DenseMatrix& a, const SrgParams& pr) {
    const std::size_t n = a.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long common = 0;
            for (std::size_t k = 0; k < n; ++k) common += (a(i, k) != 0.0 && a(k, j) != 0.0);
            const long expect = i == j ? pr.p : a(i, j) != 0.0 ? pr.a : pr.c;
            if (common != expect) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("catalog graphs") {
    const auto names = catalog_names(101);
    CHECK(names.size() == 4 + 12);  // primes 5..101 that are 1 mod 4
    for (const auto& name : names) {
        CAPTURE(name);
        const auto g = build_graph(name);
        CHECK(g.name == name);
        CHECK(static_cast<std::int64_t>(g.adjacency.order()) == g.params.n);
        CHECK(is_symmetric(g.adjacency));
        CHECK(regularity_residual(g.adjacency, g.params) == 0);
        CHECK(infer_params(g.adjacency) == g.params);
        if (g.params.n <= 41) CHECK(regular_by_counting(g.adjacency, g.params));
    }
    CHECK(build_graph("c5").params == SrgParams{5, 2, 0, 1});
    CHECK(build_graph("petersen").params == SrgParams{10, 3, 0, 1});
    CHECK(build_graph("paley-13").params == SrgParams{13, 6, 2, 3});
    CHECK(build_graph("lattice-3").params == SrgParams{9, 4, 1, 2});
    CHECK(build_graph("triangular-5").params == SrgParams{10, 6, 3, 4});

    const auto c5 = build_graph("c5");
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(c5.adjacency(i, (i + 1) % 5) == 1.0);
        CHECK(c5.adjacency(i, (i + 2) % 5) == 0.0);
    }
}

TEST_CASE("catalog errors") {
    CHECK_THROWS_AS(build_graph("nosuchgraph"), UnknownGraph);
    CHECK_THROWS_AS(build_graph("paley-7"), BadPaleyModulus);
    CHECK_THROWS_AS(build_graph("paley-9"), BadPaleyModulus);
    CHECK_THROWS_AS(build_graph("paley-109"), BadPaleyModulus);
    CHECK_THROWS_AS(build_graph("paley-x"), BadPaleyModulus);
}

TEST_CASE("adjacency import") {
    std::istringstream in("5\n0 1 0 0 1\n1 0 1 0 0\n0 1 0 1 0\n0 0 1 0 1\n1 0 0 1 0\n");
    const DenseMatrix a = read_adjacency(in);
    CHECK(max_abs_diff(a, build_graph("c5").adjacency) == 0.0);
    CHECK(infer_params(a) == SrgParams{5, 2, 0, 1});

    std::istringstream bad("3\n0 1 2\n1 0 1\n2 1 0\n");
    CHECK_THROWS_AS(read_adjacency(bad), std::invalid_argument);
    std::istringstream path("3\n0 1 0\n1 0 1\n0 1 0\n");
    CHECK_THROWS_AS(infer_params(read_adjacency(path)), std::invalid_argument);
}

TEST_CASE("frames") {
    const auto c5 = build_graph("c5");
    const Frame f5 = idempotents_from_adjacency(c5.adjacency, c5.params);
    for (double v : f5.e1.values()) CHECK(v == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(verify_frame(f5.e1, f5.e2, f5.e3, 1e-9).pass());

    const auto pet = build_graph("petersen");
    const Frame fp = idempotents_from_adjacency(pet.adjacency, pet.params);
    for (std::size_t i = 0; i < 10; ++i) CHECK(fp.e2(i, i) == doctest::Approx(0.5).epsilon(1e-12));
    const FrameReport ok = verify_frame(fp.e1, fp.e2, fp.e3, 1e-9);
    CHECK(ok.pass());
    CHECK(ok.max_residual() < 1e-12);

    DenseMatrix bumped = fp.e2;
    bumped(3, 4) += 1e-3;
    const FrameReport bad = verify_frame(fp.e1, bumped, fp.e3, 1e-9);
    CHECK_FALSE(bad.pass());
    CHECK(bad.max_residual() > 1e-4);
    CHECK(bad.max_residual() < 1e-2);

    for (const auto& name : catalog_names(29)) {
        CAPTURE(name);
        const auto g = build_graph(name);
        const Frame fr = idempotents_from_adjacency(g.adjacency, g.params);
        CHECK(max_abs_diff(fr.e1 + fr.e2 + fr.e3, DenseMatrix::identity(g.adjacency.order())) < 1e-12);
        const auto m = frame_multiplicities(fr);
        const auto mult = multiplicities(g.params);
        CHECK(m[0] == doctest::Approx(1.0));
        CHECK(m[1] == doctest::Approx(mult.m_r.to_double()));
        CHECK(m[2] == doctest::Approx(mult.m_s.to_double()));
    }
}

TEST_CASE("Kronecker powers") {
    const auto c5 = build_graph("c5");
    const Frame f = idempotents_from_adjacency(c5.adjacency, c5.params);
    const DenseMatrix k2 = kronecker_power(f.e2, 2);
    CHECK(k2.order() == 25);
    CHECK(max_abs_diff(k2 * k2, k2) < 1e-9);
    CHECK(max_abs_diff(kronecker_power(DenseMatrix::identity(3), 4), DenseMatrix::identity(81)) == 0.0);

    const auto pet = build_graph("petersen");
    const Frame fp = idempotents_from_adjacency(pet.adjacency, pet.params);
    const DenseMatrix mixed = kronecker_mixed(fp.e1, 1, fp.e2, 1);
    CHECK(mixed.order() == 100);
    CHECK(max_abs_diff(mixed * mixed, mixed) < 1e-9);

    CHECK_THROWS_AS(kronecker_power(f.e2, 6), SizeCapExceeded);
    CHECK_THROWS_AS(kronecker_power(f.e2, 2, 24), SizeCapExceeded);
    CHECK_THROWS_AS(kronecker_power(f.e2, 0), std::invalid_argument);
}

TEST_CASE("principal submatrices") {
    CHECK(principal_indices(5, 2) == std::vector<std::size_t>{0, 6, 12, 18, 24});
    CHECK(principal_indices(3, 3) == std::vector<std::size_t>{0, 13, 26});
    CHECK(principal_indices(4, 1) == std::vector<std::size_t>{0, 1, 2, 3});

    const auto c5 = build_graph("c5");
    const Frame f = idempotents_from_adjacency(c5.adjacency, c5.params);
    CHECK(principal_submatrix_check(f.e3, 2));
    CHECK(principal_submatrix_check(f.e3, 1));
    CHECK(principal_submatrix_residual(f.e2, 3) < 1e-12);

    const auto pet = build_graph("petersen");
    const Frame fp = idempotents_from_adjacency(pet.adjacency, pet.params);
    CHECK(principal_submatrix_check(fp.e2, 2));
    CHECK(mixed_principal_submatrix_residual(fp.e2, 1, fp.e3, 1) < 1e-12);
    CHECK(mixed_principal_submatrix_residual(fp.e1, 2, fp.e3, 1) < 1e-12);

    // The index rule does not depend on symmetry.
    DenseMatrix m(2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = 4;
    CHECK(principal_submatrix_check(m, 3));
}

TEST_CASE("oracle Krein values") {
    const auto pet = build_graph("petersen");
    const Frame fp = idempotents_from_adjacency(pet.adjacency, pet.params);
    const auto mult = frame_multiplicities(fp);
    const auto q = oracle_krein(fp, mult, spec::JJ{3, 2});
    CHECK(q[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(q[1] == doctest::Approx(2.0 / 9).epsilon(1e-12));
    CHECK(q[2] == doctest::Approx(1.0 / 45).epsilon(1e-12));
    for (unsigned k = 1; k <= 4; ++k) {
        const auto t = oracle_krein(fp, mult, spec::JJ{1, k});
        CHECK(t[0] == doctest::Approx(std::pow(0.1, k - 1)).epsilon(1e-12));
        CHECK(std::abs(t[1]) < 1e-12);
        CHECK(std::abs(t[2]) < 1e-12);
    }
    for (const auto& name : catalog_names(13)) {
        const auto g = build_graph(name);
        const Frame fr = idempotents_from_adjacency(g.adjacency, g.params);
        const auto m = frame_multiplicities(fr);
        for (int j = 1; j <= 3; ++j) {
            const auto t = oracle_krein(fr, m, spec::JJ{j, 1});
            for (int i = 0; i < 3; ++i) CHECK(std::abs(t[i] - (i + 1 == j ? 1.0 : 0.0)) < 1e-12);
        }
    }
}

TEST_CASE("interlacing") {
    const DenseMatrix d = diag({1, 2, 3});
    const std::size_t ends[] = {0, 2};
    CHECK(interlacing_check(d, ends));
    const std::size_t all[] = {0, 1, 2};
    CHECK(interlacing_check(d, all));

    const auto c5 = build_graph("c5");
    const Frame f = idempotents_from_adjacency(c5.adjacency, c5.params);
    const DenseMatrix big = kronecker_power(f.e2, 2);
    const auto idx = principal_indices(5, 2);
    CHECK(interlacing_check(big, idx));
    const auto ev = symmetric_eigenvalues(principal_submatrix(big, idx));
    CHECK(ev.front() > -1e-12);
    CHECK(ev.back() < 1 + 1e-12);

    const std::size_t twice[] = {1, 1};
    CHECK_THROWS_AS(interlacing_check(d, twice), std::invalid_argument);
}

TEST_CASE("full suite on the catalog") {
    for (const char* name : {"c5", "petersen", "lattice-3", "triangular-5", "paley-13"}) {
        CAPTURE(name);
        const SuiteReport rep = run_oracle_suite(build_graph(name));
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.residual);
            CHECK(c.pass);
        }
        CHECK(rep.pass());
    }
}

TEST_CASE("suite options") {
    SuiteOptions opt;
    opt.kronecker_k = 3;
    const SuiteReport rep = run_oracle_suite(build_graph("c5"), opt);
    bool saw = false;
    for (const auto& c : rep.checks) saw |= c.name == "kronecker.idempotent.E2^3";
    CHECK(saw);
    CHECK(rep.pass());

    opt.kronecker_k = 6;
    CHECK_THROWS_AS(run_oracle_suite(build_graph("c5"), opt), SizeCapExceeded);
}
