#include "srg/oracle/jordan_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <istream>
#include <limits>
#include <utility>

namespace srg::oracle {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

DenseMatrix graph_from_rule(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& adjacent) {
    DenseMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && adjacent(i, j)) a(i, j) = 1.0;
    return a;
}

std::vector<std::pair<int, int>> two_subsets(int ground) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < ground; ++x)
        for (int y = x + 1; y < ground; ++y) out.emplace_back(x, y);
    return out;
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

GraphCatalogEntry paley(std::string_view name, std::string_view modulus) {
    int q = 0;
    try {
        std::size_t used = 0;
        q = std::stoi(std::string(modulus), &used);
        if (used != modulus.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw BadPaleyModulus("paley modulus is not an integer: '" + std::string(modulus) + "'");
    }
    if (!is_prime(q) || q % 4 != 1 || q > 101) {
        throw BadPaleyModulus("paley-q needs a prime q = 1 (mod 4) with q <= 101, got " + std::to_string(q));
    }
    std::vector<bool> residue(static_cast<std::size_t>(q), false);
    for (int x = 1; x < q; ++x) residue[static_cast<std::size_t>(x * x % q)] = true;
    const auto uq = static_cast<std::size_t>(q);
    DenseMatrix a = graph_from_rule(uq, [&](std::size_t i, std::size_t j) { return residue[(i + uq - j) % uq]; });
    return {std::string(name), SrgParams{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4}, std::move(a)};
}

std::size_t checked_power(std::size_t order, unsigned k, std::size_t cap) {
    std::size_t size = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (order != 0 && size > cap / order) {
            throw SizeCapExceeded("Kronecker power of order " + std::to_string(order) + "^" + std::to_string(k) +
                                  " exceeds the size cap " + std::to_string(cap));
        }
        size *= order;
    }
    if (size > cap) {
        throw SizeCapExceeded("Kronecker power of order " + std::to_string(size) + " exceeds the size cap " +
                              std::to_string(cap));
    }
    return size;
}

}  // namespace

GraphCatalogEntry build_graph(std::string_view name) {
    if (name == "c5") {
        return {"c5", SrgParams{5, 2, 0, 1},
                graph_from_rule(5, [](std::size_t i, std::size_t j) { return (i + 1) % 5 == j || (j + 1) % 5 == i; })};
    }
    if (name == "petersen") {
        const auto sets = two_subsets(5);
        return {"petersen", SrgParams{10, 3, 0, 1}, graph_from_rule(sets.size(), [&](std::size_t i, std::size_t j) {
                    const auto [a, b] = sets[i];
                    const auto [c, d] = sets[j];
                    return a != c && a != d && b != c && b != d;
                })};
    }
    if (name == "triangular-5") {
        const auto sets = two_subsets(5);
        return {"triangular-5", SrgParams{10, 6, 3, 4},
                graph_from_rule(sets.size(), [&](std::size_t i, std::size_t j) {
                    const auto [a, b] = sets[i];
                    const auto [c, d] = sets[j];
                    return a == c || a == d || b == c || b == d;
                })};
    }
    if (name == "lattice-3") {
        return {"lattice-3", SrgParams{9, 4, 1, 2}, graph_from_rule(9, [](std::size_t i, std::size_t j) {
                    return (i / 3 == j / 3) != (i % 3 == j % 3);
                })};
    }
    if (name.starts_with("paley-")) return paley(name, name.substr(6));
    throw UnknownGraph("unknown graph '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names(int paley_max) {
    std::vector<std::string> out{"c5", "petersen", "lattice-3", "triangular-5"};
    for (int q = 5; q <= std::min(paley_max, 101); ++q)
        if (is_prime(q) && q % 4 == 1) out.push_back("paley-" + std::to_string(q));
    return out;
}

DenseMatrix read_adjacency(std::istream& in) {
    long long n = 0;
    if (!(in >> n) || n <= 0) throw std::invalid_argument("adjacency text: expected a positive order");
    DenseMatrix a(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < a.order(); ++i) {
        for (std::size_t j = 0; j < a.order(); ++j) {
            int v = -1;
            if (!(in >> v) || (v != 0 && v != 1)) {
                throw std::invalid_argument("adjacency text: expected 0/1 entry at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            }
            a(i, j) = v;
        }
    }
    return a;
}

SrgParams infer_params(const DenseMatrix& adj) {
    const std::size_t n = adj.order();
    if (n < 2) throw std::invalid_argument("graph too small");
    for (std::size_t i = 0; i < n; ++i) {
        if (adj(i, i) != 0.0) throw std::invalid_argument("adjacency has a nonzero diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            if (adj(i, j) != adj(j, i)) throw std::invalid_argument("adjacency is not symmetric");
        }
    }
    const auto degree = [&](std::size_t i) {
        long long d = 0;
        for (std::size_t j = 0; j < n; ++j) d += adj(i, j) != 0.0;
        return d;
    };
    const long long p = degree(0);
    long long a = -1;
    long long c = -1;
    for (std::size_t i = 0; i < n; ++i) {
        if (degree(i) != p) throw std::invalid_argument("graph is not regular");
        for (std::size_t j = i + 1; j < n; ++j) {
            long long common = 0;
            for (std::size_t k = 0; k < n; ++k) common += adj(i, k) != 0.0 && adj(j, k) != 0.0;
            long long& slot = adj(i, j) != 0.0 ? a : c;
            if (slot == -1) slot = common;
            if (slot != common) throw std::invalid_argument("graph is not strongly regular");
        }
    }
    if (a == -1 || c == -1) throw std::invalid_argument("graph is complete or empty");
    return validate_params(static_cast<std::int64_t>(n), p, a, c);
}

long long regularity_residual(const DenseMatrix& adj, const SrgParams& params) {
    const std::size_t n = adj.order();
    std::vector<long long> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = std::llround(adj.values()[i]);
    long long worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long long sq = 0;
            for (std::size_t k = 0; k < n; ++k) sq += a[i * n + k] * a[k * n + j];
            const long long rhs = (i == j ? params.p - params.c : 0) + (params.a - params.c) * a[i * n + j] + params.c;
            worst = std::max(worst, std::llabs(sq - rhs));
        }
    }
    return worst;
}

const DenseMatrix& Frame::operator[](int i) const {
    switch (i) {
        case 1: return e1;
        case 2: return e2;
        case 3: return e3;
        default: throw IndexOutOfRange("frame index out of range: " + std::to_string(i));
    }
}

Frame idempotents_from_adjacency(const DenseMatrix& adj, const SrgParams& params) {
    const Spectrum sp = spectrum(params);
    const double p = sp.p.to_double();
    const double r = sp.r.to_double();
    const double s = sp.s.to_double();
    const std::size_t n = adj.order();
    const DenseMatrix a2 = adj * adj;
    const DenseMatrix id = DenseMatrix::identity(n);
    // (A - x I)(A - y I) / ((lambda - x)(lambda - y))
    const auto projector = [&](double x, double y, double lambda) {
        const DenseMatrix quad = linear_combination(1.0, a2, -(x + y), adj) + (x * y) * id;
        return (1.0 / ((lambda - x) * (lambda - y))) * quad;
    };
    return {projector(r, s, p), projector(p, s, r), projector(p, r, s)};
}

DenseMatrix expand_coords(const BasisCoords& coords, const DenseMatrix& adj) {
    const double x = coords.x.to_double();
    const double y = coords.y.to_double();
    const double z = coords.z.to_double();
    DenseMatrix out(adj.order());
    for (std::size_t i = 0; i < adj.order(); ++i)
        for (std::size_t j = 0; j < adj.order(); ++j) out(i, j) = i == j ? x : (adj(i, j) != 0.0 ? y : z);
    return out;
}

double FrameReport::max_residual() const {
    double m = completeness;
    for (double v : idempotency) m = std::max(m, v);
    for (double v : orthogonality) m = std::max(m, v);
    return std::isnan(m) ? std::numeric_limits<double>::infinity() : m;
}

FrameReport verify_frame(const DenseMatrix& e1, const DenseMatrix& e2, const DenseMatrix& e3, double tol) {
    if (e1.order() != e2.order() || e1.order() != e3.order()) throw std::invalid_argument("frame orders differ");
    const DenseMatrix zero(e1.order());
    FrameReport rep;
    rep.tol = tol;
    const DenseMatrix* es[3] = {&e1, &e2, &e3};
    for (int i = 0; i < 3; ++i) rep.idempotency[i] = max_abs_diff(*es[i] * *es[i], *es[i]);
    rep.orthogonality[0] = max_abs_diff(e1 * e2, zero);
    rep.orthogonality[1] = max_abs_diff(e1 * e3, zero);
    rep.orthogonality[2] = max_abs_diff(e2 * e3, zero);
    rep.completeness = max_abs_diff(e1 + e2 + e3, DenseMatrix::identity(e1.order()));
    return rep;
}

std::size_t size_cap() {
    if (const char* env = std::getenv("SRG_KREIN_SIZE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 4096;
}

DenseMatrix kronecker_power(const DenseMatrix& m, unsigned k, std::size_t cap) {
    if (k == 0) throw std::invalid_argument("kronecker_power: k must be >= 1");
    checked_power(m.order(), k, cap);
    DenseMatrix out = m;
    for (unsigned i = 1; i < k; ++i) out = kronecker(m, out);
    return out;
}

DenseMatrix kronecker_mixed(const DenseMatrix& e, unsigned m, const DenseMatrix& f, unsigned n, std::size_t cap) {
    if (e.order() != f.order()) throw std::invalid_argument("kronecker_mixed: orders differ");
    checked_power(e.order(), m + n, cap);
    return kronecker(kronecker_power(e, m, cap), kronecker_power(f, n, cap));
}

std::vector<std::size_t> principal_indices(std::size_t order, unsigned k) {
    std::size_t step = 0;
    std::size_t power = 1;
    for (unsigned i = 0; i < k; ++i) {
        step += power;
        power *= order;
    }
    std::vector<std::size_t> out(order);
    for (std::size_t i = 0; i < order; ++i) out[i] = i * step;
    return out;
}

double principal_submatrix_residual(const DenseMatrix& m, unsigned k, std::size_t cap) {
    const DenseMatrix big = kronecker_power(m, k, cap);
    const auto idx = principal_indices(m.order(), k);
    return max_abs_diff(hadamard_power(m, k), principal_submatrix(big, idx));
}

double mixed_principal_submatrix_residual(const DenseMatrix& e, unsigned m, const DenseMatrix& f, unsigned n,
                                          std::size_t cap) {
    const DenseMatrix big = kronecker_mixed(e, m, f, n, cap);
    const auto idx = principal_indices(e.order(), m + n);
    return max_abs_diff(hadamard(hadamard_power(e, m), hadamard_power(f, n)), principal_submatrix(big, idx));
}

bool principal_submatrix_check(const DenseMatrix& m, unsigned k, double tol, std::size_t cap) {
    return principal_submatrix_residual(m, k, cap) < tol;
}

DenseMatrix dense_product(const Frame& frame, const ProductSpec& spec) {
    validate_spec(spec);
    return std::visit(overloaded{
                          [&](const spec::JJ& s) { return hadamard_power(frame[s.j], s.k); },
                          [&](const spec::UV& s) {
                              return hadamard(hadamard_power(frame[s.u], s.k), hadamard_power(frame[s.v], s.l));
                          },
                          [&](const spec::PlusUV& s) { return hadamard_power(frame[s.u] + frame[s.v], s.k); },
                          [&](const spec::JPlusUV& s) {
                              return hadamard(hadamard_power(frame[s.j], s.k),
                                              hadamard_power(frame[s.u] + frame[s.v], s.l));
                          },
                      },
                      spec);
}

FloatTriple oracle_krein(const Frame& frame, const FloatTriple& mult, const ProductSpec& spec) {
    const DenseMatrix product = dense_product(frame, spec);
    FloatTriple q{};
    for (int i = 1; i <= 3; ++i) q[i - 1] = frobenius_dot(product, frame[i]) / mult[i - 1];
    return q;
}

FloatTriple frame_multiplicities(const Frame& frame) {
    return {trace(frame.e1), trace(frame.e2), trace(frame.e3)};
}

bool interlacing_check(const DenseMatrix& m, std::span<const std::size_t> indices, double slack) {
    std::vector<std::size_t> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("interlacing_check: repeated index");
    }
    std::vector<double> lambda = symmetric_eigenvalues(m);
    std::vector<double> mu = symmetric_eigenvalues(principal_submatrix(m, indices));
    std::reverse(lambda.begin(), lambda.end());  // descending
    std::reverse(mu.begin(), mu.end());
    const std::size_t n = lambda.size();
    const std::size_t k = mu.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (mu[i] > lambda[i] + slack) return false;
        if (mu[i] < lambda[n - k + i] - slack) return false;
    }
    return true;
}

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

SuiteReport run_oracle_suite(const GraphCatalogEntry& graph, const SuiteOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.graph = graph.name;
    rep.params = graph.params;
    const double tol = options.tol;
    const auto add = [&](std::string name, double residual, double check_tol) {
        const bool ok = residual <= check_tol && !std::isnan(residual);
        rep.checks.push_back({std::move(name), residual, check_tol, ok});
    };

    const DenseMatrix& adj = graph.adjacency;
    const SrgParams& params = graph.params;
    const std::size_t n = adj.order();
    add("regularity", static_cast<double>(regularity_residual(adj, params)), 0.0);

    const Frame frame = idempotents_from_adjacency(adj, params);
    const FrameReport fr = verify_frame(frame.e1, frame.e2, frame.e3, tol);
    for (int i = 0; i < 3; ++i) add("frame.idempotent.E" + std::to_string(i + 1), fr.idempotency[i], tol);
    add("frame.orthogonal.E1E2", fr.orthogonality[0], tol);
    add("frame.orthogonal.E1E3", fr.orthogonality[1], tol);
    add("frame.orthogonal.E2E3", fr.orthogonality[2], tol);
    add("frame.complete", fr.completeness, tol);
    add("frame.E1=J/n", max_abs_diff(frame.e1, (1.0 / static_cast<double>(n)) * DenseMatrix::ones(n)), tol);

    const Spectrum sp = spectrum(params);
    const DenseMatrix reconstructed = sp.p.to_double() * frame.e1 + sp.r.to_double() * frame.e2 +
                                      sp.s.to_double() * frame.e3;
    add("spectral_reconstruction", max_abs_diff(reconstructed, adj), tol);

    for (int i = 1; i <= 3; ++i) {
        add("symbolic_idempotent.E" + std::to_string(i),
            max_abs_diff(frame[i], expand_coords(idempotent_coords(params, i), adj)), tol);
    }
    const Multiplicities m = multiplicities(params);
    const FloatTriple mult = frame_multiplicities(frame);
    add("multiplicities", std::max({std::abs(mult[0] - 1.0), std::abs(mult[1] - m.m_r.to_double()),
                                    std::abs(mult[2] - m.m_s.to_double())}),
        tol);

    // Kronecker idempotency and principal submatrices.
    unsigned kron_k = options.kronecker_k;
    if (kron_k == 0) {
        kron_k = n <= 5 ? 3 : 2;
        while (kron_k > 1) {
            try {
                checked_power(n, kron_k, options.cap);
                break;
            } catch (const SizeCapExceeded&) {
                --kron_k;
            }
        }
    } else {
        checked_power(n, kron_k, options.cap);
    }
    for (int i = 1; i <= 3; ++i) {
        for (unsigned k = 2; k <= kron_k; ++k) {
            const std::string tag = "E" + std::to_string(i) + "^" + std::to_string(k);
            const DenseMatrix big = kronecker_power(frame[i], k, options.cap);
            add("kronecker.idempotent." + tag, max_abs_diff(big * big, big), tol);
            add("principal_submatrix." + tag,
                max_abs_diff(hadamard_power(frame[i], k), principal_submatrix(big, principal_indices(n, k))), tol);
        }
    }
    if (kron_k >= 2) {
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                if (i == j) continue;
                const std::string tag = "E" + std::to_string(i) + "E" + std::to_string(j) + "^11";
                const DenseMatrix big = kronecker_mixed(frame[i], 1, frame[j], 1, options.cap);
                add("kronecker.idempotent." + tag, max_abs_diff(big * big, big), tol);
                add("principal_submatrix." + tag,
                    mixed_principal_submatrix_residual(frame[i], 1, frame[j], 1, options.cap), tol);
            }
        }
        const DenseMatrix big = kronecker_power(frame.e2, 2, options.cap);
        const auto idx = principal_indices(n, 2);
        const bool interlaces = interlacing_check(big, idx);
        const auto ev = symmetric_eigenvalues(principal_submatrix(big, idx));
        const double outside = std::max({0.0, -ev.front(), ev.back() - 1.0});
        add("interlacing.E2^2", interlaces ? outside : std::numeric_limits<double>::infinity(), tol);
    }

    // Symbolic Krein values against trace projection.
    double bound_violation = 0.0;
    for (const ProductSpec& spec : all_specs(options.degree_cap)) {
        const FloatTriple q = oracle_krein(frame, mult, spec);
        const KreinTriple exact = generalized_krein(params, spec);
        double diff = 0.0;
        for (int i = 1; i <= 3; ++i) {
            diff = std::max(diff, std::abs(q[i - 1] - exact[i].to_double()));
            bound_violation = std::max({bound_violation, -q[i - 1], q[i - 1] - 1.0});
        }
        add("krein." + label(spec), diff, tol);
    }
    add("krein.bounds[0,1]", bound_violation, tol);

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace srg::oracle
