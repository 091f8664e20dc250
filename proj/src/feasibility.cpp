#include "srg/feasibility.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace srg {

std::string to_string(ConditionSource source) {
    switch (source) {
        case ConditionSource::validation: return "validation";
        case ConditionSource::paper_theorem: return "paper-theorem";
        case ConditionSource::paper_lemma: return "paper-lemma";
        case ConditionSource::paper_corollary: return "paper-corollary";
        case ConditionSource::classical: return "classical";
        case ConditionSource::extension: return "extension";
    }
    return "unknown";
}

namespace {

// slope * n + intercept
struct Linear {
    QuadNum slope;
    QuadNum intercept;
};

// Numerator coordinates n(r-s) * (x, y, z) of an idempotent (or E_1 + E_3)
// as linear functions of n.
struct ScaledColumns {
    Linear x;
    Linear y;
    Linear z;
};

ScaledColumns e3_columns(const Spectrum& sp) {
    const QuadNum pr = sp.p - sp.r;
    return {{sp.r, pr}, {QuadNum(-1), pr}, {QuadNum(0), pr}};
}

ScaledColumns e13_columns(const Spectrum& sp) {
    const QuadNum ps = sp.p - sp.s;
    return {{sp.r, ps}, {QuadNum(-1), ps}, {QuadNum(0), ps}};
}

ScaledColumns e2_columns(const Spectrum& sp) {
    const QuadNum sp_ = sp.s - sp.p;
    return {{-sp.s, sp_}, {QuadNum(1), sp_}, {QuadNum(0), sp_}};
}

struct Factor {
    const ScaledColumns* columns;
    unsigned exponent;
};

// The family's numerator is  prod x-factors + p * prod y-factors + (n-p-1) * prod z-factors.
struct FamilyShape {
    std::array<Factor, 2> factors;
    std::size_t count;
};

struct FamilyColumns {
    ScaledColumns e2, e3, e13;
};

FamilyShape family_shape(const FamilyColumns& cols, Family family, unsigned k, unsigned l) {
    switch (family) {
        case Family::q1_33k: return {{Factor{&cols.e3, k}, Factor{&cols.e3, 0}}, 1};
        case Family::q1_plus13_k: return {{Factor{&cols.e13, k}, Factor{&cols.e13, 0}}, 1};
        case Family::q1_3plus13_kl: return {{Factor{&cols.e3, k}, Factor{&cols.e13, l}}, 2};
        case Family::q1_2plus13_kl: return {{Factor{&cols.e2, k}, Factor{&cols.e13, l}}, 2};
    }
    throw std::invalid_argument("unknown family");
}

bool is_double_family(Family family) {
    return family == Family::q1_3plus13_kl || family == Family::q1_2plus13_kl;
}

void check_exponents(Family family, unsigned k, unsigned l) {
    if (k == 0 || (is_double_family(family) && l == 0)) {
        throw std::invalid_argument("family exponents must be >= 1");
    }
}

using Poly = std::vector<QuadNum>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, QuadNum(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_pow(const Linear& f, unsigned e) {
    Poly out{QuadNum(1)};
    const Poly base{f.intercept, f.slope};
    for (unsigned i = 0; i < e; ++i) out = poly_mul(out, base);
    return out;
}

void poly_accumulate(Poly& acc, const Poly& term) {
    if (acc.size() < term.size()) acc.resize(term.size(), QuadNum(0));
    for (std::size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
}

std::string family_id(Family family, unsigned k, unsigned l) {
    const std::string ks = std::to_string(k);
    const std::string ls = std::to_string(l);
    switch (family) {
        case Family::q1_33k: return "q1_33k.k=" + ks;
        case Family::q1_plus13_k: return "q1_(+13)k.k=" + ks;
        case Family::q1_3plus13_kl: return "q1_3(+13)kl.k=" + ks + ",l=" + ls;
        case Family::q1_2plus13_kl: return "q1_2(+13)kl.k=" + ks + ",l=" + ls;
    }
    return {};
}

ConditionResult nonnegative(std::string id, QuadNum value, ConditionSource source) {
    const bool ok = value.sign() != Sign::negative;
    return {std::move(id), std::move(value), ok, source, {}};
}

// (family, k, l) triples in report order.
struct FamilyTerm {
    Family family;
    unsigned k;
    unsigned l;
};

std::vector<FamilyTerm> theorem_terms(unsigned k_max, unsigned kl_max) {
    std::vector<FamilyTerm> out;
    for (Family f : {Family::q1_33k, Family::q1_plus13_k})
        for (unsigned k = 3; k <= k_max; k += 2) out.push_back({f, k, 0});
    for (unsigned t = 3; t <= kl_max; t += 2)
        for (unsigned k = 1; k < t; ++k) out.push_back({Family::q1_3plus13_kl, k, t - k});
    for (unsigned t = 3; t <= kl_max; ++t)
        for (unsigned k = 1; k < t; ++k)
            if ((t - k) % 2 == 1) out.push_back({Family::q1_2plus13_kl, k, t - k});
    return out;
}

}  // namespace

ProductSpec family_spec(Family family, unsigned k, unsigned l) {
    switch (family) {
        case Family::q1_33k: return spec::JJ{3, k};
        case Family::q1_plus13_k: return spec::PlusUV{1, 3, k};
        case Family::q1_3plus13_kl: return spec::JPlusUV{3, 1, 3, k, l};
        case Family::q1_2plus13_kl: return spec::JPlusUV{2, 1, 3, k, l};
    }
    throw std::invalid_argument("unknown family");
}

QuadNum scaled_numerator(const SrgParams& params, Family family, unsigned k, unsigned l) {
    check_exponents(family, k, l);
    const Spectrum sp = spectrum(params);
    const FamilyColumns cols{e2_columns(sp), e3_columns(sp), e13_columns(sp)};
    const FamilyShape shape = family_shape(cols, family, k, l);
    const QuadNum n(params.n);
    const auto eval = [&](Linear ScaledColumns::*column) {
        QuadNum prod(1);
        for (std::size_t i = 0; i < shape.count; ++i) {
            const Linear& f = shape.factors[i].columns->*column;
            prod *= pow(f.slope * n + f.intercept, shape.factors[i].exponent);
        }
        return prod;
    };
    return eval(&ScaledColumns::x) + eval(&ScaledColumns::y) * sp.p +
           eval(&ScaledColumns::z) * QuadNum(params.n - params.p - 1);
}

std::vector<QuadNum> scaled_numerator_in_n(const SrgParams& params, Family family, unsigned k,
                                           unsigned l) {
    check_exponents(family, k, l);
    const Spectrum sp = spectrum(params);
    const FamilyColumns cols{e2_columns(sp), e3_columns(sp), e13_columns(sp)};
    const FamilyShape shape = family_shape(cols, family, k, l);
    const auto expand = [&](Linear ScaledColumns::*column) {
        Poly prod{QuadNum(1)};
        for (std::size_t i = 0; i < shape.count; ++i) {
            prod = poly_mul(prod, poly_pow(shape.factors[i].columns->*column, shape.factors[i].exponent));
        }
        return prod;
    };
    Poly out = expand(&ScaledColumns::x);
    poly_accumulate(out, poly_mul(expand(&ScaledColumns::y), Poly{sp.p}));
    // n - p - 1
    poly_accumulate(out, poly_mul(expand(&ScaledColumns::z), Poly{QuadNum(-params.p - 1), QuadNum(1)}));
    // Size is always nominal degree + 1, even when the top coefficient cancels.
    const unsigned degree = (family == Family::q1_33k || family == Family::q1_plus13_k) ? k : k + l;
    while (out.size() > degree + 1 && out.back().is_zero()) out.pop_back();
    out.resize(std::max<std::size_t>(out.size(), degree + 1));
    return out;
}

std::vector<ConditionResult> check_theorem(const SrgParams& params, unsigned k_max, unsigned kl_max) {
    if (k_max < 3 || kl_max < 3) throw std::invalid_argument("k_max and kl_max must be >= 3");
    std::vector<ConditionResult> out;
    for (const FamilyTerm& t : theorem_terms(k_max, kl_max)) {
        out.push_back(nonnegative("thm." + family_id(t.family, t.k, t.l),
                                  scaled_numerator(params, t.family, t.k, t.l),
                                  ConditionSource::paper_theorem));
    }
    return out;
}

std::vector<ConditionResult> check_lemma_cubic(const SrgParams& params) {
    struct Entry {
        const char* id;
        Family family;
        unsigned k, l;
    };
    static constexpr Entry entries[] = {
        {"lemma.q1_333", Family::q1_33k, 3, 0},
        {"lemma.q1_(+13)3", Family::q1_plus13_k, 3, 0},
        {"lemma.q1_3(+13)21", Family::q1_3plus13_kl, 2, 1},
        {"lemma.q1_3(+13)12", Family::q1_3plus13_kl, 1, 2},
        {"lemma.q1_2(+13)21", Family::q1_2plus13_kl, 2, 1},
    };
    std::vector<ConditionResult> out;
    for (const Entry& e : entries) {
        out.push_back(nonnegative(e.id, scaled_numerator(params, e.family, e.k, e.l),
                                  ConditionSource::paper_lemma));
    }
    return out;
}

std::optional<CorollaryBound> corollary_bound(const SrgParams& params) {
    const Spectrum sp = spectrum(params);
    const QuadNum r3_minus_p = pow(sp.r, 3) - sp.p;
    if (r3_minus_p.is_zero()) return std::nullopt;

    const double r = sp.r.to_double();
    const double p = static_cast<double>(params.p);
    const double disc = r * r * r * r + 18 * p * r * r + p * p + 8 * r * r * r * p + 8 * p * r;
    const double root = std::sqrt(disc);
    // p - r^3, evaluated from the exact value to keep the sign right.
    const double denom = -r3_minus_p.to_double();

    CorollaryBound out;
    out.r_cubed_minus_p = r3_minus_p;
    if (r3_minus_p.sign() == Sign::negative) {
        out.direction = BoundDirection::upper;
        out.bound = (p - r) * (3 * r * r + 3 * p + root) / (2 * denom);
    } else {
        out.direction = BoundDirection::lower;
        out.bound = (p - r) * (3 * r * r + 3 * p - root) / (2 * denom);
        out.alternate_case2_bound = (p - r) * (3 * r * r + 3 * p + (p - r) * root) / (2 * denom);
    }
    return out;
}

namespace {

ConditionResult corollary_condition(const SrgParams& params) {
    ConditionResult res;
    res.id = "cor.n_bound";
    res.source = ConditionSource::paper_corollary;
    const auto bound = corollary_bound(params);
    if (!bound) {
        res.value = pow(spectrum(params).r, 3) - QuadNum(params.p);
        res.satisfied = true;
        res.note = "advisory: r^3 = p, no bound";
        return res;
    }
    res.value = bound->r_cubed_minus_p;
    const double n = static_cast<double>(params.n);
    std::ostringstream note;
    note.precision(12);
    note << "advisory: n " << (bound->direction == BoundDirection::upper ? "<= " : ">= ") << bound->bound;
    if (std::abs(n - bound->bound) <= corollary_margin * std::abs(bound->bound)) {
        res.satisfied = scaled_numerator(params, Family::q1_33k, 3).sign() != Sign::negative;
        note << " (within margin; decided by exact q1_333)";
    } else {
        res.satisfied = bound->direction == BoundDirection::upper ? n <= bound->bound : n >= bound->bound;
    }
    if (bound->alternate_case2_bound) {
        note << "; alternate case-2 form (p-r)(3r^2+3p+(p-r)sqrt(D))/(2(p-r^3)) gives " << *bound->alternate_case2_bound;
    }
    res.note = note.str();
    return res;
}

void append_classical(const SrgParams& params, std::vector<ConditionResult>& out) {
    const Multiplicities m = multiplicities(params);
    ConditionResult mult;
    mult.id = "classical.multiplicity";
    mult.value = m.m_r;
    mult.satisfied = m.integral;
    mult.source = ConditionSource::classical;
    mult.note = "m_r=" + m.m_r.to_string() + ", m_s=" + m.m_s.to_string();
    out.push_back(std::move(mult));

    const QuadNum one(1);
    for (const LabelledTriple& t : krein_classical(params)) {
        for (int i = 1; i <= 3; ++i) {
            const QuadNum& q = t.value[i];
            const bool ok = q.sign() != Sign::negative && (one - q).sign() != Sign::negative;
            out.push_back({"classical.krein.q" + std::to_string(i) + "_" + label(t.spec), q, ok,
                           ConditionSource::classical, "0 <= q <= 1"});
        }
    }
}

void append_extension(const SrgParams& params, const Limits& limits, std::vector<ConditionResult>& out) {
    for (const FamilyTerm& t : theorem_terms(limits.k_max, limits.kl_max)) {
        const KreinTriple q = generalized_krein(params, family_spec(t.family, t.k, t.l));
        std::string id = family_id(t.family, t.k, t.l);
        for (int i = 2; i <= 3; ++i) {
            std::string row = "ext.q" + std::to_string(i) + id.substr(2);
            out.push_back(nonnegative(std::move(row), q[i], ConditionSource::extension));
        }
    }
}

int failure_priority(ConditionSource source) {
    switch (source) {
        case ConditionSource::validation: return 0;
        case ConditionSource::paper_lemma:
        case ConditionSource::paper_theorem:
        case ConditionSource::paper_corollary: return 1;
        case ConditionSource::extension: return 2;
        case ConditionSource::classical: return 3;
    }
    return 4;
}

}  // namespace

FeasibilityVerdict verdict(std::int64_t n, std::int64_t p, std::int64_t a, std::int64_t c,
                           const Limits& limits) {
    FeasibilityVerdict out;
    out.params = SrgParams{n, p, a, c};

    const bool range_ok = 0 < c && c < p && p < n - 1 && a >= 0;
    const std::int64_t slack = a < 0 ? a : std::min({c, p - c, n - 1 - p});
    out.results.push_back({"validate.range", QuadNum(slack), range_ok, ConditionSource::validation,
                           "0 < c < p < n-1, a >= 0"});
    if (range_ok && limits.counting_identity) {
        const std::int64_t diff = p * (p - a - 1) - (n - p - 1) * c;
        out.results.push_back({"validate.counting", QuadNum(diff), diff == 0, ConditionSource::validation,
                               "p(p-a-1) - (n-p-1)c"});
    }
    if (!out.results.back().satisfied) {
        out.valid = false;
        out.feasible = false;
        out.first_failure = out.results.back().id;
        return out;
    }
    out.valid = true;
    const SrgParams& params = out.params;

    if (limits.classical) append_classical(params, out.results);
    for (ConditionResult& r : check_lemma_cubic(params)) out.results.push_back(std::move(r));
    for (ConditionResult& r : check_theorem(params, limits.k_max, limits.kl_max))
        out.results.push_back(std::move(r));
    if (limits.q23_conditions) append_extension(params, limits, out.results);
    out.results.push_back(corollary_condition(params));

    const ConditionResult* first = nullptr;
    for (const ConditionResult& r : out.results) {
        if (r.satisfied) continue;
        if (first == nullptr || failure_priority(r.source) < failure_priority(first->source)) first = &r;
    }
    out.feasible = first == nullptr;
    if (first != nullptr) out.first_failure = first->id;
    return out;
}

}  // namespace srg
