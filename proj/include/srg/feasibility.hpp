#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srg/krein.hpp"
#include "srg/srg_core.hpp"

namespace srg {

enum class ConditionSource { validation, paper_theorem, paper_lemma, paper_corollary, classical, extension };

std::string to_string(ConditionSource source);

struct ConditionResult {
    std::string id;
    /// Exact witness: the q value, a scaled numerator, or r^3 - p for the corollary.
    QuadNum value;
    bool satisfied = true;
    ConditionSource source = ConditionSource::paper_theorem;
    /// Free-form detail for reports (bounds, notes); empty when nothing to add.
    std::string note;
};

/// The four theorem families of nonnegativity conditions on the p-row.
enum class Family {
    q1_33k,        // (rn+p-r)^k + (-n+p-r)^k p + (p-r)^k (n-p-1),   k odd
    q1_plus13_k,   // (rn+p-s)^k + (-n+p-s)^k p + (p-s)^k (n-p-1),   k odd
    q1_3plus13_kl, // E_3^{ok} o (E_1+E_3)^{ol},                     k+l odd
    q1_2plus13_kl, // E_2^{ok} o (E_1+E_3)^{ol},                     l odd
};

/// Product named by a family at exponents (k, l); l is ignored for single-index families.
ProductSpec family_spec(Family family, unsigned k, unsigned l = 0);

/// (n(r-s))^{deg} q^1 of the family, written in closed form.
QuadNum scaled_numerator(const SrgParams& params, Family family, unsigned k, unsigned l = 0);

/// The same numerator as a polynomial in n with r, s, p held fixed; entry i is
/// the coefficient of n^i, and the last entry belongs to the nominal degree
/// (k, or k + l) even when it is zero.
std::vector<QuadNum> scaled_numerator_in_n(const SrgParams& params, Family family, unsigned k,
                                           unsigned l = 0);

struct Limits {
    unsigned k_max = 9;   // odd k <= k_max for single-index families
    unsigned kl_max = 9;  // k + l <= kl_max for double-index families
    bool classical = true;
    bool q23_conditions = false;
    bool counting_identity = true;
};

/// Nonnegativity of the four families up to the limits (k_max, kl_max >= 3).
std::vector<ConditionResult> check_theorem(const SrgParams& params, unsigned k_max, unsigned kl_max);

/// The five cubic conditions. Each equals the matching check_theorem entry.
std::vector<ConditionResult> check_lemma_cubic(const SrgParams& params);

enum class BoundDirection { upper, lower };

/*
 * Bound on n implied by q^1_{333} >= 0. The numerator factors as
 * -n * g(n) with g quadratic of leading coefficient p - r^3, so
 * r^3 < p confines n below the larger root and r^3 > p pushes n above it.
 */
struct CorollaryBound {
    double bound = 0.0;
    BoundDirection direction = BoundDirection::upper;
    QuadNum r_cubed_minus_p;
    /// Case r^3 > p evaluated with a (p-r) factor on the radical; kept for comparison.
    std::optional<double> alternate_case2_bound;
};

/// nullopt when r^3 = p.
std::optional<CorollaryBound> corollary_bound(const SrgParams& params);

/// Relative safety margin below which the float bound defers to the exact sign.
inline constexpr double corollary_margin = 1e-9;

struct FeasibilityVerdict {
    SrgParams params;
    /// False when validation rejected the raw tuple; later stages were skipped.
    bool valid = false;
    std::vector<ConditionResult> results;
    bool feasible = true;  // "feasible-so-far"
    std::optional<std::string> first_failure;
};

/// Evaluate every condition for a raw tuple. Never throws on bad parameters;
/// rejections become validation results.
FeasibilityVerdict verdict(std::int64_t n, std::int64_t p, std::int64_t a, std::int64_t c,
                           const Limits& limits = {});

}  // namespace srg
