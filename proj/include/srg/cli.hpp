#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "srg/feasibility.hpp"

namespace srg::cli {

struct ScanRange {
    std::int64_t n_max = 5;
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> a;
    std::optional<std::int64_t> c;
    bool only_counting_valid = true;
};

/// Candidate tuples with 5 <= n <= n_max and 0 < c < p < n-1, 0 <= a < p,
/// ordered by (n, p, a, c). Empty when n_max < 5.
std::vector<SrgParams> scan_tuples(const ScanRange& range, bool counting_identity = true);

/// Verdicts in tuple order regardless of `jobs`.
std::vector<FeasibilityVerdict> run_scan(const ScanRange& range, const Limits& limits, unsigned jobs = 1);

/// Entry point behind the srg-krein binary. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srg::cli
