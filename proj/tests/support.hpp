#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "srg/srg_core.hpp"

namespace support {

// Brute-force list of admissible tuples, independent of the scanner in the CLI.
inline std::vector<srg::SrgParams> valid_tuples(std::int64_t n_max) {
    std::vector<srg::SrgParams> out;
    for (std::int64_t n = 5; n <= n_max; ++n)
        for (std::int64_t p = 2; p < n - 1; ++p)
            for (std::int64_t a = 0; a < p; ++a)
                for (std::int64_t c = 1; c < p; ++c)
                    if (p * (p - a - 1) == (n - p - 1) * c) out.push_back({n, p, a, c});
    return out;
}

inline std::vector<srg::SrgParams> sample_tuples(std::size_t count, std::uint64_t seed,
                                                 std::int64_t n_max = 120) {
    const auto all = valid_tuples(n_max);
    std::vector<srg::SrgParams> out;
    std::mt19937_64 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(out), count, rng);
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

inline srg::Rational random_rational(std::mt19937_64& rng, long bound = 50) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    srg::Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline srg::QuadNum random_quad(std::mt19937_64& rng, std::int64_t d, long bound = 50) {
    return srg::QuadNum(random_rational(rng, bound), random_rational(rng, bound), d);
}

}  // namespace support
