#pragma once

#include <random>
#include <vector>

#include "idlat/quadfield.hpp"

namespace idlat::testing {

inline std::vector<Int> squarefree_upto(int limit) {
    std::vector<Int> out;
    for (int d = 2; d <= limit; ++d)
        if (is_squarefree(d)) out.push_back(d);
    return out;
}

/// Independent S(D) oracle: plain double loop over (b, a) with a
/// divisibility test, no divisor enumeration involved.
inline std::vector<PairAB> naive_pairs(const Int& d, const Int& b_max) {
    std::vector<PairAB> out;
    for (Int b = 1; b <= b_max; ++b) {
        Int n = b * b - d;
        if (n < 0) n = -n;
        for (Int a = b + 1; a <= n; ++a)
            if (mpz_divisible_p(n.get_mpz_t(), a.get_mpz_t())) out.push_back({d, a, b});
    }
    return out;
}

/// Random member of S(D) with b <= b_max (resamples until one exists).
inline PairAB random_pair(std::mt19937_64& rng, const std::vector<Int>& ds, long b_max) {
    std::uniform_int_distribution<std::size_t> pick_d(0, ds.size() - 1);
    std::uniform_int_distribution<long> pick_b(1, b_max);
    while (true) {
        const Int d = ds[pick_d(rng)];
        const Int b = pick_b(rng);
        Int n = b * b - d;
        if (n < 0) n = -n;
        if (n == 0) continue;
        std::vector<Int> usable;
        for (const Int& a : divisors(n))
            if (a > b) usable.push_back(a);
        if (usable.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick_a(0, usable.size() - 1);
        return {d, usable[pick_a(rng)], b};
    }
}

}  // namespace idlat::testing
