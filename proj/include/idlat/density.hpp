#pragma once

#include <utility>
#include <vector>

#include "idlat/quadfield.hpp"

namespace idlat {

/// True iff D is a quadratic residue modulo every prime dividing q.
/// Domain: q >= 1 with gcd(q, 2D) = 1 (the Legendre-symbol
/// characterization needs odd primes away from D); q = 1 is vacuously
/// true. Out-of-domain q is rejected.
bool qr_modulus(const Int& d, const Int& q);

/// Counting data for M(D,x) = { q in [1, x) : gcd(q, 2D) = 1 and
/// qr_modulus(D, q) }. Bins are half-open [k1*x, k2*x), decided exactly,
/// so a disjoint cover of [0,1) sums to m_count.
struct DensityStats {
    Int d;
    Int x;
    Int m_count;
    std::vector<std::tuple<Ratio, Ratio, Int>> subinterval_counts;
    std::vector<std::pair<Int, double>> c_estimates;        // filled by landau_estimate callers
    std::pair<Int, Int> semistable_fraction{Int(0), Int(0)};  // filled by census callers
};

DensityStats m_count(const Int& d, const Int& x, const std::vector<std::pair<Ratio, Ratio>>& bins,
                     int threads = 0);

/// |M(D,x)| * sqrt(ln x) / x for each x. Raw decimals for stabilization
/// judgment only; nothing downstream consumes them. Requires ascending
/// xs, each >= 100.
std::vector<double> landau_estimate(const Int& d, const std::vector<Int>& xs, int threads = 0);

/// (semi-stable count, total count) over enumerate_pairs(D, b_max),
/// with exact verdicts.
std::pair<Int, Int> semistable_fraction(const Int& d, const Int& b_max, int threads = 0);

}  // namespace idlat
