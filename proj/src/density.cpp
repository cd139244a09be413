#include "idlat/density.hpp"

#include <cmath>

#include "idlat/lattice2.hpp"
#include "idlat/parallel.hpp"

namespace idlat {

bool qr_modulus(const Int& d, const Int& q) {
    if (d <= 1 || !is_squarefree(d))
        throw std::invalid_argument("qr_modulus: D must be squarefree > 1");
    if (q < 1) throw std::invalid_argument("qr_modulus: requires q >= 1");
    Int g;
    const Int two_d = 2 * d;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), two_d.get_mpz_t());
    if (g != 1) throw std::invalid_argument("qr_modulus: q must be coprime to 2D");
    if (q == 1) return true;
    for (const auto& [p, e] : factor(q))
        if (kronecker(d, p) != 1) return false;
    return true;
}

DensityStats m_count(const Int& d, const Int& x, const std::vector<std::pair<Ratio, Ratio>>& bins,
                     int threads) {
    if (d <= 1 || !is_squarefree(d))
        throw std::invalid_argument("m_count: D must be squarefree > 1");
    if (x < 2) throw std::invalid_argument("m_count: requires x >= 2");
    const Int top = x - 1;
    if (!top.fits_ulong_p()) throw std::invalid_argument("m_count: x too large to enumerate");

    const std::size_t n = mpz_get_ui(top.get_mpz_t());
    const Int two_d = 2 * d;
    std::vector<char> member(n + 1, 0);
    parallel_for(n, threads, [&](std::size_t i) {
        const Int q(static_cast<unsigned long>(i + 1));
        Int g;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), two_d.get_mpz_t());
        if (g != 1) return;
        if (q == 1) {
            member[1] = 1;
            return;
        }
        for (const auto& [p, e] : factor(q))
            if (kronecker(d, p) != 1) return;
        member[i + 1] = 1;
    });

    DensityStats stats;
    stats.d = d;
    stats.x = x;
    stats.m_count = 0;
    for (std::size_t q = 1; q <= n; ++q)
        if (member[q]) ++stats.m_count;

    for (const auto& [k1, k2] : bins) {
        Int count = 0;
        for (std::size_t q = 1; q <= n; ++q) {
            if (!member[q]) continue;
            const Int qi(static_cast<unsigned long>(q));
            // q in [k1*x, k2*x): exact cross-multiplied comparisons
            if (qi * k1.get_den() >= k1.get_num() * x) {
                if (qi * k2.get_den() < k2.get_num() * x) ++count;
            }
        }
        stats.subinterval_counts.emplace_back(k1, k2, count);
    }
    return stats;
}

std::vector<double> landau_estimate(const Int& d, const std::vector<Int>& xs, int threads) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 100) throw std::invalid_argument("landau_estimate: each x must be >= 100");
        if (i > 0 && xs[i] <= xs[i - 1])
            throw std::invalid_argument("landau_estimate: xs must be strictly ascending");
    }
    std::vector<double> out;
    out.reserve(xs.size());
    for (const Int& x : xs) {
        const Int count = m_count(d, x, {}, threads).m_count;
        const double xd = mpz_get_d(x.get_mpz_t());
        out.push_back(mpz_get_d(count.get_mpz_t()) * std::sqrt(std::log(xd)) / xd);
    }
    return out;
}

std::pair<Int, Int> semistable_fraction(const Int& d, const Int& b_max, int threads) {
    const auto pairs = enumerate_pairs(d, b_max);
    std::vector<char> stable(pairs.size(), 0);
    parallel_for(pairs.size(), threads,
                 [&](std::size_t i) { stable[i] = verdict(pairs[i]).semistable ? 1 : 0; });
    Int num = 0;
    for (const char s : stable) num += s;
    return {num, Int(static_cast<unsigned long>(pairs.size()))};
}

}  // namespace idlat
