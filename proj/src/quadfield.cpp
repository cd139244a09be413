#include "idlat/quadfield.hpp"

#include <algorithm>

namespace idlat {

FieldData field_data(const Int& d) {
    if (d <= 1 || !is_squarefree(d))
        throw std::invalid_argument("field_data: D must be squarefree > 1");
    if (d % 4 == 1) return {d, d, DeltaKind::UnitClass};
    return {d, 4 * d, DeltaKind::NonUnitClass};
}

Int element_norm(const FieldData& fd, const Int& b, const Int& g) {
    if (fd.delta_kind == DeltaKind::NonUnitClass) return b * b - g * g * fd.d;
    const Int t = 2 * b + g;
    // (2b+g)^2 == g^2*D (mod 4) whenever D == 1 (mod 4), so this is exact.
    return (t * t - g * g * fd.d) / 4;
}

bool validate_ideal(const FieldData& fd, const Int& a, const Int& b, const Int& g) {
    if (a <= 0 || g <= 0 || b < 0)
        throw std::invalid_argument("validate_ideal: requires a > 0, g > 0, b >= 0");
    if (b >= a) return false;
    if (!mpz_divisible_p(a.get_mpz_t(), g.get_mpz_t())) return false;
    if (!mpz_divisible_p(b.get_mpz_t(), g.get_mpz_t())) return false;
    const Int norm = element_norm(fd, b, g);
    const Int ag = a * g;
    return mpz_divisible_p(norm.get_mpz_t(), ag.get_mpz_t());
}

Int ideal_norm(const FieldData& fd, const IdealTriple& t) {
    if (!validate_ideal(fd, t.a, t.b, t.g))
        throw std::invalid_argument("ideal_norm: not a canonical ideal triple");
    return t.a * t.g;
}

std::vector<IdealTriple> enumerate_ideals(const FieldData& fd, const Int& a_max) {
    std::vector<IdealTriple> out;
    for (Int a = 1; a <= a_max; ++a) {
        for (const Int& g : divisors(a)) {
            for (Int b = 0; b < a; b += g) {
                if (validate_ideal(fd, a, b, g)) out.push_back({a, b, g});
            }
        }
    }
    return out;
}

bool pair_ok(const Int& d, const Int& a, const Int& b) {
    if (d <= 1 || !is_squarefree(d)) return false;
    if (b <= 0 || b >= a) return false;
    const Int n = b * b - d;
    return mpz_divisible_p(n.get_mpz_t(), a.get_mpz_t());
}

PairAB pair_ab(const Int& d, const Int& a, const Int& b) {
    if (d <= 1 || !is_squarefree(d))
        throw std::invalid_argument("pair_ab: D must be squarefree > 1");
    if (b <= 0 || b >= a)
        throw std::invalid_argument("pair_ab: requires 0 < b < a");
    if (!pair_ok(d, a, b))
        throw std::invalid_argument("pair_ab: a does not divide b^2 - D");
    return {d, a, b};
}

PairAB to_pair(const FieldData& fd, const IdealTriple& t) {
    if (!validate_ideal(fd, t.a, t.b, t.g))
        throw std::invalid_argument("to_pair: not a canonical ideal triple");
    const Int a0 = t.a / t.g;
    const Int b0 = t.b / t.g;
    Int a1, b1;
    if (fd.delta_kind == DeltaKind::UnitClass) {
        a1 = 2 * a0;
        b1 = 2 * b0 + 1;
    } else {
        a1 = a0;
        b1 = b0;
    }
    if (b1 == 0)
        throw std::invalid_argument("to_pair: image has b = 0, outside S(D)");
    if (!pair_ok(fd.d, a1, b1))
        throw invariant_error("to_pair: normalized pair violates S(D) conditions");
    return {fd.d, a1, b1};
}

std::vector<PairAB> enumerate_pairs(const Int& d, const Int& b_max) {
    if (d <= 1 || !is_squarefree(d))
        throw std::invalid_argument("enumerate_pairs: D must be squarefree > 1");
    if (b_max < 0) throw std::invalid_argument("enumerate_pairs: b_max must be >= 0");
    std::vector<PairAB> out;
    for (Int b = 1; b <= b_max; ++b) {
        Int n = b * b - d;
        if (n < 0) n = -n;
        if (n == 0) throw invariant_error("enumerate_pairs: b^2 = D with squarefree D");
        std::vector<Int> as;
        for (const Int& a : divisors(n))
            if (a > b) as.push_back(a);
        std::sort(as.begin(), as.end());
        for (const Int& a : as) out.push_back({d, a, b});
    }
    return out;
}

Int det_sq(const PairAB& p) {
    return 4 * p.a * p.a * p.d;
}

}  // namespace idlat
