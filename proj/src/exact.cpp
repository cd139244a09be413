#include "idlat/exact.hpp"

#include <algorithm>

namespace idlat {

Ratio make_ratio(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_ratio: zero denominator");
    Ratio r(num, den);
    r.canonicalize();
    return r;
}

Ratio parse_ratio(const std::string& text) {
    const auto check_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
        throw std::invalid_argument("parse_ratio: expected \"p\" or \"p/q\", got \"" + text + "\"");
    return make_ratio(Int(num), Int(den));
}

std::string ratio_str(const Ratio& r) {
    return r.get_str();
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_squarefree(const Int& n) {
    if (n <= 1) throw std::invalid_argument("is_squarefree: requires n > 1");
    for (const auto& [p, e] : factor(n))
        if (e > 1) return false;
    return true;
}

Ordering cmp_int_vs_surd(const Int& x, const Int& y, const Int& d) {
    if (y < 0) throw std::invalid_argument("cmp_int_vs_surd: requires y >= 0");
    if (d <= 1 || !is_squarefree(d)) throw std::invalid_argument("cmp_int_vs_surd: d must be squarefree > 1");
    if (y == 0) {
        const int s = sgn(x);
        return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
    }
    if (x < 0) return Ordering::Less;
    const int c = cmp(x * x, y * y * d);
    if (c == 0)  // y > 0 would force d to be a square
        throw invariant_error("cmp_int_vs_surd: x^2 == y^2*d with squarefree d");
    return c < 0 ? Ordering::Less : Ordering::Greater;
}

int kronecker(const Int& a, const Int& n) {
    if (n == 0) throw std::invalid_argument("kronecker: modulus must be nonzero");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

std::vector<std::pair<Int, int>> factor(const Int& n) {
    if (n <= 1) throw std::invalid_argument("factor: requires n > 1");
    std::vector<std::pair<Int, int>> out;
    Int m = n;

    const auto strip = [&](const Int& p) {
        if (!mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) return;
        int e = 0;
        do {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++e;
        } while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()));
        out.emplace_back(p, e);
    };

    for (const int p : {2, 3, 5}) strip(p);

    // 2-3-5 wheel: candidates 7, 11, 13, 17, 19, 23, 29, 31, 37, ...
    static constexpr int gaps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    Int p = 7;
    std::size_t gi = 0;
    while (p * p <= m) {
        strip(p);
        p += gaps[gi];
        gi = (gi + 1) % 8;
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::vector<Int> divisors(const Int& n) {
    if (n < 1) throw std::invalid_argument("divisors: requires n >= 1");
    std::vector<Int> divs{1};
    if (n > 1) {
        for (const auto& [p, e] : factor(n)) {
            const std::size_t count = divs.size();
            Int pk = 1;
            for (int k = 1; k <= e; ++k) {
                pk *= p;
                for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace idlat
