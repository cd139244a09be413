#include "idlat/lattice2.hpp"

#include <array>
#include <optional>
#include <vector>

namespace idlat {

namespace {

struct Vec {
    Int x;  // alpha
    Int y;  // beta
};

// beta < 0, or beta = 0 with alpha > 0.
Vec normalize_sign(Vec v) {
    if (v.y > 0 || (v.y == 0 && v.x < 0)) {
        v.x = -v.x;
        v.y = -v.y;
    }
    return v;
}

// (|beta|, alpha) lexicographic; the tie rule behind canonical minimizers.
bool lex_less(const Vec& l, const Vec& r) {
    const Int la = abs(l.y), ra = abs(r.y);
    if (la != ra) return la < ra;
    return l.x < r.x;
}

Int cross(const Vec& l, const Vec& r) {
    return l.x * r.y - l.y * r.x;
}

struct Candidate {
    Vec v;
    Int q;
};

// Canonical representative among candidates with q == target.
std::optional<Vec> pick_canonical(const std::vector<Candidate>& cands, const Int& target,
                                  const Vec* independent_of = nullptr) {
    std::optional<Vec> best;
    for (const auto& c : cands) {
        if (c.q != target) continue;
        if (independent_of != nullptr && cross(*independent_of, c.v) == 0) continue;
        const Vec n = normalize_sign(c.v);
        if (!best || lex_less(n, *best)) best = n;
    }
    return best;
}

}  // namespace

GramForm gram(const PairAB& p) {
    return {2 * p.a * p.a, 2 * p.a * p.b, 2 * (p.b * p.b + p.d)};
}

ShortestResult lagrange_reduce(const GramForm& g) {
    if (g.g11 <= 0 || g.g11 * g.g22 - g.g12 * g.g12 <= 0)
        throw std::invalid_argument("lagrange_reduce: form is not positive definite");

    const auto red = detail::gauss_reduce<Int>(g.g11, g.g12, g.g22);
    const Vec v1{red.u.u11, red.u.u21};
    const Vec v2{red.u.u12, red.u.u22};

    // In a reduced basis every vector of minimal norm has coefficients in
    // {0, +-1}^2, so these four classes cover all of them.
    std::vector<Candidate> cands{
        {v1, red.a},
        {v2, red.c},
        {{v1.x + v2.x, v1.y + v2.y}, red.a + 2 * red.b + red.c},
        {{v1.x - v2.x, v1.y - v2.y}, red.a - 2 * red.b + red.c},
    };

    const Vec m1 = *pick_canonical(cands, red.a);
    // v2 attains lambda2; fall back to v1 when the canonical minimizer is
    // +-v2 itself (then a == c and v1 attains lambda2 too).
    const Vec m2 = normalize_sign(cross(m1, v2) != 0 ? v2 : v1);

    ShortestResult res{red.a, red.c, m1.x, m1.y, {m1.x, m2.x, m1.y, m2.y}};
    if (abs(res.transform.det()) != 1)
        throw invariant_error("lagrange_reduce: transform is not unimodular");
    return res;
}

ShortestResult brute_shortest(const PairAB& p, const Int& y_bound) {
    const Int& a = p.a;
    const Int& b = p.b;
    const Int& d = p.d;
    // explicit Int return: a deduced type here would be a gmpxx expression
    // template referencing the dead local t
    const auto q_of = [&](const Vec& v) -> Int {
        const Int t = v.x * a + v.y * b;
        return 2 * t * t + 2 * v.y * v.y * d;
    };

    // All vectors with Q <= budget have |y| <= sqrt(budget/2D) and
    // |xa + yb| <= sqrt(budget/2); enumerate that box exactly.
    const auto enumerate_box = [&](const Int& budget, Int y_max) {
        const Int y_cap = isqrt(budget / (2 * d)) + 1;
        if (y_max < y_cap) y_max = y_cap;
        const Int s = isqrt(budget / 2) + 1;
        std::vector<Candidate> cands;
        for (Int y = 0; y <= y_max; ++y) {
            // normalized orientation: beta = -y
            const Int lo = detail::floor_quot(y * b - s, a);
            const Int hi = detail::floor_quot(y * b + s, a) + 1;
            for (Int x = lo; x <= hi; ++x) {
                if (y == 0 && x <= 0) continue;
                const Vec v{x, -y};
                cands.push_back({v, q_of(v)});
            }
        }
        return cands;
    };

    // First minimum: Q(0,1) = 2(b^2 + D) always bounds it.
    const Int b1 = 2 * (b * b + d);
    const auto phase1 = enumerate_box(b1, y_bound);
    Int lambda1 = phase1.front().q;
    for (const auto& c : phase1)
        if (c.q < lambda1) lambda1 = c.q;
    const Vec m1 = *pick_canonical(phase1, lambda1);

    // Second minimum: lambda1^2 * lambda2^2 <= (4/3) * det^2 (rank-2
    // Minkowski), so this budget provably reaches an independent vector.
    const Int b2 = detail::floor_quot(4 * det_sq(p), 3 * lambda1) + 1;
    const auto phase2 = enumerate_box(b2 > b1 ? b2 : b1, 0);
    std::optional<Int> lambda2;
    for (const auto& c : phase2) {
        if (cross(m1, c.v) == 0) continue;
        if (!lambda2 || c.q < *lambda2) lambda2 = c.q;
    }
    if (!lambda2) throw invariant_error("brute_shortest: no independent vector in Minkowski box");
    const Vec m2 = *pick_canonical(phase2, *lambda2, &m1);

    ShortestResult res{lambda1, *lambda2, m1.x, m1.y, {m1.x, m2.x, m1.y, m2.y}};
    if (abs(res.transform.det()) != 1)
        throw invariant_error("brute_shortest: minima attainers are not a basis");
    return res;
}

SClass classify_minimizer(const PairAB& p, const ShortestResult& s) {
    const Int& al = s.alpha;
    const Int& be = s.beta;
    if (al == 1 && be == 0) return SClass::S1;
    if (al == 0 && be == -1) return SClass::S2;
    const Int abs_be = abs(be);
    if (al > 0 && al <= p.b && al <= abs_be && abs_be <= p.a && be < 0) return SClass::S3;
    throw invariant_error("classify_minimizer: minimizer outside the three categories");
}

VerdictRecord verdict(const PairAB& p) {
    ShortestResult s = lagrange_reduce(gram(p));
    const bool semistable = cmp_int_vs_surd(s.lambda1_sq, 2 * p.a, p.d) != Ordering::Less;
    const SClass cls = classify_minimizer(p, s);
    return {p, std::move(s), semistable, cls, det_sq(p)};
}

}  // namespace idlat
