#pragma once

#include <utility>

#include "idlat/quadfield.hpp"

namespace idlat {

/// Gram matrix [[g11, g12], [g12, g22]] of a rank-2 basis.
/// Positive definite: g11 > 0 and g11*g22 - g12^2 > 0.
struct GramForm {
    Int g11;
    Int g12;
    Int g22;
};

/// Gram matrix of the norm form Q(x,y) = 2(xa + yb)^2 + 2y^2*D:
/// [[2a^2, 2ab], [2ab, 2(b^2 + D)]].
GramForm gram(const PairAB& p);

/// Unimodular column transform; columns are lattice vectors in the
/// coordinates of the input basis.
struct Transform {
    Int u11, u12, u21, u22;
    Int det() const { return u11 * u22 - u12 * u21; }
};

/// Exact first and second minima of a rank-2 form, with the canonical
/// minimizer. Canonical means: sign-normalized to beta < 0 or
/// (beta = 0 and alpha = 1), then smallest |beta|, then smallest alpha
/// among all shortest vectors. The transform's columns attain
/// lambda1 and lambda2 and form a basis (det +-1).
struct ShortestResult {
    Int lambda1_sq;
    Int lambda2_sq;
    Int alpha;
    Int beta;
    Transform transform;
};

/// Classical Lagrange (Gauss) reduction, all integer arithmetic.
/// Rejects non-positive-definite input.
ShortestResult lagrange_reduce(const GramForm& g);

/// Independent exhaustive oracle: enumerates every coefficient vector in a
/// box provably containing all minima (|y| bounded by isqrt((b^2+D)/D)+1
/// for lambda1; a Minkowski-bound box for lambda2). Same canonical
/// normalization as lagrange_reduce; shares no search logic with it.
/// y_bound widens the first-phase box when positive (testing hook).
ShortestResult brute_shortest(const PairAB& p, const Int& y_bound = 0);

/// Which of the three minimizer categories the pair falls into:
/// S1 = (1,0), S2 = (0,+-1) normalized, S3 = the boxed case
/// 0 < alpha <= b, alpha <= |beta| <= a, beta < 0. A minimizer outside
/// all three raises invariant_error.
enum class SClass { S1, S2, S3 };

SClass classify_minimizer(const PairAB& p, const ShortestResult& s);

struct VerdictRecord {
    PairAB pair;
    ShortestResult shortest;
    bool semistable;  // lambda1_sq^2 >= det_sq, decided exactly
    SClass s_class;
    Int det_sq;
};

/// Exact semi-stability verdict: lambda1^2 >= 2a*sqrt(D) via
/// cmp_int_vs_surd. Never consults the band predictor.
VerdictRecord verdict(const PairAB& p);

namespace detail {

inline Int floor_quot(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

/// round(b/a) for a > 0, as floor((2b + a) / (2a)).
inline Int nearest_quot(const Int& b, const Int& a) {
    return floor_quot(2 * b + a, 2 * a);
}

inline Int nearest_quot(const Ratio& b, const Ratio& a) {
    const Ratio r = (2 * b + a) / (2 * a);
    return floor_quot(r.get_num(), r.get_den());
}

template <typename T>
struct Reduced2 {
    T a, b, c;  // Gram of the reduced basis: |2b| <= a <= c
    Transform u;
};

/// Gauss reduction over any exact scalar (Int or Ratio Gram entries).
/// Each swap strictly decreases a, so the loop terminates.
template <typename T>
Reduced2<T> gauss_reduce(T a, T b, T c) {
    Transform u{1, 0, 0, 1};
    const auto swap_basis = [&] {
        std::swap(a, c);
        std::swap(u.u11, u.u12);
        std::swap(u.u21, u.u22);
    };
    if (a > c) swap_basis();
    while (true) {
        const Int m = nearest_quot(b, a);
        if (m != 0) {
            const T mt(m);
            c = c - 2 * mt * b + mt * mt * a;
            b = b - mt * a;
            u.u12 -= m * u.u11;
            u.u22 -= m * u.u21;
        }
        if (c >= a) break;
        swap_basis();
    }
    return {a, b, c, u};
}

}  // namespace detail

}  // namespace idlat
