#include <doctest.h>

#include <random>

#include "idlat/lattice2.hpp"
#include "support.hpp"

using namespace idlat;

namespace {

Int q_value(const PairAB& p, const Int& x, const Int& y) {
    const Int t = x * p.a + y * p.b;
    return 2 * t * t + 2 * y * y * p.d;
}

}  // namespace

TEST_CASE("gram") {
    const GramForm g = gram(pair_ab(2, 7, 3));
    CHECK_EQ(g.g11, 98);
    CHECK_EQ(g.g12, 42);
    CHECK_EQ(g.g22, 22);

    const GramForm h = gram(pair_ab(13, 276, 259));
    CHECK_EQ(h.g11, 152352);
    CHECK_EQ(h.g12, 142968);
    CHECK_EQ(h.g22, 134188);

    const GramForm k = gram(pair_ab(3, 6, 3));
    CHECK_EQ(k.g11, 72);
    CHECK_EQ(k.g12, 36);
    CHECK_EQ(k.g22, 24);
}

TEST_CASE("lagrange_reduce on known forms") {
    const ShortestResult r = lagrange_reduce({98, 42, 22});
    CHECK_EQ(r.lambda1_sq, 18);
    CHECK_EQ(r.lambda2_sq, 22);
    CHECK_EQ(r.alpha, 1);
    CHECK_EQ(r.beta, -2);
    CHECK_EQ(abs(r.transform.det()), 1);

    const ShortestResult id = lagrange_reduce({1, 0, 1});
    CHECK_EQ(id.lambda1_sq, 1);
    CHECK_EQ(id.lambda2_sq, 1);

    const ShortestResult big = lagrange_reduce(gram(pair_ab(13, 276, 259)));
    CHECK_EQ(big.lambda1_sq, 604);
    CHECK_EQ(big.alpha, 1);
    CHECK_EQ(big.beta, -1);
}

TEST_CASE("lagrange_reduce rejects non positive definite forms") {
    CHECK_THROWS_AS(lagrange_reduce({1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(lagrange_reduce({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(lagrange_reduce({-1, 0, 1}), std::invalid_argument);
}

TEST_CASE("transform columns attain both minima") {
    for (const PairAB& p : enumerate_pairs(13, 20)) {
        const ShortestResult r = lagrange_reduce(gram(p));
        CHECK_EQ(q_value(p, r.transform.u11, r.transform.u21), r.lambda1_sq);
        CHECK_EQ(q_value(p, r.transform.u12, r.transform.u22), r.lambda2_sq);
        CHECK_EQ(abs(r.transform.det()), 1);
    }
}

TEST_CASE("brute_shortest frozen examples") {
    const ShortestResult a = brute_shortest(pair_ab(2, 7, 3));
    CHECK_EQ(a.lambda1_sq, 18);
    CHECK_EQ(a.alpha, 1);
    CHECK_EQ(a.beta, -2);

    // three-way tie Q(1,0) = Q(0,1) = Q(1,-1) = 8 resolves to (1,0)
    const ShortestResult b = brute_shortest(pair_ab(3, 2, 1));
    CHECK_EQ(b.lambda1_sq, 8);
    CHECK_EQ(b.alpha, 1);
    CHECK_EQ(b.beta, 0);

    const ShortestResult c = brute_shortest(pair_ab(7, 3, 1));
    CHECK_EQ(c.lambda1_sq, 16);
    CHECK_EQ(c.alpha, 0);
    CHECK_EQ(c.beta, -1);

    // widening the search box must not change anything
    const ShortestResult wide = brute_shortest(pair_ab(2, 7, 3), 50);
    CHECK_EQ(wide.lambda1_sq, 18);
    CHECK_EQ(wide.alpha, 1);
    CHECK_EQ(wide.beta, -2);
    CHECK_EQ(wide.lambda2_sq, a.lambda2_sq);
}

TEST_CASE("minimizer normalization and primitivity") {
    for (const PairAB& p : enumerate_pairs(5, 30)) {
        const ShortestResult r = lagrange_reduce(gram(p));
        CHECK((r.beta < 0 || (r.beta == 0 && r.alpha == 1)));
        Int g;
        mpz_gcd(g.get_mpz_t(), r.alpha.get_mpz_t(), r.beta.get_mpz_t());
        CHECK_EQ(g, 1);
        CHECK_EQ(q_value(p, r.alpha, r.beta), r.lambda1_sq);
    }
}

TEST_CASE("oracle equivalence, exhaustive small sweep") {
    for (const Int& d : idlat::testing::squarefree_upto(20)) {
        for (const PairAB& p : enumerate_pairs(d, 40)) {
            const ShortestResult fast = lagrange_reduce(gram(p));
            const ShortestResult slow = brute_shortest(p);
            CHECK_EQ(fast.lambda1_sq, slow.lambda1_sq);
            CHECK_EQ(fast.lambda2_sq, slow.lambda2_sq);
            CHECK_EQ(fast.alpha, slow.alpha);
            CHECK_EQ(fast.beta, slow.beta);
        }
    }
}

TEST_CASE("oracle equivalence, random larger pairs") {
    std::mt19937_64 rng(40901);
    const auto ds = idlat::testing::squarefree_upto(30);
    for (int i = 0; i < 200; ++i) {
        const PairAB p = idlat::testing::random_pair(rng, ds, 300);
        const ShortestResult fast = lagrange_reduce(gram(p));
        const ShortestResult slow = brute_shortest(p);
        CHECK_EQ(fast.lambda1_sq, slow.lambda1_sq);
        CHECK_EQ(fast.alpha, slow.alpha);
        CHECK_EQ(fast.beta, slow.beta);
    }
}

TEST_CASE("oracle equivalence, deep pairs") {
    std::mt19937_64 rng(40902);
    const auto ds = idlat::testing::squarefree_upto(30);
    for (int i = 0; i < 25; ++i) {
        const PairAB p = idlat::testing::random_pair(rng, ds, 5000);
        const ShortestResult fast = lagrange_reduce(gram(p));
        const ShortestResult slow = brute_shortest(p);
        CHECK_EQ(fast.lambda1_sq, slow.lambda1_sq);
        CHECK_EQ(fast.alpha, slow.alpha);
        CHECK_EQ(fast.beta, slow.beta);
        CHECK_EQ(fast.lambda2_sq, slow.lambda2_sq);
    }
}

TEST_CASE("Minkowski sandwich, parity, lower bound") {
    for (const Int& d : idlat::testing::squarefree_upto(15)) {
        for (const PairAB& p : enumerate_pairs(d, 30)) {
            const ShortestResult r = lagrange_reduce(gram(p));
            const Int ds = det_sq(p);
            const Int prod = r.lambda1_sq * r.lambda2_sq;
            CHECK(ds <= prod);
            CHECK(3 * prod <= 4 * ds);
            CHECK_EQ(r.lambda1_sq % 2, 0);
            CHECK(r.lambda1_sq >= 2 * p.a);
        }
    }
}

TEST_CASE("ideal-level lower bound lambda1^2 >= 2 sqrt(N)") {
    for (const Int d : {2, 3, 5, 13}) {
        const FieldData fd = field_data(d);
        for (const IdealTriple& t : enumerate_ideals(fd, 80)) {
            PairAB p{0, 0, 0};
            try {
                p = to_pair(fd, t);
            } catch (const std::invalid_argument&) {
                continue;
            }
            const Int pair_l1 = lagrange_reduce(gram(p)).lambda1_sq;
            const Int n = ideal_norm(fd, t);
            const Int g4 = t.g * t.g * t.g * t.g;
            // lambda1^2 of the ideal lattice is g^2 * pair_l1 (times 1/4 when
            // D == 1 mod 4); compare its square with 4N exactly.
            if (fd.delta_kind == DeltaKind::NonUnitClass) {
                CHECK(g4 * pair_l1 * pair_l1 >= 4 * n);
            } else {
                CHECK(g4 * pair_l1 * pair_l1 >= 64 * n);
            }
        }
    }
}

TEST_CASE("verdict frozen examples") {
    const VerdictRecord unstable = verdict(pair_ab(13, 276, 259));
    CHECK_FALSE(unstable.semistable);
    CHECK(unstable.s_class == SClass::S3);
    CHECK_EQ(unstable.shortest.lambda1_sq, 604);

    const VerdictRecord stable = verdict(pair_ab(3, 6, 3));
    CHECK(stable.semistable);
    CHECK_EQ(stable.shortest.lambda1_sq, 24);
    CHECK(stable.s_class == SClass::S2);

    const VerdictRecord small = verdict(pair_ab(2, 7, 3));
    CHECK_FALSE(small.semistable);  // 18^2 = 324 < 392

    const VerdictRecord tight = verdict(pair_ab(7, 3, 1));
    CHECK(tight.semistable);  // 16^2 = 256 >= 252
    CHECK(tight.s_class == SClass::S2);
}

TEST_CASE("verdict invariant: semistable iff lambda1_sq^2 >= det_sq") {
    for (const Int& d : idlat::testing::squarefree_upto(15)) {
        for (const PairAB& p : enumerate_pairs(d, 25)) {
            const VerdictRecord v = verdict(p);
            CHECK_EQ(v.semistable, v.shortest.lambda1_sq * v.shortest.lambda1_sq >= v.det_sq);
        }
    }
}

TEST_CASE("classify_minimizer") {
    const PairAB p = pair_ab(2, 7, 3);
    CHECK(classify_minimizer(p, brute_shortest(p)) == SClass::S3);
    const PairAB q = pair_ab(7, 3, 1);
    CHECK(classify_minimizer(q, brute_shortest(q)) == SClass::S2);
    const PairAB r = pair_ab(3, 2, 1);
    CHECK(classify_minimizer(r, brute_shortest(r)) == SClass::S1);

    // a minimizer violating all three categories is a hard error
    ShortestResult bogus = brute_shortest(p);
    bogus.alpha = -1;
    bogus.beta = -1;
    CHECK_THROWS_AS(classify_minimizer(p, bogus), invariant_error);
}

TEST_CASE("category-III bounds hold for every S3 minimizer") {
    for (const Int& d : idlat::testing::squarefree_upto(15)) {
        for (const PairAB& p : enumerate_pairs(d, 30)) {
            const VerdictRecord v = verdict(p);
            if (v.s_class != SClass::S3) continue;
            CHECK(v.shortest.alpha > 0);
            CHECK(v.shortest.alpha <= p.b);
            CHECK(v.shortest.alpha <= abs(v.shortest.beta));
            CHECK(abs(v.shortest.beta) <= p.a);
            CHECK(v.shortest.beta < 0);
        }
    }
}

TEST_CASE("stability criteria by minimizer class") {
    for (const Int& d : idlat::testing::squarefree_upto(20)) {
        for (const PairAB& p : enumerate_pairs(d, 40)) {
            const VerdictRecord v = verdict(p);
            const Int bb = p.b * p.b;
            const Int vr = (bb + p.d) * (bb + p.d);
            // unstable band is sound regardless of any upper limit on a
            if (p.a * p.a * p.d > vr) CHECK_FALSE(v.semistable);
            // S2: semistable exactly when a^2 D <= (b^2+D)^2
            if (v.s_class == SClass::S2) CHECK_EQ(v.semistable, p.a * p.a * p.d <= vr);
            // S1: a^2 <= b^2 + D always; semistable whenever b^2 > D
            if (v.s_class == SClass::S1) {
                CHECK(p.a * p.a <= bb + p.d);
                if (bb > p.d) CHECK(v.semistable);
            }
        }
    }
}
