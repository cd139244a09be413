#include "idlat/audit.hpp"

#include "idlat/parallel.hpp"

namespace idlat {

BandPrediction predict(const PairAB& p, const Ratio& gamma) {
    if (gamma <= 1) throw std::invalid_argument("predict: requires gamma > 1");
    const Int bb = p.b * p.b;
    if (bb <= p.d) return {Band::NoClaim, gamma};
    const Int v_lhs = p.a * p.a * p.d;   // a^2*D vs (b^2+D)^2 decides a <= v(b)
    const Int v_rhs = (bb + p.d) * (bb + p.d);
    if (gamma.get_num() * p.b <= gamma.get_den() * p.a && v_lhs <= v_rhs)
        return {Band::StableBand, gamma};
    if (v_lhs > v_rhs && p.a <= bb - p.d) return {Band::UnstableBand, gamma};
    return {Band::NoClaim, gamma};
}

namespace {

std::vector<VerdictRecord> verdict_census(const Int& d, const Int& b_max, int threads) {
    const auto pairs = enumerate_pairs(d, b_max);
    std::vector<VerdictRecord> records(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t i) { records[i] = verdict(pairs[i]); });
    return records;
}

}  // namespace

AuditReport census(const Int& d, const Int& b_max, const Ratio& gamma, int threads) {
    AuditReport report;
    report.d = d;
    report.b_max = b_max;
    report.gamma = gamma;
    report.gamma_hat = 1;
    report.max_ratio = 0;

    for (auto& rec : verdict_census(d, b_max, threads)) {
        const PairAB& p = rec.pair;
        const BandPrediction bp = predict(p, gamma);
        const bool counter = bp.band == Band::StableBand && !rec.semistable;
        if (bp.band == Band::UnstableBand && rec.semistable)
            throw invariant_error("census: semi-stable pair inside the unstable band");

        const Int bb = p.b * p.b;
        if (!rec.semistable && bb > d && p.a * p.a * d <= (bb + d) * (bb + d)) {
            const Ratio r = make_ratio(p.a, p.b);
            if (r > report.gamma_hat) report.gamma_hat = r;
        }
        if (rec.s_class == SClass::S3) {
            const Ratio r = make_ratio(abs(rec.shortest.beta), rec.shortest.alpha);
            if (r > report.max_ratio) report.max_ratio = r;
        }
        if (rec.s_class == SClass::S1) {
            if (p.a * p.a > bb + d)
                throw invariant_error("census: S1 pair with a^2 > b^2 + D");
            report.s1_members.push_back(p);
        }

        report.rows.push_back({std::move(rec), bp.band, counter});
        if (counter) report.counterexamples.push_back(report.rows.back());
    }
    return report;
}

Ratio estimate_gamma(const Int& d, const Int& b_max, int threads) {
    Ratio best(1);
    for (const auto& rec : verdict_census(d, b_max, threads)) {
        if (rec.semistable) continue;
        const Int bb = rec.pair.b * rec.pair.b;
        if (bb <= d) continue;
        if (rec.pair.a * rec.pair.a * d > (bb + d) * (bb + d)) continue;
        const Ratio r = make_ratio(rec.pair.a, rec.pair.b);
        if (r > best) best = r;
    }
    return best;
}

Ratio audit_ratio(const Int& d, const Int& b_max, int threads) {
    Ratio best(0);
    for (const auto& rec : verdict_census(d, b_max, threads)) {
        if (rec.s_class != SClass::S3) continue;
        const Ratio r = make_ratio(abs(rec.shortest.beta), rec.shortest.alpha);
        if (r > best) best = r;
    }
    return best;
}

std::vector<Int> divisor_scan(const Int& d, const Ratio& eps, const Int& x_max) {
    if (d <= 1 || !is_squarefree(d))
        throw std::invalid_argument("divisor_scan: D must be squarefree > 1");
    if (eps <= 0 || eps >= Ratio(1, 2))
        throw std::invalid_argument("divisor_scan: requires 0 < eps < 1/2");
    const Ratio w = Ratio(1, 2) - eps;  // window exponent p/q
    const Int p = w.get_num();
    const Int q = w.get_den();
    if (!p.fits_ulong_p() || !q.fits_ulong_p())
        throw std::invalid_argument("divisor_scan: eps denominator too large");

    std::vector<Int> exceptional;
    for (Int x = 1; x <= x_max; ++x) {
        Int n = x * x - d;
        if (n < 0) n = -n;
        Int x_pow_p;
        mpz_pow_ui(x_pow_p.get_mpz_t(), x.get_mpz_t(), p.get_ui());
        // b = x + j is inside the window iff j^q <= x^p
        for (Int j = 1;; ++j) {
            Int j_pow_q;
            mpz_pow_ui(j_pow_q.get_mpz_t(), j.get_mpz_t(), q.get_ui());
            if (j_pow_q > x_pow_p) break;
            const Int b = x + j;
            if (mpz_divisible_p(n.get_mpz_t(), b.get_mpz_t())) {
                exceptional.push_back(x);
                break;
            }
        }
    }
    return exceptional;
}

std::vector<PairAB> s1_census(const Int& d, const Int& b_max, int threads) {
    std::vector<PairAB> members;
    for (const auto& rec : verdict_census(d, b_max, threads)) {
        if (rec.s_class != SClass::S1) continue;
        if (rec.pair.a * rec.pair.a > rec.pair.b * rec.pair.b + d)
            throw invariant_error("s1_census: S1 pair with a^2 > b^2 + D");
        members.push_back(rec.pair);
    }
    return members;
}

}  // namespace idlat
