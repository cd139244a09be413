#pragma once

#include <vector>

#include "idlat/lattice2.hpp"

namespace idlat {

/// The band predictor for a pair (a,b) at a candidate constant gamma > 1:
///   StableBand    gamma*b <= a and a^2*D <= (b^2+D)^2
///   UnstableBand  a^2*D > (b^2+D)^2 and a <= b^2 - D
///   NoClaim       otherwise, and always when b^2 <= D.
/// All comparisons are exact; gamma enters as gamma_num*b <= gamma_den*a.
/// Band predictions are hypotheses under audit, never verdict inputs.
enum class Band { StableBand, UnstableBand, NoClaim };

struct BandPrediction {
    Band band;
    Ratio gamma;
};

BandPrediction predict(const PairAB& p, const Ratio& gamma);

struct CensusRow {
    VerdictRecord record;
    Band band;
    bool counterexample;  // StableBand prediction that the exact verdict refutes
};

/// Exhaustive exact audit over S(D) up to b_max. An UnstableBand
/// prediction contradicted by the verdict is an invariant error (that
/// direction is provable); StableBand counterexamples are recorded data.
struct AuditReport {
    Int d;
    Int b_max;
    Ratio gamma;
    std::vector<CensusRow> rows;  // sorted by (b, a)
    Ratio gamma_hat;              // see estimate_gamma
    std::vector<CensusRow> counterexamples;
    Ratio max_ratio;  // max |beta|/alpha over S3 minimizers; 0 if none
    std::vector<PairAB> s1_members;
};

AuditReport census(const Int& d, const Int& b_max, const Ratio& gamma, int threads = 0);

/// Smallest constant the census forces: max a/b over unstable pairs with
/// b^2 > D and a^2*D <= (b^2+D)^2, as an exact rational; 1 when no such
/// pair exists. Any gamma above it makes StableBand sound on this census.
Ratio estimate_gamma(const Int& d, const Int& b_max, int threads = 0);

/// Max |beta|/alpha over canonical S3 minimizers in the census; 0 if the
/// census has no S3 pair.
Ratio audit_ratio(const Int& d, const Int& b_max, int threads = 0);

/// All x <= x_max such that some divisor of x^2 - D lies in
/// (x, x + x^(1/2 - eps)]. The window is decided exactly: with
/// 1/2 - eps = p/q, membership is (b - x)^q <= x^p. Requires 0 < eps < 1/2.
std::vector<Int> divisor_scan(const Int& d, const Ratio& eps, const Int& x_max);

/// All pairs with verdict class S1, each checked against a^2 <= b^2 + D
/// (violations raise invariant_error).
std::vector<PairAB> s1_census(const Int& d, const Int& b_max, int threads = 0);

}  // namespace idlat
