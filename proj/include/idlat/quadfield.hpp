#pragma once

#include <vector>

#include "idlat/exact.hpp"

namespace idlat {

/// Which generator delta the ring of integers Z[delta] of Q(sqrt(D)) uses.
enum class DeltaKind {
    NonUnitClass,  // delta = -sqrt(D),      D != 1 (mod 4), disc = 4D
    UnitClass,     // delta = (1-sqrt(D))/2, D == 1 (mod 4), disc = D
};

struct FieldData {
    Int d;
    Int disc;
    DeltaKind delta_kind;
};

/// Field data for Q(sqrt(d)). Requires d squarefree, d > 1.
FieldData field_data(const Int& d);

/// Canonical integral basis data of an ideal: {a, b + g*delta} with
/// b < a, g | a, g | b, and a*g | N(b + g*delta).
struct IdealTriple {
    Int a;
    Int b;
    Int g;
};

/// Element norm N(b + g*delta): b^2 - g^2*D, or ((2b+g)^2 - g^2*D)/4 when
/// D == 1 (mod 4).
Int element_norm(const FieldData& fd, const Int& b, const Int& g);

/// True iff (a,b,g) is the canonical basis data of an ideal. Requires
/// a > 0, g > 0, b >= 0; condition failures return false rather than throw.
bool validate_ideal(const FieldData& fd, const Int& a, const Int& b, const Int& g);

/// Ideal norm N(I) = [O_K : I] = a*g. Rejects invalid triples.
Int ideal_norm(const FieldData& fd, const IdealTriple& t);

/// All valid triples with a <= a_max, ordered by (a, b, g).
std::vector<IdealTriple> enumerate_ideals(const FieldData& fd, const Int& a_max);

/// A member of S(D): 0 < b < a and a | b^2 - D (b^2 - D may be negative).
struct PairAB {
    Int d;
    Int a;
    Int b;
};

/// Validating constructor for PairAB. Throws on any condition failure.
PairAB pair_ab(const Int& d, const Int& a, const Int& b);

bool pair_ok(const Int& d, const Int& a, const Int& b);

/// Normalizes an ideal to the pair whose lattice is similar to the ideal
/// lattice: divide by g, then (a,b) for D != 1 (mod 4) and (2a, 2b+1) for
/// D == 1 (mod 4). Rejects invalid triples, and triples whose image falls
/// outside S(D) (b = 0 with D != 1 mod 4).
PairAB to_pair(const FieldData& fd, const IdealTriple& t);

/// All of S(D) with b <= b_max, ordered by (b, a). Divisors of |b^2 - D|
/// come from factor(); b^2 = D cannot occur for squarefree D.
std::vector<PairAB> enumerate_pairs(const Int& d, const Int& b_max);

/// Exact square of det(Lambda(a,b)) = 2a*sqrt(D), i.e. 4*a^2*D.
Int det_sq(const PairAB& p);

}  // namespace idlat
