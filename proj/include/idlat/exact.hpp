#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace idlat {

/// Exact arbitrary-precision integer. Every quantity that enters a verdict
/// is an Int (or a Ratio of Ints); floating point never decides anything.
using Int = mpz_class;

/// Exact rational, always canonical: denominator > 0, lowest terms.
using Ratio = mpq_class;

/// Thrown when a computation contradicts an identity the library is built
/// on (as opposed to a caller passing bad input, which is invalid_argument).
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

/// Canonical rational p/q. Throws on q == 0.
Ratio make_ratio(const Int& num, const Int& den);

/// Parses "p" or "p/q" (decimal digits, optional leading sign). Decimal
/// points are rejected: inputs must stay exact.
Ratio parse_ratio(const std::string& text);

/// "p/q", or just "p" when the denominator is 1.
std::string ratio_str(const Ratio& r);

/// Floor of the square root. Throws on negative input.
Int isqrt(const Int& n);

/// True iff no prime square divides n. Requires n > 1.
bool is_squarefree(const Int& n);

/// Exact order of x versus y*sqrt(d) for y >= 0 and squarefree d > 1.
/// Decided on integers: sign handling plus x^2 vs y^2*d. A tie with y > 0
/// is impossible (d squarefree), so Equal only occurs at x = y = 0.
Ordering cmp_int_vs_surd(const Int& x, const Int& y, const Int& d);

/// Kronecker symbol (a|n); agrees with the Legendre symbol for odd prime n.
/// Throws on n == 0.
int kronecker(const Int& a, const Int& n);

/// Complete prime factorization of n > 1, primes ascending.
/// Deterministic wheel trial division; adequate through ~10^12 inputs.
std::vector<std::pair<Int, int>> factor(const Int& n);

/// All positive divisors of n >= 1, ascending.
std::vector<Int> divisors(const Int& n);

}  // namespace idlat
