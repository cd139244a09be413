#pragma once

#include <vector>

#include "idlat/lattice2.hpp"

namespace idlat {

/// The rank-n well-rounded-but-unstable family: Z-span of
/// {e1, x_theta, e3, ..., en} with x_theta = cos(theta) e1 + sin(theta) e2.
/// The angle never appears; t = cos(theta) in (0, 1/2] keeps everything
/// rational, with s = sin^2(theta) = 1 - t^2 in [3/4, 1).
struct WrLattice {
    int n;
    Ratio t;
};

/// Validates n >= 2 and 0 < t <= 1/2.
WrLattice wr_lattice(int n, const Ratio& t);

/// n x n Gram matrix: identity except the block [[1, t], [t, 1]] on the
/// first two coordinates.
std::vector<std::vector<Ratio>> wr_gram(const WrLattice& w);

/// True iff all n successive minima equal 1. The lattice splits as a
/// rank-2 block orthogonal to Z^(n-2); the block's minima come from exact
/// rational Gauss reduction.
bool wr_minima_check(const WrLattice& w);

/// Instability certificate via the sublattice Omega = span{e1, x_theta}:
/// det(Lambda)^(1/n) > det(Omega)^(1/2) iff s^2 > s^n, compared as exact
/// rationals. For n = 2 the two sides coincide and the witness proves
/// nothing, consistent with all rank-2 WR lattices being semi-stable.
struct WrStability {
    bool unstable;
    Ratio s;        // sin^2(theta)
    Ratio s_sq;     // det(Omega)-side, raised to the common power
    Ratio s_pow_n;  // det(Lambda)-side
};

WrStability wr_stability(const WrLattice& w);

}  // namespace idlat
