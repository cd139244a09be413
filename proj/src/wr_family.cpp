#include "idlat/wr_family.hpp"

namespace idlat {

WrLattice wr_lattice(int n, const Ratio& t) {
    if (n < 2) throw std::invalid_argument("wr_lattice: requires n >= 2");
    if (t <= 0 || t > Ratio(1, 2))
        throw std::invalid_argument("wr_lattice: requires 0 < t <= 1/2");
    return {n, t};
}

std::vector<std::vector<Ratio>> wr_gram(const WrLattice& w) {
    std::vector<std::vector<Ratio>> g(w.n, std::vector<Ratio>(w.n, Ratio(0)));
    for (int i = 0; i < w.n; ++i) g[i][i] = 1;
    g[0][1] = w.t;
    g[1][0] = w.t;
    return g;
}

bool wr_minima_check(const WrLattice& w) {
    const auto red = detail::gauss_reduce<Ratio>(Ratio(1), w.t, Ratio(1));
    return red.a == 1 && red.c == 1;
}

WrStability wr_stability(const WrLattice& w) {
    const Ratio s = 1 - w.t * w.t;
    Ratio s_pow_n(1);
    for (int i = 0; i < w.n; ++i) s_pow_n *= s;
    const Ratio s_sq = s * s;
    return {s_sq > s_pow_n, s, s_sq, s_pow_n};
}

}  // namespace idlat
