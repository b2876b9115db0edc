#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccs/algebra/laurent.hpp"
#include "ccs/algebra/rational.hpp"
#include "ccs/knot_model/diagram.hpp"
#include "ccs/skein_engine/limits.hpp"
#include "ccs/skein_engine/union_find.hpp"

namespace ccs {

// Jones polynomial via the Kauffman bracket state sum: every crossing is
// resolved both ways, each of the 2^n states contributes
// A^{a-b} (-A^2 - A^{-2})^{circles-1}, and the writhe normalization
// (-A)^{-3w} maps the bracket to V_K(t) with V_unknot = 1. Convention
// check: the right-handed trefoil (writhe +3) gives -t^4 + t^3 + t.
inline LaurentPoly jones(const KnotDiagram& d, const SkeinLimits& lim = {}) {
    const int n = d.size();
    if (n == 0) return LaurentPoly(Int(1));
    if (n > lim.max_state_sum_crossings)
        throw ResourceLimit("bracket state sum over " + std::to_string(n) +
                            " crossings exceeds cap " +
                            std::to_string(lim.max_state_sum_crossings));
    const int N = 2 * n;

    std::vector<std::vector<Int>> binom(n + 2);
    for (int i = 0; i <= n + 1; ++i) {
        binom[i].assign(i + 1, Int(1));
        for (int j = 1; j < i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
    }

    std::map<long long, Int> bracket;  // A-exponent -> coefficient
    DisjointSets ds(N + 1);
    for (unsigned long long state = 0; state < (1ull << n); ++state) {
        ds.reset();
        long long aexp = 0;
        for (int i = 0; i < n; ++i) {
            const Crossing& x = d[i];
            if ((state >> i) & 1ull) {
                ds.unite(x.a, x.d);
                ds.unite(x.b, x.c);
                --aexp;
            } else {
                ds.unite(x.a, x.b);
                ds.unite(x.c, x.d);
                ++aexp;
            }
        }
        int circ = 0;
        for (int v = 1; v <= N; ++v)
            if (ds.find(v) == v) ++circ;
        const int m = circ - 1;
        for (int j = 0; j <= m; ++j) {
            Int coeff = binom[m][j];
            if (m % 2 != 0) coeff = -coeff;
            bracket[aexp + 2LL * m - 4LL * j] += coeff;
        }
    }

    const int w = d.writhe();
    const bool flip = ((w % 2) + 2) % 2 == 1;
    LaurentPoly out;
    for (const auto& [e, c] : bracket) {
        if (c == 0) continue;
        long long ee = e - 3LL * w;
        if (ee % 4 != 0)
            throw std::logic_error("bracket exponent not divisible by 4");
        out.add_term(-ee / 2, flip ? Int(-c) : c);  // t-exponent -ee/4, doubled
    }
    return out;
}

}  // namespace ccs
