#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "ccs/knot_model/diagram.hpp"

namespace ccs {

// Builds a diagram from a signed Dowker-Thistlethwaite code: entry i is
// the (signed) even label paired with odd label 2i+1, the sign saying
// whether the even pass goes over. Searches the 2^(n-1) crossing
// rotation states for one whose face count matches a sphere embedding
// (Euler: n + 2 faces). Returns nullopt when no planar realization
// exists; throws ValidationError when the list itself is malformed.
inline std::optional<KnotDiagram> diagram_from_dt(const std::vector<int>& dt) {
    int n = (int)dt.size();
    if (n == 0) return KnotDiagram();
    int N = 2 * n;

    std::vector<int> evens;
    evens.reserve(n);
    for (int v : dt) {
        int a = v < 0 ? -v : v;
        if (a < 2 || a > N || a % 2 != 0)
            throw ValidationError("DT entry " + std::to_string(v) +
                                  " is not an even label in range");
        evens.push_back(a);
    }
    std::sort(evens.begin(), evens.end());
    for (int i = 0; i < n; ++i)
        if (evens[i] != 2 * (i + 1))
            throw ValidationError("DT evens are not a permutation of 2..2n");

    auto prev_t = [&](int t) { return t > 1 ? t - 1 : N; };
    // half-edge (t, s): s=0 leaves pass t, s=1 arrives at pass t+1
    auto enc = [&](int t, int s) { return (t - 1) * 2 + s; };

    // rotation(k, r): the 4 half-edges around crossing k counterclockwise,
    // in one of the two possible interleavings of the odd and even strands
    struct Half {
        int t, s;
    };
    auto rotation = [&](int k, int r) -> std::array<Half, 4> {
        int o = 2 * k + 1;
        int e = dt[k] < 0 ? -dt[k] : dt[k];
        Half io{prev_t(o), 1}, oo{o, 0}, ie{prev_t(e), 1}, oe{e, 0};
        if (r == 0) return {io, ie, oo, oe};
        return {io, oe, oo, ie};
    };

    std::vector<int> rho_next(2 * N);
    std::vector<char> seen(2 * N);
    for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
        for (int k = 0; k < n; ++k) {
            int r = k == 0 ? 0 : (int)((bits >> (k - 1)) & 1u);
            auto rot = rotation(k, r);
            for (int i = 0; i < 4; ++i)
                rho_next[enc(rot[i].t, rot[i].s)] =
                    enc(rot[(i + 1) % 4].t, rot[(i + 1) % 4].s);
        }
        std::fill(seen.begin(), seen.end(), 0);
        int faces = 0;
        for (int h0 = 0; h0 < 2 * N; ++h0) {
            if (seen[h0]) continue;
            ++faces;
            int h = h0;
            while (!seen[h]) {
                seen[h] = 1;
                h = rho_next[h ^ 1];  // alpha flips s, then rho
            }
        }
        if (faces != n + 2) continue;

        std::vector<Crossing> pd(n);
        for (int k = 0; k < n; ++k) {
            int o = 2 * k + 1;
            int e = dt[k] < 0 ? -dt[k] : dt[k];
            bool even_over = dt[k] > 0;
            int r = k == 0 ? 0 : (int)((bits >> (k - 1)) & 1u);
            auto rot = rotation(k, r);
            int under = even_over ? o : e;
            int i0 = -1;
            for (int i = 0; i < 4; ++i)
                if (rot[i].t == prev_t(under) && rot[i].s == 1) i0 = i;
            pd[k] = {rot[i0].t, rot[(i0 + 1) % 4].t, rot[(i0 + 2) % 4].t,
                     rot[(i0 + 3) % 4].t};
        }
        return KnotDiagram(std::move(pd));
    }
    return std::nullopt;
}

}  // namespace ccs
