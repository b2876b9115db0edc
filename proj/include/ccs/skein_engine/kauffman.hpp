#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccs/algebra/laurent.hpp"
#include "ccs/knot_model/diagram.hpp"
#include "ccs/skein_engine/limits.hpp"

namespace ccs {

// Memo for the descending-diagram skein, keyed by canonical diagram code.
// Share it across calls for one knot; use one cache per knot when running
// several knots concurrently.
struct SkeinCache {
    std::map<std::vector<int>, LaurentPoly2> memo;
    long long hits = 0;
    long long misses = 0;
    bool enabled = true;
};

namespace detail {

// Crossings with ports 0..3 counterclockwise, strands on diagonals (0,2)
// and (1,3); od[c] is the over diagonal. Connectivity is an involution on
// half-edges he = 4c + p. loops counts crossing-free circles split off.
struct SDiag {
    std::map<int, int> od;
    std::map<int, int> mate;
    int loops = 0;
};

// PD convention puts the under strand on diagonal (0,2), so od = 1
inline SDiag sdiag_from(const KnotDiagram& d) {
    SDiag g;
    std::map<int, std::vector<int>> ends;
    for (int c = 0; c < d.size(); ++c) {
        g.od[c] = 1;
        const Crossing& x = d[c];
        const int lab[4] = {x.a, x.b, x.c, x.d};
        for (int p = 0; p < 4; ++p) ends[lab[p]].push_back(4 * c + p);
    }
    for (const auto& [lab, hs] : ends) {
        g.mate[hs[0]] = hs[1];
        g.mate[hs[1]] = hs[0];
    }
    return g;
}

// remove ports u, v joining their mates; u--v becomes part of one strand
inline void splice(SDiag& g, int u, int v) {
    const int a = g.mate.at(u);
    g.mate.erase(u);
    const int b = g.mate.at(v);
    g.mate.erase(v);
    if (a == v) {  // u and v were directly connected
        ++g.loops;
        return;
    }
    g.mate[a] = b;
    g.mate[b] = a;
}

inline void delete_crossing(SDiag& g, int c, int p0, int p1, int p2, int p3) {
    g.od.erase(c);
    splice(g, 4 * c + p0, 4 * c + p1);
    splice(g, 4 * c + p2, 4 * c + p3);
}

// eagerly remove R1 kinks; returns the collected a-exponent
inline int remove_kinks(SDiag& g) {
    int ea = 0;
    for (bool again = true; again;) {
        again = false;
        for (const auto& kv : g.od) {
            const int c = kv.first, od = kv.second;
            int found = -1;
            for (int i = 0; i < 4 && found < 0; ++i) {
                auto m = g.mate.find(4 * c + i);
                if (m != g.mate.end() && m->second == 4 * c + (i + 1) % 4)
                    found = i;
            }
            if (found < 0) continue;
            ea += ((found + od) % 2 == 1) ? 1 : -1;
            g.mate.erase(4 * c + found);
            g.mate.erase(4 * c + (found + 1) % 4);
            g.od.erase(c);
            splice(g, 4 * c + (found + 2) % 4, 4 * c + (found + 3) % 4);
            again = true;
            break;
        }
    }
    return ea;
}

// global walk order: each strand component from its smallest half-edge
inline std::vector<std::pair<int, int>> traversal(const SDiag& g) {
    std::vector<std::pair<int, int>> order;
    std::set<int> seen;
    for (const auto& [start, m0] : g.mate) {
        if (seen.count(start)) continue;
        int c = start / 4, p = start % 4;
        while (!seen.count(4 * c + p)) {
            seen.insert(4 * c + p);
            order.push_back({c, p});
            const int out = (p + 2) % 4;
            seen.insert(4 * c + out);
            const int nxt = g.mate.at(4 * c + out);
            c = nxt / 4;
            p = nxt % 4;
        }
    }
    return order;
}

// first crossing met on its under diagonal; -1 when the diagram descends
inline int first_bad(const SDiag& g,
                     const std::vector<std::pair<int, int>>& order) {
    std::map<int, int> first;
    for (auto [c, p] : order)
        if (!first.count(c)) first[c] = p;
    for (auto [c, p] : order)
        if (first.at(c) == p && p % 2 != g.od.at(c)) return c;
    return -1;
}

inline std::pair<int, int> ncomp_selfwrithe(const SDiag& g) {
    std::vector<std::vector<std::pair<int, int>>> comps;
    std::set<int> seen;
    for (const auto& [start, m0] : g.mate) {
        if (seen.count(start)) continue;
        comps.emplace_back();
        int c = start / 4, p = start % 4;
        while (!seen.count(4 * c + p)) {
            seen.insert(4 * c + p);
            comps.back().push_back({c, p});
            const int out = (p + 2) % 4;
            seen.insert(4 * c + out);
            const int nxt = g.mate.at(4 * c + out);
            c = nxt / 4;
            p = nxt % 4;
        }
    }
    std::map<std::pair<int, int>, int> comp_of;  // (crossing, diagonal)
    std::map<std::pair<int, int>, int> entry;    // entry port per diagonal
    for (int i = 0; i < (int)comps.size(); ++i)
        for (auto [c, p] : comps[i]) {
            comp_of[{c, p % 2}] = i;
            entry[{c, p % 2}] = p;
        }
    int w = 0;
    for (const auto& [c, od] : g.od) {
        if (comp_of.at({c, 0}) != comp_of.at({c, 1})) continue;
        const int u_in = entry.at({c, 1 - od});
        const int o_in = entry.at({c, od});
        w += (((o_in - u_in) % 4 + 4) % 4 == 3) ? 1 : -1;
    }
    return {(int)comps.size(), w};
}

// canonical code: min over start crossings and rotations (no reflection)
inline std::vector<int> canon(const SDiag& g) {
    std::vector<int> best;
    for (const auto& [c0, od0] : g.od) {
        for (int r0 = 0; r0 < 4; ++r0) {
            std::map<int, int> cid{{c0, 0}};
            std::map<int, int> rot{{c0, r0}};
            std::vector<int> queue{c0};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                const int c = queue[qi];
                for (int dp = 0; dp < 4; ++dp) {
                    const int m = g.mate.at(4 * c + (rot.at(c) + dp) % 4);
                    const int c2 = m / 4, p2 = m % 4;
                    if (!cid.count(c2)) {
                        cid[c2] = (int)cid.size();
                        rot[c2] = p2;
                        queue.push_back(c2);
                    }
                }
            }
            std::vector<int> code;
            code.reserve(queue.size() * 9);
            for (int c : queue) {
                for (int dp = 0; dp < 4; ++dp) {
                    const int m = g.mate.at(4 * c + (rot.at(c) + dp) % 4);
                    code.push_back(cid.at(m / 4));
                    code.push_back((m % 4 - rot.at(m / 4) + 4) % 4);
                }
                code.push_back(((g.od.at(c) - rot.at(c)) % 2 + 2) % 2);
            }
            if (best.empty() || code < best) best = std::move(code);
        }
    }
    return best;
}

// connected pieces of the crossing graph as separate diagrams
inline std::vector<SDiag> split(const SDiag& g) {
    std::set<int> remaining;
    for (const auto& kv : g.od) remaining.insert(kv.first);
    std::vector<SDiag> pieces;
    while (!remaining.empty()) {
        const int c0 = *remaining.begin();
        std::set<int> grp{c0};
        std::vector<int> queue{c0};
        while (!queue.empty()) {
            const int c = queue.back();
            queue.pop_back();
            for (int p = 0; p < 4; ++p) {
                const int c2 = g.mate.at(4 * c + p) / 4;
                if (!grp.count(c2)) {
                    grp.insert(c2);
                    queue.push_back(c2);
                }
            }
        }
        SDiag piece;
        for (int c : grp) {
            piece.od[c] = g.od.at(c);
            for (int p = 0; p < 4; ++p)
                piece.mate[4 * c + p] = g.mate.at(4 * c + p);
            remaining.erase(c);
        }
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

struct SkeinCtx {
    SkeinCache* cache;
    const SkeinLimits* lim;
    long long nodes = 0;
    std::vector<LaurentPoly2> dpow;

    SkeinCtx(SkeinCache* c, const SkeinLimits* l) : cache(c), lim(l) {
        LaurentPoly2 one;
        one.add_term(0, 0, 1);
        dpow.push_back(std::move(one));
    }

    // powers of delta = (a + 1/a)/z - 1, the crossingless-loop value
    const LaurentPoly2& delta_pow(int k) {
        while ((int)dpow.size() <= k) {
            LaurentPoly2 d;
            d.add_term(1, -1, 1);
            d.add_term(-1, -1, 1);
            d.add_term(0, 0, -1);
            dpow.push_back(dpow.back() * d);
        }
        return dpow[k];
    }
};

inline LaurentPoly2 apow(int ea) {
    LaurentPoly2 r;
    r.add_term(ea, 0, 1);
    return r;
}

// lambda of the diagram: the unnormalized skein value with
// L(X) + L(Xsw) = z (L(S01) + L(S03)), kink at ports (i, i+1) worth
// a^{+1} when (i + od) is odd and a^{-1} otherwise, and a descending
// diagram worth a^selfwrithe delta^{ncomp-1}
inline LaurentPoly2 lambda_core(SDiag d, SkeinCtx& ctx) {
    if (++ctx.nodes > ctx.lim->max_nodes)
        throw ResourceLimit("skein expansion exceeded " +
                            std::to_string(ctx.lim->max_nodes) + " nodes");
    const int ea = remove_kinks(d);
    const int extra = d.loops;
    d.loops = 0;
    if (d.od.empty()) return apow(ea) * ctx.delta_pow(std::max(extra - 1, 0));

    auto pieces = split(d);
    if (pieces.size() > 1) {
        LaurentPoly2 res =
            apow(ea) * ctx.delta_pow(extra + (int)pieces.size() - 1);
        for (auto& sub : pieces) res = res * lambda_core(std::move(sub), ctx);
        return res;
    }

    std::vector<int> key;
    if (ctx.cache->enabled) {
        key = canon(d);
        auto it = ctx.cache->memo.find(key);
        if (it != ctx.cache->memo.end()) {
            ++ctx.cache->hits;
            return apow(ea) * it->second * ctx.delta_pow(extra);
        }
    }
    auto order = traversal(d);
    const int c = first_bad(d, order);
    LaurentPoly2 hit;
    if (c < 0) {
        auto [ncomp, w] = ncomp_selfwrithe(d);
        hit = apow(w) * ctx.delta_pow(ncomp - 1);
    } else {
        SDiag dsw = d;
        dsw.od[c] ^= 1;
        SDiag dA = d;
        delete_crossing(dA, c, 0, 1, 2, 3);
        SDiag dB = std::move(d);
        delete_crossing(dB, c, 0, 3, 1, 2);
        LaurentPoly2 z;
        z.add_term(0, 1, 1);
        hit = z * lambda_core(std::move(dA), ctx) +
              z * lambda_core(std::move(dB), ctx) -
              lambda_core(std::move(dsw), ctx);
    }
    if (ctx.cache->enabled) {
        ++ctx.cache->misses;
        ctx.cache->memo[std::move(key)] = hit;
    }
    return apow(ea) * hit * ctx.delta_pow(extra);
}

}  // namespace detail

// Kauffman polynomial F(a, z), normalized to 1 on the unknot
inline LaurentPoly2 kauffman_polynomial(const KnotDiagram& d, SkeinCache& cache,
                                        const SkeinLimits& lim = {}) {
    if (d.size() > lim.max_crossings)
        throw ResourceLimit("diagram has " + std::to_string(d.size()) +
                            " crossings, limit " +
                            std::to_string(lim.max_crossings));
    detail::SkeinCtx ctx(&cache, &lim);
    return detail::lambda_core(detail::sdiag_from(d), ctx)
        .shifted_a(-d.writhe());
}

// Dubrovnik polynomial D(a, z) = F(ia, -iz); every monomial of a knot's F
// has even total degree, so the twist is a real sign
inline LaurentPoly2 dubrovnik(const KnotDiagram& d, SkeinCache& cache,
                              const SkeinLimits& lim = {}) {
    LaurentPoly2 f = kauffman_polynomial(d, cache, lim);
    LaurentPoly2 r;
    for (const auto& [k, c] : f.terms()) {
        const long long p = k.first, q = k.second;
        if ((p + q) % 2 != 0)
            throw std::logic_error("F monomial with odd total degree");
        const bool neg = (((p + q) / 2 + q) % 2 + 2) % 2 == 1;
        r.add_term(p, q, neg ? -c : c);
    }
    return r;
}

// Jones polynomial from F by a = -t^{-3/4}, z = t^{1/4} + t^{-1/4}
inline LaurentPoly jones_via_skein(const KnotDiagram& d, SkeinCache& cache,
                                   const SkeinLimits& lim = {}) {
    LaurentPoly2 f = kauffman_polynomial(d, cache, lim);
    long long qmax = 0;
    for (const auto& [k, c] : f.terms()) qmax = std::max(qmax, k.second);
    std::vector<std::vector<Int>> binom(qmax + 1);
    for (long long q = 0; q <= qmax; ++q) {
        binom[q].assign(q + 1, 1);
        for (long long j = 1; j < q; ++j)
            binom[q][j] = binom[q - 1][j - 1] + binom[q - 1][j];
    }
    std::map<long long, Int> quarter;  // exponents in t^{1/4}
    for (const auto& [k, c] : f.terms()) {
        const long long p = k.first, q = k.second;
        if (q < 0)
            throw std::logic_error("negative z power in a knot F polynomial");
        const Int s = (p % 2 != 0) ? Int(-c) : c;
        for (long long j = 0; j <= q; ++j)
            quarter[-3 * p + q - 2 * j] += s * binom[q][j];
    }
    LaurentPoly v;
    for (const auto& [e4, c] : quarter) {
        if (c == 0) continue;
        if ((e4 % 4 + 4) % 4 != 0)
            throw std::logic_error("Jones specialization left exponent " +
                                   std::to_string(e4) + "/4");
        v.add_term(e4 / 2, c);
    }
    return v;
}

}  // namespace ccs
