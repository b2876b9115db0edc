#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccs/knot_model/diagram.hpp"
#include "ccs/skein_engine/limits.hpp"
#include "ccs/skein_engine/union_find.hpp"

namespace ccs {

// Seifert matrix of the canonical Seifert surface. entries is square of
// size 2*genus_bound; genus_bound is the genus of the surface the matrix
// was read off (an upper bound for the knot genus).
struct SeifertMatrix {
    int genus_bound = 0;
    std::vector<std::vector<int>> entries;

    int dim() const { return (int)entries.size(); }
};

namespace detail {

using Slot = std::pair<int, int>;  // (crossing, port)

inline int label_at(const KnotDiagram& d, int c, int j) {
    const Crossing& x = d[c];
    switch (j) {
        case 0: return x.a;
        case 1: return x.b;
        case 2: return x.c;
        default: return x.d;
    }
}

// ports where the flow leaves the crossing: the under-strand leaves at 2,
// the over-strand at 1 (positive) or 3 (negative)
inline std::vector<std::array<bool, 4>> out_slots(const KnotDiagram& d) {
    std::vector<std::array<bool, 4>> out(d.size(), {false, false, false, false});
    for (int c = 0; c < d.size(); ++c) {
        out[c][2] = true;
        out[c][d.sign(c) == 1 ? 1 : 3] = true;
    }
    return out;
}

// arc label -> its two slots, in crossing order
inline std::vector<std::vector<Slot>> arc_slots(const KnotDiagram& d) {
    std::vector<std::vector<Slot>> slots(d.arcs() + 1);
    for (int c = 0; c < d.size(); ++c)
        for (int j = 0; j < 4; ++j) slots[label_at(d, c, j)].push_back({c, j});
    return slots;
}

// union-find over arc labels joined by the oriented smoothing
inline DisjointSets seifert_circles(const KnotDiagram& d) {
    DisjointSets ds(d.arcs() + 1);
    for (int c = 0; c < d.size(); ++c) {
        const Crossing& x = d[c];
        if (d.sign(c) == 1) {
            ds.unite(x.a, x.b);
            ds.unite(x.d, x.c);
        } else {
            ds.unite(x.a, x.d);
            ds.unite(x.b, x.c);
        }
    }
    return ds;
}

// faces as orbits of rho . alpha on slots; a planar code has n + 2 of them
inline std::vector<std::vector<Slot>> faces(const KnotDiagram& d) {
    const int n = d.size();
    auto slots = arc_slots(d);
    auto alpha = [&](Slot s) {
        const auto& ss = slots[label_at(d, s.first, s.second)];
        return ss[0] == s ? ss[1] : ss[0];
    };
    std::vector<std::vector<Slot>> out;
    std::set<Slot> seen;
    for (int c = 0; c < n; ++c)
        for (int j = 0; j < 4; ++j) {
            Slot s{c, j};
            if (seen.count(s)) continue;
            std::vector<Slot> orbit;
            while (!seen.count(s)) {
                seen.insert(s);
                orbit.push_back(s);
                Slot t = alpha(s);
                s = {t.first, (t.second + 1) % 4};
            }
            out.push_back(std::move(orbit));
        }
    if ((int)out.size() != n + 2)
        throw ValidationError("diagram is not planar: " +
                              std::to_string(out.size()) + " faces, expected " +
                              std::to_string(n + 2));
    return out;
}

// A face is defective when it holds two arcs of distinct Seifert circles
// traversed with equal sign (sign +1 iff the slot is an out-slot, which
// puts the face on the flow-right of the arc).
struct Defect {
    std::vector<Slot> orbit;
    int i = 0, k = 0;
};

inline std::optional<Defect> first_defect(const KnotDiagram& d) {
    auto fs = faces(d);
    auto ds = seifert_circles(d);
    auto outs = out_slots(d);
    for (auto& orbit : fs) {
        const int m = (int)orbit.size();
        std::vector<int> rep(m);
        std::vector<int> sgn(m);
        for (int i = 0; i < m; ++i) {
            auto [c, j] = orbit[i];
            rep[i] = ds.find(label_at(d, c, j));
            sgn[i] = outs[c][j] ? 1 : -1;
        }
        for (int i = 0; i < m; ++i)
            for (int k = i + 1; k < m; ++k)
                if (rep[i] != rep[k] && sgn[i] == sgn[k])
                    return Defect{std::move(orbit), i, k};
    }
    return std::nullopt;
}

// Crossings with four counterclockwise ports holding wire ids. Wires are
// merged by join; pd() orients by traversal and assigns consecutive labels.
class WireBuilder {
public:
    int wire() { return uf_.add(); }

    void crossing(int w0, int w1, int w2, int w3, int over_diag) {
        ports_.push_back({w0, w1, w2, w3});
        over_.push_back(over_diag);
    }

    void join(int a, int b) { uf_.unite(a, b); }

    KnotDiagram pd() {
        const int n = (int)ports_.size();
        std::map<int, std::vector<Slot>> slots;
        for (int c = 0; c < n; ++c)
            for (int j = 0; j < 4; ++j)
                slots[uf_.find(ports_[c][j])].push_back({c, j});
        for (const auto& [w, ss] : slots)
            if (ss.size() != 2)
                throw std::logic_error("wire with " + std::to_string(ss.size()) +
                                       " ends");
        // walk the knot starting into crossing 0 at port 0; the wire
        // entered at pass k becomes arc k (pass 0 wraps to 2n)
        const Slot start{0, 0};
        Slot cur = start;
        std::map<int, int> entered;
        std::vector<std::vector<int>> arrivals(n);
        int k = 0;
        for (;;) {
            auto [c, p] = cur;
            entered[uf_.find(ports_[c][p])] = k;
            arrivals[c].push_back(p);
            int wout = uf_.find(ports_[c][(p + 2) % 4]);
            const auto& ss = slots[wout];
            cur = (ss[0] == Slot{c, (p + 2) % 4}) ? ss[1] : ss[0];
            ++k;
            if (cur == start) break;
            if (k > 2 * n) throw std::logic_error("wire traversal stuck");
        }
        if (k != 2 * n)
            throw ValidationError("closure is a multi-component link");
        std::vector<Crossing> out(n);
        for (int c = 0; c < n; ++c) {
            const auto& ps = arrivals[c];
            if (ps.size() != 2 || (ps[0] + ps[1]) % 2 != 1)
                throw std::logic_error("crossing entered on one diagonal");
            int under_diag = 1 - over_[c];
            int u = (ps[0] % 2 == under_diag % 2) ? ps[0] : ps[1];
            int lab[4];
            for (int j = 0; j < 4; ++j) {
                int i = entered.at(uf_.find(ports_[c][(u + j) % 4]));
                lab[j] = i > 0 ? i : 2 * n;
            }
            out[c] = {lab[0], lab[1], lab[2], lab[3]};
        }
        return KnotDiagram(std::move(out));
    }

private:
    std::vector<std::array<int, 4>> ports_;
    std::vector<int> over_;
    DisjointSets uf_;
};

// One braiding move: push the arc at orbit[i] across the arc at orbit[k]
// (both bound the same face with equal traversal sign, distinct circles).
// The replacement finger crosses over in both new crossings; their tuples
// depend on which side of the arcs the face lies. Everything is rebuilt
// through the wire builder so labels come out consecutive again.
inline KnotDiagram vogel_move(const KnotDiagram& d, const Defect& df) {
    auto outs = out_slots(d);
    const int n = d.size();
    auto [ca, ja] = df.orbit[df.i];
    auto [cb, jb] = df.orbit[df.k];
    const int alpha_arc = label_at(d, ca, ja);
    const int beta_arc = label_at(d, cb, jb);
    const int sgn = outs[ca][ja] ? 1 : -1;

    WireBuilder b;
    std::vector<std::array<int, 4>> w(n);
    for (int c = 0; c < n; ++c) {
        for (int j = 0; j < 4; ++j) w[c][j] = b.wire();
        b.crossing(w[c][0], w[c][1], w[c][2], w[c][3], 1);
    }
    int wT = b.wire(), wm = b.wire();
    int wb1 = b.wire(), wb2 = b.wire();
    int wa1 = b.wire(), wa2 = b.wire();
    if (sgn == 1) {
        // face on flow-right of both arcs
        b.crossing(wT, wa1, wb2, wm, 1);
        b.crossing(wb1, wa2, wT, wm, 1);
    } else {
        // face on flow-left: mirrored finger
        b.crossing(wT, wm, wb2, wa1, 1);
        b.crossing(wb1, wm, wT, wa2, 1);
    }

    auto slots = arc_slots(d);
    for (int lab = 1; lab <= 2 * n; ++lab) {
        const auto& ss = slots[lab];
        Slot os = outs[ss[0].first][ss[0].second] ? ss[0] : ss[1];
        Slot is = (os == ss[0]) ? ss[1] : ss[0];
        int wo = w[os.first][os.second];
        int wi = w[is.first][is.second];
        if (lab == alpha_arc) {
            b.join(wo, wa1);
            b.join(wa2, wi);
        } else if (lab == beta_arc) {
            b.join(wo, wb1);
            b.join(wb2, wi);
        } else {
            b.join(wo, wi);
        }
    }
    return b.pd();
}

// Remove reducible crossings (both smoothed strands on one arc). Each
// removal cuts one pass from the strand; labels are cycled so the cut
// never straddles the wrap, then shifted down by two.
inline KnotDiagram strip_kinks(KnotDiagram d) {
    for (bool changed = true; changed;) {
        changed = false;
        const int n = d.size();
        const int N = 2 * n;
        for (int c = 0; c < n && !changed; ++c) {
            int lab[4] = {d[c].a, d[c].b, d[c].c, d[c].d};
            for (int j = 0; j < 4 && !changed; ++j) {
                if (lab[j] != lab[(j + 1) % 4]) continue;
                if (n == 1) return KnotDiagram();
                const int L = lab[j];
                auto shifted = [&](int v) { return (v - L + 1 + N) % N + 1; };
                std::vector<Crossing> rest;
                rest.reserve(n - 1);
                for (int c2 = 0; c2 < n; ++c2) {
                    if (c2 == c) continue;
                    const Crossing& x = d[c2];
                    int t[4] = {shifted(x.a), shifted(x.b), shifted(x.c),
                                shifted(x.d)};
                    // kink arcs became 2 and 3; 3 merges into 1
                    for (int& v : t) v = (v == 3) ? 1 : (v >= 4 ? v - 2 : v);
                    rest.push_back({t[0], t[1], t[2], t[3]});
                }
                d = KnotDiagram(std::move(rest));
                changed = true;
            }
        }
    }
    return d;
}

inline KnotDiagram braided(KnotDiagram d, const SkeinLimits& lim) {
    int moves = 0;
    for (;;) {
        if (d.size() == 0) return d;
        auto df = first_defect(d);
        if (!df) return d;
        if (++moves > lim.max_braiding_moves)
            throw ResourceLimit("braiding exceeded " +
                                std::to_string(lim.max_braiding_moves) +
                                " moves");
        d = vogel_move(d, *df);
    }
}

// Structure of a braided (defect-free) diagram: Seifert circles ordered
// along the Seifert-graph path, per-column band lists in cyclic time
// order, and each circle's cyclic crossing positions.
struct BraidStructure {
    int circles = 0;
    std::vector<std::vector<std::pair<int, int>>> columns;  // (crossing, sign)
    std::vector<std::map<int, int>> circle_pos;  // crossing -> walk position
};

inline BraidStructure braid_structure(const KnotDiagram& d) {
    const int n = d.size();
    auto ds = seifert_circles(d);
    std::vector<int> reps;
    for (int lab = 1; lab <= 2 * n; ++lab)
        if (ds.find(lab) == lab) reps.push_back(lab);
    const int k = (int)reps.size();
    std::map<int, int> rep_idx;
    for (int i = 0; i < k; ++i) rep_idx[reps[i]] = i;

    // each crossing is a band between two circles; the Seifert graph of a
    // braided diagram must be a path
    std::map<std::pair<int, int>, std::vector<int>> edges;
    for (int c = 0; c < n; ++c) {
        std::set<int> ci;
        for (int j = 0; j < 4; ++j) ci.insert(rep_idx[ds.find(label_at(d, c, j))]);
        if (ci.size() != 2)
            throw ValidationError(
                "crossing joins a Seifert circle to itself (reducible diagram)");
        int lo = *ci.begin(), hi = *ci.rbegin();
        edges[{lo, hi}].push_back(c);
    }
    std::vector<int> deg(k, 0);
    for (const auto& [e, cs] : edges) {
        ++deg[e.first];
        ++deg[e.second];
    }
    std::vector<int> ends;
    for (int v = 0; v < k; ++v)
        if (deg[v] == 1) ends.push_back(v);
    for (int v = 0; v < k; ++v)
        if (deg[v] > 2) ends.clear();
    if (ends.size() != 2)
        throw std::logic_error("Seifert graph of braided diagram is not a path");
    std::vector<int> order{ends[0]};
    std::set<int> in_order{ends[0]};
    while ((int)order.size() < k) {
        int last = order.back();
        for (const auto& [e, cs] : edges) {
            int other = -1;
            if (e.first == last) other = e.second;
            else if (e.second == last) other = e.first;
            if (other >= 0 && !in_order.count(other)) {
                order.push_back(other);
                in_order.insert(other);
                break;
            }
        }
    }

    auto slots = arc_slots(d);
    auto outs = out_slots(d);
    // walk a circle along the flow, recording the crossing sequence
    auto circle_walk = [&](int start_arc) {
        std::vector<int> seq;
        std::set<int> seen;
        int arc = start_arc;
        while (!seen.count(arc)) {
            seen.insert(arc);
            const auto& ss = slots[arc];
            Slot cin = !outs[ss[0].first][ss[0].second] ? ss[0] : ss[1];
            auto [c, j] = cin;
            seq.push_back(c);
            int nxt;
            if (d.sign(c) == 1) {
                if (j != 0 && j != 3) throw std::logic_error("bad in-port");
                nxt = (j == 0) ? 1 : 2;
            } else {
                if (j != 0 && j != 1) throw std::logic_error("bad in-port");
                nxt = (j == 0) ? 3 : 2;
            }
            arc = label_at(d, c, nxt);
        }
        return seq;
    };
    std::vector<int> start_arc(k, 0);
    for (int lab = 1; lab <= 2 * n; ++lab) {
        int r = rep_idx[ds.find(lab)];
        if (start_arc[r] == 0) start_arc[r] = lab;
    }
    std::vector<std::vector<int>> walks(k);
    for (int r = 0; r < k; ++r) walks[r] = circle_walk(start_arc[r]);

    BraidStructure st;
    st.circles = k;
    for (int j = 0; j + 1 < k; ++j) {
        int lo = std::min(order[j], order[j + 1]);
        int hi = std::max(order[j], order[j + 1]);
        const auto& cs = edges.at({lo, hi});
        std::set<int> members(cs.begin(), cs.end());
        std::vector<int> w_lo, w_hi;
        for (int c : walks[order[j]])
            if (members.count(c)) w_lo.push_back(c);
        for (int c : walks[order[j + 1]])
            if (members.count(c)) w_hi.push_back(c);
        if (w_lo.size() != cs.size() || w_hi.size() != cs.size())
            throw std::logic_error("column band count mismatch");
        if (cs.size() > 1) {
            // both circles must see the column's bands in one cyclic order
            auto it = std::find(w_hi.begin(), w_hi.end(), w_lo[0]);
            std::vector<int> rot(it, w_hi.end());
            rot.insert(rot.end(), w_hi.begin(), it);
            if (rot != w_lo)
                throw std::logic_error("column cyclic orders differ");
        }
        std::vector<std::pair<int, int>> col;
        for (int c : w_lo) col.push_back({c, d.sign(c)});
        st.columns.push_back(std::move(col));
    }
    for (int r = 0; r < k; ++r) {
        std::map<int, int> pos;
        const auto& wk = walks[order[r]];
        for (int i = 0; i < (int)wk.size(); ++i) pos[wk[i]] = i;
        st.circle_pos.push_back(std::move(pos));
    }
    return st;
}

}  // namespace detail

// Seifert matrix from the braided form of the diagram. The diagram is
// first braided (its Seifert circles made coherently nested) by pushing
// arcs across defective faces; the surface of the braided diagram has a
// basis of annular loops, one per consecutive band pair in each column,
// whose linking numbers fill the matrix:
//   V[l][l]  = -(eps1 + eps2)/2 for the loop's two band signs,
//   same column, consecutive loops sharing a band of sign eps:
//     eps = +1 adds +1 at [earlier][later], eps = -1 adds -1 at
//     [later][earlier],
//   adjacent columns, exactly one endpoint of the later loop strictly
//   inside the earlier loop's span on the shared circle: +1 at [l][l']
//   for the start, -1 for the end.
// The right-handed trefoil comes out as [[-1,1],[0,-1]].
inline SeifertMatrix seifert_matrix(const KnotDiagram& d,
                                    const SkeinLimits& lim = {}) {
    KnotDiagram bd = detail::braided(detail::strip_kinks(d), lim);
    if (bd.size() == 0) return SeifertMatrix{};

    auto st = detail::braid_structure(bd);
    struct Loop {
        int col;
        std::pair<int, int> b1, b2;  // (crossing, sign)
    };
    std::vector<Loop> loops;
    for (int col = 0; col < (int)st.columns.size(); ++col)
        for (size_t i = 0; i + 1 < st.columns[col].size(); ++i)
            loops.push_back({col, st.columns[col][i], st.columns[col][i + 1]});
    const int m = (int)loops.size();
    if (m % 2 != 0) throw std::logic_error("odd loop count for a knot");

    SeifertMatrix V;
    V.genus_bound = m / 2;
    V.entries.assign(m, std::vector<int>(m, 0));
    for (int l = 0; l < m; ++l)
        V.entries[l][l] = -(loops[l].b1.second + loops[l].b2.second) / 2;

    for (int li = 0; li < m; ++li)
        for (int lj = 0; lj < m; ++lj) {
            if (li == lj || loops[li].col != loops[lj].col) continue;
            if (loops[li].b2 != loops[lj].b1) continue;
            // li earlier, lj later, shared band
            if (loops[li].b2.second == 1) V.entries[li][lj] += 1;
            else V.entries[lj][li] -= 1;
        }

    for (int li = 0; li < m; ++li)
        for (int lj = 0; lj < m; ++lj) {
            if (loops[lj].col != loops[li].col + 1) continue;
            const auto& pos = st.circle_pos[loops[li].col + 1];
            int a1 = pos.at(loops[li].b1.first);
            int a2 = pos.at(loops[li].b2.first);
            int b1 = pos.at(loops[lj].b1.first);
            int b2 = pos.at(loops[lj].b2.first);
            auto inside = [&](int x) {
                if (a1 < a2) return a1 < x && x < a2;
                return x > a1 || x < a2;
            };
            bool s_in = inside(b1);
            bool e_in = inside(b2);
            if (s_in == e_in) continue;  // disjoint or nested: no linking
            V.entries[li][lj] += s_in ? 1 : -1;
        }
    return V;
}

}  // namespace ccs
