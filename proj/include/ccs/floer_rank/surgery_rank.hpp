#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "ccs/algebra/rational.hpp"
#include "ccs/knot_model/slope.hpp"

namespace ccs {

struct InvalidRankProfile : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The three numbers the hat-rank of a surgery depends on, for a non-trivial
// knot, after mirroring so that nu >= nu(mirror) and nu >= 0. Construction
// rejects combinations no knot realizes:
//   - 0 <= nu <= genus, and c_k is even and non-negative;
//   - c_k = 0 forces nu = genus;
//   - nu != genus with genus != 1 forces c_k >= 4.
class RankProfile {
public:
    RankProfile(int nu, int c_k, int genus)
        : nu_(nu), c_k_(c_k), genus_(genus) {
        if (genus < 1) throw InvalidRankProfile("genus must be positive");
        if (nu < 0 || nu > genus)
            throw InvalidRankProfile("nu must lie in [0, genus]");
        if (c_k < 0 || c_k % 2 != 0)
            throw InvalidRankProfile("excess rank must be even and non-negative");
        if (c_k == 0 && nu != genus)
            throw InvalidRankProfile("zero excess rank forces nu = genus");
        if (nu != genus && genus != 1 && c_k < 4)
            throw InvalidRankProfile("nu < genus with genus > 1 needs excess rank >= 4");
    }

    // Apply the mirror convention: the profile always carries the larger of
    // the two nu values (excess rank and genus are mirror-invariant).
    static RankProfile normalized(int nu, int nu_mirror, int c_k, int genus) {
        return RankProfile(std::max(nu, nu_mirror), c_k, genus);
    }

    int nu() const { return nu_; }
    int c_k() const { return c_k_; }
    int genus() const { return genus_; }

    bool operator==(const RankProfile&) const = default;

private:
    int nu_, c_k_, genus_;
};

// Total rank of the hat-flavor homology of m/n surgery (slope normalized to
// m > 0):
//   m + n c_k                      if n > 0 and m/n >= 2 nu - 1
//   -m + (4 nu - 2) n + n c_k      if n > 0 and m/n <= 2 nu - 1
//   m - (4 nu - 2) n - n c_k       if n < 0 and nu > 0
//   m - n c_k                      if n < 0 and nu = 0
// The two positive-slope branches agree at m/n = 2 nu - 1.
inline long long hf_rank(const RankProfile& p, const Slope& s) {
    const long long m = s.m(), n = s.n();
    const long long nu = p.nu(), ck = p.c_k();
    if (n > 0) {
        if (m >= (2 * nu - 1) * n) return m + n * ck;
        return -m + (4 * nu - 2) * n + n * ck;
    }
    if (nu > 0) return m - (4 * nu - 2) * n - n * ck;
    return m - n * ck;
}

// Where a pair of slopes m/n, m/n' can possibly give oppositely-oriented
// homeomorphic surgeries, as far as rank bookkeeping can tell. The regions,
// writing S = n + n':
//   same-sign pairs: need c_k = 0 and both slopes >= 2g - 1;
//   opposite-sign pairs with nu = 0: S = 0 exactly;
//   opposite-sign pairs with nu > 0: S/m = 2/(4 nu - 2 + c_k) when the
//     positive slope is <= 2 nu - 1, else S c_k = (4 nu - 2)(-n') (which
//     needs c_k != 0);
//   always |S/m| < 2/(2g - 1) if c_k = 0, else |S/m| < 2/c_k.
// One profile needs more than rank bookkeeping: genus 1 with c_k = 0 pins
// the knot down completely (the (2,3) torus knot), and its surgery pairs
// are classified: 18s/(3s+1) with 18s/(3s-1) for odd s, i.e. in lowest
// terms m = 9s and {n, n'} = {(3s-1)/2, (3s+1)/2}. admissible() folds that
// classification in, so pairs it accepts satisfy |S/m| < 1 for every
// profile, and |m| > 2 whenever the slopes are not exact negatives.
struct SlopePairConstraints {
    RankProfile profile;

    bool plus_possible;             // same-sign pairs allowed at all (c_k = 0)
    long long plus_min_slope;       // both slopes >= 2g - 1 when same-sign
    bool minus_forces_zero_sum;     // nu = 0: opposite signs only as n' = -n
    std::optional<Rational> minus_small_ratio;  // nu > 0: S/m on the low branch
    bool minus_large_possible;      // nu > 0 high branch needs c_k != 0
    Rational sum_ratio_bound;       // strict bound on |S/m|
    bool genus_one_lspace;          // classification refinement applies

    // True when the pair survives every constraint: equal m (the surgered
    // manifolds must have the same first homology), distinct slopes, equal
    // hat-ranks, and the classified family when genus_one_lspace.
    bool admissible(const SlopePair& pr) const {
        const Slope &a = pr.first, &b = pr.second;
        if (a == b || a.m() != b.m()) return false;
        if (hf_rank(profile, a) != hf_rank(profile, b)) return false;
        if (genus_one_lspace) {
            const long long m = a.m();
            if (m % 9 != 0 || (m / 9) % 2 == 0) return false;
            const long long s = m / 9;
            const long long lo = std::min(a.n(), b.n());
            const long long hi = std::max(a.n(), b.n());
            return lo == (3 * s - 1) / 2 && hi == (3 * s + 1) / 2;
        }
        return true;
    }
};

inline SlopePairConstraints slope_pair_constraints(const RankProfile& p) {
    std::optional<Rational> small;
    if (p.nu() > 0) small = Rational(Int(2), Int(4 * p.nu() - 2 + p.c_k()));
    const Rational bound = p.c_k() == 0
                               ? Rational(Int(2), Int(2 * p.genus() - 1))
                               : Rational(Int(2), Int(p.c_k()));
    return SlopePairConstraints{
        p,
        /*plus_possible=*/p.c_k() == 0,
        /*plus_min_slope=*/2LL * p.genus() - 1,
        /*minus_forces_zero_sum=*/p.nu() == 0,
        /*minus_small_ratio=*/small,
        /*minus_large_possible=*/p.nu() > 0 && p.c_k() != 0,
        /*sum_ratio_bound=*/bound,
        /*genus_one_lspace=*/p.genus() == 1 && p.c_k() == 0,
    };
}

}  // namespace ccs
