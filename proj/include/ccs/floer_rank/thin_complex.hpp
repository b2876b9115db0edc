#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ccs/algebra/laurent.hpp"
#include "ccs/algebra/rational.hpp"

namespace ccs {

// Inputs that cannot come from a homologically thin knot (wrong parity,
// negative correction rank, non-alternating coefficient signs, ...).
struct NotThinConsistent : std::domain_error {
    using std::domain_error::domain_error;
};

// The square-count equations have no non-negative integer solution.
struct InconsistentSystem : std::domain_error {
    using std::domain_error::domain_error;
};

// Model of the full knot complex of a homologically thin knot: a single
// staircase of height tau plus delta_j squares at each diagonal 1..g.
// d_abs holds |d_0|..|d_g|, the absolute values of the symmetrized
// Alexander coefficients; epsilon[i] is 1 exactly when the staircase
// contributes a generator at diagonal i (i <= tau).
struct ThinComplexModel {
    int g = 0;
    int tau_abs = 0;
    std::vector<Int> d_abs;
    std::vector<int> epsilon;
    std::vector<Int> delta;  // delta[j-1] holds delta_j for j = 1..g

    // Total excess hat-rank over the surgery-formula baseline. Each square
    // at diagonal j adds 2 to the two flanking truncations, except that
    // diagonal-1 squares touch the middle truncation only once.
    Int c_k() const {
        Int s = 0;
        for (const Int& dj : delta) s += dj;
        return 4 * s - 2 * delta.front();
    }
};

// Excess hat-rank of a homologically thin knot from determinant and |tau|
// alone: (|det| - 2|tau| - 1) / 2. Always a non-negative even integer for
// genuinely thin inputs; anything else is rejected.
inline Int ck_thin(const Int& det, int tau_abs) {
    if (det <= 0 || det % 2 == 0)
        throw NotThinConsistent("determinant must be odd and positive");
    if (tau_abs < 0) throw NotThinConsistent("|tau| must be non-negative");
    Int num = det - 2 * tau_abs - 1;
    if (num < 0)
        throw NotThinConsistent("determinant smaller than 2|tau|+1");
    Int ck = num / 2;
    if (ck % 2 != 0)
        throw NotThinConsistent("excess rank came out odd; inputs are not "
                                "from a homologically thin knot");
    return ck;
}

// Absolute values (|d_0|, ..., |d_g|) of the symmetrized Alexander
// coefficients, after checking the thin sign pattern: every non-zero
// coefficient must carry the sign eps * (-1)^i for one fixed eps.
// Accepts the doubled-exponent encoding used by LaurentPoly.
inline std::vector<Int> alternating_abs_coeffs(const LaurentPoly& delta) {
    if (delta.is_zero())
        throw NotThinConsistent("zero polynomial");
    long long top = 0;
    for (const auto& [e, c] : delta.terms()) {
        if (e % 2 != 0)
            throw NotThinConsistent("half-integer exponent in Alexander polynomial");
        if (e / 2 > top) top = e / 2;
    }
    std::vector<Int> d(static_cast<size_t>(top) + 1);
    for (long long i = 0; i <= top; ++i) {
        Int lo = delta.coeff(-2 * i);
        Int hi = delta.coeff(2 * i);
        if (lo != hi)
            throw NotThinConsistent("Alexander polynomial is not palindromic");
        d[static_cast<size_t>(i)] = hi;
    }
    int eps = 0;  // sign of d_i * (-1)^i, fixed by the first non-zero entry
    for (long long i = 0; i <= top; ++i) {
        const Int& c = d[static_cast<size_t>(i)];
        if (c == 0) continue;
        int s = (c > 0 ? 1 : -1) * (i % 2 == 0 ? 1 : -1);
        if (eps == 0) eps = s;
        if (s != eps)
            throw NotThinConsistent("coefficient signs do not alternate");
        d[static_cast<size_t>(i)] = abs(c);
    }
    return d;
}

// Solve for the square counts delta_1..delta_g of a thin complex given the
// absolute Alexander coefficients and |tau|. The defining equations are
//   |d_g|     = eps_g + delta_g
//   |d_j|     = eps_j + delta_j + 2 delta_{j+1} + delta_{j+2}   (1 <= j < g)
//   |d_0|     = eps_0 + 2 delta_1 + 2 delta_2                   (g >= 2)
//   |d_0|     = eps_0 + 2 delta_1                               (g == 1)
// with eps_i = 1 for i <= tau and 0 above. The first g rows determine the
// deltas top-down; the bottom row is an overdetermined consistency check.
inline ThinComplexModel solve_delta_system(const std::vector<Int>& d_abs,
                                           int tau_abs) {
    const int g = static_cast<int>(d_abs.size()) - 1;
    if (g < 1)
        throw InconsistentSystem("need coefficients up to degree >= 1");
    if (tau_abs < 0 || tau_abs > g)
        throw InconsistentSystem("|tau| must lie in [0, genus]");
    for (const Int& c : d_abs)
        if (c < 0) throw InconsistentSystem("coefficients must be absolute values");
    if (d_abs.back() == 0)
        throw InconsistentSystem("top coefficient vanishes; genus mismatch");

    std::vector<int> eps(static_cast<size_t>(g) + 1, 0);
    for (int i = 0; i <= g; ++i) eps[static_cast<size_t>(i)] = (i <= tau_abs) ? 1 : 0;

    // delta[j-1] = delta_j; treat delta_{g+1} = delta_{g+2} = 0.
    std::vector<Int> delta(static_cast<size_t>(g), 0);
    auto dl = [&](int j) -> Int {
        return j >= 1 && j <= g ? delta[static_cast<size_t>(j - 1)] : Int(0);
    };
    for (int j = g; j >= 1; --j) {
        Int v = j == g ? d_abs.back() - eps[static_cast<size_t>(g)]
                       : d_abs[static_cast<size_t>(j)] - eps[static_cast<size_t>(j)] -
                             2 * dl(j + 1) - dl(j + 2);
        if (v < 0)
            throw InconsistentSystem("negative square count at diagonal " +
                                     std::to_string(j));
        delta[static_cast<size_t>(j - 1)] = v;
    }
    Int bottom = (g == 1) ? eps[0] + 2 * dl(1) : eps[0] + 2 * dl(1) + 2 * dl(2);
    if (bottom != d_abs[0])
        throw InconsistentSystem("bottom row fails: expected |d_0| = " +
                                 bottom.str());

    ThinComplexModel m;
    m.g = g;
    m.tau_abs = tau_abs;
    m.d_abs = d_abs;
    m.epsilon = std::move(eps);
    m.delta = std::move(delta);
    return m;
}

}  // namespace ccs
