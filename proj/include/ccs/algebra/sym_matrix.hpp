#pragma once

#include <stdexcept>
#include <tuple>
#include <vector>

#include "ccs/algebra/rational.hpp"

namespace ccs {

// Symmetric integer matrix (linking matrices, Goeritz-style forms).
class SymIntMatrix {
public:
    SymIntMatrix() = default;
    explicit SymIntMatrix(int n) : n_(n), a_(n, std::vector<Int>(n, Int(0))) {}

    int dim() const { return n_; }
    const Int& at(int i, int j) const { return a_[i][j]; }

    void set(int i, int j, const Int& v) {
        a_[i][j] = v;
        a_[j][i] = v;
    }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (a_[i][j] != a_[j][i]) return false;
        return true;
    }

private:
    int n_ = 0;
    std::vector<std::vector<Int>> a_;
};

struct SignatureCounts {
    int positive = 0;
    int negative = 0;
    int nullity = 0;
};

// Exact eigenvalue-sign counts by symmetric congruence reduction over Q.
// Zero diagonals are handled by an exact symmetric basis move on the
// offending 2x2 block (never by perturbation), so the result is exact
// for every symmetric input.
inline SignatureCounts matrix_signature(const SymIntMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("matrix not symmetric");
    int n = m.dim();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));

    SignatureCounts s;
    std::vector<bool> done(n, false);

    auto eliminate_with = [&](int p) {
        // Schur complement against pivot p: a[k][l] -= a[p][k]a[p][l]/a[p][p].
        // Row p itself is never written, so the reads stay consistent.
        const Rational app = a[p][p];
        for (int k = 0; k < n; ++k) {
            if (done[k] || k == p || a[p][k].is_zero()) continue;
            for (int l = 0; l < n; ++l) {
                if (done[l] || l == p || a[p][l].is_zero()) continue;
                a[k][l] -= a[p][k] * a[p][l] / app;
            }
        }
    };

    int remaining = n;
    while (remaining > 0) {
        int pivot = -1;
        for (int i = 0; i < n && pivot < 0; ++i)
            if (!done[i] && !a[i][i].is_zero()) pivot = i;

        if (pivot >= 0) {
            if (a[pivot][pivot] > Rational(0)) ++s.positive;
            else ++s.negative;
            eliminate_with(pivot);
            done[pivot] = true;
            --remaining;
            continue;
        }

        // all active diagonal entries are zero
        int bi = -1, bj = -1;
        for (int i = 0; i < n && bi < 0; ++i) {
            if (done[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (done[j] || j == i || a[i][j].is_zero()) continue;
                bi = i;
                bj = j;
                break;
            }
        }
        if (bi < 0) {
            s.nullity += remaining;
            break;
        }
        // hyperbolic block [[0,b],[b,0]]: one positive, one negative.
        // Make the bi diagonal nonzero by the congruence v_bi += v_bj
        // (row add, then column add using the updated row), after which
        // a[bi][bi] = 2b and two ordinary pivots finish the block.
        for (int l = 0; l < n; ++l) {
            if (done[l]) continue;
            a[bi][l] += a[bj][l];
        }
        for (int l = 0; l < n; ++l) {
            if (done[l]) continue;
            a[l][bi] += a[l][bj];
        }
    }
    return s;
}

}  // namespace ccs
