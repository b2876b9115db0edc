#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ccs/algebra/laurent.hpp"
#include "ccs/algebra/rational.hpp"
#include "ccs/algebra/sym_matrix.hpp"
#include "ccs/skein_engine/seifert.hpp"

namespace ccs {

struct AlexanderConway {
    LaurentPoly delta;   // symmetric, delta(1) = 1
    LaurentPoly conway;  // even powers of z, constant term 1
};

namespace detail {

// fraction-free Gaussian elimination; exact over Int
inline Int bareiss_det(std::vector<std::vector<Int>> a) {
    const int n = (int)a.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n && piv < 0; ++i)
                if (a[i][k] != 0) piv = i;
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// exact Lagrange interpolation through (xs[i], ys[i]); the result must
// have integer coefficients
inline std::vector<Int> interpolate_int(const std::vector<Int>& xs,
                                        const std::vector<Int>& ys) {
    const int n = (int)xs.size();
    std::vector<Rational> acc(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> num{Rational(1)};
        Rational den(1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(num.size() + 1, Rational(0));
            for (size_t t = 0; t < num.size(); ++t) {
                next[t] += num[t] * Rational(-xs[j]);
                next[t + 1] += num[t];
            }
            num = std::move(next);
            den *= Rational(xs[i] - xs[j]);
        }
        Rational scale = Rational(ys[i]) / den;
        for (size_t t = 0; t < num.size(); ++t) acc[t] += num[t] * scale;
    }
    std::vector<Int> out(n);
    for (int t = 0; t < n; ++t) {
        if (!acc[t].is_integer())
            throw std::logic_error("interpolation gave non-integer coefficient");
        out[t] = acc[t].num();
    }
    return out;
}

}  // namespace detail

// signed determinant of the symmetrized form V + V^T
inline Int form_determinant(const SeifertMatrix& V) {
    const int m = V.dim();
    std::vector<std::vector<Int>> a(m, std::vector<Int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a[i][j] = Int(V.entries[i][j] + V.entries[j][i]);
    return detail::bareiss_det(std::move(a));
}

// signature of V + V^T; the right-handed trefoil gives -2
inline int form_signature(const SeifertMatrix& V) {
    const int m = V.dim();
    SymIntMatrix s(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            s.set(i, j, Int(V.entries[i][j] + V.entries[j][i]));
    auto c = matrix_signature(s);
    return c.positive - c.negative;
}

// Alexander polynomial det(t V - V^T) normalized to delta(1) = 1 with
// symmetric exponents, and the Conway polynomial obtained from it by
// t^j + t^-j = P_j(z^2), so that conway(t^(1/2) - t^(-1/2)) = delta(t).
inline AlexanderConway alexander_conway(const SeifertMatrix& V) {
    AlexanderConway out;
    const int m = V.dim();
    if (m == 0) {
        out.delta.add_term(0, 1);
        out.conway.add_term(0, 1);
        return out;
    }

    // det(tV - V^T) has degree <= m: evaluate at m+1 points, interpolate
    std::vector<Int> xs, ys;
    for (int p = 2; p <= 2 + m; ++p) {
        std::vector<std::vector<Int>> a(m, std::vector<Int>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                a[i][j] = Int(p) * V.entries[i][j] - V.entries[j][i];
        xs.push_back(p);
        ys.push_back(detail::bareiss_det(std::move(a)));
    }
    std::vector<Int> c = detail::interpolate_int(xs, ys);

    int lo = 0, hi = (int)c.size() - 1;
    while (lo <= hi && c[lo] == 0) ++lo;
    while (hi >= lo && c[hi] == 0) --hi;
    if (lo > hi) throw std::domain_error("Alexander polynomial vanished");
    Int at1 = 0;
    for (int i = lo; i <= hi; ++i) at1 += c[i];
    if (at1 != 1 && at1 != -1)
        throw std::domain_error("form is not unimodular: delta(1) = " +
                                at1.str());
    if (at1 < 0)
        for (int i = lo; i <= hi; ++i) c[i] = -c[i];

    const int deg = hi - lo;
    if (deg % 2 != 0) throw std::logic_error("Alexander degree is odd");
    for (int i = 0; i <= deg; ++i)
        if (c[lo + i] != c[hi - i])
            throw std::logic_error("Alexander polynomial is not symmetric");
    const int h = deg / 2;
    for (int i = 0; i <= deg; ++i)
        if (c[lo + i] != 0) out.delta.add_term(2 * (i - h), c[lo + i]);

    // P_0 = 2, P_1 = u + 2, P_{j+1} = (u+2) P_j - P_{j-1}, u = z^2
    std::vector<std::vector<Int>> P{{Int(2)}, {Int(2), Int(1)}};
    for (int j = 1; j < h; ++j) {
        std::vector<Int> next(P[j].size() + 1, Int(0));
        for (size_t t = 0; t < P[j].size(); ++t) {
            next[t] += 2 * P[j][t];
            next[t + 1] += P[j][t];
        }
        for (size_t t = 0; t < P[j - 1].size(); ++t) next[t] -= P[j - 1][t];
        P.push_back(std::move(next));
    }
    std::vector<Int> acc(h + 1, Int(0));
    acc[0] = c[lo + h];
    for (int j = 1; j <= h; ++j)
        for (size_t t = 0; t < P[j].size(); ++t) acc[t] += c[lo + h + j] * P[j][t];
    if (acc[0] != 1)
        throw std::logic_error("Conway constant term is not 1");
    for (int t = 0; t <= h; ++t)
        if (acc[t] != 0) out.conway.add_term(4 * t, acc[t]);
    return out;
}

}  // namespace ccs
