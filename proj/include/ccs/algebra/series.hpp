#pragma once

#include <stdexcept>
#include <vector>

#include "ccs/algebra/laurent.hpp"
#include "ccs/algebra/rational.hpp"

namespace ccs {

struct NonRealResult : std::domain_error {
    NonRealResult() : std::domain_error("series has nonzero imaginary part") {}
};

// Truncated power series in h with exact rational coefficients:
// coefficient of h^0 .. h^order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order = 0)
        : order_(order), c_(order + 1, Rational(0)) {}

    int order() const { return order_; }
    const Rational& operator[](int i) const { return c_.at(i); }
    Rational& operator[](int i) { return c_.at(i); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        TruncatedSeries r(order_);
        for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    TruncatedSeries operator-(const TruncatedSeries& o) const {
        TruncatedSeries r(order_);
        for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        TruncatedSeries r(order_);
        for (int i = 0; i <= order_; ++i)
            for (int j = 0; i + j <= order_; ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        return r;
    }
    TruncatedSeries operator*(const Rational& k) const {
        TruncatedSeries r(order_);
        for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] * k;
        return r;
    }

    TruncatedSeries pow(long long n) const {
        TruncatedSeries r(order_);
        r.c_[0] = Rational(1);
        TruncatedSeries base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    // e^{k h} truncated
    static TruncatedSeries exp_h(const Rational& k, int order) {
        TruncatedSeries r(order);
        Rational term(1);
        for (int i = 0; i <= order; ++i) {
            r.c_[i] = term;
            term = term * k / Rational(i + 1);
        }
        return r;
    }

private:
    int order_;
    std::vector<Rational> c_;
};

// Pair (real, imaginary) of truncated series; i is tracked exactly.
class ComplexSeries {
public:
    explicit ComplexSeries(int order = 0) : re(order), im(order) {}
    ComplexSeries(TruncatedSeries r, TruncatedSeries i)
        : re(std::move(r)), im(std::move(i)) {}

    TruncatedSeries re, im;

    ComplexSeries operator+(const ComplexSeries& o) const {
        return {re + o.re, im + o.im};
    }
    ComplexSeries operator*(const ComplexSeries& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexSeries times_i() const { return {im * Rational(-1), re}; }

    ComplexSeries pow(long long n) const {
        ComplexSeries r(re.order());
        r.re[0] = Rational(1);
        ComplexSeries base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    // i^k for integer k (negative allowed)
    static ComplexSeries i_power(long long k, int order) {
        ComplexSeries r(order);
        switch (((k % 4) + 4) % 4) {
            case 0: r.re[0] = Rational(1); break;
            case 1: r.im[0] = Rational(1); break;
            case 2: r.re[0] = Rational(-1); break;
            default: r.im[0] = Rational(-1); break;
        }
        return r;
    }
};

// Substitute a = i e^{N h}, z = -i (e^h - e^{-h}) into a 2-variable
// Laurent polynomial and expand to the given order. The result of this
// substitution is real for genuine knot polynomials; a surviving
// imaginary coefficient raises NonRealResult.
inline TruncatedSeries series_compose_exp(const LaurentPoly2& f, long long N,
                                          int order) {
    TruncatedSeries two_sinh(order);
    {
        TruncatedSeries eh = TruncatedSeries::exp_h(Rational(1), order);
        TruncatedSeries emh = TruncatedSeries::exp_h(Rational(-1), order);
        two_sinh = eh - emh;
    }
    ComplexSeries acc(order);
    for (const auto& [k, c] : f.terms()) {
        const auto [p, q] = k;
        // a^p = i^p e^{N p h}
        ComplexSeries term = ComplexSeries::i_power(p, order);
        TruncatedSeries radial = TruncatedSeries::exp_h(Rational(N * p), order);
        term.re = term.re * radial;
        term.im = term.im * radial;
        // z^q = (-i)^q (e^h - e^{-h})^q ; q may be negative only in
        // intermediate skein values, never in a finished polynomial.
        if (q < 0) throw std::domain_error("negative z-exponent in expansion");
        ComplexSeries zq = ComplexSeries::i_power(-q, order);
        TruncatedSeries sq = two_sinh.pow(q);
        zq.re = zq.re * sq;
        zq.im = zq.im * sq;
        term = term * zq;
        term.re = term.re * Rational(c);
        term.im = term.im * Rational(c);
        acc = acc + term;
    }
    if (!acc.im.is_zero()) throw NonRealResult();
    return acc.re;
}

}  // namespace ccs
