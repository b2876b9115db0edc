#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccs/algebra/rational.hpp"

namespace ccs {

namespace poly {

// Dense univariate polynomial helpers over Rational, low degree first.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// division with remainder; divisor need not be monic
inline void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.empty()) throw ZeroDivision();
    trim(a);
    if (a.size() < b.size()) {
        q = {};
        r = a;
        return;
    }
    q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] += f;
        // leading term cancels exactly, so a shrinks every pass
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    trim(q);
    r = a;
}

inline QPoly mod(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divmod(a, b, q, r);
    return r;
}

}  // namespace poly

// The L-th cyclotomic polynomial, exact integer coefficients,
// computed as (x^L - 1) / prod_{d | L, d < L} Phi_d and cached.
inline const poly::QPoly& cyclotomic_polynomial(int L) {
    static std::map<int, poly::QPoly> cache;
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;
    poly::QPoly xm1(L + 1, Rational(0));
    xm1[0] = Rational(-1);
    xm1[L] = Rational(1);
    poly::QPoly acc = xm1;
    for (int d = 1; d < L; ++d) {
        if (L % d != 0) continue;
        poly::QPoly q, r;
        poly::divmod(acc, cyclotomic_polynomial(d), q, r);
        if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
        acc = q;
    }
    return cache.emplace(L, std::move(acc)).first->second;
}

// Exact element of Q[x]/(Phi_L(x)), i.e. of the L-th cyclotomic field,
// stored reduced so equality is coefficient equality.
class CyclotomicElement {
public:
    explicit CyclotomicElement(int level = 1)
        : level_(level), c_(phi_degree(level), Rational(0)) {}

    CyclotomicElement(int level, poly::QPoly raw) : level_(level) {
        raw = poly::mod(raw, cyclotomic_polynomial(level));
        raw.resize(phi_degree(level), Rational(0));
        c_ = std::move(raw);
    }

    static CyclotomicElement from_rational(int level, const Rational& r) {
        CyclotomicElement x(level);
        if (!x.c_.empty()) x.c_[0] = r;
        else if (!r.is_zero())
            throw std::logic_error("nonzero constant in null ring");
        return x;
    }
    static CyclotomicElement one(int level) {
        return from_rational(level, Rational(1));
    }

    int level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

    CyclotomicElement operator+(const CyclotomicElement& o) const {
        check(o);
        CyclotomicElement r = *this;
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }
    CyclotomicElement operator-(const CyclotomicElement& o) const {
        check(o);
        CyclotomicElement r = *this;
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
        return r;
    }
    CyclotomicElement operator-() const {
        CyclotomicElement r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    CyclotomicElement operator*(const CyclotomicElement& o) const {
        check(o);
        return CyclotomicElement(level_, poly::mul(c_, o.c_));
    }
    CyclotomicElement operator*(const Rational& k) const {
        CyclotomicElement r = *this;
        for (auto& x : r.c_) x *= k;
        return r;
    }

    bool operator==(const CyclotomicElement& o) const {
        return level_ == o.level_ && c_ == o.c_;
    }
    bool operator!=(const CyclotomicElement& o) const { return !(*this == o); }

    // Galois conjugation zeta -> zeta^{-1} (complex conjugation).
    CyclotomicElement conjugate() const {
        poly::QPoly raw(level_ == 1 ? 1 : level_, Rational(0));
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            int e = static_cast<int>((level_ - j) % level_);
            raw[e] += c_[j];
        }
        return CyclotomicElement(level_, std::move(raw));
    }

    bool is_real() const { return conjugate() == *this; }

    // Multiplicative inverse via extended Euclid against Phi_L.
    CyclotomicElement invert() const {
        if (is_zero()) throw ZeroDivision();
        poly::QPoly a = c_;
        poly::trim(a);
        poly::QPoly b = cyclotomic_polynomial(level_);
        // maintain s*a0 + t*b0 = r along the Euclid remainders
        poly::QPoly r0 = a, r1 = b;
        poly::QPoly s0{Rational(1)}, s1{};
        while (!r1.empty()) {
            poly::QPoly q, r2;
            poly::divmod(r0, r1, q, r2);
            poly::QPoly s2 = poly::sub(s0, poly::mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (poly::degree(r0) != 0)
            throw std::logic_error("element not invertible mod Phi_L");
        Rational lead = r0[0];
        for (auto& x : s0) x /= lead;
        return CyclotomicElement(level_, std::move(s0));
    }

    CyclotomicElement pow(long long n) const {
        if (n < 0) return invert().pow(-n);
        CyclotomicElement r = one(level_);
        CyclotomicElement base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ",";
            os << c_[i].str();
        }
        os << "]@" << level_;
        return os.str();
    }

private:
    static int phi_degree(int level) {
        return poly::degree(cyclotomic_polynomial(level));
    }
    void check(const CyclotomicElement& o) const {
        if (level_ != o.level_)
            throw std::invalid_argument("cyclotomic level mismatch");
    }

    int level_;
    std::vector<Rational> c_;
};

// zeta_level^power as an element of Q[x]/(Phi_level).
inline CyclotomicElement cyclotomic_root(int level, long long power) {
    if (level < 1) throw std::invalid_argument("level must be positive");
    long long e = ((power % level) + level) % level;
    poly::QPoly raw(e + 1, Rational(0));
    raw[e] = Rational(1);
    return CyclotomicElement(level, std::move(raw));
}

}  // namespace ccs
