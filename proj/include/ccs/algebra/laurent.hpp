#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "ccs/algebra/rational.hpp"

namespace ccs {

// Laurent polynomial in one variable t with integer coefficients.
// Exponents are half-integers stored doubled: key e represents t^{e/2}.
// For knot polynomials every stored key is even.
class LaurentPoly {
public:
    using Map = std::map<long long, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Int& c) {
        if (c != 0) c_[0] = c;
    }
    static LaurentPoly monomial(const Int& c, long long doubled_exp) {
        LaurentPoly p;
        if (c != 0) p.c_[doubled_exp] = c;
        return p;
    }

    const Map& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Int coeff(long long doubled_exp) const {
        auto it = c_.find(doubled_exp);
        return it == c_.end() ? Int(0) : it->second;
    }

    void add_term(long long doubled_exp, const Int& c) {
        if (c == 0) return;
        Int& slot = c_[doubled_exp];
        slot += c;
        if (slot == 0) c_.erase(doubled_exp);
    }

    long long min_exp() const {
        if (c_.empty()) return 0;
        return c_.begin()->first;
    }
    long long max_exp() const {
        if (c_.empty()) return 0;
        return c_.rbegin()->first;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.c_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.c_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [e1, c1] : c_)
            for (const auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly operator*(const Int& k) const {
        LaurentPoly r;
        if (k == 0) return r;
        for (const auto& [e, c] : c_) r.c_[e] = c * k;
        return r;
    }
    LaurentPoly operator-() const { return *this * Int(-1); }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // t -> t^{-1}
    LaurentPoly mirror() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[-e] = c;
        return r;
    }

    // multiply by t^{k/2} where k is the doubled shift
    LaurentPoly shifted(long long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    // Evaluate at an integer t-value. Requires all exponents integral;
    // for t = 0 requires all exponents non-negative.
    Rational eval(const Int& t) const {
        Rational acc(0);
        for (const auto& [e, c] : c_) {
            if (e % 2 != 0)
                throw std::domain_error("eval: half-integer exponent");
            long long k = e / 2;
            Rational p(1);
            Rational base = (k >= 0) ? Rational(t) : Rational(Int(1), t);
            long long reps = k >= 0 ? k : -k;
            for (long long i = 0; i < reps; ++i) p *= base;
            acc += p * Rational(c);
        }
        return acc;
    }

    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int a = c < 0 ? Int(-c) : c;
            bool unit = (a == 1) && e != 0;
            if (!unit) os << a.str();
            if (e != 0) {
                if (!unit) os << "*";
                os << var;
                if (e != 2) {
                    os << "^";
                    if (e % 2 == 0) os << (e / 2);
                    else os << "(" << e << "/2)";
                }
            }
        }
        return os.str();
    }

private:
    Map c_;
};

// Laurent polynomial in two variables (a, z), integer coefficients.
// Negative z-exponents are permitted internally (skein intermediate
// values use them); finished knot polynomials have z-exponent >= 0.
class LaurentPoly2 {
public:
    using Key = std::pair<long long, long long>;  // (exp_a, exp_z)
    using Map = std::map<Key, Int>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(const Int& c) {
        if (c != 0) c_[{0, 0}] = c;
    }
    static LaurentPoly2 monomial(const Int& c, long long ea, long long ez) {
        LaurentPoly2 p;
        if (c != 0) p.c_[{ea, ez}] = c;
        return p;
    }

    const Map& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Int coeff(long long ea, long long ez) const {
        auto it = c_.find({ea, ez});
        return it == c_.end() ? Int(0) : it->second;
    }

    void add_term(long long ea, long long ez, const Int& c) {
        if (c == 0) return;
        Key k{ea, ez};
        Int& slot = c_[k];
        slot += c;
        if (slot == 0) c_.erase(k);
    }

    LaurentPoly2 operator+(const LaurentPoly2& o) const {
        LaurentPoly2 r = *this;
        for (const auto& [k, c] : o.c_) r.add_term(k.first, k.second, c);
        return r;
    }
    LaurentPoly2 operator-(const LaurentPoly2& o) const {
        LaurentPoly2 r = *this;
        for (const auto& [k, c] : o.c_) r.add_term(k.first, k.second, -c);
        return r;
    }
    LaurentPoly2 operator*(const LaurentPoly2& o) const {
        LaurentPoly2 r;
        for (const auto& [k1, c1] : c_)
            for (const auto& [k2, c2] : o.c_)
                r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }
    LaurentPoly2 operator*(const Int& k) const {
        LaurentPoly2 r;
        if (k == 0) return r;
        for (const auto& [key, c] : c_) r.c_[key] = c * k;
        return r;
    }
    LaurentPoly2 operator-() const { return *this * Int(-1); }

    bool operator==(const LaurentPoly2& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly2& o) const { return !(*this == o); }

    // a -> a^{-1}
    LaurentPoly2 mirror_a() const {
        LaurentPoly2 r;
        for (const auto& [k, c] : c_) r.c_[{-k.first, k.second}] = c;
        return r;
    }

    // multiply by a^k
    LaurentPoly2 shifted_a(long long k) const {
        LaurentPoly2 r;
        for (const auto& [key, c] : c_) r.c_[{key.first + k, key.second}] = c;
        return r;
    }

    bool z_nonnegative() const {
        for (const auto& [k, c] : c_) {
            (void)c;
            if (k.second < 0) return false;
        }
        return true;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : c_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int a = c < 0 ? Int(-c) : c;
            os << a.str();
            if (k.first != 0) os << "*a^" << k.first;
            if (k.second != 0) os << "*z^" << k.second;
        }
        return os.str();
    }

private:
    Map c_;
};

}  // namespace ccs
