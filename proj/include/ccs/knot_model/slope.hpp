#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

#include "ccs/algebra/rational.hpp"

namespace ccs {

struct InvalidSlope : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Surgery slope m/n in lowest terms with m > 0. Meridional (n = 0) and
// longitudinal (m = 0) fillings are excluded.
class Slope {
public:
    Slope(long long m, long long n) {
        if (m == 0) throw InvalidSlope("slope 0/n (longitudinal) excluded");
        if (n == 0) throw InvalidSlope("slope m/0 (meridional) excluded");
        long long g = std::gcd(m < 0 ? -m : m, n < 0 ? -n : n);
        m /= g;
        n /= g;
        if (m < 0) {
            m = -m;
            n = -n;
        }
        m_ = m;
        n_ = n;
    }

    long long m() const { return m_; }
    long long n() const { return n_; }

    Rational value() const { return Rational(Int(m_), Int(n_)); }

    std::string str() const {
        return std::to_string(m_) + "/" + std::to_string(n_);
    }

    bool operator==(const Slope&) const = default;

private:
    long long m_, n_;
};

inline Slope normalize_slope(long long m, long long n) { return Slope(m, n); }

enum class PairType { zero_type, plus_type, minus_type };

inline const char* pair_type_name(PairType t) {
    switch (t) {
        case PairType::zero_type: return "0-type";
        case PairType::plus_type: return "+-type";
        default: return "--type";
    }
}

// An unordered pair of distinct surgery slopes, tagged by the trichotomy
// on r + r' and r r': zero_type when the slopes are exact negatives,
// plus_type when they have the same sign, minus_type otherwise.
struct SlopePair {
    Slope first;
    Slope second;
    PairType type_tag;

    SlopePair(Slope a, Slope b)
        : first(a), second(b), type_tag(classify(a, b)) {}

    static PairType classify(const Slope& a, const Slope& b) {
        if ((a.value() + b.value()).is_zero()) return PairType::zero_type;
        // m > 0 always, so the sign of m/n is the sign of n
        if ((a.n() > 0) == (b.n() > 0)) return PairType::plus_type;
        return PairType::minus_type;
    }
};

}  // namespace ccs
