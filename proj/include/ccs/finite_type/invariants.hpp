#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccs/algebra/laurent.hpp"
#include "ccs/algebra/rational.hpp"
#include "ccs/algebra/series.hpp"
#include "ccs/knot_model/diagram.hpp"
#include "ccs/skein_engine/kauffman.hpp"

namespace ccs {

// O(K) = |7 a2^2 - a2 - 10 a4| / |4 v3|, infinite when v3 = 0. The
// infinite value compares greater than every rational bound.
struct ObstructionValue {
    bool finite = true;
    Rational value;

    static ObstructionValue infinity() { return {false, Rational(0)}; }

    bool at_most(const Rational& bound) const {
        return finite && value <= bound;
    }

    std::string str() const { return finite ? value.str() : "inf"; }

    bool operator==(const ObstructionValue& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
};

// Everything the surgery criteria consume for one knot. The polynomial
// data is always present; the concordance and grading fields stay empty
// until a table supplies them.
struct InvariantRecord {
    std::string name;
    Int a2 = 0;  // Conway z^2 coefficient
    Int a4 = 0;  // Conway z^4 coefficient
    Rational v3;
    Rational v5;
    Int det = 1;     // |Delta(-1)|
    int d_alex = 0;  // degree of Delta, per the configured convention
    std::optional<int> genus;
    std::optional<int> sigma;
    std::optional<int> tau;
    std::optional<int> nu;
    std::optional<int> nu_mirror;
    bool alternating = false;
    std::optional<bool> quasi_alternating;
    bool amphicheiral = false;
    bool torus_2p = false;    // torus knot of the (2, p) family
    bool torus_other = false; // torus knot outside that family
    std::optional<Int> C_K;
    ObstructionValue O_K;
};

// coefficients of z^2 and z^4 in the Conway polynomial
inline std::pair<Int, Int> conway_coeffs(const LaurentPoly& conway) {
    return {conway.coeff(4), conway.coeff(8)};
}

// v3 = -(1/144) V'''(1) - (1/48) V''(1), by formal differentiation
inline Rational v3_from_jones(const LaurentPoly& V) {
    Rational d2(0), d3(0);
    for (const auto& [e, c] : V.terms()) {
        const Rational k(e, 2);
        const Rational c2 = Rational(c) * k * (k - Rational(1));
        d2 += c2;
        d3 += c2 * (k - Rational(2));
    }
    return -d3 / Rational(144) - d2 / Rational(48);
}

// coefficient of h^5 in F_K(i e^{N h}, -i(e^h - e^{-h}))
inline Rational k5_from_kauffman(const LaurentPoly2& F, int N) {
    if (N < 2 || N > 5)
        throw std::invalid_argument("k5 expansion defined for N in 2..5");
    return series_compose_exp(F, N, 5)[5];
}

inline Rational k5N(const KnotDiagram& d, int N, const SkeinLimits& lim = {}) {
    SkeinCache cache;
    return k5_from_kauffman(kauffman_polynomial(d, cache, lim), N);
}

// v5 = k52/768 + k53/768 - k54/1536 + 7 k55/61440
inline Rational v5_from_kauffman(const LaurentPoly2& F) {
    return k5_from_kauffman(F, 2) / Rational(768) +
           k5_from_kauffman(F, 3) / Rational(768) -
           k5_from_kauffman(F, 4) / Rational(1536) +
           k5_from_kauffman(F, 5) * Rational(7, 61440);
}

inline Rational v5(const KnotDiagram& d, const SkeinLimits& lim = {}) {
    SkeinCache cache;
    return v5_from_kauffman(kauffman_polynomial(d, cache, lim));
}

inline ObstructionValue obstruction_O(const Rational& v3, const Int& a2,
                                      const Int& a4) {
    if (v3.is_zero()) return ObstructionValue::infinity();
    const Rational num =
        Rational(Int(7) * a2 * a2 - a2 - Int(10) * a4).abs();
    return {true, num / (v3 * Rational(4)).abs()};
}

inline ObstructionValue obstruction_O(const InvariantRecord& rec) {
    return obstruction_O(rec.v3, rec.a2, rec.a4);
}

// "Degree" of the Alexander polynomial is read two ways in the
// literature; both are offered and the choice is calibrated against the
// census counts (docs/criteria.md). Trivial Delta gives 0 under either,
// which the classifier treats as "criterion not applicable".
enum class AlexanderDegreeMode { top_exponent, breadth };

inline int alexander_degree(
    const LaurentPoly& delta,
    AlexanderDegreeMode mode = AlexanderDegreeMode::top_exponent) {
    long long top = 0;
    for (const auto& [e, c] : delta.terms()) {
        if (e % 2 != 0) throw std::domain_error("half-integer exponent in Delta");
        top = std::max(top, e / 2);
    }
    return (int)(mode == AlexanderDegreeMode::top_exponent ? top : 2 * top);
}

// Structural sanity of a record. Violations of proven facts are errors;
// the v5 granularity is only observed on the census, so it lands in
// warnings.
struct RecordCheck {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool ok() const { return errors.empty(); }
};

inline RecordCheck check_record(const InvariantRecord& rec) {
    RecordCheck out;
    auto err = [&](const std::string& m) { out.errors.push_back(rec.name + ": " + m); };
    if (rec.det <= 0 || rec.det % 2 == 0)
        err("determinant " + rec.det.str() + " is not an odd positive integer");
    if (!(rec.v3 * Rational(4)).is_integer())
        err("v3 = " + rec.v3.str() + " is not a multiple of 1/4");
    if (rec.d_alex < 0) err("negative Alexander degree");
    if (rec.C_K && (*rec.C_K < 0 || *rec.C_K % 2 != 0))
        err("C_K = " + rec.C_K->str() + " is not a non-negative even integer");
    if (rec.sigma && *rec.sigma % 2 != 0)
        err("odd signature " + std::to_string(*rec.sigma));
    if (rec.amphicheiral && !rec.v3.is_zero())
        err("amphicheiral knot with v3 = " + rec.v3.str());
    if (rec.O_K.finite == rec.v3.is_zero())
        err("O finiteness disagrees with v3");
    if (!(rec.v5 * Rational(48)).is_integer())
        out.warnings.push_back(rec.name + ": v5 = " + rec.v5.str() +
                               " leaves the 1/48 grid");
    return out;
}

}  // namespace ccs
