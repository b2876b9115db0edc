#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "ccs/knot_model/diagram.hpp"
#include "ccs/knot_model/dt.hpp"
#include "ccs/knot_model/slope.hpp"

using namespace ccs;

static const char* kTrefoilPD = "PD[X(6,4,1,3),X(2,6,3,5),X(4,2,5,1)]";

TEST_CASE("parse_pd reads a trefoil code") {
    KnotDiagram d = parse_pd(kTrefoilPD);
    REQUIRE(d.size() == 3);
    CHECK(d.arcs() == 6);
    CHECK(d[0] == Crossing{6, 4, 1, 3});
    for (int i = 0; i < 3; ++i) CHECK(d.sign(i) == 1);
    CHECK(d.writhe() == 3);
}

TEST_CASE("parse_pd accepts whitespace and the empty diagram") {
    KnotDiagram u = parse_pd("PD[]");
    CHECK(u.size() == 0);
    CHECK(u.writhe() == 0);
    CHECK(u == KnotDiagram());

    KnotDiagram d = parse_pd("  PD[ X( 6, 4 ,1,3) , X(2,6,3,5),X(4,2,5,1) ]  ");
    CHECK(d == parse_pd(kTrefoilPD));
}

TEST_CASE("one-crossing kinks get the structural sign") {
    KnotDiagram neg = parse_pd("PD[X(1,2,2,1)]");
    CHECK(neg.sign(0) == -1);
    CHECK(neg.writhe() == -1);
    KnotDiagram pos = parse_pd("PD[X(1,1,2,2)]");
    CHECK(pos.sign(0) == 1);
    CHECK(pos.mirrored().writhe() == -1);
    CHECK(neg.mirrored().writhe() == 1);
    CHECK(pos.mirrored().mirrored() == pos);
    CHECK(neg.mirrored().mirrored() == neg);
}

TEST_CASE("parse then serialize then parse is the identity") {
    for (const char* code :
         {"PD[]", kTrefoilPD,
          "PD[X(8,3,1,4),X(2,6,3,5),X(4,7,5,8),X(6,2,7,1)]"}) {
        KnotDiagram d = parse_pd(code);
        CHECK(parse_pd(d.str()) == d);
    }
}

TEST_CASE("parse_pd rejects malformed text") {
    CHECK_THROWS_AS(parse_pd(""), ParseError);
    CHECK_THROWS_AS(parse_pd("QD[]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X(1,2,3)]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X(1,2,3,4,5)]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[Y(1,2,3,4)]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X(1,2,3,4)] extra"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X(6,4,1,3),]"), ParseError);
}

TEST_CASE("validation rejects bad arc structure") {
    // arc label out of range
    CHECK_THROWS_AS(parse_pd("PD[X(1,7,2,3),X(3,6,4,1),X(5,2,6,3)]"),
                    ValidationError);
    // label used three times / missing labels
    CHECK_THROWS_AS(parse_pd("PD[X(1,1,1,2),X(2,3,3,4),X(4,5,5,6)]"),
                    ValidationError);
    // two-component link in table labeling (per-component numbering)
    CHECK_THROWS_AS(parse_pd("PD[X(4,1,3,2),X(2,3,1,4)]"), ValidationError);
    // crossing with non-adjacent over-strand labels
    CHECK_THROWS_AS(parse_pd("PD[X(1,4,2,6),X(2,6,3,5),X(5,3,6,4),X(7,1,8,8)]"),
                    ValidationError);
}

TEST_CASE("mirror flips every crossing and negates the writhe") {
    KnotDiagram d = parse_pd(kTrefoilPD);
    KnotDiagram m = d.mirrored();
    CHECK(m[0] == Crossing{3, 6, 4, 1});
    CHECK(m[1] == Crossing{5, 2, 6, 3});
    CHECK(m[2] == Crossing{1, 4, 2, 5});
    CHECK(m.writhe() == -3);
    for (int i = 0; i < 3; ++i) CHECK(m.sign(i) == -1);
    CHECK(m.mirrored() == d);
    CHECK(KnotDiagram().mirrored() == KnotDiagram());
}

TEST_CASE("diagram_from_dt realizes alternating codes") {
    auto tre = diagram_from_dt({4, 6, 2});
    REQUIRE(tre.has_value());
    CHECK(tre->str() == "PD[X(6,3,1,4),X(2,5,3,6),X(4,1,5,2)]");
    CHECK(tre->writhe() == -3);

    auto fig8 = diagram_from_dt({4, 6, 8, 2});
    REQUIRE(fig8.has_value());
    CHECK(fig8->str() == "PD[X(8,3,1,4),X(2,6,3,5),X(4,7,5,8),X(6,2,7,1)]");
    CHECK(fig8->writhe() == 0);

    auto k52 = diagram_from_dt({4, 8, 10, 2, 6});
    REQUIRE(k52.has_value());
    CHECK(k52->str() ==
          "PD[X(10,3,1,4),X(2,7,3,8),X(4,9,5,10),X(6,1,7,2),X(8,5,9,6)]");
    CHECK(k52->writhe() == -5);
}

TEST_CASE("diagram_from_dt honors sign data in non-alternating codes") {
    auto d = diagram_from_dt({4, 8, -12, 2, -14, -16, -6, -10});
    REQUIRE(d.has_value());
    CHECK(d->size() == 8);
    CHECK(d->writhe() == -8);
    CHECK(d->str() ==
          "PD[X(16,3,1,4),X(2,7,3,8),X(11,4,12,5),X(6,1,7,2),X(13,8,14,9),"
          "X(15,10,16,11),X(5,12,6,13),X(9,14,10,15)]");
}

TEST_CASE("diagram_from_dt returns nothing for unrealizable codes") {
    CHECK(!diagram_from_dt({4, 6, 8, 10, 2}).has_value());
}

TEST_CASE("diagram_from_dt validates the code shape") {
    CHECK(diagram_from_dt({}).has_value());  // unknot
    CHECK_THROWS_AS(diagram_from_dt({3, 6, 2}), ValidationError);
    CHECK_THROWS_AS(diagram_from_dt({4, 4, 6}), ValidationError);
    CHECK_THROWS_AS(diagram_from_dt({4, 6, 10}), ValidationError);
}

TEST_CASE("slope normalization") {
    Slope a(-7, -2);
    CHECK(a.m() == 7);
    CHECK(a.n() == 2);
    Slope b(4, 2);
    CHECK(b.m() == 2);
    CHECK(b.n() == 1);
    Slope c(6, -4);
    CHECK(c.m() == 3);
    CHECK(c.n() == -2);
    CHECK(c.value() == Rational(Int(-3), Int(2)));
    CHECK(c.str() == "3/-2");
    CHECK_THROWS_AS(Slope(0, 1), InvalidSlope);
    CHECK_THROWS_AS(Slope(3, 0), InvalidSlope);
    CHECK(normalize_slope(10, 15) == Slope(2, 3));
}

TEST_CASE("slope pair trichotomy on pinned cases") {
    CHECK(SlopePair(Slope(2, 1), Slope(2, -1)).type_tag ==
          PairType::zero_type);
    CHECK(SlopePair(Slope(3, 1), Slope(3, 2)).type_tag == PairType::plus_type);
    CHECK(SlopePair(Slope(3, -1), Slope(3, -2)).type_tag ==
          PairType::plus_type);
    CHECK(SlopePair(Slope(5, 1), Slope(5, -2)).type_tag ==
          PairType::minus_type);
}

TEST_CASE("slope pair trichotomy matches rational arithmetic on random pairs") {
    std::mt19937 rng(424242);
    int zeros = 0;
    for (int it = 0; it < 1000; ++it) {
        long long m1 = 1 + rng() % 30, n1 = (long long)(rng() % 30) - 15;
        long long m2 = 1 + rng() % 30, n2 = (long long)(rng() % 30) - 15;
        if (n1 == 0 || n2 == 0) continue;
        // force an occasional exact negative pair
        if (it % 10 == 0) {
            m2 = m1;
            n2 = -n1;
        }
        Slope a(m1, n1), b(m2, n2);
        SlopePair p(a, b);
        Rational sum = a.value() + b.value();
        Rational prod = a.value() * b.value();
        if (sum.is_zero()) {
            CHECK(p.type_tag == PairType::zero_type);
            ++zeros;
        } else if (prod > Rational(0)) {
            CHECK(p.type_tag == PairType::plus_type);
        } else {
            CHECK(p.type_tag == PairType::minus_type);
        }
    }
    CHECK(zeros >= 90);
}
