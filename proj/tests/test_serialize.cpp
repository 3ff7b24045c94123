#include "doctest.h"

#include <random>

#include "cherednik/serialize.hpp"

using namespace cherednik;

namespace {

Algebra make_z2() {
    static Setting S = Setting::build(Group::cyclic(2));
    DunklParams P;
    P.t = Scalar(1);
    P.c.by_class = {Scalar(2)};
    P.twist = TwistData::untwisted(1);
    return Algebra(S, P);
}

Algebra make_s3() {
    static Setting S = Setting::build(Group::symmetric(3));
    DunklParams P;
    P.t = Scalar(1);
    P.c.by_class = {Scalar(Rational(1, 2))};
    P.twist = TwistData::untwisted(3);
    return Algebra(S, P);
}

MultiPoly random_poly(std::mt19937_64& rng, unsigned n, int maxdeg, int nterms) {
    MultiPoly f(n);
    for (int k = 0; k < nterms; ++k) {
        ExpVec e(n, 0);
        int d = int(rng() % unsigned(maxdeg + 1));
        for (int j = 0; j < d; ++j) ++e[rng() % n];
        f.add_term(e, Scalar(Rational(long(rng() % 9) - 4, 1 + long(rng() % 3))));
    }
    return f;
}

} // namespace

TEST_CASE("canonical text forms") {
    MultiPoly f(2);
    f.add_term({1, 0}, Scalar(2));
    f.add_term({0, 0}, Scalar(Rational(-1, 3)));
    CHECK(poly_str(f) == "-1/3 + 2 * x^(1,0)");
    CHECK(poly_str(MultiPoly(2)) == "0");

    Algebra H = make_z2();
    CherednikElement x;
    x.add({1, {2}}, MultiPoly::constant(1, Scalar(5)));
    CHECK(cher_str(x) == "5 * g1 * D^(2)");
    CHECK(skew_str(SkewOp::L(H.setting().arr, 0)) == "1 * L^(1)");
}

TEST_CASE("polynomial parsing") {
    Algebra H = make_s3();
    MultiPoly f = parse_poly("2 * x_1 * x_2 + x^(0,0,3) - 1/2", H);
    MultiPoly expect(3);
    expect.add_term({1, 1, 0}, Scalar(2));
    expect.add_term({0, 0, 3}, Scalar(1));
    expect.add_term({0, 0, 0}, Scalar(Rational(-1, 2)));
    CHECK(f == expect);
    CHECK(parse_poly(poly_str(expect), H) == expect);
    CHECK_THROWS_AS(parse_poly("L_1", H), ParseError);
    CHECK_THROWS_AS(parse_poly("g1", H), ParseError);
}

TEST_CASE("operator round trips") {
    std::mt19937_64 rng(61);
    Algebra H = make_s3();
    const Setting& S = H.setting();
    for (int k = 0; k < 40; ++k) {
        CherednikElement x;
        for (int j = 0; j < 2; ++j) {
            ExpVec a(3, 0);
            a[rng() % 3] = int(rng() % 3);
            x.add({int(rng() % S.group.size()), a}, random_poly(rng, 3, 2, 2));
        }
        REQUIRE(H.pbw_normal_form(parse_skew(cher_str(x), H)) == x);
    }
    for (int k = 0; k < 40; ++k) {
        SkewOp a;
        for (int j = 0; j < 2; ++j) {
            ExpVec e(3, 0);
            e[rng() % 3] = int(rng() % 3);
            std::vector<int> den(S.arr.count(), 0);
            den[rng() % S.arr.count()] = int(rng() % 2);
            a.add(S.arr, SkewOp::Key{int(rng() % S.group.size()), e},
                  LocalizedCoeff(random_poly(rng, 3, 2, 2), den).reduced(S.arr));
        }
        REQUIRE(parse_skew(skew_str(a), H) == a);
    }
}

TEST_CASE("D factors expand through the Dunkl embedding") {
    Algebra H = make_z2();
    CHECK(parse_skew("D_1", H) == H.dunkl(0));
    CHECK(parse_skew("D^(2)", H) == H.dpow({2}));
    // [D, x] = t - 2c s with t = 1, c = 2
    SkewOp comm = parse_skew("D_1 * x_1 - x_1 * D_1", H);
    SkewOp expect = SkewOp::one(H.setting().arr);
    expect.add(H.setting().arr, SkewOp::Key{1, {0}},
               LocalizedCoeff::from_scalar(H.setting().arr, Scalar(-4)));
    CHECK(comm == expect);
}

TEST_CASE("division by hyperplane forms and scalars") {
    Algebra H = make_z2();
    SkewOp frac = parse_skew("1 / x_1", H);
    REQUIRE(frac.terms().size() == 1);
    const auto& [key, c] = *frac.terms().begin();
    CHECK(key.first == 0);
    CHECK(c.den() == std::vector<int>{1});
    CHECK_THROWS_AS(H.pbw_normal_form(frac), NotInAlgebra);

    SkewOp half = parse_skew("3 / 6", H);
    CHECK(half == skew_scale(SkewOp::one(H.setting().arr), Scalar(Rational(1, 2))));

    // x + 1 is not invertible in the localized ring
    CHECK_THROWS_AS(parse_skew("1 / (x_1 + 1)", H), ParseError);
    CHECK_THROWS_AS(parse_skew("1 / L_1", H), ParseError);
    CHECK_THROWS_AS(parse_skew("1 / 0", H), ParseError);
}

TEST_CASE("cyclotomic scalars") {
    Setting S = Setting::build(Group::cyclic(4));
    DunklParams P;
    P.t = Scalar(1);
    P.c.by_class = {Scalar(1), Scalar(1), Scalar(1)};
    P.twist = TwistData::untwisted(1);
    Algebra H(S, P);
    Scalar i = Scalar::zeta(Field::cyclotomic(4));
    CHECK(parse_skew("zeta^2", H) == skew_scale(SkewOp::one(S.arr), Scalar(-1)));
    SkewOp a = parse_skew("(1 + zeta) * x_1", H);
    SkewOp expect = SkewOp::from_poly(S.arr, (Scalar(1) + i) * MultiPoly::variable(1, 0));
    CHECK(a == expect);
    // round trip through str with cyclotomic coefficients
    CHECK(parse_skew(skew_str(expect), H) == expect);
}

TEST_CASE("parse errors carry positions") {
    Algebra H = make_z2();
    try {
        parse_skew("x_1 + %", H);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
    CHECK_THROWS_AS(parse_skew("x_2", H), ParseError);      // index out of range
    CHECK_THROWS_AS(parse_skew("x^(1,2)", H), ParseError);  // wrong exponent count
    CHECK_THROWS_AS(parse_skew("g9", H), ParseError);       // label out of range
    CHECK_THROWS_AS(parse_skew("x_1 x_1", H), ParseError);  // missing operator
    CHECK_THROWS_AS(parse_skew("", H), ParseError);
}
