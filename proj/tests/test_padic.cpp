#include "doctest.h"

#include <random>

#include "cherednik/padic.hpp"

using namespace cherednik;

namespace {

Setting z2() { return Setting::build(Group::cyclic(2)); }

Algebra make_algebra(const Setting& S, Rational t, Rational c) {
    DunklParams P;
    P.t = Scalar(t);
    P.c.by_class.assign(S.classes.size(), Scalar(c));
    P.twist = TwistData::untwisted(S.rank(), P.t);
    return Algebra(S, P);
}

PadicSpec spec5(unsigned N = 8) {
    PadicSpec s;
    s.field = Field::rationals();
    s.p = 5;
    s.precision = N;
    return s;
}

MultiPoly xpow(unsigned k) { return MultiPoly::monomial(1, {int(k)}, Scalar(1)); }

} // namespace

TEST_CASE("Gauss valuation is the minimum over coefficients") {
    PadicSpec sp = spec5();
    MultiPoly f(2);
    f.add_term({1, 0}, Scalar(25));
    f.add_term({0, 2}, Scalar(Rational(1, 5)));
    CHECK(gauss_valuation(f, sp) == ValOrInf::of(-1));
    f = MultiPoly(2);
    f.add_term({1, 1}, Scalar(50));
    f.add_term({0, 0}, Scalar(125));
    CHECK(gauss_valuation(f, sp) == ValOrInf::of(2));
    CHECK(gauss_valuation(MultiPoly(2), sp) == ValOrInf::inf());
}

TEST_CASE("localized valuation lower bound on the boundary domain") {
    Setting S = z2();
    PadicSpec sp = spec5();
    // 1/x at level m = 2: 0 - 2 * 1 = -2
    LocalizedCoeff c(MultiPoly::constant(1, Scalar(1)), {1});
    CHECK(localized_valuation(c, sp, LatticeLevel{0, 2}) == ValOrInf::of(-2));
    // 25/x^2 at m = 1: 2 - 2
    LocalizedCoeff c2(MultiPoly::constant(1, Scalar(25)), {2});
    CHECK(localized_valuation(c2, sp, LatticeLevel{0, 1}) == ValOrInf::of(0));
    CHECK(shilov_in_domain(S.arr, sp, LatticeLevel{0, 0}));
    CHECK(shilov_in_domain(S.arr, sp, LatticeLevel{3, 3}));
}

TEST_CASE("lattice certification across levels") {
    Setting S = z2();
    PadicSpec sp = spec5();
    Algebra unit_c = make_algebra(S, 1, 2);
    // kappa / x has localized valuation -m, so certification needs n >= m
    for (unsigned n = 0; n <= 3; ++n)
        for (unsigned m = 0; m <= 3; ++m)
            CHECK(certify_cherednik_level(unit_c, sp, LatticeLevel{n, m}) == (n >= m));

    // c = 1/p fails at level 0 and passes once n absorbs the pole
    Algebra pole_c = make_algebra(S, 1, Rational(1, 5));
    CHECK(!certify_cherednik_level(pole_c, sp, LatticeLevel{0, 0}));
    CHECK(certify_cherednik_level(pole_c, sp, LatticeLevel{1, 0}));

    // t with a pole needs n >= v_p(1/t)
    Algebra pole_t = make_algebra(S, Rational(1, 25), 0);
    CHECK(!certify_cherednik_level(pole_t, sp, LatticeLevel{1, 0}));
    CHECK(certify_cherednik_level(pole_t, sp, LatticeLevel{2, 0}));
}

TEST_CASE("element gauge in the level basis") {
    PadicSpec sp = spec5();
    // 5 g D^2 at n = 1: v(5) - 1*2 = -1
    CherednikElement x;
    x.add({1, {2}}, MultiPoly::constant(1, Scalar(5)));
    CHECK(element_gauge(x, sp, LatticeLevel{1, 0}) == ValOrInf::of(-1));
    CHECK(element_gauge(x, sp, LatticeLevel{0, 0}) == ValOrInf::of(1));
    CHECK(element_gauge(x, sp, LatticeLevel{2, 0}) == ValOrInf::of(-3));
    x.add({0, {0}}, MultiPoly::constant(1, Scalar(Rational(1, 5))));
    CHECK(element_gauge(x, sp, LatticeLevel{1, 0}) == ValOrInf::of(-1));
    CHECK(element_gauge(CherednikElement{}, sp, LatticeLevel{1, 0}) == ValOrInf::inf());
}

TEST_CASE("gauge is submultiplicative on a certified level") {
    std::mt19937_64 rng(51);
    Setting S = z2();
    PadicSpec sp = spec5();
    Algebra H = make_algebra(S, 1, 2);
    LatticeLevel level{2, 1};
    REQUIRE(certify_cherednik_level(H, sp, level));
    for (int k = 0; k < 200; ++k) {
        CherednikElement a, b;
        for (int j = 0; j < 2; ++j) {
            MultiPoly f(1);
            f.add_term({int(rng() % 3)}, Scalar(Rational(long(rng() % 9) - 4)));
            a.add({int(rng() % 2), {int(rng() % 3)}}, f);
            MultiPoly g(1);
            g.add_term({int(rng() % 3)}, Scalar(Rational(long(rng() % 9) - 4)));
            b.add({int(rng() % 2), {int(rng() % 3)}}, g);
        }
        ValOrInf va = element_gauge(a, sp, level);
        ValOrInf vb = element_gauge(b, sp, level);
        REQUIRE(element_gauge(H.multiply(a, b), sp, level) >= va + vb);
        REQUIRE(element_gauge(cher_add(a, b), sp, level) >= min(va, vb));
    }
}

TEST_CASE("scalar reduction through the Hensel embedding") {
    PadicSpec sp;
    sp.field = Field::cyclotomic(4);
    sp.p = 5;
    sp.precision = 3;
    // the chosen root of x^2 + 1 lifts 2 mod 5 to 57 mod 125
    CHECK(reduce_scalar(Scalar::zeta(sp.field), sp) == 57);
    CHECK(reduce_scalar(Scalar::from_rational(sp.field, Rational(1, 2)), sp) == 63);
    CHECK_THROWS(reduce_scalar(Scalar(Rational(1, 5)), sp));
    // valuation through the embedding: v(zeta - 2) = 1 at p = 5
    CHECK(valuation(Scalar::zeta(sp.field) - Scalar(2), sp) == ValOrInf::of(1));
}

TEST_CASE("truncated multiplication mod p^4") {
    Setting S = z2();
    PadicSpec sp = spec5(4);
    Algebra H = make_algebra(S, 1, 2);
    LatticeLevel level{1, 0};
    unsigned cap = 4;

    // (25 D)(5 x) = 125 x D + 125 - 500 s, reduced mod 625
    CherednikElement a, b;
    a.add({0, {1}}, MultiPoly::constant(1, Scalar(25)));
    b.add({0, {0}}, Scalar(5) * xpow(1));
    TruncatedHElement ta = truncate_element(a, sp, level, cap);
    TruncatedHElement tb = truncate_element(b, sp, level, cap);
    TruncatedHElement prod = truncated_multiply(ta, tb, H, sp);
    TruncatedHElement expect = truncate_element(H.multiply(a, b), sp, level, cap);
    CHECK(prod == expect);
    REQUIRE(prod.terms.count({0, {1}}) == 1);
    CHECK(prod.terms.at({0, {1}}).at({1}) == 125);
    CHECK(prod.terms.at({0, {0}}).at({0}) == 125);
    CHECK(prod.terms.at({1, {0}}).at({0}) == 125); // -500 mod 625

    CHECK_THROWS_AS(truncated_multiply(truncate_element(a, sp, level, 2),
                                       truncate_element(b, sp, level, 2), H, sp),
                    CapTooSmall);
}

TEST_CASE("tower map is a ring map that can only raise the gauge") {
    std::mt19937_64 rng(52);
    Setting S = z2();
    PadicSpec sp = spec5(4);
    Algebra H = make_algebra(S, 1, 2);
    LatticeLevel level{2, 0};
    unsigned cap = 4; // keeps n * cap >= N after the tower map down to n = 1
    auto random_lattice = [&] {
        CherednikElement x;
        for (int j = 0; j < 2; ++j) {
            int d = int(rng() % 2);
            Integer scale = 1;
            for (int e = 0; e < 2 * d; ++e) scale *= 5;
            MultiPoly f(1);
            f.add_term({int(rng() % 3)}, Scalar(Rational(scale * long(rng() % 9))));
            x.add({int(rng() % 2), {d}}, f);
        }
        return x;
    };
    for (int k = 0; k < 25; ++k) {
        CherednikElement xa = random_lattice(), xb = random_lattice();
        TruncatedHElement a = truncate_element(xa, sp, level, cap);
        TruncatedHElement b = truncate_element(xb, sp, level, cap);
        TruncatedHElement prod = truncated_multiply(a, b, H, sp);
        REQUIRE(tower_map(prod) == truncated_multiply(tower_map(a), tower_map(b), H, sp));
        REQUIRE(element_gauge(xa, sp, LatticeLevel{1, 0}) >= element_gauge(xa, sp, level));
    }
}
