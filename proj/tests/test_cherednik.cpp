#include "doctest.h"

#include <random>

#include "cherednik/dunkl.hpp"
#include "cherednik/serialize.hpp"

using namespace cherednik;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, unsigned n, int maxdeg, int nterms) {
    MultiPoly f(n);
    for (int k = 0; k < nterms; ++k) {
        ExpVec e(n, 0);
        int d = int(rng() % unsigned(maxdeg + 1));
        for (int j = 0; j < d; ++j) ++e[rng() % n];
        f.add_term(e, Scalar(long(rng() % 9) - 4));
    }
    return f;
}

CherednikElement random_elem(std::mt19937_64& rng, const Setting& S, int filt, int deg) {
    CherednikElement x;
    for (int k = 0; k < 2; ++k) {
        ExpVec a(S.rank(), 0);
        int d = int(rng() % unsigned(filt + 1));
        for (int j = 0; j < d; ++j) ++a[rng() % S.rank()];
        x.add({int(rng() % S.group.size()), a}, random_poly(rng, S.rank(), deg, 2));
    }
    return x;
}

CherednikElement elem(const Setting& S, int g, ExpVec a, MultiPoly f) {
    CherednikElement x;
    x.add({g, std::move(a)}, std::move(f));
    return x;
}

MultiPoly xpow(unsigned k) {
    ExpVec e{int(k)};
    return MultiPoly::monomial(1, e, Scalar(1));
}

} // namespace

TEST_CASE("rank-one Dunkl operator in closed form") {
    // D = t d/dx + c (1/x)(s - 1); D x^k = t k x^{k-1} + c((-1)^k - 1) x^{k-1}
    Setting S = Setting::build(Group::cyclic(2));
    DunklParams P;
    P.t = Scalar(Rational(3, 2));
    P.c.by_class = {Scalar(Rational(5, 7))};
    P.twist = TwistData::untwisted(1);
    Algebra H(S, P);
    for (unsigned k = 1; k <= 8; ++k) {
        Scalar expect = P.t * Scalar(long(k));
        if (k % 2 == 1) expect += Scalar(-2) * P.c.by_class[0];
        CHECK(H.dunkl_apply(0, xpow(k)) == expect * xpow(k - 1));
    }
    CHECK(H.dunkl_apply(0, xpow(0)).is_zero());
}

TEST_CASE("commutator with a coordinate") {
    Setting S = Setting::build(Group::cyclic(2));
    DunklParams P;
    P.t = Scalar(1);
    P.c.by_class = {Scalar(Rational(1, 3))};
    P.twist = TwistData::untwisted(1);
    Algebra H(S, P);
    // [D, x] = t - 2c s
    CherednikElement expect = elem(S, 0, {0}, MultiPoly::constant(1, P.t));
    expect.add({1, {0}}, MultiPoly::constant(1, Scalar(-2) * P.c.by_class[0]));
    CHECK(H.commutator_with_function(0, MultiPoly::variable(1, 0)) == expect);

    // and via full products: D x - x D
    CherednikElement D = elem(S, 0, {1}, MultiPoly::constant(1, Scalar(1)));
    CherednikElement x = elem(S, 0, {0}, MultiPoly::variable(1, 0));
    CHECK(cher_sub(H.multiply(D, x), H.multiply(x, D)) == expect);
    // D x = x D + t - 2c s
    CherednikElement Dx = H.multiply(D, x);
    CherednikElement expect_prod = cher_add(x, expect); // x D^1 plus degree-0 part
    CherednikElement manual = elem(S, 0, {1}, MultiPoly::variable(1, 0));
    manual.add({0, {0}}, MultiPoly::constant(1, P.t));
    manual.add({1, {0}}, MultiPoly::constant(1, Scalar(-2) * P.c.by_class[0]));
    CHECK(Dx == manual);
    (void)expect_prod;
}

TEST_CASE("commutators with functions across groups") {
    std::mt19937_64 rng(41);
    for (Group g : {Group::symmetric(3), Group::hyperoctahedral(2)}) {
        Setting S = Setting::build(std::move(g));
        DunklParams P;
        P.t = Scalar(2);
        P.c.by_class.assign(S.classes.size(), Scalar(Rational(1, 2)));
        P.twist = TwistData::untwisted(S.rank(), P.t);
        Algebra H(S, P);
        for (int k = 0; k < 25; ++k) {
            unsigned i = unsigned(rng() % S.rank());
            MultiPoly f = random_poly(rng, S.rank(), 3, 3);
            CherednikElement D = elem(S, 0, [&] {
                ExpVec e(S.rank(), 0);
                e[i] = 1;
                return e;
            }(), MultiPoly::constant(S.rank(), Scalar(1)));
            CherednikElement xf = elem(S, 0, ExpVec(S.rank(), 0), f);
            CherednikElement lhs = cher_sub(H.multiply(D, xf), H.multiply(xf, D));
            REQUIRE(lhs == H.commutator_with_function(i, f));
            REQUIRE(lhs.max_filtration() <= 0);
        }
    }
}

TEST_CASE("pbw normal form round-trips and rejects outsiders") {
    std::mt19937_64 rng(42);
    Setting S = Setting::build(Group::symmetric(3));
    DunklParams P;
    P.t = Scalar(1);
    P.c.by_class = {Scalar(Rational(2, 3))};
    P.twist = TwistData::untwisted(3);
    Algebra H(S, P);
    for (int k = 0; k < 40; ++k) {
        CherednikElement x = random_elem(rng, S, 3, 3);
        REQUIRE(H.pbw_normal_form(H.embed(x)) == x);
    }
    // representative independence: the same operator built two ways
    CherednikElement a = elem(S, 1, {1, 0, 0}, MultiPoly::variable(3, 1));
    SkewOp one_way = H.embed(a);
    SkewOp other = multiply_skew(S.group, S.arr, P.twist,
                                 SkewOp::from_poly(S.arr, MultiPoly::variable(3, 1)),
                                 multiply_skew(S.group, S.arr, P.twist,
                                               SkewOp::group_elem(S.arr, 1), H.dpow({1, 0, 0})));
    CHECK(H.pbw_normal_form(other) == H.pbw_normal_form(one_way));

    // a bare L is not in the algebra when c != 0
    CHECK_THROWS_AS(H.pbw_normal_form(SkewOp::L(S.arr, 0)), NotInAlgebra);
    // neither is a denominator at filtration zero
    std::vector<int> den(S.arr.count(), 0);
    den[0] = 1;
    SkewOp frac = SkewOp::from_coeff(S.arr,
                                     LocalizedCoeff(MultiPoly::constant(3, Scalar(1)), den));
    CHECK_THROWS_AS(H.pbw_normal_form(frac), NotInAlgebra);
}

TEST_CASE("multiplication is associative and filtered") {
    std::mt19937_64 rng(43);
    Setting S = Setting::build(Group::hyperoctahedral(2));
    DunklParams P;
    P.t = Scalar(1);
    P.c.by_class = {Scalar(Rational(1, 2)), Scalar(3)};
    P.twist = TwistData::untwisted(2);
    Algebra H(S, P);
    for (int k = 0; k < 15; ++k) {
        CherednikElement a = random_elem(rng, S, 2, 2);
        CherednikElement b = random_elem(rng, S, 2, 2);
        CherednikElement c = random_elem(rng, S, 1, 2);
        REQUIRE(H.multiply(H.multiply(a, b), c) == H.multiply(a, H.multiply(b, c)));
        CHECK(H.multiply(a, b).max_filtration() <= a.max_filtration() + b.max_filtration());
    }
}

TEST_CASE("degeneration at c = 0 is the smash product with the Weyl algebra") {
    std::mt19937_64 rng(44);
    Setting S = Setting::build(Group::symmetric(3));
    DunklParams P;
    P.t = Scalar(Rational(2, 5));
    P.c.by_class = {Scalar(0)};
    P.twist = TwistData::untwisted(3, P.t);
    Algebra H(S, P);
    // D_v = t L_v exactly
    CHECK(H.dunkl(0) == skew_scale(SkewOp::L(S.arr, 0), P.t));
    for (int k = 0; k < 50; ++k) {
        CherednikElement a = random_elem(rng, S, 2, 2);
        CherednikElement b = random_elem(rng, S, 2, 2);
        SkewOp prod = multiply_skew(S.group, S.arr, P.twist, H.embed(a), H.embed(b));
        REQUIRE(H.embed(H.multiply(a, b)) == prod);
        REQUIRE(H.from_skew_weyl(prod) == H.multiply(a, b));
    }
}

TEST_CASE("parameter scaling is an isomorphism") {
    std::mt19937_64 rng(45);
    Setting S = Setting::build(Group::hyperoctahedral(2));
    DunklParams P;
    P.t = Scalar(1);
    P.c.by_class = {Scalar(Rational(1, 2)), Scalar(2)};
    P.twist = TwistData::untwisted(2);
    Algebra H(S, P);
    for (const Scalar& lam : {Scalar(2), Scalar(Rational(1, 5)), Scalar(Rational(-3, 7))}) {
        Algebra H2(S, H.scaled_params(lam));
        for (int k = 0; k < 25; ++k) {
            CherednikElement a = random_elem(rng, S, 2, 2);
            CherednikElement b = random_elem(rng, S, 2, 2);
            REQUIRE(H2.multiply(H.scale_parameters(a, lam), H.scale_parameters(b, lam)) ==
                    H.scale_parameters(H.multiply(a, b), lam));
        }
    }
}

TEST_CASE("scaling by a root of unity over a cyclotomic field") {
    std::mt19937_64 rng(46);
    Setting S = Setting::build(Group::cyclic(4));
    DunklParams P;
    P.t = Scalar(1);
    P.c.by_class = {Scalar(Rational(1, 2)), Scalar(2), Scalar(Rational(1, 3))};
    P.twist = TwistData::untwisted(1);
    Algebra H(S, P);
    Scalar zeta = Scalar::zeta(Field::cyclotomic(4));
    Algebra H2(S, H.scaled_params(zeta));
    for (int k = 0; k < 25; ++k) {
        CherednikElement a = random_elem(rng, S, 3, 3);
        CherednikElement b = random_elem(rng, S, 3, 3);
        REQUIRE(H2.multiply(H.scale_parameters(a, zeta), H.scale_parameters(b, zeta)) ==
                H.scale_parameters(H.multiply(a, b), zeta));
    }
}

TEST_CASE("conjugation by group elements is an automorphism") {
    std::mt19937_64 rng(47);
    Setting S = Setting::build(Group::symmetric(3));
    DunklParams P;
    P.t = Scalar(1);
    P.c.by_class = {Scalar(Rational(1, 2))};
    P.twist = TwistData::untwisted(3);
    Algebra H(S, P);
    for (int k = 0; k < 15; ++k) {
        int g = int(rng() % S.group.size());
        CherednikElement a = random_elem(rng, S, 2, 2);
        CherednikElement b = random_elem(rng, S, 2, 2);
        REQUIRE(H.conjugate(g, H.multiply(a, b)) ==
                H.multiply(H.conjugate(g, a), H.conjugate(g, b)));
    }
    // g D_v g^-1 = D_{g(v)}
    for (std::size_t g = 0; g < S.group.size(); ++g) {
        std::vector<Scalar> e1{Scalar(1), Scalar(0), Scalar(0)};
        CherednikElement D1 = elem(S, 0, {1, 0, 0}, MultiPoly::constant(3, Scalar(1)));
        CherednikElement image = H.conjugate(int(g), D1);
        CHECK(H.embed(image) == H.dunkl_field(S.group.act_on_field(int(g), e1)));
    }
}

TEST_CASE("twisted algebra stays associative") {
    std::mt19937_64 rng(48);
    Setting S = Setting::build(Group::symmetric(2));
    DunklParams P;
    P.t = Scalar(1);
    P.c.by_class = {Scalar(Rational(1, 2))};
    P.twist = TwistData::untwisted(2);
    // the twist must be G-invariant for the smash product to close:
    // swap((x1 - x2) dx1^dx2) = (x2 - x1) dx2^dx1 = (x1 - x2) dx1^dx2
    P.twist.omega[0][1] = MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1);
    P.twist.omega[1][0] = -P.twist.omega[0][1];
    Algebra H(S, P);
    for (int k = 0; k < 10; ++k) {
        CherednikElement a = random_elem(rng, S, 2, 2);
        CherednikElement b = random_elem(rng, S, 2, 2);
        CherednikElement c = random_elem(rng, S, 1, 2);
        REQUIRE(H.multiply(H.multiply(a, b), c) == H.multiply(a, H.multiply(b, c)));
    }
    CHECK_THROWS_AS(H.dunkl_apply(0, MultiPoly::variable(2, 0)), TwistNotZero);
}
