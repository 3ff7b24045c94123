#include "cherednik/suites.hpp"

#include <random>
#include <sstream>

#include "cherednik/forms.hpp"
#include "cherednik/serialize.hpp"
#include "json.hpp"

namespace cherednik {

namespace {

using Rng = std::mt19937_64;

long rnd_int(Rng& rng, long lo, long hi) { return lo + long(rng() % (unsigned long)(hi - lo + 1)); }

Scalar rnd_scalar(Rng& rng) {
    long num = rnd_int(rng, -4, 4);
    long den = rnd_int(rng, 1, 3);
    return Scalar(Rational(num, den));
}

Scalar rnd_scalar_nonzero(Rng& rng) {
    for (;;) {
        Scalar s = rnd_scalar(rng);
        if (!s.is_zero()) return s;
    }
}

ExpVec rnd_exps(Rng& rng, unsigned r, int total) {
    ExpVec e(r, 0);
    for (int k = 0; k < total; ++k) ++e[rng() % r];
    return e;
}

MultiPoly rnd_poly(Rng& rng, unsigned r, int maxdeg, int nterms) {
    MultiPoly f(r);
    for (int k = 0; k < nterms; ++k)
        f.add_term(rnd_exps(rng, r, int(rng() % (unsigned)(maxdeg + 1))), rnd_scalar(rng));
    return f;
}

CherednikElement rnd_elem(Rng& rng, const Setting& S, int filt, int deg, int nterms) {
    CherednikElement x;
    unsigned r = S.rank();
    for (int k = 0; k < nterms; ++k) {
        int g = int(rng() % S.group.size());
        ExpVec a = rnd_exps(rng, r, int(rng() % (unsigned)(filt + 1)));
        x.add(CherednikElement::Key{g, a}, rnd_poly(rng, r, deg, 2));
    }
    return x;
}

SkewOp rnd_skew(Rng& rng, const Setting& S, int filt, int deg, int nterms,
                bool trivial_group = false) {
    SkewOp a;
    unsigned r = S.rank();
    for (int k = 0; k < nterms; ++k) {
        int g = trivial_group ? 0 : int(rng() % S.group.size());
        ExpVec e = rnd_exps(rng, r, int(rng() % (unsigned)(filt + 1)));
        MultiPoly f = rnd_poly(rng, r, deg, 2);
        a.add(S.arr, SkewOp::Key{g, e}, LocalizedCoeff::from_poly(S.arr, f));
    }
    return a;
}

PolyForm rnd_closed_two_form(Rng& rng, unsigned r, int deg) {
    std::vector<MultiPoly> comps;
    for (unsigned i = 0; i < r; ++i) comps.push_back(rnd_poly(rng, r, deg, 2));
    return exterior_derivative(PolyForm::one_form(r, comps));
}

void monomials_upto(unsigned r, int d, unsigned i, ExpVec& cur, std::vector<ExpVec>& out) {
    if (i == r) {
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= d; ++k) {
        cur[i] = k;
        monomials_upto(r, d - k, i + 1, cur, out);
    }
    cur[i] = 0;
}

std::vector<ExpVec> monomials_upto(unsigned r, int d) {
    std::vector<ExpVec> out;
    ExpVec cur(r, 0);
    monomials_upto(r, d, 0, cur, out);
    return out;
}

CheckResult make_check(std::string name, std::string anchor, bool ok, std::string witness = "") {
    return CheckResult{std::move(name), std::move(anchor), ok ? "pass" : "fail",
                       ok ? "" : std::move(witness)};
}

CheckResult skipped(std::string name, std::string anchor, std::string why) {
    return CheckResult{std::move(name), std::move(anchor), "skipped", std::move(why)};
}

// ---------------------------------------------------------------- commute

SuiteReport suite_commute(const Run& run, Rng& rng) {
    SuiteReport rep{"commute", {}};
    Algebra H(run.setting, run.params);
    if (!run.params.twist.zero_twist()) {
        rep.checks.push_back(skipped("dunkl-commutativity", "law:commuting-dunkl-operators",
                                     "requires omega = 0"));
        return rep;
    }
    unsigned r = run.setting.rank();
    auto monos = monomials_upto(r, int(run.cfg.poly_degree));
    bool ok = true;
    std::string witness;
    for (unsigned i = 0; i < r && ok; ++i)
        for (unsigned j = i + 1; j < r && ok; ++j)
            for (const auto& e : monos) {
                MultiPoly f = MultiPoly::monomial(r, e, Scalar(1));
                MultiPoly lhs = H.dunkl_apply(i, H.dunkl_apply(j, f));
                MultiPoly rhs = H.dunkl_apply(j, H.dunkl_apply(i, f));
                if (lhs != rhs) {
                    ok = false;
                    witness = "[D_" + std::to_string(i + 1) + ",D_" + std::to_string(j + 1) +
                              "] on " + poly_str(f) + " = " + poly_str(lhs - rhs);
                    break;
                }
            }
    rep.checks.push_back(make_check("dunkl-commutativity", "law:commuting-dunkl-operators", ok,
                                    witness));
    // scaled parameters leave the commutativity intact
    Algebra H2(run.setting, H.scaled_params(Scalar(Rational(1, 2))));
    bool ok2 = true;
    for (unsigned i = 0; i < r && ok2; ++i)
        for (unsigned j = i + 1; j < r && ok2; ++j)
            for (int s = 0; s < 10; ++s) {
                MultiPoly f = rnd_poly(rng, r, int(run.cfg.poly_degree), 3);
                if (H2.dunkl_apply(i, H2.dunkl_apply(j, f)) !=
                    H2.dunkl_apply(j, H2.dunkl_apply(i, f))) {
                    ok2 = false;
                    break;
                }
            }
    rep.checks.push_back(
        make_check("dunkl-commutativity-scaled", "law:parameter-scaling", ok2));
    return rep;
}

// -------------------------------------------------------------------- pbw

SuiteReport suite_pbw(const Run& run, Rng& rng, const std::string& inject) {
    SuiteReport rep{"pbw", {}};
    Algebra H(run.setting, run.params);
    const Setting& S = run.setting;
    unsigned samples = std::max(10u, run.cfg.samples / 4);

    bool ok = true;
    std::string witness;
    for (unsigned s = 0; s < samples && ok; ++s) {
        CherednikElement x =
            rnd_elem(rng, S, int(run.cfg.filtration_degree), int(run.cfg.poly_degree), 3);
        CherednikElement back = H.pbw_normal_form(H.embed(x));
        if (back != x) {
            ok = false;
            witness = cher_str(x) + " round-tripped to " + cher_str(back);
        }
    }
    rep.checks.push_back(make_check("pbw-roundtrip", "law:pbw-freeness", ok, witness));

    ok = true;
    witness.clear();
    for (unsigned s = 0; s < samples && ok; ++s) {
        ExpVec a = rnd_exps(rng, S.rank(), int(rng() % (run.cfg.filtration_degree + 1)));
        ExpVec b = rnd_exps(rng, S.rank(), int(rng() % (run.cfg.filtration_degree + 1)));
        CherednikElement xa, xb;
        xa.add({0, a}, MultiPoly::constant(S.rank(), Scalar(1)));
        xb.add({0, b}, MultiPoly::constant(S.rank(), Scalar(1)));
        CherednikElement prod = H.multiply(xa, xb);
        int total = 0;
        for (std::size_t i = 0; i < a.size(); ++i) total += a[i] + b[i];
        // leading part must be exactly D^{a+b}
        CherednikElement top;
        for (const auto& [k, f] : prod.terms()) {
            int d = 0;
            for (int e : k.second) d += e;
            if (d == total) top.add(k, f);
        }
        CherednikElement expect;
        ExpVec ab(S.rank(), 0);
        for (std::size_t i = 0; i < ab.size(); ++i) ab[i] = a[i] + b[i];
        expect.add({0, ab}, MultiPoly::constant(S.rank(), Scalar(1)));
        if (top != expect) {
            ok = false;
            witness = "D^a * D^b top term " + cher_str(top);
        }
    }
    rep.checks.push_back(make_check("pbw-leading-term", "law:graded-isomorphism", ok, witness));

    ok = true;
    witness.clear();
    for (unsigned s = 0; s < samples && ok; ++s) {
        CherednikElement x = rnd_elem(rng, S, 2, 2, 2);
        CherednikElement y = rnd_elem(rng, S, 2, 2, 2);
        try {
            CherednikElement p = H.multiply(x, y);
            if (p.max_filtration() > x.max_filtration() + y.max_filtration() &&
                !x.is_zero() && !y.is_zero()) {
                ok = false;
                witness = "filtration grew past the sum";
            }
        } catch (const NotInAlgebra& e) {
            ok = false;
            witness = e.what();
        }
    }
    rep.checks.push_back(make_check("pbw-closure", "law:pbw-freeness", ok, witness));

    if (!inject.empty()) {
        bool caught = false;
        std::string msg;
        try {
            SkewOp a = parse_skew(inject, H);
            H.pbw_normal_form(a);
        } catch (const NotInAlgebra& e) {
            caught = true;
            msg = e.what();
        }
        rep.checks.push_back(make_check("pbw-negative-control", "law:negative-control", caught,
                                        "injected element normal-formed without NotInAlgebra"));
        (void)msg;
    }
    return rep;
}

// ----------------------------------------------------------- presentation

SuiteReport suite_presentation(const Run& run, Rng& rng) {
    SuiteReport rep{"presentation", {}};
    Algebra H(run.setting, run.params);
    rep.checks = verify_rational_presentation(H, run.cfg.poly_degree);

    // commutator formula against the generic operator commutator
    const Setting& S = run.setting;
    bool ok = true;
    std::string witness;
    for (unsigned s = 0; s < 20 && ok; ++s) {
        unsigned i = unsigned(rng() % S.rank());
        MultiPoly f = rnd_poly(rng, S.rank(), int(run.cfg.poly_degree), 3);
        SkewOp df = multiply_skew(S.group, S.arr, run.params.twist, H.dunkl(i),
                                  SkewOp::from_poly(S.arr, f));
        SkewOp fd = multiply_skew(S.group, S.arr, run.params.twist,
                                  SkewOp::from_poly(S.arr, f), H.dunkl(i));
        CherednikElement comm = H.commutator_with_function(i, f);
        if (skew_sub(S.arr, df, fd) != H.embed(comm) || comm.max_filtration() > 0) {
            ok = false;
            witness = "[D_" + std::to_string(i + 1) + ", " + poly_str(f) + "]";
        }
    }
    rep.checks.push_back(
        make_check("commutator-with-function", "law:commutator-degree-zero", ok, witness));
    return rep;
}

// ---------------------------------------------------------------------- tdo

SuiteReport suite_tdo(const Run& run, Rng& rng) {
    SuiteReport rep{"tdo", {}};
    const Setting& S = run.setting;
    unsigned r = S.rank();
    PolyForm config_omega = PolyForm::two_form(r, run.params.twist.omega);
    if (!is_closed(config_omega))
        throw NotClosed("configured omega is not closed: d(omega) != 0");
    rep.checks.push_back(make_check("config-omega-closed", "law:twist-classification", true));

    bool ok = true;
    for (unsigned s = 0; s < run.cfg.samples && ok; ++s) {
        std::vector<MultiPoly> comps;
        for (unsigned i = 0; i < r; ++i) comps.push_back(rnd_poly(rng, r, 3, 2));
        PolyForm w = PolyForm::one_form(r, comps);
        ok = exterior_derivative(exterior_derivative(w)).is_zero() &&
             exterior_derivative(exterior_derivative(PolyForm::from_function(rnd_poly(rng, r, 3, 3))))
                 .is_zero();
    }
    rep.checks.push_back(make_check("dd-zero", "law:de-rham-complex", ok));

    ok = true;
    std::string witness;
    for (unsigned s = 0; s < run.cfg.samples && ok; ++s) {
        PolyForm w = rnd_closed_two_form(rng, r, 3);
        PolyForm eta = poincare_antiderivative(w);
        if (exterior_derivative(eta) != w) {
            ok = false;
            witness = w.str();
        }
    }
    rep.checks.push_back(make_check("poincare-inverse", "law:exactness-on-affine-space", ok,
                                    witness));

    // d commutes with the group action
    ok = true;
    for (unsigned s = 0; s < 25 && ok; ++s) {
        int g = int(rng() % S.group.size());
        std::vector<MultiPoly> comps;
        for (unsigned i = 0; i < r; ++i) comps.push_back(rnd_poly(rng, r, 3, 2));
        PolyForm w = PolyForm::one_form(r, comps);
        ok = g_act_on_form(S.group, g, exterior_derivative(w)) ==
             exterior_derivative(g_act_on_form(S.group, g, w));
    }
    rep.checks.push_back(make_check("action-commutes-with-d", "law:equivariant-de-rham", ok));

    // trivializing isomorphism is multiplicative and invertible
    ok = true;
    witness.clear();
    TwistData tw0 = TwistData::untwisted(r, run.params.t);
    Scalar tinv = run.params.t.inverse();
    unsigned iso_samples = std::max(5u, run.cfg.samples / 10);
    for (unsigned s = 0; s < iso_samples && ok; ++s) {
        PolyForm w = rnd_closed_two_form(rng, r, 2);
        TwistData tw1 = tw0;
        tw1.omega = w.as_matrix();
        PolyForm eta = poincare_antiderivative(w).scaled(tinv);
        // group terms only intertwine for equivariant eta, so sample without them
        SkewOp a = rnd_skew(rng, S, 2, 2, 2, true);
        SkewOp b = rnd_skew(rng, S, 2, 2, 2, true);
        SkewOp lhs = twist_iso(S.group, S.arr, eta, tw1, tw0,
                               multiply_skew(S.group, S.arr, tw1, a, b));
        SkewOp rhs = multiply_skew(S.group, S.arr, tw0,
                                   twist_iso(S.group, S.arr, eta, tw1, tw0, a),
                                   twist_iso(S.group, S.arr, eta, tw1, tw0, b));
        if (lhs != rhs) {
            ok = false;
            witness = "phi(ab) != phi(a)phi(b) for omega = " + w.str();
            break;
        }
        SkewOp back = twist_iso(S.group, S.arr, eta.scaled(Scalar(-1)), tw0, tw1,
                                twist_iso(S.group, S.arr, eta, tw1, tw0, a));
        if (back != a) {
            ok = false;
            witness = "phi_{-eta} . phi_{eta} != id";
        }
    }
    rep.checks.push_back(make_check("twist-iso", "law:twist-classification", ok, witness));

    // obstruction vanishes exactly when the induced map is multiplicative
    ok = true;
    witness.clear();
    for (unsigned s = 0; s < 25 && ok; ++s) {
        int g = int(rng() % S.group.size());
        PolyForm w = rnd_closed_two_form(rng, r, 2);
        if (s % 2 == 0) {
            // symmetrize to exercise the invariant branch
            PolyForm acc(r, 2);
            for (std::size_t h = 0; h < S.group.size(); ++h)
                acc = acc + g_act_on_form(S.group, int(h), w);
            w = acc;
        }
        TwistData tw1 = tw0;
        tw1.omega = w.as_matrix();
        bool obstruction_zero = extension_obstruction(S.group, g, w).is_zero();
        bool multiplicative = g_map_multiplicative(S.group, S.arr, tw1, g);
        if (obstruction_zero != multiplicative) {
            ok = false;
            witness = "g" + std::to_string(g) + ", omega = " + w.str();
        }
    }
    rep.checks.push_back(
        make_check("equivariance-criterion", "law:equivariant-extension", ok, witness));
    return rep;
}

// -------------------------------------------------------------------- norms

SuiteReport suite_norms(const Run& run, Rng& rng) {
    SuiteReport rep{"norms", {}};
    Algebra H(run.setting, run.params);
    const Setting& S = run.setting;
    unsigned r = S.rank();
    LatticeLevel level = run.level();

    rep.checks.push_back(make_check("shilov-in-domain", "law:gauss-point-membership",
                                    shilov_in_domain(S.arr, run.spec, level)));

    bool certified = certify_cherednik_level(H, run.spec, level);
    rep.checks.push_back(make_check(
        "lattice-certification", "law:integral-dunkl-lattice", certified,
        "level (n=" + std::to_string(level.n) + ", m=" + std::to_string(level.m) +
            ") is not a certified Cherednik lattice"));

    bool ok = true;
    for (unsigned s = 0; s < run.cfg.samples && ok; ++s) {
        MultiPoly f = rnd_poly(rng, r, 3, 3);
        MultiPoly g = rnd_poly(rng, r, 3, 3);
        if (f.is_zero() || g.is_zero()) continue;
        ValOrInf vf = gauss_valuation(f, run.spec), vg = gauss_valuation(g, run.spec);
        ok = gauss_valuation(f * g, run.spec) == vf + vg;
    }
    rep.checks.push_back(make_check("gauss-multiplicativity", "law:gauss-norm", ok));

    ok = true;
    if (!S.arr.alphas.empty()) {
        for (unsigned s = 0; s < run.cfg.samples && ok; ++s) {
            std::vector<int> d1(S.arr.count(), 0), d2(S.arr.count(), 0);
            d1[rng() % S.arr.count()] = int(rng() % 3);
            d2[rng() % S.arr.count()] = int(rng() % 3);
            LocalizedCoeff c1 = LocalizedCoeff(rnd_poly(rng, r, 2, 2), d1).reduced(S.arr);
            LocalizedCoeff c2 = LocalizedCoeff(rnd_poly(rng, r, 2, 2), d2).reduced(S.arr);
            if (c1.is_zero() || c2.is_zero()) continue;
            ok = localized_valuation(c1.mul(S.arr, c2), run.spec, level) ==
                 localized_valuation(c1, run.spec, level) +
                     localized_valuation(c2, run.spec, level);
        }
    }
    rep.checks.push_back(make_check("localized-multiplicativity", "law:gauss-norm", ok));

    if (certified) {
        ok = true;
        std::string witness;
        for (unsigned s = 0; s < run.cfg.samples && ok; ++s) {
            CherednikElement a = rnd_elem(rng, S, 2, 2, 2);
            CherednikElement b = rnd_elem(rng, S, 2, 2, 2);
            ValOrInf va = element_gauge(a, run.spec, level);
            ValOrInf vb = element_gauge(b, run.spec, level);
            ValOrInf vab = element_gauge(H.multiply(a, b), run.spec, level);
            if (!(vab >= va + vb)) {
                ok = false;
                witness = "gauge(" + cher_str(a) + " * " + cher_str(b) + ") = " + vab.str() +
                          " < " + (va + vb).str();
            }
            CherednikElement sum = cher_add(a, b);
            if (!(element_gauge(sum, run.spec, level) >= min(va, vb))) {
                ok = false;
                witness = "gauge of a sum dropped below the min";
            }
        }
        rep.checks.push_back(
            make_check("gauge-submultiplicative", "law:integral-gauge", ok, witness));
    } else {
        rep.checks.push_back(skipped("gauge-submultiplicative", "law:integral-gauge",
                                     "level not certified"));
    }
    return rep;
}

// -------------------------------------------------------------------- tower

SuiteReport suite_tower(const Run& run, Rng& rng) {
    SuiteReport rep{"tower", {}};
    Algebra H(run.setting, run.params);
    const Setting& S = run.setting;
    unsigned n = run.cfg.level_n;
    if (n < 1) {
        rep.checks.push_back(
            skipped("truncated-arithmetic", "law:truncated-tower", "requires level n >= 1"));
        return rep;
    }
    unsigned N = run.spec.precision;
    unsigned cap = std::max(N, (N + n - 1) / n);
    LatticeLevel level{n, run.cfg.level_m};

    Integer pn = 1;
    for (unsigned k = 0; k < n; ++k) pn *= run.spec.p;
    auto rnd_lattice = [&](int filt) {
        CherednikElement x;
        for (int k = 0; k < 2; ++k) {
            int g = int(rng() % S.group.size());
            ExpVec a = rnd_exps(rng, S.rank(), int(rng() % (unsigned)(filt + 1)));
            int total = 0;
            for (int e : a) total += e;
            Integer scale = 1;
            for (int e = 0; e < int(n) * total; ++e) scale *= run.spec.p;
            MultiPoly f(S.rank());
            for (int t2 = 0; t2 < 2; ++t2)
                f.add_term(rnd_exps(rng, S.rank(), int(rng() % 3)),
                           Scalar(Rational(scale * rnd_int(rng, 0, 9))));
            x.add({g, a}, f);
        }
        return x;
    };
    auto trunc = [&](const CherednikElement& x) {
        return truncate_element(x, run.spec, level, cap);
    };

    TruncatedHElement one = trunc([&] {
        CherednikElement e;
        e.add({0, ExpVec(S.rank(), 0)}, MultiPoly::constant(S.rank(), Scalar(1)));
        return e;
    }());

    bool ok = true;
    for (unsigned s = 0; s < 10 && ok; ++s) {
        TruncatedHElement a = trunc(rnd_lattice(2));
        ok = truncated_multiply(a, one, H, run.spec) == a &&
             truncated_multiply(one, a, H, run.spec) == a;
    }
    rep.checks.push_back(make_check("truncated-identity", "law:truncated-tower", ok));

    ok = true;
    unsigned triples = std::max(5u, run.cfg.samples / 10);
    for (unsigned s = 0; s < triples && ok; ++s) {
        TruncatedHElement a = trunc(rnd_lattice(1));
        TruncatedHElement b = trunc(rnd_lattice(1));
        TruncatedHElement c = trunc(rnd_lattice(1));
        ok = truncated_multiply(truncated_multiply(a, b, H, run.spec), c, H, run.spec) ==
             truncated_multiply(a, truncated_multiply(b, c, H, run.spec), H, run.spec);
    }
    rep.checks.push_back(make_check("truncated-associativity", "law:truncated-tower", ok));

    // independence of the chosen lift mod p^N
    ok = true;
    Integer pN = 1;
    for (unsigned k = 0; k < N; ++k) pN *= run.spec.p;
    for (unsigned s = 0; s < 10 && ok; ++s) {
        CherednikElement a = rnd_lattice(1), b = rnd_lattice(1);
        CherednikElement junk;
        junk.add({int(rng() % S.group.size()), ExpVec(S.rank(), 0)},
                 MultiPoly::constant(S.rank(), Scalar(Rational(pN * rnd_int(rng, 1, 5)))));
        TruncatedHElement lhs = truncated_multiply(trunc(a), trunc(b), H, run.spec);
        TruncatedHElement rhs = trunc(H.multiply(cher_add(a, junk), b));
        ok = lhs == rhs;
    }
    rep.checks.push_back(make_check("truncated-lift-independence", "law:truncated-tower", ok));

    ok = true;
    for (unsigned s = 0; s < run.cfg.samples && ok; ++s) {
        CherednikElement x = rnd_elem(rng, S, 3, 2, 2);
        ValOrInf gn = element_gauge(x, run.spec, LatticeLevel{n, run.cfg.level_m});
        ValOrInf gn1 = element_gauge(x, run.spec, LatticeLevel{n + 1, run.cfg.level_m});
        ok = gn >= gn1;
    }
    rep.checks.push_back(make_check("tower-gauge-monotone", "law:truncated-tower", ok));

    if (n >= 2) {
        ok = true;
        for (unsigned s = 0; s < 10 && ok; ++s) {
            TruncatedHElement a = trunc(rnd_lattice(1));
            TruncatedHElement b = trunc(rnd_lattice(1));
            TruncatedHElement prod = truncated_multiply(a, b, H, run.spec);
            ok = tower_map(prod) ==
                 truncated_multiply(tower_map(a), tower_map(b), H, run.spec);
        }
        rep.checks.push_back(make_check("tower-homomorphism", "law:truncated-tower", ok));
    } else {
        rep.checks.push_back(skipped("tower-homomorphism", "law:truncated-tower",
                                     "target level would be 0"));
    }
    return rep;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"pbw",  "commute", "presentation",
                                                "tdo",  "norms",   "tower"};
    return names;
}

std::vector<CheckResult> verify_rational_presentation(const Algebra& H, unsigned degree_bound) {
    std::vector<CheckResult> out;
    const Setting& S = H.setting();
    unsigned r = S.rank();

    bool twisted = !H.params().twist.zero_twist();
    if (twisted) {
        out.push_back(skipped("relation-vector-commutator", "law:commuting-dunkl-operators",
                              "requires omega = 0"));
    } else {
        bool ok = true;
        std::string witness;
        auto monos = monomials_upto(r, int(degree_bound));
        for (unsigned i = 0; i < r && ok; ++i)
            for (unsigned j = i + 1; j < r && ok; ++j)
                for (const auto& e : monos) {
                    MultiPoly f = MultiPoly::monomial(r, e, Scalar(1));
                    if (H.dunkl_apply(i, H.dunkl_apply(j, f)) !=
                        H.dunkl_apply(j, H.dunkl_apply(i, f))) {
                        ok = false;
                        witness = poly_str(f);
                        break;
                    }
                }
        out.push_back(make_check("relation-vector-commutator", "law:commuting-dunkl-operators",
                                 ok, witness));
    }

    bool ok = true;
    for (unsigned i = 0; i < r && ok; ++i)
        for (unsigned j = 0; j < r && ok; ++j) {
            CherednikElement xi, xj;
            xi.add({0, ExpVec(r, 0)}, MultiPoly::variable(r, i));
            xj.add({0, ExpVec(r, 0)}, MultiPoly::variable(r, j));
            ok = H.multiply(xi, xj) == H.multiply(xj, xi);
        }
    out.push_back(make_check("relation-function-commutativity", "law:polynomial-subalgebra", ok));

    ok = true;
    std::string witness;
    for (unsigned i = 0; i < r && ok; ++i)
        for (unsigned j = 0; j < r && ok; ++j) {
            MultiPoly xj = MultiPoly::variable(r, j);
            CherednikElement di, x;
            ExpVec ei(r, 0);
            ei[i] = 1;
            di.add({0, ei}, MultiPoly::constant(r, Scalar(1)));
            x.add({0, ExpVec(r, 0)}, xj);
            CherednikElement lhs = cher_sub(H.multiply(di, x), H.multiply(x, di));
            CherednikElement rhs = H.commutator_with_function(i, xj);
            if (lhs != rhs || lhs.max_filtration() > 0) {
                ok = false;
                witness = "[D_" + std::to_string(i + 1) + ", x_" + std::to_string(j + 1) +
                          "] = " + cher_str(lhs);
            }
        }
    out.push_back(make_check("relation-dunkl-function", "law:commutator-degree-zero", ok,
                             witness));

    if (!twisted) {
        ok = true;
        auto monos = monomials_upto(r, int(degree_bound));
        for (unsigned i = 0; i < r && ok; ++i)
            for (const auto& e : monos) {
                int d = 0;
                for (int k : e) d += k;
                MultiPoly img = H.dunkl_apply(i, MultiPoly::monomial(r, e, Scalar(1)));
                if (img.is_zero()) continue;
                for (const auto& [e2, c2] : img.terms()) {
                    int d2 = 0;
                    for (int k : e2) d2 += k;
                    if (d2 != d - 1) ok = false;
                }
            }
        out.push_back(make_check("relation-grading", "law:graded-isomorphism", ok));
    }
    return out;
}

SuiteReport run_suite(const Run& run, const std::string& suite, std::uint64_t seed,
                      const std::string& inject) {
    Rng rng(seed);
    if (suite == "pbw") return suite_pbw(run, rng, inject);
    if (suite == "commute") return suite_commute(run, rng);
    if (suite == "presentation") return suite_presentation(run, rng);
    if (suite == "tdo") return suite_tdo(run, rng);
    if (suite == "norms") return suite_norms(run, rng);
    if (suite == "tower") return suite_tower(run, rng);
    throw ConfigError("unknown suite '" + suite + "'");
}

std::string report_json(const RunConfig& cfg, std::uint64_t seed,
                        const std::vector<SuiteReport>& reports) {
    nlohmann::ordered_json doc;
    doc["seed"] = seed;
    doc["conventions"] =
        "left action (g.f)(x) = f(M_g x); fields transform by v -> M_g^{-1} v; "
        "D_v g = g D_{g^{-1}(v)}; gauge(f g D^a) = v_p(f) - n|a|";
    nlohmann::ordered_json conf = nlohmann::ordered_json::object();
    for (const auto& [k, v] : cfg.raw) conf[k] = v;
    doc["config"] = conf;
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        nlohmann::ordered_json s;
        s["suite"] = rep.suite;
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : rep.checks) {
            nlohmann::ordered_json e;
            e["name"] = c.name;
            e["anchor"] = c.anchor;
            e["status"] = c.status;
            e["witness"] = c.witness;
            checks.push_back(e);
        }
        s["checks"] = checks;
        suites.push_back(s);
    }
    doc["suites"] = suites;
    return doc.dump(2) + "\n";
}

} // namespace cherednik
