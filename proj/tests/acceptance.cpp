// Acceptance gate: one line per criterion, exit code = number of failures.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cherednik/forms.hpp"
#include "cherednik/padic.hpp"
#include "cherednik/serialize.hpp"

using namespace cherednik;

namespace {

std::string g_cli;
std::string g_data;
int g_failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail = "") {
    std::cout << "criterion " << n << ": " << (ok ? "pass" : "fail") << " - " << what;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
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

ExpVec random_exps(std::mt19937_64& rng, unsigned r, int bound) {
    ExpVec e(r, 0);
    int d = int(rng() % unsigned(bound + 1));
    for (int j = 0; j < d; ++j) ++e[rng() % r];
    return e;
}

std::vector<ExpVec> monomials_upto(unsigned r, int bound) {
    std::vector<ExpVec> out;
    ExpVec cur(r, 0);
    auto rec = [&](auto&& self, unsigned i, int left) -> void {
        if (i == r) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[i] = k;
            self(self, i + 1, left - k);
        }
        cur[i] = 0;
    };
    rec(rec, 0, bound);
    return out;
}

Algebra algebra_for(const Setting& S, const Scalar& t, const std::vector<Scalar>& c) {
    DunklParams P;
    P.t = t;
    P.c.by_class = c;
    P.twist = TwistData::untwisted(S.rank(), t);
    return Algebra(S, P);
}

Scalar random_unit(std::mt19937_64& rng) {
    return Scalar(Rational(1 + long(rng() % 5), 1 + long(rng() % 4)));
}

// ---------------------------------------------------------------------------

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Setting> settings;
    settings.push_back(Setting::build(Group::cyclic(2)));
    settings.push_back(Setting::build(Group::symmetric(3)));
    settings.push_back(Setting::build(Group::hyperoctahedral(2)));
    settings.push_back(Setting::build(Group::dihedral(6)));
    settings.push_back(Setting::build(Group::cyclic(4)));
    std::mt19937_64 rng(101);
    bool ok = true;
    std::string detail;
    for (const Setting& S : settings) {
        auto monos = monomials_upto(S.rank(), 6);
        for (int ps = 0; ps < 5 && ok; ++ps) {
            std::vector<Scalar> c;
            for (std::size_t k = 0; k < S.classes.size(); ++k)
                c.push_back(Scalar(Rational(long(rng() % 9) - 4, 1 + long(rng() % 4))));
            Algebra H = algebra_for(S, random_unit(rng), c);
            for (unsigned i = 0; i < S.rank() && ok; ++i)
                for (unsigned j = i + 1; j < S.rank() && ok; ++j)
                    for (const auto& e : monos) {
                        MultiPoly f = MultiPoly::monomial(S.rank(), e, Scalar(1));
                        if (H.dunkl_apply(i, H.dunkl_apply(j, f)) !=
                            H.dunkl_apply(j, H.dunkl_apply(i, f))) {
                            ok = false;
                            detail = "group order " + std::to_string(S.group.size()) +
                                     ", monomial " + poly_str(f);
                            break;
                        }
                    }
        }
    }
    double dt = seconds_since(t0);
    if (ok && dt >= 60.0) {
        ok = false;
        detail = "took " + std::to_string(dt) + "s";
    }
    report(1, ok, "Dunkl operators commute on all monomials of degree <= 6", detail);
}

void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(102);
    bool ok = true;
    std::string detail;
    for (Group g : {Group::symmetric(3), Group::hyperoctahedral(2)}) {
        Setting S = Setting::build(std::move(g));
        std::vector<Scalar> c(S.classes.size(), Scalar(Rational(1, 2)));
        Algebra H = algebra_for(S, Scalar(1), c);
        for (int s = 0; s < 200 && ok; ++s) {
            ExpVec a = random_exps(rng, S.rank(), 3);
            ExpVec b = random_exps(rng, S.rank(), 3);
            CherednikElement xa, xb;
            xa.add({int(rng() % S.group.size()), a}, random_poly(rng, S.rank(), 3, 2));
            xb.add({int(rng() % S.group.size()), b}, random_poly(rng, S.rank(), 3, 2));
            try {
                CherednikElement prod = H.multiply(xa, xb);
                if (prod.max_filtration() > xa.max_filtration() + xb.max_filtration() &&
                    !xa.is_zero() && !xb.is_zero()) {
                    ok = false;
                    detail = "filtration exceeded the sum";
                }
            } catch (const NotInAlgebra& e) {
                ok = false;
                detail = std::string("NotInAlgebra: ") + e.what();
            }
            // leading term of pure monomials: D^a D^b = D^{a+b} + lower order
            CherednikElement da, db;
            da.add({0, a}, MultiPoly::constant(S.rank(), Scalar(1)));
            db.add({0, b}, MultiPoly::constant(S.rank(), Scalar(1)));
            CherednikElement dprod = H.multiply(da, db);
            int total = 0;
            ExpVec ab(S.rank(), 0);
            for (unsigned i = 0; i < S.rank(); ++i) {
                ab[i] = a[i] + b[i];
                total += ab[i];
            }
            CherednikElement top, expect;
            for (const auto& [k, f] : dprod.terms()) {
                int d = 0;
                for (int e : k.second) d += e;
                if (d == total) top.add(k, f);
            }
            expect.add({0, ab}, MultiPoly::constant(S.rank(), Scalar(1)));
            if (top != expect) {
                ok = false;
                detail = "leading term of D^a D^b is " + cher_str(top);
            }
        }
    }
    double dt = seconds_since(t0);
    if (ok && dt >= 120.0) {
        ok = false;
        detail = "took " + std::to_string(dt) + "s";
    }
    report(2, ok, "PBW products stay in the algebra with graded leading terms", detail);
}

void criterion3() {
    std::mt19937_64 rng(103);
    Setting S = Setting::build(Group::symmetric(3));
    Algebra H = algebra_for(S, Scalar(2), {Scalar(Rational(1, 3))});
    bool ok = true;
    std::string detail;
    for (int s = 0; s < 100 && ok; ++s) {
        std::vector<Scalar> v;
        for (unsigned i = 0; i < 3; ++i) v.push_back(Scalar(long(rng() % 7) - 3));
        MultiPoly f = random_poly(rng, 3, 4, 3);
        SkewOp dv = H.dunkl_field(v);
        SkewOp fop = SkewOp::from_poly(S.arr, f);
        SkewOp comm = skew_sub(S.arr, multiply_skew(S.group, S.arr, H.params().twist, dv, fop),
                               multiply_skew(S.group, S.arr, H.params().twist, fop, dv));
        CherednikElement formula;
        for (unsigned i = 0; i < 3; ++i) {
            if (v[i].is_zero()) continue;
            CherednikElement ci = H.commutator_with_function(i, f);
            for (const auto& [k, g] : ci.terms()) formula.add(k, v[i] * g);
        }
        if (comm != H.embed(formula) || formula.max_filtration() > 0) {
            ok = false;
            detail = "[D_v, " + poly_str(f) + "]";
        }
    }
    report(3, ok, "commutators with functions match the closed formula at filtration 0",
           detail);
}

void criterion4() {
    std::mt19937_64 rng(104);
    Setting S = Setting::build(Group::hyperoctahedral(2));
    Algebra H = algebra_for(S, Scalar(Rational(2, 3)), {Scalar(0), Scalar(0)});
    bool ok = true;
    std::string detail;
    for (unsigned i = 0; i < 2; ++i)
        if (H.dunkl(i) != skew_scale(SkewOp::L(S.arr, i), H.params().t)) {
            ok = false;
            detail = "D_i != t L_i at c = 0";
        }
    for (int s = 0; s < 100 && ok; ++s) {
        CherednikElement a, b;
        a.add({int(rng() % S.group.size()), random_exps(rng, 2, 2)}, random_poly(rng, 2, 2, 2));
        b.add({int(rng() % S.group.size()), random_exps(rng, 2, 2)}, random_poly(rng, 2, 2, 2));
        SkewOp prod = multiply_skew(S.group, S.arr, H.params().twist, H.embed(a), H.embed(b));
        if (H.embed(H.multiply(a, b)) != prod || H.from_skew_weyl(prod) != H.multiply(a, b)) {
            ok = false;
            detail = "smash-product comparison failed";
        }
    }
    report(4, ok, "c = 0 degeneration agrees with the twisted Weyl smash product", detail);
}

void criterion5() {
    std::mt19937_64 rng(105);
    bool ok = true;
    std::string detail;
    {
        Setting S = Setting::build(Group::hyperoctahedral(2));
        Algebra H = algebra_for(S, Scalar(1), {Scalar(Rational(1, 2)), Scalar(2)});
        for (const Scalar& lam : {Scalar(2), Scalar(Rational(1, 5))}) {
            Algebra H2(S, H.scaled_params(lam));
            for (int s = 0; s < 100 && ok; ++s) {
                CherednikElement a, b;
                a.add({int(rng() % S.group.size()), random_exps(rng, 2, 2)},
                      random_poly(rng, 2, 2, 2));
                b.add({int(rng() % S.group.size()), random_exps(rng, 2, 2)},
                      random_poly(rng, 2, 2, 2));
                if (H2.multiply(H.scale_parameters(a, lam), H.scale_parameters(b, lam)) !=
                    H.scale_parameters(H.multiply(a, b), lam)) {
                    ok = false;
                    detail = "lambda = " + lam.str();
                }
            }
        }
    }
    {
        Setting S = Setting::build(Group::cyclic(4));
        Algebra H = algebra_for(S, Scalar(1),
                                {Scalar(Rational(1, 2)), Scalar(2), Scalar(Rational(1, 3))});
        Scalar zeta = Scalar::zeta(Field::cyclotomic(4));
        Algebra H2(S, H.scaled_params(zeta));
        for (int s = 0; s < 100 && ok; ++s) {
            CherednikElement a, b;
            a.add({int(rng() % S.group.size()), random_exps(rng, 1, 3)},
                  random_poly(rng, 1, 3, 2));
            b.add({int(rng() % S.group.size()), random_exps(rng, 1, 3)},
                  random_poly(rng, 1, 3, 2));
            if (H2.multiply(H.scale_parameters(a, zeta), H.scale_parameters(b, zeta)) !=
                H.scale_parameters(H.multiply(a, b), zeta)) {
                ok = false;
                detail = "lambda = zeta";
            }
        }
    }
    report(5, ok, "parameter scaling is an isomorphism for lambda in {2, 1/p, zeta}", detail);
}

void criterion6() {
    std::mt19937_64 rng(106);
    Setting S = Setting::build(Group::closure({Matrix::identity(2)}));
    Scalar t(1);
    TwistData tw0 = TwistData::untwisted(2, t);
    bool ok = true;
    std::string detail;
    std::vector<SkewOp> gens;
    gens.push_back(SkewOp::from_poly(S.arr, MultiPoly::variable(2, 0)));
    gens.push_back(SkewOp::from_poly(S.arr, MultiPoly::variable(2, 1)));
    gens.push_back(SkewOp::L(S.arr, 0));
    gens.push_back(SkewOp::L(S.arr, 1));
    for (int s = 0; s < 50 && ok; ++s) {
        std::vector<MultiPoly> comps;
        for (unsigned i = 0; i < 2; ++i) comps.push_back(random_poly(rng, 2, 3, 2));
        PolyForm w = exterior_derivative(PolyForm::one_form(2, comps));
        TwistData tw1 = tw0;
        tw1.omega = w.as_matrix();
        PolyForm eta = poincare_antiderivative(w);
        auto phi = [&](const SkewOp& a) {
            return twist_iso(S.group, S.arr, eta, tw1, tw0, a);
        };
        auto mul1 = [&](const SkewOp& a, const SkewOp& b) {
            return multiply_skew(S.group, S.arr, tw1, a, b);
        };
        auto mul0 = [&](const SkewOp& a, const SkewOp& b) {
            return multiply_skew(S.group, S.arr, tw0, a, b);
        };
        for (std::size_t i = 0; i < gens.size() && ok; ++i)
            for (std::size_t j = 0; j < gens.size() && ok; ++j) {
                if (phi(mul1(gens[i], gens[j])) != mul0(phi(gens[i]), phi(gens[j]))) {
                    ok = false;
                    detail = "length-2 product, omega = " + w.str();
                }
                for (std::size_t k = 0; k < gens.size() && ok; ++k)
                    if (phi(mul1(mul1(gens[i], gens[j]), gens[k])) !=
                        mul0(mul0(phi(gens[i]), phi(gens[j])), phi(gens[k]))) {
                        ok = false;
                        detail = "length-3 product, omega = " + w.str();
                    }
            }
    }
    report(6, ok, "radial-homotopy trivialization is an isomorphism on the plane", detail);
}

void criterion7() {
    std::mt19937_64 rng(107);
    Setting S = Setting::build(Group::hyperoctahedral(2));
    Scalar t(1);
    bool ok = true, saw_zero = false, saw_nonzero = false;
    std::string detail;
    for (int s = 0; s < 50 && ok; ++s) {
        int g = int(rng() % S.group.size());
        std::vector<MultiPoly> comps;
        for (unsigned i = 0; i < 2; ++i) comps.push_back(random_poly(rng, 2, 2, 2));
        PolyForm w = exterior_derivative(PolyForm::one_form(2, comps));
        if (s % 2 == 0) {
            PolyForm acc(2, 2);
            for (std::size_t h = 0; h < S.group.size(); ++h)
                acc = acc + g_act_on_form(S.group, int(h), w);
            w = acc;
        }
        TwistData tw = TwistData::untwisted(2, t);
        tw.omega = w.as_matrix();
        bool zero = extension_obstruction(S.group, g, w).is_zero();
        bool mult = g_map_multiplicative(S.group, S.arr, tw, g);
        if (zero != mult) {
            ok = false;
            detail = "obstruction/multiplicativity mismatch at g" + std::to_string(g);
        }
        (zero ? saw_zero : saw_nonzero) = true;
    }
    if (ok && !(saw_zero && saw_nonzero)) {
        ok = false;
        detail = "sampling did not exercise both outcomes";
    }
    report(7, ok, "equivariant extension obstruction detects multiplicativity both ways",
           detail);
}

void criterion8() {
    std::mt19937_64 rng(108);
    Setting S = Setting::build(Group::cyclic(2));
    PadicSpec sp;
    sp.p = 5;
    sp.precision = 8;
    Algebra H = algebra_for(S, Scalar(1), {Scalar(2)}); // c = 2 is a p-adic unit
    bool ok = true;
    std::string detail;
    std::vector<LatticeLevel> certified;
    for (unsigned n = 0; n <= 3; ++n)
        for (unsigned m = 0; m <= 3; ++m)
            if (certify_cherednik_level(H, sp, LatticeLevel{n, m}))
                certified.push_back(LatticeLevel{n, m});
    if (certified.empty()) {
        report(8, false, "gauge norms on certified lattice levels", "nothing certified");
        return;
    }
    auto random_elem = [&] {
        CherednikElement x;
        for (int j = 0; j < 2; ++j) {
            MultiPoly f(1);
            f.add_term({int(rng() % 3)}, Scalar(Rational(long(rng() % 9) - 4)));
            x.add({int(rng() % 2), {int(rng() % 3)}}, f);
        }
        return x;
    };
    for (int s = 0; s < 200 && ok; ++s) {
        CherednikElement a = random_elem(), b = random_elem();
        CherednikElement ab = H.multiply(a, b);
        for (const auto& level : certified) {
            ValOrInf va = element_gauge(a, sp, level);
            ValOrInf vb = element_gauge(b, sp, level);
            if (!(element_gauge(ab, sp, level) >= va + vb)) {
                ok = false;
                detail = "submultiplicativity failed at n=" + std::to_string(level.n) +
                         " m=" + std::to_string(level.m);
            }
        }
    }
    for (int s = 0; s < 200 && ok; ++s) {
        CherednikElement x = random_elem();
        for (unsigned n = 0; n <= 3; ++n)
            if (!(element_gauge(x, sp, LatticeLevel{n, 0}) >=
                  element_gauge(x, sp, LatticeLevel{n + 1, 0}))) {
                ok = false;
                detail = "tower monotonicity failed at n=" + std::to_string(n);
            }
    }
    report(8, ok, "gauge norms are submultiplicative and monotone along the tower", detail);
}

void criterion9() {
    std::mt19937_64 rng(109);
    Setting S = Setting::build(Group::cyclic(2));
    PadicSpec sp;
    sp.p = 5;
    sp.precision = 4;
    Algebra H = algebra_for(S, Scalar(1), {Scalar(2)});
    LatticeLevel level{1, 0};
    unsigned cap = 4;
    bool ok = true;
    std::string detail;
    auto random_lattice = [&] {
        CherednikElement x;
        for (int j = 0; j < 2; ++j) {
            int d = int(rng() % 2);
            Integer scale = 1;
            for (int e = 0; e < d; ++e) scale *= 5;
            MultiPoly f(1);
            f.add_term({int(rng() % 3)}, Scalar(Rational(scale * long(rng() % 9))));
            x.add({int(rng() % 2), {d}}, f);
        }
        return x;
    };
    auto trunc = [&](const CherednikElement& x) {
        return truncate_element(x, sp, level, cap);
    };
    for (int s = 0; s < 50 && ok; ++s) {
        CherednikElement xa = random_lattice(), xb = random_lattice(), xc = random_lattice();
        TruncatedHElement a = trunc(xa), b = trunc(xb), c = trunc(xc);
        if (truncated_multiply(truncated_multiply(a, b, H, sp), c, H, sp) !=
            truncated_multiply(a, truncated_multiply(b, c, H, sp), H, sp)) {
            ok = false;
            detail = "associativity failed";
        }
        if (truncated_multiply(a, b, H, sp) != trunc(H.multiply(xa, xb))) {
            ok = false;
            detail = "disagrees with the exact product mod p^4";
        }
    }
    report(9, ok, "truncated level-1 arithmetic is associative and exact mod p^4", detail);
}

struct CliResult {
    int status = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    CliResult res;
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, n);
    int rc = pclose(pipe);
    if (rc >= 0) res.status = WEXITSTATUS(rc);
    return res;
}

void criterion10() {
    bool ok = true;
    std::string detail;

    CliResult inject = run_cli("verify pbw --config " + g_data + "/z2.cfg --inject '1 / x_1'");
    if (inject.status != 0 || inject.output.find("pbw-negative-control") == std::string::npos ||
        inject.output.find("[fail]") != std::string::npos) {
        ok = false;
        detail = "inject control: status " + std::to_string(inject.status);
    }

    CliResult closed = run_cli("verify tdo --config " + g_data + "/s3_omega.cfg");
    if (closed.status != 2 || closed.output.find("NotClosed") == std::string::npos) {
        ok = false;
        detail = "non-closed omega: status " + std::to_string(closed.status);
    }

    CliResult norm = run_cli("norm --config " + g_data + "/z2_badc.cfg");
    if (norm.status != 0 || norm.output.find("\"certified\": false") == std::string::npos) {
        ok = false;
        detail = "pole certification: status " + std::to_string(norm.status);
    }

    report(10, ok, "CLI negative controls surface the expected failures", detail);
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--cli") g_cli = argv[i + 1];
        if (flag == "--data") g_data = argv[i + 1];
    }
    if (g_cli.empty() || g_data.empty()) {
        std::cerr << "usage: acceptance --cli <path> --data <dir>\n";
        return 64;
    }
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    return g_failures;
}
