#include "cherednik/dunkl.hpp"

namespace cherednik {

namespace {

Scalar scalar_pow(const Scalar& a, int e) {
    Scalar out(1);
    Scalar base = e < 0 ? a.inverse() : a;
    for (int k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
    return out;
}

} // namespace

Setting Setting::build(Group g) {
    Setting S;
    S.group = std::move(g);
    S.reflections = enumerate_reflections(S.group);
    S.classes = conjugacy_classes(S.group, S.reflections);
    S.arr = Arrangement::build(S.group, reflection_arrangement(S.reflections));
    return S;
}

void CherednikElement::add(const Key& k, const MultiPoly& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

int CherednikElement::max_filtration() const {
    int d = -1;
    for (const auto& [k, f] : terms_) {
        int s = 0;
        for (int e : k.second) s += e;
        d = std::max(d, s);
    }
    return d;
}

CherednikElement cher_add(const CherednikElement& a, const CherednikElement& b) {
    CherednikElement out = a;
    for (const auto& [k, f] : b.terms()) out.add(k, f);
    return out;
}

CherednikElement cher_sub(const CherednikElement& a, const CherednikElement& b) {
    CherednikElement out = a;
    for (const auto& [k, f] : b.terms()) out.add(k, -f);
    return out;
}

Algebra::Algebra(const Setting& S, DunklParams P) : S_(&S), P_(std::move(P)) {
    if (P_.t.is_zero()) throw Error("parameter t must be a unit");
    // the skew bracket divides omega by t; keep the copies in sync
    P_.twist.t = P_.t;
    dunkl_.assign(S.rank(), SkewOp());
    dunkl_ready_.assign(S.rank(), false);
}

Scalar Algebra::kappa(int datum) const {
    const ReflectionDatum& d = S_->reflections[datum];
    Scalar c = P_.c.value(S_->classes, datum);
    return (Scalar(2) * c) / (Scalar(1) - d.lambda);
}

const SkewOp& Algebra::dunkl(unsigned i) const {
    if (dunkl_ready_[i]) return dunkl_[i];
    const Arrangement& arr = S_->arr;
    std::vector<Scalar> ei(S_->rank(), Scalar(0));
    ei[i] = Scalar(1);
    SkewOp op = skew_scale(SkewOp::L(arr, i), P_.t);
    ExpVec zero(S_->rank(), 0);
    for (std::size_t d = 0; d < S_->reflections.size(); ++d) {
        LocalizedCoeff xi = residue(arr, ei, S_->reflections[d].hyperplane).mul_scalar(kappa(int(d)));
        if (xi.is_zero()) continue;
        op.add(arr, SkewOp::Key{S_->reflections[d].g, zero}, xi);
        op.add(arr, SkewOp::Key{0, zero}, xi.neg());
    }
    dunkl_[i] = op;
    dunkl_ready_[i] = true;
    return dunkl_[i];
}

SkewOp Algebra::dunkl_field(const std::vector<Scalar>& v) const {
    SkewOp out;
    for (unsigned i = 0; i < S_->rank(); ++i) {
        if (v[i].is_zero()) continue;
        out = skew_add(S_->arr, out, skew_scale(dunkl(i), v[i]));
    }
    return out;
}

MultiPoly Algebra::dunkl_apply(unsigned i, const MultiPoly& f) const {
    if (!P_.twist.zero_twist())
        throw TwistNotZero("polynomial representation requires omega = 0");
    MultiPoly out = P_.t * f.derivative(i);
    for (std::size_t d = 0; d < S_->reflections.size(); ++d) {
        const ReflectionDatum& rd = S_->reflections[d];
        Scalar va = rd.alpha.derivative(i).constant_value();
        if (va.is_zero()) continue;
        MultiPoly diff = S_->group.act_on_poly(rd.g, f) - f;
        if (diff.is_zero()) continue;
        auto q = divide_exact(diff, rd.alpha);
        if (!q) throw DivisionFailure("alpha does not divide g(f) - f");
        out += (kappa(int(d)) * va) * *q;
    }
    return out;
}

const SkewOp& Algebra::dpow(const ExpVec& a) const {
    auto it = dpow_.find(a);
    if (it != dpow_.end()) return it->second;
    SkewOp val;
    int total = 0;
    for (int e : a) total += e;
    if (total == 0) {
        val = SkewOp::one(S_->arr);
    } else {
        unsigned i = 0;
        while (a[i] == 0) ++i;
        ExpVec rest = a;
        --rest[i];
        val = multiply_skew(S_->group, S_->arr, P_.twist, dunkl(i), dpow(rest));
    }
    return dpow_.emplace(a, std::move(val)).first->second;
}

const SkewOp& Algebra::gdpow(int g, const ExpVec& a) const {
    std::pair<int, ExpVec> key{g, a};
    auto it = gdpow_.find(key);
    if (it != gdpow_.end()) return it->second;
    SkewOp val = g == 0 ? dpow(a) : lmul_group(S_->group, S_->arr, P_.twist, g, dpow(a));
    return gdpow_.emplace(std::move(key), std::move(val)).first->second;
}

SkewOp Algebra::embed_term(int g, const ExpVec& a, const MultiPoly& f) const {
    return lmul_coeff(S_->arr, LocalizedCoeff::from_poly(S_->arr, f), gdpow(g, a));
}

SkewOp Algebra::embed(const CherednikElement& x) const {
    SkewOp out;
    for (const auto& [k, f] : x.terms())
        out = skew_add(S_->arr, out, embed_term(k.first, k.second, f));
    return out;
}

CherednikElement Algebra::pbw_normal_form(const SkewOp& a) const {
    const Arrangement& arr = S_->arr;
    unsigned r = S_->rank();
    CherednikElement result;
    SkewOp rem = a;
    while (!rem.is_zero()) {
        int d = rem.max_filtration();
        if (d == 0) {
            for (const auto& [k, c] : rem.terms()) {
                if (!c.is_polynomial())
                    throw NotInAlgebra("degree-0 coefficient is not polynomial: " + c.str());
                result.add(CherednikElement::Key{k.first, k.second}, c.num());
            }
            break;
        }
        // Top symbol per group element: f * g * D^a contributes
        // t^d * f * prod_i L_{g(e_i)}^{a_i} in degree d = |a|. Invert the
        // linear substitution on L-symbols, divide by t^d.
        std::map<int, std::map<ExpVec, LocalizedCoeff>> tops;
        for (const auto& [k, c] : rem.terms()) {
            int s = 0;
            for (int e : k.second) s += e;
            if (s == d) tops[k.first][k.second] = c;
        }
        Scalar tdinv = scalar_pow(P_.t, d).inverse();
        SkewOp subtract;
        for (const auto& [g, symbols] : tops) {
            const Matrix& M = S_->group.matrix(g);
            std::map<ExpVec, LocalizedCoeff> coeffs;
            for (const auto& [alpha, c] : symbols) {
                // substitute L_i -> sum_k M[k][i] L_k, expand over commuting
                // formal variables
                MultiPoly sym = MultiPoly::constant(r, Scalar(1));
                for (unsigned i = 0; i < r; ++i) {
                    if (alpha[i] == 0) continue;
                    MultiPoly lin(r);
                    for (unsigned k = 0; k < r; ++k)
                        lin += M.at(k, i) * MultiPoly::variable(r, k);
                    for (int rep = 0; rep < alpha[i]; ++rep) sym = sym * lin;
                }
                for (const auto& [beta, coeff] : sym.terms()) {
                    LocalizedCoeff piece = c.mul_scalar(coeff * tdinv);
                    auto it = coeffs.find(beta);
                    if (it == coeffs.end())
                        coeffs.emplace(beta, piece);
                    else
                        it->second = it->second.add(arr, piece);
                }
            }
            for (const auto& [beta, f] : coeffs) {
                if (f.is_zero()) continue;
                if (!f.is_polynomial())
                    throw NotInAlgebra("leading coefficient is not polynomial: " + f.str());
                result.add(CherednikElement::Key{g, beta}, f.num());
                subtract = skew_add(arr, subtract, embed_term(g, beta, f.num()));
            }
        }
        rem = skew_sub(arr, rem, subtract);
        if (rem.max_filtration() >= d)
            throw NonTermination("filtration degree failed to decrease");
    }
    return result;
}

CherednikElement Algebra::multiply(const CherednikElement& x, const CherednikElement& y) const {
    return pbw_normal_form(multiply_skew(S_->group, S_->arr, P_.twist, embed(x), embed(y)));
}

CherednikElement Algebra::commutator_with_function(unsigned i, const MultiPoly& f) const {
    CherednikElement out;
    ExpVec zero(S_->rank(), 0);
    out.add(CherednikElement::Key{0, zero}, P_.t * f.derivative(i));
    for (std::size_t d = 0; d < S_->reflections.size(); ++d) {
        const ReflectionDatum& rd = S_->reflections[d];
        Scalar va = rd.alpha.derivative(i).constant_value();
        if (va.is_zero()) continue;
        MultiPoly diff = S_->group.act_on_poly(rd.g, f) - f;
        if (diff.is_zero()) continue;
        auto q = divide_exact(diff, rd.alpha);
        if (!q) throw DivisionFailure("alpha does not divide g(f) - f");
        out.add(CherednikElement::Key{rd.g, zero}, (kappa(int(d)) * va) * *q);
    }
    return out;
}

CherednikElement Algebra::scale_parameters(const CherednikElement& x, const Scalar& lambda) const {
    if (lambda.is_zero()) throw Error("scaling unit must be nonzero");
    CherednikElement out;
    for (const auto& [k, f] : x.terms()) {
        int s = 0;
        for (int e : k.second) s += e;
        out.add(k, scalar_pow(lambda, -s) * f);
    }
    return out;
}

CherednikElement Algebra::conjugate(int g, const CherednikElement& x) const {
    const Arrangement& arr = S_->arr;
    SkewOp mid = multiply_skew(S_->group, arr, P_.twist, embed(x),
                               SkewOp::group_elem(arr, S_->group.inverse(g)));
    return pbw_normal_form(
        multiply_skew(S_->group, arr, P_.twist, SkewOp::group_elem(arr, g), mid));
}

CherednikElement Algebra::from_skew_weyl(const SkewOp& a) const {
    if (!P_.twist.zero_twist())
        throw TwistNotZero("direct Weyl conversion requires omega = 0");
    unsigned r = S_->rank();
    CherednikElement out;
    for (const auto& [k, c] : a.terms()) {
        if (!c.is_polynomial()) throw NotInAlgebra("coefficient is not polynomial");
        int s = 0;
        for (int e : k.second) s += e;
        const Matrix& M = S_->group.matrix(k.first);
        MultiPoly sym = MultiPoly::constant(r, Scalar(1));
        for (unsigned i = 0; i < r; ++i) {
            if (k.second[i] == 0) continue;
            MultiPoly lin(r);
            for (unsigned kk = 0; kk < r; ++kk)
                lin += M.at(kk, i) * MultiPoly::variable(r, kk);
            for (int rep = 0; rep < k.second[i]; ++rep) sym = sym * lin;
        }
        Scalar tsinv = scalar_pow(P_.t, s).inverse();
        for (const auto& [beta, coeff] : sym.terms())
            out.add(CherednikElement::Key{k.first, beta}, (coeff * tsinv) * c.num());
    }
    return out;
}

DunklParams Algebra::scaled_params(const Scalar& lambda) const {
    DunklParams P = P_;
    P.t = P.t * lambda;
    for (auto& v : P.c.by_class) v = v * lambda;
    for (auto& row : P.twist.omega)
        for (auto& f : row) f = lambda * f;
    P.twist.t = P.t;
    return P;
}

} // namespace cherednik
