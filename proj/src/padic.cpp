#include "cherednik/padic.hpp"

namespace cherednik {

ValOrInf gauss_valuation(const MultiPoly& f, const PadicSpec& spec) {
    ValOrInf v = ValOrInf::inf();
    for (const auto& [e, c] : f.terms()) v = min(v, valuation(c, spec));
    return v;
}

ValOrInf localized_valuation(const LocalizedCoeff& c, const PadicSpec& spec,
                             const LatticeLevel& level) {
    ValOrInf num = gauss_valuation(c.num(), spec);
    if (num.infinite) return num;
    long total = 0;
    for (int k : c.den()) total += k;
    return ValOrInf::of(num.v - long(level.m) * total);
}

bool shilov_in_domain(const Arrangement& arr, const PadicSpec& spec,
                      const LatticeLevel& level) {
    for (const auto& alpha : arr.alphas) {
        ValOrInf v = gauss_valuation(alpha, spec);
        if (v.infinite || v.v > long(level.m)) return false;
    }
    return true;
}

bool certify_cherednik_level(const Algebra& H, const PadicSpec& spec,
                             const LatticeLevel& level) {
    const Setting& S = H.setting();
    ValOrInf bound = ValOrInf::of(-long(level.n));
    if (valuation(H.params().t, spec) < bound) return false;
    for (unsigned i = 0; i < S.rank(); ++i) {
        std::vector<Scalar> ei(S.rank(), Scalar(0));
        ei[i] = Scalar(1);
        for (std::size_t d = 0; d < S.reflections.size(); ++d) {
            LocalizedCoeff coeff =
                residue(S.arr, ei, S.reflections[d].hyperplane).mul_scalar(H.kappa(int(d)));
            if (coeff.is_zero()) continue;
            if (localized_valuation(coeff, spec, level) < bound) return false;
        }
    }
    Scalar tinv = H.params().t.inverse();
    for (const auto& row : H.params().twist.omega)
        for (const auto& f : row) {
            if (f.is_zero()) continue;
            if (gauss_valuation(tinv * f, spec) < bound) return false;
        }
    return true;
}

ValOrInf element_gauge(const CherednikElement& x, const PadicSpec& spec,
                       const LatticeLevel& level) {
    ValOrInf out = ValOrInf::inf();
    for (const auto& [k, f] : x.terms()) {
        long s = 0;
        for (int e : k.second) s += e;
        ValOrInf v = gauss_valuation(f, spec);
        if (!v.infinite) v = ValOrInf::of(v.v - long(level.n) * s);
        out = min(out, v);
    }
    return out;
}

Integer reduce_scalar(const Scalar& a, const PadicSpec& spec) {
    TruncatedPadic root = hensel_lift_root(spec);
    Integer mod = root.modulus;
    Integer acc = 0;
    // Horner evaluation at the embedded root
    const auto& cs = a.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) {
        const Rational& q = cs[i];
        Integer num = boost::multiprecision::numerator(q) % mod;
        Integer den = boost::multiprecision::denominator(q) % mod;
        if (den % spec.p == 0) throw Error("scalar is not p-integral: " + a.str());
        // modular inverse by extended Euclid
        Integer r0 = mod, r1 = den % mod, s0 = 0, s1 = 1;
        while (r1 != 0) {
            Integer q2 = r0 / r1;
            Integer r2 = r0 - q2 * r1;
            Integer s2 = s0 - q2 * s1;
            r0 = r1; r1 = r2; s0 = s1; s1 = s2;
        }
        Integer inv = ((s0 % mod) + mod) % mod;
        acc = (acc * root.residue + num * inv) % mod;
    }
    return ((acc % mod) + mod) % mod;
}

TruncatedHElement truncate_element(const CherednikElement& x, const PadicSpec& spec,
                                   const LatticeLevel& level, unsigned alpha_cap) {
    TruncatedHElement out;
    out.level = level.n;
    out.precision = spec.precision;
    out.alpha_cap = alpha_cap;
    for (const auto& [k, f] : x.terms()) {
        unsigned s = 0;
        for (int e : k.second) s += unsigned(e);
        if (s > alpha_cap) continue;
        std::map<ExpVec, Integer> poly;
        for (const auto& [e, c] : f.terms()) {
            Integer r = reduce_scalar(c, spec);
            if (r != 0) poly.emplace(e, r);
        }
        if (!poly.empty()) out.terms.emplace(k, std::move(poly));
    }
    return out;
}

CherednikElement lift_element(const TruncatedHElement& x, unsigned nvars) {
    CherednikElement out;
    for (const auto& [k, poly] : x.terms) {
        MultiPoly f(nvars);
        for (const auto& [e, r] : poly) f.add_term(e, Scalar(Rational(r)));
        out.add(k, f);
    }
    return out;
}

TruncatedHElement truncated_multiply(const TruncatedHElement& a,
                                     const TruncatedHElement& b,
                                     const Algebra& H, const PadicSpec& spec) {
    if (a.level != b.level || a.precision != b.precision || a.alpha_cap != b.alpha_cap)
        throw Error("truncated operands have different headers");
    if (a.level < 1) throw Error("truncated arithmetic requires level n >= 1");
    if (a.level * a.alpha_cap < a.precision)
        throw CapTooSmall("n * cap < N: dropped tail would be visible mod p^N");
    unsigned r = H.setting().rank();
    CherednikElement prod = H.multiply(lift_element(a, r), lift_element(b, r));
    LatticeLevel level{a.level, 0};
    return truncate_element(prod, spec, level, a.alpha_cap);
}

TruncatedHElement tower_map(const TruncatedHElement& a) {
    if (a.level == 0) throw Error("no level below 0");
    TruncatedHElement out = a;
    out.level = a.level - 1;
    if (out.level >= 1 && out.level * out.alpha_cap < out.precision)
        throw CapTooSmall("cap too small for the target level");
    return out;
}

} // namespace cherednik
