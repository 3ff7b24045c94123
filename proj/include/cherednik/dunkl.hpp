#pragma once

#include <map>

#include "cherednik/skew.hpp"

namespace cherednik {

/// A reflection group together with all derived reflection data; built once
/// per run and shared read-only afterwards.
struct Setting {
    Group group;
    std::vector<ReflectionDatum> reflections;
    std::vector<std::vector<int>> classes;
    Arrangement arr;

    static Setting build(Group g);

    unsigned rank() const { return group.rank(); }
};

struct DunklParams {
    Scalar t = Scalar(1);
    ReflectionFunction c;
    TwistData twist;
};

/// PBW normal form: sum of f_{g,a} * g * D^a with polynomial coefficients.
class CherednikElement {
public:
    using Key = std::pair<int, ExpVec>; // (group label, D-exponent)

    CherednikElement() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, MultiPoly>& terms() const { return terms_; }
    void add(const Key& k, const MultiPoly& f);
    int max_filtration() const;

    friend bool operator==(const CherednikElement& a, const CherednikElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const CherednikElement& a, const CherednikElement& b) {
        return !(a == b);
    }

private:
    std::map<Key, MultiPoly> terms_;
};

CherednikElement cher_add(const CherednikElement& a, const CherednikElement& b);
CherednikElement cher_sub(const CherednikElement& a, const CherednikElement& b);

/// The algebra H_{t,c,omega} realized inside the skew algebra through the
/// Dunkl-Opdam embedding. Memoizes D_v and the ordered monomials D^a.
class Algebra {
public:
    Algebra(const Setting& S, DunklParams P);

    const Setting& setting() const { return *S_; }
    const DunklParams& params() const { return P_; }

    /// 2c(Y,g) / (1 - lambda_{Y,g}) for a reflection datum index.
    Scalar kappa(int datum) const;

    /// Standard Dunkl-Opdam operator for the basis field d/dx_i.
    const SkewOp& dunkl(unsigned i) const;
    /// Dunkl operator of an arbitrary constant field (K-linear in v).
    SkewOp dunkl_field(const std::vector<Scalar>& v) const;

    /// Polynomial representation, untwisted only. Throws TwistNotZero,
    /// DivisionFailure.
    MultiPoly dunkl_apply(unsigned i, const MultiPoly& f) const;

    /// Ordered monomial D_1^{a_1} ... D_r^{a_r}.
    const SkewOp& dpow(const ExpVec& a) const;
    /// Normal-ordered g * D^a, memoized; the embedding hot path.
    const SkewOp& gdpow(int g, const ExpVec& a) const;

    SkewOp embed(const CherednikElement& x) const;
    SkewOp embed_term(int g, const ExpVec& a, const MultiPoly& f) const;

    /// Triangular elimination by descending filtration degree. Throws
    /// NotInAlgebra when a is not in H, NonTermination as a guard.
    CherednikElement pbw_normal_form(const SkewOp& a) const;

    CherednikElement multiply(const CherednikElement& x, const CherednikElement& y) const;

    /// [D_{e_i}, f] = t d_i(f) + sum kappa * e_i(alpha) * (g(f)-f)/alpha * g;
    /// filtration degree 0 with polynomial coefficients.
    CherednikElement commutator_with_function(unsigned i, const MultiPoly& f) const;

    /// Coefficients of x in the basis of H_{lambda t, lambda c, lambda omega};
    /// D'_v = lambda D_v, so f_{g,a} -> lambda^{-|a|} f_{g,a}.
    CherednikElement scale_parameters(const CherednikElement& x, const Scalar& lambda) const;

    /// pbw(g . embed(x) . g^-1).
    CherednikElement conjugate(int g, const CherednikElement& x) const;

    /// Inverse of the embedding valid when c = 0: D^a = t^{|a|} L^a exactly.
    CherednikElement from_skew_weyl(const SkewOp& a) const;

    DunklParams scaled_params(const Scalar& lambda) const;

private:
    const Setting* S_;
    DunklParams P_;
    mutable std::vector<SkewOp> dunkl_;       // lazily filled per basis index
    mutable std::vector<bool> dunkl_ready_;
    mutable std::map<ExpVec, SkewOp> dpow_;
    mutable std::map<std::pair<int, ExpVec>, SkewOp> gdpow_;
};

} // namespace cherednik
