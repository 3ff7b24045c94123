#pragma once

#include <map>
#include <utility>

#include "cherednik/localized.hpp"

namespace cherednik {

/// Twisting data for the operator algebra: the closed 2-form evaluated on the
/// constant frame, omega[i][j] = omega(d/dx_i, d/dx_j), plus the unit t.
/// Bracket rule: L_i L_j - L_j L_i = omega[i][j] / t.
struct TwistData {
    std::vector<std::vector<MultiPoly>> omega;
    Scalar t = Scalar(1);

    static TwistData untwisted(unsigned r, Scalar t = Scalar(1));

    unsigned rank() const { return unsigned(omega.size()); }
    bool zero_twist() const;
    /// omega(v, w) for constant vectors.
    MultiPoly pair(const std::vector<Scalar>& v, const std::vector<Scalar>& w) const;
};

/// Element of G x| D_{omega/t}(X^reg) in normal order: sum of coeff * L^a * g.
class SkewOp {
public:
    using Key = std::pair<int, ExpVec>; // (group label, L-exponent)

    SkewOp() = default;

    static SkewOp term(const Arrangement& arr, LocalizedCoeff c, ExpVec a, int g);
    static SkewOp from_coeff(const Arrangement& arr, LocalizedCoeff c);
    static SkewOp from_poly(const Arrangement& arr, const MultiPoly& f);
    static SkewOp L(const Arrangement& arr, unsigned i);
    static SkewOp group_elem(const Arrangement& arr, int g);
    static SkewOp one(const Arrangement& arr);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, LocalizedCoeff>& terms() const { return terms_; }
    void add(const Arrangement& arr, const Key& k, const LocalizedCoeff& c);
    int max_filtration() const; // max |a| over support, -1 when zero

    friend bool operator==(const SkewOp& a, const SkewOp& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SkewOp& a, const SkewOp& b) { return !(a == b); }

private:
    std::map<Key, LocalizedCoeff> terms_;
};

SkewOp skew_add(const Arrangement& arr, const SkewOp& a, const SkewOp& b);
SkewOp skew_sub(const Arrangement& arr, const SkewOp& a, const SkewOp& b);
SkewOp skew_scale(const SkewOp& a, const Scalar& c);

/// Left multiplication primitives; every result is normal-ordered.
SkewOp lmul_coeff(const Arrangement& arr, const LocalizedCoeff& c, const SkewOp& S);
SkewOp lmul_L(const Group& G, const Arrangement& arr, const TwistData& tw,
              unsigned k, const SkewOp& S);
SkewOp lmul_L_field(const Group& G, const Arrangement& arr, const TwistData& tw,
                    const std::vector<Scalar>& w, const SkewOp& S);
SkewOp lmul_group(const Group& G, const Arrangement& arr, const TwistData& tw,
                  int g, const SkewOp& S);

SkewOp multiply_skew(const Group& G, const Arrangement& arr, const TwistData& tw,
                     const SkewOp& a, const SkewOp& b);

/// The induced map of g on the twisted algebra: f -> g(f), L_v -> L_{g(v)},
/// h -> g h g^-1. Multiplicative exactly when g fixes omega.
SkewOp g_transport(const Group& G, const Arrangement& arr, const TwistData& tw,
                   int g, const SkewOp& S);

/// Representation on functions; only the untwisted algebra has one.
/// L_i acts as d/dx_i, matching the rewrite rule L_i f = f L_i + d_i(f).
LocalizedCoeff apply_to_function(const Group& G, const Arrangement& arr,
                                 const TwistData& tw, const SkewOp& a,
                                 const LocalizedCoeff& f);

/// xi_Y(v) = v(alpha_Y) / alpha_Y for a constant field v.
LocalizedCoeff residue(const Arrangement& arr, const std::vector<Scalar>& v, int Y);

} // namespace cherednik
