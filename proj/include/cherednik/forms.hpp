#pragma once

#include <map>

#include "cherednik/skew.hpp"

namespace cherednik {

/// Polynomial differential j-form on affine r-space. Components indexed by
/// strictly increasing index tuples; antisymmetry is encoded by the ordering.
class PolyForm {
public:
    using Index = std::vector<unsigned>; // strictly increasing, length = degree

    PolyForm(unsigned nvars, unsigned degree) : nvars_(nvars), degree_(degree) {}

    static PolyForm from_function(const MultiPoly& f);
    static PolyForm one_form(unsigned nvars, const std::vector<MultiPoly>& comps);
    static PolyForm two_form(unsigned nvars, const std::vector<std::vector<MultiPoly>>& omega);

    unsigned nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<Index, MultiPoly>& comps() const { return comps_; }
    MultiPoly component(const Index& I) const;

    void add_component(const Index& I, const MultiPoly& f); // I need not be sorted
    PolyForm scaled(const Scalar& c) const;

    /// Evaluation on constant vector fields, multilinear antisymmetric.
    MultiPoly evaluate(const std::vector<std::vector<Scalar>>& vs) const;
    /// Component table of a 2-form as an antisymmetric matrix.
    std::vector<std::vector<MultiPoly>> as_matrix() const;

    friend PolyForm operator+(const PolyForm& a, const PolyForm& b);
    friend PolyForm operator-(const PolyForm& a, const PolyForm& b);
    friend bool operator==(const PolyForm& a, const PolyForm& b);
    friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }

    std::string str() const;

private:
    unsigned nvars_;
    unsigned degree_;
    std::map<Index, MultiPoly> comps_;
};

PolyForm exterior_derivative(const PolyForm& f);
bool is_closed(const PolyForm& f);

/// Radial homotopy antiderivative: for closed omega of degree 2, returns eta
/// with d(eta) = omega. Each monomial component f dx_i^dx_j of total degree d
/// contributes f/(d+2) * (x_i dx_j - x_j dx_i). Throws NotClosed.
PolyForm poincare_antiderivative(const PolyForm& omega);

/// g(w)(v_1,...,v_j) = g(w(g^-1 v_1, ..., g^-1 v_j)); a left action that
/// commutes with the exterior derivative.
PolyForm g_act_on_form(const Group& G, int g, const PolyForm& w);

/// g(omega) - omega; zero exactly when the induced g-map on the omega-twisted
/// algebra is multiplicative. Requires omega closed.
PolyForm extension_obstruction(const Group& G, int g, const PolyForm& omega);

/// Direct multiplicativity check of g_transport on the generator set
/// {x_i, L_j}: tests tau(ab) = tau(a)tau(b) for all generator pairs.
bool g_map_multiplicative(const Group& G, const Arrangement& arr,
                          const TwistData& tw, int g);

/// The isomorphism phi_eta : D_{omega1} -> D_{omega2} with L_v -> L_v + eta(v).
/// Precondition d(eta) = (omega1 - omega2)/t, else EtaMismatch. Products of the
/// substituted generators are computed in the omega2-twisted algebra.
SkewOp twist_iso(const Group& G, const Arrangement& arr, const PolyForm& eta,
                 const TwistData& tw1, const TwistData& tw2, const SkewOp& a);

} // namespace cherednik
