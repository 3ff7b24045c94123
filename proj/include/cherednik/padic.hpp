#pragma once

#include "cherednik/dunkl.hpp"

namespace cherednik {

/// Level data: n indexes the lattice spanned by A° * g * (p^n D)^a, m the
/// boundary domain U_m = { |delta| >= |p|^m }.
struct LatticeLevel {
    unsigned n = 0;
    unsigned m = 0;
};

/// Sup-norm valuation at the Gauss point of the unit polydisc.
ValOrInf gauss_valuation(const MultiPoly& f, const PadicSpec& spec);

/// Lower bound for the valuation of h / prod alpha^k on U_m:
/// gauss(h) - m * (total denominator exponent). Multiplicative on reduced
/// representatives because the Gauss valuation is.
ValOrInf localized_valuation(const LocalizedCoeff& c, const PadicSpec& spec,
                             const LatticeLevel& level);

/// Gauss point of the polydisc lies in U_m iff gauss(alpha_Y) <= m for every
/// hyperplane. Normalized alphas have a unit coefficient, so this holds for
/// all m >= 0 and the power-bounded functions of U_m restrict to those of the
/// polydisc.
bool shilov_in_domain(const Arrangement& arr, const PadicSpec& spec,
                      const LatticeLevel& level);

/// True iff p^n D_v lies in the level-n integral operator lattice on U_m for
/// every basis field v: each reflection coefficient kappa * v(alpha)/alpha has
/// localized valuation >= -n, and the same for t and the omega/t entries.
bool certify_cherednik_level(const Algebra& H, const PadicSpec& spec,
                             const LatticeLevel& level);

/// Gauge of the free lattice with basis g (p^n D)^a over A°:
/// min over (g,a) of gauss(f_{g,a}) - n|a|.
ValOrInf element_gauge(const CherednikElement& x, const PadicSpec& spec,
                       const LatticeLevel& level);

/// Element of the level-n completion truncated mod p^N with D-support capped.
/// Represents a lattice element: the implied coefficient of D^a satisfies
/// v(f_{g,a}) >= n|a|, so terms with |a| > cap vanish mod p^N when
/// n * cap >= N.
struct TruncatedHElement {
    unsigned level = 1;
    unsigned precision = 1;
    unsigned alpha_cap = 1;
    // (g, a) -> polynomial with residue coefficients mod p^N
    std::map<CherednikElement::Key, std::map<ExpVec, Integer>> terms;

    friend bool operator==(const TruncatedHElement&, const TruncatedHElement&) = default;
};

/// Reduction mod p^N through the Hensel embedding; the scalar must be p-integral.
Integer reduce_scalar(const Scalar& a, const PadicSpec& spec);

TruncatedHElement truncate_element(const CherednikElement& x, const PadicSpec& spec,
                                   const LatticeLevel& level, unsigned alpha_cap);

CherednikElement lift_element(const TruncatedHElement& x, unsigned nvars);

/// Exact lift, multiply in H, reduce mod p^N, drop |a| > cap. Requires
/// n >= 1 and n * cap >= N (CapTooSmall otherwise) and equal headers.
TruncatedHElement truncated_multiply(const TruncatedHElement& a,
                                     const TruncatedHElement& b,
                                     const Algebra& H, const PadicSpec& spec);

/// Level n+1 -> level n map; identity on PBW coefficients. The gauge can only
/// grow: gauge_n(x) >= gauge_{n+1}(x) since -n|a| >= -(n+1)|a|.
TruncatedHElement tower_map(const TruncatedHElement& a);

} // namespace cherednik
