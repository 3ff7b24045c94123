#include "cherednik/forms.hpp"

#include <algorithm>
#include <sstream>

namespace cherednik {

namespace {

// Sorts an index tuple, returning the permutation sign; 0 on repeats.
int sort_index(std::vector<unsigned>& I) {
    int sign = 1;
    for (std::size_t i = 1; i < I.size(); ++i)
        for (std::size_t j = i; j > 0 && I[j] < I[j - 1]; --j) {
            std::swap(I[j], I[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < I.size(); ++i)
        if (I[i] == I[i - 1]) return 0;
    return sign;
}

Scalar small_det(const std::vector<std::vector<Scalar>>& m) {
    std::size_t n = m.size();
    if (n == 0) return Scalar(1);
    if (n == 1) return m[0][0];
    Scalar out(0);
    // Laplace expansion; forms here have tiny degree.
    for (std::size_t k = 0; k < n; ++k) {
        if (m[0][k].is_zero()) continue;
        std::vector<std::vector<Scalar>> minor(n - 1, std::vector<Scalar>(n - 1, Scalar(0)));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t c = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                minor[i - 1][c++] = m[i][j];
            }
        }
        Scalar piece = m[0][k] * small_det(minor);
        out = (k % 2 == 0) ? out + piece : out - piece;
    }
    return out;
}

void all_tuples(unsigned nvars, unsigned deg, unsigned start, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
    if (cur.size() == deg) {
        out.push_back(cur);
        return;
    }
    for (unsigned i = start; i < nvars; ++i) {
        cur.push_back(i);
        all_tuples(nvars, deg, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

PolyForm PolyForm::from_function(const MultiPoly& f) {
    PolyForm w(f.nvars(), 0);
    w.add_component({}, f);
    return w;
}

PolyForm PolyForm::one_form(unsigned nvars, const std::vector<MultiPoly>& comps) {
    PolyForm w(nvars, 1);
    for (unsigned i = 0; i < nvars; ++i) w.add_component({i}, comps[i]);
    return w;
}

PolyForm PolyForm::two_form(unsigned nvars, const std::vector<std::vector<MultiPoly>>& omega) {
    PolyForm w(nvars, 2);
    for (unsigned i = 0; i < nvars; ++i)
        for (unsigned j = i + 1; j < nvars; ++j) w.add_component({i, j}, omega[i][j]);
    return w;
}

MultiPoly PolyForm::component(const Index& I) const {
    auto it = comps_.find(I);
    return it == comps_.end() ? MultiPoly(nvars_) : it->second;
}

void PolyForm::add_component(const Index& I, const MultiPoly& f) {
    if (f.is_zero()) return;
    Index J = I;
    int sign = sort_index(J);
    if (sign == 0) return;
    MultiPoly g = sign == 1 ? f : -f;
    auto it = comps_.find(J);
    if (it == comps_.end()) {
        comps_.emplace(J, g);
        return;
    }
    it->second += g;
    if (it->second.is_zero()) comps_.erase(it);
}

PolyForm PolyForm::scaled(const Scalar& c) const {
    PolyForm out(nvars_, degree_);
    if (c.is_zero()) return out;
    for (const auto& [I, f] : comps_) out.add_component(I, c * f);
    return out;
}

MultiPoly PolyForm::evaluate(const std::vector<std::vector<Scalar>>& vs) const {
    MultiPoly out(nvars_);
    for (const auto& [I, f] : comps_) {
        std::vector<std::vector<Scalar>> m(degree_, std::vector<Scalar>(degree_, Scalar(0)));
        for (unsigned a = 0; a < degree_; ++a)
            for (unsigned b = 0; b < degree_; ++b) m[a][b] = vs[b][I[a]];
        Scalar d = small_det(m);
        if (!d.is_zero()) out += d * f;
    }
    return out;
}

std::vector<std::vector<MultiPoly>> PolyForm::as_matrix() const {
    std::vector<std::vector<MultiPoly>> m(nvars_, std::vector<MultiPoly>(nvars_, MultiPoly(nvars_)));
    for (const auto& [I, f] : comps_) {
        m[I[0]][I[1]] = f;
        m[I[1]][I[0]] = -f;
    }
    return m;
}

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
    PolyForm out = a;
    for (const auto& [I, f] : b.comps_) out.add_component(I, f);
    return out;
}

PolyForm operator-(const PolyForm& a, const PolyForm& b) {
    PolyForm out = a;
    for (const auto& [I, f] : b.comps_) out.add_component(I, -f);
    return out;
}

bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.degree_ == b.degree_ && a.comps_ == b.comps_;
}

std::string PolyForm::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, f] : comps_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.str() << ")";
        for (std::size_t k = 0; k < I.size(); ++k)
            os << (k ? "^" : " ") << "dx_" << (I[k] + 1);
    }
    return os.str();
}

PolyForm exterior_derivative(const PolyForm& f) {
    PolyForm out(f.nvars(), f.degree() + 1);
    for (const auto& [I, comp] : f.comps()) {
        for (unsigned i = 0; i < f.nvars(); ++i) {
            MultiPoly d = comp.derivative(i);
            if (d.is_zero()) continue;
            std::vector<unsigned> J;
            J.push_back(i);
            J.insert(J.end(), I.begin(), I.end());
            out.add_component(J, d);
        }
    }
    return out;
}

bool is_closed(const PolyForm& f) { return exterior_derivative(f).is_zero(); }

PolyForm poincare_antiderivative(const PolyForm& omega) {
    if (omega.degree() != 2) throw Error("antiderivative implemented for 2-forms");
    if (!is_closed(omega)) throw NotClosed("form has nonzero exterior derivative");
    unsigned r = omega.nvars();
    PolyForm eta(r, 1);
    for (const auto& [I, f] : omega.comps()) {
        unsigned i = I[0], j = I[1];
        for (const auto& [e, c] : f.terms()) {
            int d = 0;
            for (int k : e) d += k;
            Scalar w = c / Scalar(d + 2);
            MultiPoly mono = MultiPoly::monomial(r, e, w);
            eta.add_component({j}, mono * MultiPoly::variable(r, i));
            eta.add_component({i}, -(mono * MultiPoly::variable(r, j)));
        }
    }
    return eta;
}

PolyForm g_act_on_form(const Group& G, int g, const PolyForm& w) {
    unsigned r = w.nvars();
    PolyForm out(r, w.degree());
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> cur;
    all_tuples(r, w.degree(), 0, cur, tuples);
    int gi = G.inverse(g);
    for (const auto& J : tuples) {
        std::vector<std::vector<Scalar>> vs;
        for (unsigned b : J) {
            std::vector<Scalar> e(r, Scalar(0));
            e[b] = Scalar(1);
            vs.push_back(G.act_on_field(gi, e));
        }
        MultiPoly val = G.act_on_poly(g, w.evaluate(vs));
        out.add_component(J, val);
    }
    return out;
}

PolyForm extension_obstruction(const Group& G, int g, const PolyForm& omega) {
    if (!is_closed(omega)) throw NotClosed("obstruction defined for closed forms");
    return g_act_on_form(G, g, omega) - omega;
}

bool g_map_multiplicative(const Group& G, const Arrangement& arr,
                          const TwistData& tw, int g) {
    std::vector<SkewOp> gens;
    for (unsigned i = 0; i < arr.nvars; ++i)
        gens.push_back(SkewOp::from_poly(arr, MultiPoly::variable(arr.nvars, i)));
    for (unsigned i = 0; i < arr.nvars; ++i) gens.push_back(SkewOp::L(arr, i));
    for (const SkewOp& a : gens)
        for (const SkewOp& b : gens) {
            SkewOp lhs = g_transport(G, arr, tw, g, multiply_skew(G, arr, tw, a, b));
            SkewOp rhs = multiply_skew(G, arr, tw, g_transport(G, arr, tw, g, a),
                                       g_transport(G, arr, tw, g, b));
            if (lhs != rhs) return false;
        }
    return true;
}

SkewOp twist_iso(const Group& G, const Arrangement& arr, const PolyForm& eta,
                 const TwistData& tw1, const TwistData& tw2, const SkewOp& a) {
    unsigned r = arr.nvars;
    PolyForm diff = (PolyForm::two_form(r, tw1.omega) - PolyForm::two_form(r, tw2.omega))
                        .scaled(tw1.t.inverse());
    if (exterior_derivative(eta) != diff)
        throw EtaMismatch("d(eta) != (omega1 - omega2)/t");
    SkewOp out;
    for (const auto& [key, c] : a.terms()) {
        SkewOp acc = SkewOp::group_elem(arr, key.first);
        for (unsigned i = r; i-- > 0;) {
            if (key.second[i] == 0) continue;
            SkewOp gen = skew_add(arr, SkewOp::L(arr, i),
                                  SkewOp::from_poly(arr, eta.component({i})));
            for (int rep = 0; rep < key.second[i]; ++rep)
                acc = multiply_skew(G, arr, tw2, gen, acc);
        }
        acc = lmul_coeff(arr, c, acc);
        out = skew_add(arr, out, acc);
    }
    return out;
}

} // namespace cherednik
