#include "cherednik/skew.hpp"

namespace cherednik {

TwistData TwistData::untwisted(unsigned r, Scalar t) {
    TwistData tw;
    tw.omega.assign(r, std::vector<MultiPoly>(r, MultiPoly(r)));
    tw.t = t;
    return tw;
}

bool TwistData::zero_twist() const {
    for (const auto& row : omega)
        for (const auto& f : row)
            if (!f.is_zero()) return false;
    return true;
}

MultiPoly TwistData::pair(const std::vector<Scalar>& v, const std::vector<Scalar>& w) const {
    MultiPoly out(rank());
    for (unsigned i = 0; i < rank(); ++i)
        for (unsigned j = 0; j < rank(); ++j) {
            if (v[i].is_zero() || w[j].is_zero()) continue;
            out += (v[i] * w[j]) * omega[i][j];
        }
    return out;
}

SkewOp SkewOp::term(const Arrangement& arr, LocalizedCoeff c, ExpVec a, int g) {
    SkewOp S;
    S.add(arr, Key{g, std::move(a)}, c);
    return S;
}

SkewOp SkewOp::from_coeff(const Arrangement& arr, LocalizedCoeff c) {
    return term(arr, std::move(c), ExpVec(arr.nvars, 0), 0);
}

SkewOp SkewOp::from_poly(const Arrangement& arr, const MultiPoly& f) {
    return from_coeff(arr, LocalizedCoeff::from_poly(arr, f));
}

SkewOp SkewOp::L(const Arrangement& arr, unsigned i) {
    ExpVec a(arr.nvars, 0);
    a[i] = 1;
    return term(arr, LocalizedCoeff::from_scalar(arr, Scalar(1)), a, 0);
}

SkewOp SkewOp::group_elem(const Arrangement& arr, int g) {
    return term(arr, LocalizedCoeff::from_scalar(arr, Scalar(1)), ExpVec(arr.nvars, 0), g);
}

SkewOp SkewOp::one(const Arrangement& arr) { return group_elem(arr, 0); }

void SkewOp::add(const Arrangement& arr, const Key& k, const LocalizedCoeff& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    LocalizedCoeff s = it->second.add(arr, c);
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

int SkewOp::max_filtration() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
        int s = 0;
        for (int e : k.second) s += e;
        d = std::max(d, s);
    }
    return d;
}

SkewOp skew_add(const Arrangement& arr, const SkewOp& a, const SkewOp& b) {
    SkewOp out = a;
    for (const auto& [k, c] : b.terms()) out.add(arr, k, c);
    return out;
}

SkewOp skew_sub(const Arrangement& arr, const SkewOp& a, const SkewOp& b) {
    SkewOp out = a;
    for (const auto& [k, c] : b.terms()) out.add(arr, k, c.neg());
    return out;
}

SkewOp skew_scale(const SkewOp& a, const Scalar& c) {
    SkewOp out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : a.terms()) {
        // keys are distinct, so direct insertion is safe
        SkewOp::Key key = k;
        LocalizedCoeff w = v.mul_scalar(c);
        Arrangement dummy; // mul_scalar never needs reduction
        out.add(dummy, key, w);
    }
    return out;
}

SkewOp lmul_coeff(const Arrangement& arr, const LocalizedCoeff& c, const SkewOp& S) {
    SkewOp out;
    for (const auto& [k, v] : S.terms()) out.add(arr, k, c.mul(arr, v));
    return out;
}

namespace {

// Normal form of L_k * L^a * g. Recursion on the inversion count of (k, a).
SkewOp order_L(const Group& G, const Arrangement& arr, const TwistData& tw,
               unsigned k, const ExpVec& a, int g) {
    int j = -1;
    if (!tw.zero_twist())
        for (unsigned i = 0; i < k; ++i)
            if (a[i] > 0) {
                j = int(i);
                break;
            }
    if (j < 0) {
        ExpVec b = a;
        ++b[k];
        return SkewOp::term(arr, LocalizedCoeff::from_scalar(arr, Scalar(1)), b, g);
    }
    ExpVec rest = a;
    --rest[j];
    // L_k L^a = L_j (L_k L^rest) + (omega_{kj}/t) L^rest
    SkewOp out = lmul_L(G, arr, tw, unsigned(j), order_L(G, arr, tw, k, rest, g));
    const MultiPoly& w = tw.omega[k][j];
    if (!w.is_zero()) {
        LocalizedCoeff c = LocalizedCoeff::from_poly(arr, w).mul_scalar(tw.t.inverse());
        out.add(arr, SkewOp::Key{g, rest}, c);
    }
    return out;
}

} // namespace

SkewOp lmul_L(const Group& G, const Arrangement& arr, const TwistData& tw,
              unsigned k, const SkewOp& S) {
    SkewOp out;
    for (const auto& [key, c] : S.terms()) {
        out.add(arr, key, c.derivative(arr, k));
        SkewOp moved = order_L(G, arr, tw, k, key.second, key.first);
        for (const auto& [mk, mc] : moved.terms()) out.add(arr, mk, c.mul(arr, mc));
    }
    return out;
}

SkewOp lmul_L_field(const Group& G, const Arrangement& arr, const TwistData& tw,
                    const std::vector<Scalar>& w, const SkewOp& S) {
    SkewOp out;
    for (unsigned k = 0; k < arr.nvars; ++k) {
        if (w[k].is_zero()) continue;
        out = skew_add(arr, out, skew_scale(lmul_L(G, arr, tw, k, S), w[k]));
    }
    return out;
}

SkewOp lmul_group(const Group& G, const Arrangement& arr, const TwistData& tw,
                  int g, const SkewOp& S) {
    SkewOp out;
    for (const auto& [key, c] : S.terms()) {
        // g * c L^b h = (g.c) * prod_i L_{g(e_i)}^{b_i} * (g h)
        SkewOp acc = SkewOp::group_elem(arr, G.mult(g, key.first));
        for (unsigned i = arr.nvars; i-- > 0;) {
            if (key.second[i] == 0) continue;
            std::vector<Scalar> ei(arr.nvars, Scalar(0));
            ei[i] = Scalar(1);
            std::vector<Scalar> w = G.act_on_field(g, ei);
            for (int rep = 0; rep < key.second[i]; ++rep)
                acc = lmul_L_field(G, arr, tw, w, acc);
        }
        acc = lmul_coeff(arr, c.act(G, arr, g), acc);
        out = skew_add(arr, out, acc);
    }
    return out;
}

SkewOp multiply_skew(const Group& G, const Arrangement& arr, const TwistData& tw,
                     const SkewOp& a, const SkewOp& b) {
    // Terms of a share group labels and exponent prefixes; memoize the partial
    // products L^e * g * b within this call to avoid quadratic recomputation.
    std::map<SkewOp::Key, SkewOp> partial;
    auto lpow_gb = [&](const SkewOp::Key& key, auto&& self) -> const SkewOp& {
        auto it = partial.find(key);
        if (it != partial.end()) return it->second;
        SkewOp val;
        unsigned i = 0;
        while (i < arr.nvars && key.second[i] == 0) ++i;
        if (i == arr.nvars) {
            val = lmul_group(G, arr, tw, key.first, b);
        } else {
            SkewOp::Key rest = key;
            --rest.second[i];
            val = lmul_L(G, arr, tw, i, self(rest, self));
        }
        return partial.emplace(key, std::move(val)).first->second;
    };
    SkewOp out;
    for (const auto& [key, c] : a.terms())
        out = skew_add(arr, out, lmul_coeff(arr, c, lpow_gb(key, lpow_gb)));
    return out;
}

SkewOp g_transport(const Group& G, const Arrangement& arr, const TwistData& tw,
                   int g, const SkewOp& S) {
    SkewOp out;
    int gi = G.inverse(g);
    for (const auto& [key, c] : S.terms()) {
        int h = G.mult(G.mult(g, key.first), gi);
        SkewOp acc = SkewOp::group_elem(arr, h);
        for (unsigned i = arr.nvars; i-- > 0;) {
            if (key.second[i] == 0) continue;
            std::vector<Scalar> ei(arr.nvars, Scalar(0));
            ei[i] = Scalar(1);
            std::vector<Scalar> w = G.act_on_field(g, ei);
            for (int rep = 0; rep < key.second[i]; ++rep)
                acc = lmul_L_field(G, arr, tw, w, acc);
        }
        acc = lmul_coeff(arr, c.act(G, arr, g), acc);
        out = skew_add(arr, out, acc);
    }
    return out;
}

LocalizedCoeff apply_to_function(const Group& G, const Arrangement& arr,
                                 const TwistData& tw, const SkewOp& a,
                                 const LocalizedCoeff& f) {
    if (!tw.zero_twist())
        throw TwistNotZero("the twisted algebra has no function representation");
    LocalizedCoeff out = LocalizedCoeff::from_poly(arr, MultiPoly(arr.nvars));
    for (const auto& [key, c] : a.terms()) {
        LocalizedCoeff v = f.act(G, arr, key.first);
        for (unsigned i = 0; i < arr.nvars; ++i)
            for (int rep = 0; rep < key.second[i]; ++rep) v = v.derivative(arr, i);
        out = out.add(arr, c.mul(arr, v));
    }
    return out;
}

LocalizedCoeff residue(const Arrangement& arr, const std::vector<Scalar>& v, int Y) {
    MultiPoly va = arr.alphas[Y].directional_derivative(v);
    std::vector<int> den(arr.count(), 0);
    den[Y] = 1;
    return LocalizedCoeff(va, den).reduced(arr);
}

} // namespace cherednik
