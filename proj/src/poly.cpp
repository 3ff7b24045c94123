#include "cherednik/poly.hpp"

#include <numeric>
#include <sstream>

namespace cherednik {

MultiPoly MultiPoly::constant(unsigned nvars, const Scalar& c) {
    MultiPoly p(nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned i) {
    MultiPoly p(nvars);
    ExpVec e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, Scalar(1));
    return p;
}

MultiPoly MultiPoly::monomial(unsigned nvars, ExpVec exps, const Scalar& c) {
    MultiPoly p(nvars);
    p.add_term(exps, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == ExpVec(nvars_, 0));
}

Scalar MultiPoly::constant_value() const {
    auto it = terms_.find(ExpVec(nvars_, 0));
    return it == terms_.end() ? Scalar(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void MultiPoly::add_term(const ExpVec& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e(a.nvars_);
            for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& a) {
    MultiPoly r(a.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : a.terms_) r.add_term(e, c * v);
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::derivative(unsigned i) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        ExpVec d = e;
        d[i] -= 1;
        r.add_term(d, Scalar(long(e[i])) * c);
    }
    return r;
}

MultiPoly MultiPoly::substitute_linear(const std::vector<std::vector<Scalar>>& M) const {
    std::vector<MultiPoly> images;
    for (unsigned i = 0; i < nvars_; ++i) {
        MultiPoly img(nvars_);
        for (unsigned j = 0; j < nvars_; ++j)
            img += M[i][j] * MultiPoly::variable(nvars_, j);
        images.push_back(img);
    }
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(nvars_, c);
        for (unsigned i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * images[i];
        r += term;
    }
    return r;
}

MultiPoly MultiPoly::directional_derivative(const std::vector<Scalar>& v) const {
    MultiPoly r(nvars_);
    for (unsigned i = 0; i < nvars_; ++i)
        if (!v[i].is_zero()) r += v[i] * derivative(i);
    return r;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) return std::nullopt;
    MultiPoly rem = f;
    MultiPoly q(f.nvars());
    // Lex-leading term of g (largest key in the term map).
    const auto& glt = *g.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& flt = *rem.terms().rbegin();
        ExpVec e(f.nvars());
        for (unsigned i = 0; i < f.nvars(); ++i) {
            e[i] = flt.first[i] - glt.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        MultiPoly t = MultiPoly::monomial(f.nvars(), e, flt.second / glt.second);
        q += t;
        rem -= t * g;
    }
    return q;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " * x^(";
        for (unsigned i = 0; i < nvars_; ++i) os << (i ? "," : "") << e[i];
        os << ")";
    }
    return os.str();
}

} // namespace cherednik
