#include "cherednik/localized.hpp"

#include <sstream>

namespace cherednik {

namespace {

// Divisibility pre-filter: evaluate numerators at a point of the hyperplane
// over F_q instead of Q(zeta). A nonzero residue proves alpha does not divide;
// residue zero (or an unmappable coefficient) falls back to exact division.
constexpr std::uint64_t kNoRes = ~std::uint64_t(0);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return std::uint64_t((unsigned __int128)(a) * b % q);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
    std::uint64_t out = 1 % q;
    while (e) {
        if (e & 1) out = mulmod(out, a, q);
        a = mulmod(a, a, q);
        e >>= 1;
    }
    return out;
}

// Smallest prime q = 1 mod lcm(1..12), so F_q contains zeta_m for every m
// dividing 27720; large enough that accidental zero residues are rare.
std::uint64_t probe_prime() {
    static const std::uint64_t q = [] {
        for (std::uint64_t c = 27720u * 37 + 1;; c += 27720)
            if (is_prime(Integer(c))) return c;
    }();
    return q;
}

std::uint64_t map_rational(const Rational& r, std::uint64_t q) {
    Integer den = Integer(denominator(r) % Integer(q));
    if (den == 0) return kNoRes;
    Integer num = Integer(numerator(r) % Integer(q));
    if (num < 0) num += Integer(q);
    std::uint64_t n = std::uint64_t(num), d = std::uint64_t(den);
    return mulmod(n, powmod(d, q - 2, q), q);
}

// Images of the power basis 1, zeta, ..., zeta^{d-1} in F_q, where zeta maps
// to an element of exact multiplicative order m (a root of Phi_m mod q).
const std::vector<std::uint64_t>* zeta_images(const Field* f, std::uint64_t q) {
    static std::map<const Field*, std::vector<std::uint64_t>> cache;
    auto it = cache.find(f);
    if (it != cache.end()) return it->second.empty() ? nullptr : &it->second;
    std::vector<std::uint64_t> pows;
    unsigned m = f->order();
    if ((q - 1) % m == 0) {
        std::uint64_t z = 0;
        for (std::uint64_t r = 2; r < q; ++r) {
            std::uint64_t cand = powmod(r, (q - 1) / m, q);
            bool primitive = cand != 1;
            for (unsigned d = 1; primitive && d < m; ++d)
                if (m % d == 0 && powmod(cand, d, q) == 1) primitive = false;
            if (primitive) {
                z = cand;
                break;
            }
        }
        if (z != 0 || m == 1) {
            pows.assign(f->degree(), 1);
            for (unsigned k = 1; k < f->degree(); ++k) pows[k] = mulmod(pows[k - 1], z, q);
        }
    }
    it = cache.emplace(f, std::move(pows)).first;
    return it->second.empty() ? nullptr : &it->second;
}

std::uint64_t map_scalar(const Scalar& c, std::uint64_t q) {
    const auto& co = c.coeffs();
    if (co.size() == 1) return map_rational(co[0], q);
    const std::vector<std::uint64_t>* pows = zeta_images(c.field(), q);
    if (!pows) return kNoRes;
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < co.size(); ++k) {
        std::uint64_t r = map_rational(co[k], q);
        if (r == kNoRes) return kNoRes;
        out = (out + mulmod(r, (*pows)[k], q)) % q;
    }
    return out;
}

std::uint64_t eval_mod(const MultiPoly& f, const std::vector<std::uint64_t>& pt,
                       std::uint64_t q) {
    std::uint64_t out = 0;
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t t = map_scalar(c, q);
        if (t == kNoRes) return kNoRes;
        for (std::size_t j = 0; j < pt.size(); ++j)
            if (e[j] > 0) t = mulmod(t, powmod(pt[j], std::uint64_t(e[j]), q), q);
        out = (out + t) % q;
    }
    return out;
}

} // namespace

Arrangement Arrangement::build(const Group& G, std::vector<MultiPoly> alphas) {
    Arrangement arr;
    arr.nvars = G.rank();
    arr.alphas = std::move(alphas);
    arr.image.assign(G.size(), std::vector<int>(arr.alphas.size(), -1));
    arr.scale.assign(G.size(), std::vector<Scalar>(arr.alphas.size(), Scalar(0)));
    for (std::size_t g = 0; g < G.size(); ++g) {
        for (std::size_t y = 0; y < arr.alphas.size(); ++y) {
            MultiPoly im = G.act_on_poly(int(g), arr.alphas[y]);
            // normalize like the reflection alphas: unit coefficient on the
            // lowest-index variable, which is the lex-largest exponent
            Scalar mu = im.terms().rbegin()->second;
            MultiPoly normalized = mu.inverse() * im;
            for (std::size_t z = 0; z < arr.alphas.size(); ++z) {
                if (normalized == arr.alphas[z]) {
                    arr.image[g][y] = int(z);
                    arr.scale[g][y] = mu;
                    break;
                }
            }
            if (arr.image[g][y] < 0)
                throw Error("arrangement is not stable under the group");
        }
    }
    arr.probe_q = probe_prime();
    arr.probe.resize(arr.alphas.size());
    for (std::size_t y = 0; y < arr.alphas.size(); ++y) {
        const MultiPoly& a = arr.alphas[y];
        if (a.total_degree() != 1) continue; // probe stays empty, filter disabled
        const ExpVec& pe = a.terms().rbegin()->first;
        unsigned p = 0;
        while (p < arr.nvars && pe[p] == 0) ++p;
        std::vector<Scalar> pt(arr.nvars, Scalar(0));
        for (unsigned j = 0; j < arr.nvars; ++j)
            if (j != p) pt[j] = Scalar(long(j) + 2);
        // solve a(pt) = 0 for the pivot coordinate
        Scalar cp(0), rest(0);
        for (const auto& [e, c] : a.terms()) {
            if (e[p] > 0) {
                cp = c;
                continue;
            }
            Scalar t = c;
            for (unsigned j = 0; j < arr.nvars; ++j)
                for (int k = 0; k < e[j]; ++k) t *= pt[j];
            rest = rest + t;
        }
        pt[p] = -(rest / cp);
        std::vector<std::uint64_t> res(arr.nvars, 0);
        bool ok = true;
        for (unsigned j = 0; ok && j < arr.nvars; ++j) {
            res[j] = map_scalar(pt[j], arr.probe_q);
            ok = res[j] != kNoRes;
        }
        if (ok) arr.probe[y] = std::move(res);
    }
    return arr;
}

LocalizedCoeff::LocalizedCoeff(MultiPoly num, std::vector<int> den)
    : num_(std::move(num)), den_(std::move(den)) {}

LocalizedCoeff LocalizedCoeff::from_poly(const Arrangement& arr, MultiPoly f) {
    return LocalizedCoeff(std::move(f), std::vector<int>(arr.count(), 0));
}

LocalizedCoeff LocalizedCoeff::from_scalar(const Arrangement& arr, const Scalar& c) {
    return from_poly(arr, MultiPoly::constant(arr.nvars, c));
}

bool LocalizedCoeff::is_polynomial() const {
    for (int k : den_)
        if (k > 0) return false;
    return true;
}

LocalizedCoeff LocalizedCoeff::reduced(const Arrangement& arr) const {
    LocalizedCoeff r = *this;
    if (r.num_.is_zero()) {
        r.den_.assign(arr.count(), 0);
        return r;
    }
    for (std::size_t y = 0; y < arr.count(); ++y) {
        while (r.den_[y] > 0) {
            if (y < arr.probe.size() && !arr.probe[y].empty()) {
                std::uint64_t v = eval_mod(r.num_, arr.probe[y], arr.probe_q);
                if (v != kNoRes && v != 0) break;
            }
            auto q = divide_exact(r.num_, arr.alphas[y]);
            if (!q) break;
            r.num_ = *q;
            --r.den_[y];
        }
    }
    return r;
}

LocalizedCoeff LocalizedCoeff::neg() const { return LocalizedCoeff(-num_, den_); }

LocalizedCoeff LocalizedCoeff::add(const Arrangement& arr, const LocalizedCoeff& o) const {
    MultiPoly a = num_, b = o.num_;
    std::vector<int> den(den_.size());
    for (std::size_t y = 0; y < den.size(); ++y) {
        den[y] = std::max(den_[y], o.den_[y]);
        for (int k = den_[y]; k < den[y]; ++k) a = a * arr.alphas[y];
        for (int k = o.den_[y]; k < den[y]; ++k) b = b * arr.alphas[y];
    }
    return LocalizedCoeff(a + b, den).reduced(arr);
}

LocalizedCoeff LocalizedCoeff::sub(const Arrangement& arr, const LocalizedCoeff& o) const {
    return add(arr, o.neg());
}

LocalizedCoeff LocalizedCoeff::mul(const Arrangement& arr, const LocalizedCoeff& o) const {
    std::vector<int> den(den_.size());
    for (std::size_t y = 0; y < den.size(); ++y) den[y] = den_[y] + o.den_[y];
    return LocalizedCoeff(num_ * o.num_, den).reduced(arr);
}

LocalizedCoeff LocalizedCoeff::mul_scalar(const Scalar& c) const {
    if (c.is_zero()) return LocalizedCoeff(MultiPoly(num_.nvars()), std::vector<int>(den_.size(), 0));
    return LocalizedCoeff(c * num_, den_);
}

LocalizedCoeff LocalizedCoeff::derivative(const Arrangement& arr, unsigned i) const {
    // d(h / D) = (dh * D - h * dD) / D^2 restricted to the hyperplanes present.
    MultiPoly top = num_.derivative(i);
    std::vector<int> den = den_;
    for (std::size_t y = 0; y < den_.size(); ++y) {
        if (den_[y] == 0) continue;
        top = top * arr.alphas[y];
        ++den[y];
    }
    for (std::size_t y = 0; y < den_.size(); ++y) {
        if (den_[y] == 0) continue;
        MultiPoly piece = Scalar(-den_[y]) * (num_ * arr.alphas[y].derivative(i));
        for (std::size_t z = 0; z < den_.size(); ++z)
            if (den_[z] > 0 && z != y) piece = piece * arr.alphas[z];
        top += piece;
    }
    return LocalizedCoeff(top, den).reduced(arr);
}

LocalizedCoeff LocalizedCoeff::directional(const Arrangement& arr,
                                           const std::vector<Scalar>& v) const {
    LocalizedCoeff out = from_poly(arr, MultiPoly(num_.nvars()));
    for (unsigned i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        out = out.add(arr, derivative(arr, i).mul_scalar(v[i]));
    }
    return out;
}

LocalizedCoeff LocalizedCoeff::act(const Group& G, const Arrangement& arr, int g) const {
    MultiPoly num = G.act_on_poly(g, num_);
    std::vector<int> den(den_.size(), 0);
    Scalar adjust(1);
    for (std::size_t y = 0; y < den_.size(); ++y) {
        if (den_[y] == 0) continue;
        den[arr.image[g][y]] += den_[y];
        Scalar inv = arr.scale[g][y].inverse();
        for (int k = 0; k < den_[y]; ++k) adjust *= inv;
    }
    return LocalizedCoeff(adjust * num, den).reduced(arr);
}

std::string LocalizedCoeff::str() const {
    std::ostringstream os;
    os << num_.str();
    bool any = false;
    for (int k : den_) any = any || k > 0;
    if (any) {
        os << " / delta^(";
        for (std::size_t y = 0; y < den_.size(); ++y)
            os << (y ? "," : "") << den_[y];
        os << ")";
    }
    return os.str();
}

} // namespace cherednik
