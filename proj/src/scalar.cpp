#include "cherednik/scalar.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace cherednik {

namespace {

// Integer polynomial helpers for computing Phi_m. Coefficient vectors are
// little-endian (index = power) and trimmed.
using IPoly = std::vector<Integer>;

void trim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division, quotient known to exist with monic divisor.
IPoly divide_monic(IPoly num, const IPoly& den) {
    IPoly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Integer(0));
    while (num.size() >= den.size()) {
        Integer lead = num.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = lead;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= lead * den[i];
        trim(num);
    }
    return q;
}

IPoly cyclotomic_poly(unsigned m) {
    // x^m - 1 divided by Phi_d for all proper divisors d of m.
    IPoly p(m + 1, Integer(0));
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) p = divide_monic(std::move(p), cyclotomic_poly(d));
    return p;
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            result -= result / q;
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

Integer inverse_mod(const Integer& a, const Integer& mod) {
    // Extended Euclid.
    Integer old_r = a % mod, r = mod, old_s = 1, s = 0;
    if (old_r < 0) old_r += mod;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw Error("element not invertible modulo " + mod.str());
    old_s %= mod;
    if (old_s < 0) old_s += mod;
    return old_s;
}

Integer eval_mod(const std::vector<Integer>& poly, const Integer& x, const Integer& mod) {
    Integer acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = (acc * x + *it) % mod;
    if (acc < 0) acc += mod;
    return acc;
}

} // namespace

Field::Field(unsigned m) : m_(m), degree_(euler_phi(m)) {
    if (m == 0) throw Error("cyclotomic order must be positive");
    minpoly_ = cyclotomic_poly(m);
    // zeta^k for k in [degree, 2 degree - 2] via repeated reduction.
    // zeta^degree = -(minpoly_[0] + ... + minpoly_[degree-1] zeta^{degree-1}).
    std::vector<Rational> cur(degree_, Rational(0));
    for (unsigned i = 0; i < degree_; ++i) cur[i] = Rational(-minpoly_[i]);
    for (unsigned k = degree_; degree_ >= 2 && k <= 2 * degree_ - 2; ++k) {
        high_powers_.push_back(cur);
        // multiply by zeta
        std::vector<Rational> next(degree_, Rational(0));
        Rational top = cur[degree_ - 1];
        for (unsigned i = degree_ - 1; i >= 1; --i) next[i] = cur[i - 1];
        next[0] = 0;
        for (unsigned i = 0; i < degree_; ++i) next[i] += top * Rational(-minpoly_[i]);
        cur = std::move(next);
    }
}

const Field* Field::rationals() { return cyclotomic(1); }

const Field* Field::cyclotomic(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, const Field*> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(m);
    if (it != registry.end()) return it->second;
    const Field* f = new Field(m); // interned for the process lifetime
    registry.emplace(m, f);
    return f;
}

const std::vector<Rational>& Field::power(unsigned k) const {
    return high_powers_.at(k - degree_);
}

Scalar::Scalar(const Field* f, std::vector<Rational> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->degree())
        throw Error("scalar coordinate vector has wrong length");
}

Scalar Scalar::zeta(const Field* f) {
    std::vector<Rational> c(f->degree(), Rational(0));
    if (f->degree() == 1) {
        // zeta_1 = 1, zeta_2 = -1
        c[0] = f->order() == 2 ? Rational(-1) : Rational(1);
    } else {
        c[1] = 1;
    }
    return Scalar(f, std::move(c));
}

Scalar Scalar::from_rational(const Field* f, const Rational& q) {
    std::vector<Rational> c(f->degree(), Rational(0));
    c[0] = q;
    return Scalar(f, std::move(c));
}

bool Scalar::is_zero() const {
    for (const auto& q : coeffs_)
        if (q != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Scalar::rational_value() const {
    if (!is_rational()) throw Error("scalar is not rational: " + str());
    return coeffs_[0];
}

const Field* Scalar::common(const Scalar& a, const Scalar& b) {
    if (a.field_ == b.field_) return a.field_;
    if (a.field_->degree() == 1 && a.is_rational()) return b.field_;
    if (b.field_->degree() == 1 && b.is_rational()) return a.field_;
    throw Error("scalars live in incompatible cyclotomic fields");
}

Scalar Scalar::promoted(const Field* f) const {
    if (field_ == f) return *this;
    return from_rational(f, rational_value());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& q : r.coeffs_) q = -q;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    const Field* f = Scalar::common(a, b);
    Scalar x = a.promoted(f), y = b.promoted(f);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    const Field* f = Scalar::common(a, b);
    Scalar x = a.promoted(f), y = b.promoted(f);
    unsigned d = f->degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (unsigned i = 0; i < d; ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j)
            if (y.coeffs_[j] != 0) prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    std::vector<Rational> out(d, Rational(0));
    for (unsigned k = 0; k < d; ++k) out[k] = prod[k];
    for (unsigned k = d; k <= 2 * d - 2 && d >= 2; ++k) {
        if (prod[k] == 0) continue;
        const auto& pw = f->power(k);
        for (unsigned i = 0; i < d; ++i) out[i] += prod[k] * pw[i];
    }
    return Scalar(f, std::move(out));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero scalar");
    unsigned d = field_->degree();
    if (d == 1) return Scalar(field_, {Rational(1) / coeffs_[0]});
    // Solve a*x = 1 via the multiplication matrix of a in the power basis.
    // Column j of the matrix is a * zeta^j.
    std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(d + 1, Rational(0)));
    Scalar col = *this;
    Scalar z = zeta(field_);
    for (unsigned j = 0; j < d; ++j) {
        for (unsigned i = 0; i < d; ++i) mat[i][j] = col.coeffs_[i];
        col = col * z;
    }
    mat[0][d] = 1;
    // Gauss elimination with exact rationals.
    for (unsigned c = 0, r = 0; c < d && r < d; ++c) {
        unsigned piv = r;
        while (piv < d && mat[piv][c] == 0) ++piv;
        if (piv == d) continue;
        std::swap(mat[piv], mat[r]);
        Rational lead = mat[r][c];
        for (unsigned k = c; k <= d; ++k) mat[r][k] /= lead;
        for (unsigned i = 0; i < d; ++i) {
            if (i == r || mat[i][c] == 0) continue;
            Rational factor = mat[i][c];
            for (unsigned k = c; k <= d; ++k) mat[i][k] -= factor * mat[r][k];
        }
        ++r;
    }
    std::vector<Rational> x(d);
    for (unsigned i = 0; i < d; ++i) x[i] = mat[i][d];
    return Scalar(field_, std::move(x));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
    return a.is_rational() && b.is_rational() && a.rational_value() == b.rational_value();
}

std::string Scalar::str() const {
    if (is_rational()) {
        std::ostringstream os;
        os << coeffs_[0];
        return os.str();
    }
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << (coeffs_[i] > 0 ? "+" : "");
        first = false;
        if (i == 0) {
            os << coeffs_[0];
        } else {
            if (coeffs_[i] == -1)
                os << "-";
            else if (coeffs_[i] != 1)
                os << coeffs_[i] << "*";
            os << "zeta";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    os << ")";
    return os.str();
}

ValOrInf min(const ValOrInf& a, const ValOrInf& b) {
    if (a.infinite) return b;
    if (b.infinite) return a;
    return ValOrInf::of(std::min(a.v, b.v));
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (Integer d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void PadicSpec::validate() const {
    if (precision < 1) throw Error("working precision must be at least 1");
    if (!is_prime(p)) throw Error("p = " + p.str() + " is not prime");
    if (field->order() > 1 && p % field->order() != 1)
        throw Error("p = " + p.str() + " is not congruent to 1 mod " + std::to_string(field->order()));
}

TruncatedPadic hensel_lift_root(const PadicSpec& spec) {
    // Valuations are computed coefficient by coefficient, so memoize the lift.
    static std::mutex mu;
    static std::map<std::tuple<unsigned, Integer, unsigned>, TruncatedPadic> cache;
    std::tuple<unsigned, Integer, unsigned> key{spec.field->order(), spec.p, spec.precision};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    spec.validate();
    const auto& phi = spec.field->minpoly();
    std::vector<Integer> dphi(phi.size() > 1 ? phi.size() - 1 : 1, Integer(0));
    for (std::size_t i = 1; i < phi.size(); ++i) dphi[i - 1] = phi[i] * Integer(i);

    // Smallest positive root mod p; exists because p = 1 mod m.
    Integer root = 0;
    for (Integer r0 = 1; r0 < spec.p; ++r0) {
        if (eval_mod(phi, r0, spec.p) == 0) {
            root = r0;
            break;
        }
    }
    if (root == 0 && eval_mod(phi, 0, spec.p) != 0)
        throw Error("minimal polynomial has no root mod p; field spec invalid");

    // Newton iteration with precision doubling. Phi' (root) is a unit mod p
    // because Phi_m is separable mod p when p does not divide m.
    unsigned k = 1;
    while (k < spec.precision) {
        k = std::min(2 * k, spec.precision);
        Integer next_mod = 1;
        for (unsigned i = 0; i < k; ++i) next_mod *= spec.p;
        Integer fval = eval_mod(phi, root, next_mod);
        Integer fder = eval_mod(dphi, root, next_mod);
        root = (root - fval * inverse_mod(fder, next_mod)) % next_mod;
        if (root < 0) root += next_mod;
    }
    Integer modulus = 1;
    for (unsigned i = 0; i < spec.precision; ++i) modulus *= spec.p;
    root %= modulus;
    TruncatedPadic out{root, modulus, spec.precision};
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
    return out;
}

long integer_valuation(Integer n, const Integer& p) {
    if (n == 0) throw Error("valuation of integer zero");
    if (n < 0) n = -n;
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

ValOrInf valuation(const Scalar& a, const PadicSpec& spec) {
    if (a.is_zero()) return ValOrInf::inf();
    const Field* f = a.field();
    if (f != spec.field && !a.is_rational())
        throw Error("scalar field does not match the p-adic spec");

    // Clear denominators: a = (1/d) * sum n_i zeta^i with integer n_i.
    Integer d = 1;
    for (const auto& q : a.coeffs()) d = lcm(d, denominator(q));
    std::vector<Integer> n(a.coeffs().size());
    for (std::size_t i = 0; i < n.size(); ++i)
        n[i] = numerator(a.coeffs()[i]) * (d / denominator(a.coeffs()[i]));

    TruncatedPadic root = hensel_lift_root(spec);
    Integer image = 0;
    Integer zp = 1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        image = (image + n[i] % root.modulus * zp) % root.modulus;
        zp = zp * root.residue % root.modulus;
    }
    if (image < 0) image += root.modulus;
    if (image == 0)
        throw PrecisionExhausted("nonzero scalar maps to 0 mod p^" +
                                 std::to_string(spec.precision) + "; raise the precision");
    long v = integer_valuation(image, spec.p);
    return ValOrInf::of(v - integer_valuation(d, spec.p));
}

} // namespace cherednik
