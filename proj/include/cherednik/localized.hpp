#pragma once

#include <cstdint>
#include <vector>

#include "cherednik/poly.hpp"
#include "cherednik/refgroup.hpp"

namespace cherednik {

/// The hyperplane arrangement delta = prod alpha_Y together with the induced
/// permutation action of the group on hyperplanes. g(alpha_Y) is always a
/// scalar multiple of some alpha_Y' because the arrangement is G-stable.
struct Arrangement {
    unsigned nvars = 0;
    std::vector<MultiPoly> alphas;
    // g(alpha_Y) = scale[g][Y] * alpha_{image[g][Y]}
    std::vector<std::vector<int>> image;
    std::vector<std::vector<Scalar>> scale;
    // Residues mod probe_q of a fixed point on each hyperplane; a nonzero
    // value of f there refutes alpha | f without running the exact division.
    // An empty vector disables the filter for that hyperplane.
    std::uint64_t probe_q = 0;
    std::vector<std::vector<std::uint64_t>> probe;

    static Arrangement build(const Group& G, std::vector<MultiPoly> alphas);

    std::size_t count() const { return alphas.size(); }
};

/// h / prod alpha_Y^{k_Y}, kept reduced: no alpha_Y with k_Y > 0 divides h.
class LocalizedCoeff {
public:
    LocalizedCoeff() = default;
    LocalizedCoeff(MultiPoly num, std::vector<int> den);

    static LocalizedCoeff from_poly(const Arrangement& arr, MultiPoly f);
    static LocalizedCoeff from_scalar(const Arrangement& arr, const Scalar& c);

    const MultiPoly& num() const { return num_; }
    const std::vector<int>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    LocalizedCoeff reduced(const Arrangement& arr) const;
    LocalizedCoeff neg() const;
    LocalizedCoeff add(const Arrangement& arr, const LocalizedCoeff& o) const;
    LocalizedCoeff sub(const Arrangement& arr, const LocalizedCoeff& o) const;
    LocalizedCoeff mul(const Arrangement& arr, const LocalizedCoeff& o) const;
    LocalizedCoeff mul_scalar(const Scalar& c) const;
    LocalizedCoeff derivative(const Arrangement& arr, unsigned i) const;
    /// Directional derivative along a constant field.
    LocalizedCoeff directional(const Arrangement& arr, const std::vector<Scalar>& v) const;
    /// Group action extending act_on_poly through the localization.
    LocalizedCoeff act(const Group& G, const Arrangement& arr, int g) const;

    // Reduced representatives are canonical, so equality is componentwise.
    friend bool operator==(const LocalizedCoeff& a, const LocalizedCoeff& b) {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }
    friend bool operator!=(const LocalizedCoeff& a, const LocalizedCoeff& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    MultiPoly num_;
    std::vector<int> den_;
};

} // namespace cherednik
