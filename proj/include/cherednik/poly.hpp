#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/scalar.hpp"

namespace cherednik {

using ExpVec = std::vector<int>;

/// Sparse multivariate polynomial over Scalar. Zero coefficients never stored.
class MultiPoly {
public:
    explicit MultiPoly(unsigned nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(unsigned nvars, const Scalar& c);
    static MultiPoly variable(unsigned nvars, unsigned i);
    static MultiPoly monomial(unsigned nvars, ExpVec exps, const Scalar& c);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const; // coefficient of the constant term
    int total_degree() const;      // -1 for zero
    const std::map<ExpVec, Scalar>& terms() const { return terms_; }

    void add_term(const ExpVec& e, const Scalar& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Scalar& c, const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }

    MultiPoly derivative(unsigned i) const;
    /// Substitution x_i -> sum_j M[i][j] x_j.
    MultiPoly substitute_linear(const std::vector<std::vector<Scalar>>& M) const;
    /// Directional derivative sum v_i d/dx_i for a constant vector v.
    MultiPoly directional_derivative(const std::vector<Scalar>& v) const;

    std::string str() const;

private:
    unsigned nvars_;
    std::map<ExpVec, Scalar> terms_;
};

/// Exact division: returns f/g when g divides f, nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g);

} // namespace cherednik
