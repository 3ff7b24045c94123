#pragma once

#include <vector>

#include "cherednik/scalar.hpp"

namespace cherednik {

/// Small dense matrix over Scalar, exact arithmetic throughout.
class Matrix {
public:
    explicit Matrix(unsigned n = 0) : n_(n), a_(std::size_t(n) * n, Scalar(0)) {}

    static Matrix identity(unsigned n);

    unsigned size() const { return n_; }
    Scalar& at(unsigned i, unsigned j) { return a_[std::size_t(i) * n_ + j]; }
    const Scalar& at(unsigned i, unsigned j) const { return a_[std::size_t(i) * n_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    Matrix inverse() const; // throws Error if singular
    unsigned rank() const;

    /// Row layout as nested vectors, convenient for substitution.
    std::vector<std::vector<Scalar>> rows() const;

private:
    unsigned n_;
    std::vector<Scalar> a_;
};

} // namespace cherednik
