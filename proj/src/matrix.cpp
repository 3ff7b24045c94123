#include "cherednik/matrix.hpp"

namespace cherednik {

Matrix Matrix::identity(unsigned n) {
    Matrix m(n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r(a.n_);
    for (unsigned i = 0; i < a.n_; ++i)
        for (unsigned j = 0; j < a.n_; ++j) {
            Scalar s(0);
            for (unsigned k = 0; k < a.n_; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i])) return false;
    return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> r(n_, Scalar(0));
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::inverse() const {
    unsigned n = n_;
    // Augmented Gauss-Jordan.
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(2 * n, Scalar(0)));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) m[i][j] = at(i, j);
        m[i][n + i] = Scalar(1);
    }
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) throw Error("matrix is singular");
        std::swap(m[piv], m[c]);
        Scalar lead = m[c][c].inverse();
        for (unsigned k = 0; k < 2 * n; ++k) m[c][k] = lead * m[c][k];
        for (unsigned i = 0; i < n; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (unsigned k = 0; k < 2 * n; ++k) m[i][k] -= f * m[c][k];
        }
    }
    Matrix inv(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) inv.at(i, j) = m[i][n + j];
    return inv;
}

unsigned Matrix::rank() const {
    std::vector<std::vector<Scalar>> m(n_, std::vector<Scalar>(n_, Scalar(0)));
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) m[i][j] = at(i, j);
    unsigned rank = 0;
    for (unsigned c = 0; c < n_ && rank < n_; ++c) {
        unsigned piv = rank;
        while (piv < n_ && m[piv][c].is_zero()) ++piv;
        if (piv == n_) continue;
        std::swap(m[piv], m[rank]);
        Scalar lead = m[rank][c].inverse();
        for (unsigned k = c; k < n_; ++k) m[rank][k] = lead * m[rank][k];
        for (unsigned i = 0; i < n_; ++i) {
            if (i == rank || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (unsigned k = c; k < n_; ++k) m[i][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Scalar>> Matrix::rows() const {
    std::vector<std::vector<Scalar>> r(n_, std::vector<Scalar>(n_, Scalar(0)));
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) r[i][j] = at(i, j);
    return r;
}

} // namespace cherednik
