#include "cherednik/refgroup.hpp"

#include <algorithm>

namespace cherednik {

int Group::find(const Matrix& m) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i] == m) return int(i);
    return -1;
}

Group Group::closure(const std::vector<Matrix>& generators, std::size_t bound) {
    Group G;
    if (generators.empty()) throw Error("group needs at least one generator");
    G.rank_ = generators[0].size();
    G.elems_.push_back(Matrix::identity(G.rank_));
    for (const auto& g : generators) {
        if (g.size() != G.rank_) throw Error("generator rank mismatch");
        g.inverse(); // throws if singular
        if (G.find(g) < 0) G.elems_.push_back(g);
    }
    // Breadth-first closure. Products follow the left-action convention:
    // the element "g then h" carries matrix M_h * M_g.
    for (std::size_t i = 0; i < G.elems_.size(); ++i) {
        for (const auto& g : generators) {
            Matrix prod = g * G.elems_[i];
            if (G.find(prod) < 0) {
                G.elems_.push_back(prod);
                if (G.elems_.size() > bound)
                    throw NotFinite("group closure exceeded bound " + std::to_string(bound));
            }
        }
    }
    G.mult_.assign(G.size(), std::vector<int>(G.size(), -1));
    G.inv_.assign(G.size(), -1);
    for (std::size_t g = 0; g < G.size(); ++g) {
        for (std::size_t h = 0; h < G.size(); ++h) {
            int k = G.find(G.elems_[h] * G.elems_[g]);
            if (k < 0) throw Error("group closure is not closed; internal error");
            G.mult_[g][h] = k;
            if (k == 0) G.inv_[g] = int(h);
        }
        G.inverses_.push_back(G.elems_[g].inverse());
    }
    return G;
}

MultiPoly Group::act_on_poly(int g, const MultiPoly& f) const {
    return f.substitute_linear(elems_[g].rows());
}

std::vector<Scalar> Group::act_on_field(int g, const std::vector<Scalar>& v) const {
    return inverses_[g].apply(v);
}

Group Group::cyclic(unsigned m) {
    Matrix gen(1);
    gen.at(0, 0) = Scalar::zeta(Field::cyclotomic(m));
    return closure({gen});
}

Group Group::symmetric(unsigned n) {
    std::vector<Matrix> gens;
    for (unsigned i = 0; i + 1 < n; ++i) {
        Matrix t = Matrix::identity(n);
        t.at(i, i) = Scalar(0);
        t.at(i + 1, i + 1) = Scalar(0);
        t.at(i, i + 1) = Scalar(1);
        t.at(i + 1, i) = Scalar(1);
        gens.push_back(t);
    }
    if (gens.empty()) gens.push_back(Matrix::identity(n));
    return closure(gens);
}

Group Group::dihedral(unsigned m) {
    if (m < 2) throw Error("dihedral order parameter must be at least 2");
    Matrix rot(2), refl(2);
    // 2 cos(2 pi / m) is rational exactly for m in {1,2,3,4,6}.
    long tau;
    bool crystallographic = true;
    switch (m) {
        case 3: tau = -1; break;
        case 4: tau = 0; break;
        case 6: tau = 1; break;
        default: tau = 0; crystallographic = false;
    }
    if (m == 2) {
        // the companion form of (x + 1)^2 is not semisimple; use -I directly
        rot.at(0, 0) = Scalar(-1);
        rot.at(1, 1) = Scalar(-1);
    } else if (crystallographic) {
        // Companion form of x^2 - tau x + 1.
        rot.at(0, 1) = Scalar(-1);
        rot.at(1, 0) = Scalar(1);
        rot.at(1, 1) = Scalar(tau);
    } else {
        Scalar z = Scalar::zeta(Field::cyclotomic(m));
        rot.at(0, 0) = z;
        rot.at(1, 1) = z.inverse();
    }
    refl.at(0, 1) = Scalar(1);
    refl.at(1, 0) = Scalar(1);
    return closure({rot, refl});
}

Group Group::hyperoctahedral(unsigned n) {
    std::vector<Matrix> gens;
    for (unsigned i = 0; i + 1 < n; ++i) {
        Matrix t = Matrix::identity(n);
        t.at(i, i) = Scalar(0);
        t.at(i + 1, i + 1) = Scalar(0);
        t.at(i, i + 1) = Scalar(1);
        t.at(i + 1, i) = Scalar(1);
        gens.push_back(t);
    }
    Matrix s = Matrix::identity(n);
    s.at(0, 0) = Scalar(-1);
    gens.push_back(s);
    return closure(gens);
}

std::vector<ReflectionDatum> enumerate_reflections(const Group& G) {
    std::vector<ReflectionDatum> data;
    std::vector<MultiPoly> alphas;
    unsigned r = G.rank();
    for (int g = 1; g < int(G.size()); ++g) {
        Matrix d(r);
        const Matrix& M = G.matrix(g);
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < r; ++j)
                d.at(i, j) = M.at(i, j) - (i == j ? Scalar(1) : Scalar(0));
        if (d.rank() != 1) continue;
        // The row space of M_g - I is one-dimensional; its spanning row w is
        // the hyperplane equation: ker(M_g - I) = { x : w . x = 0 }.
        std::vector<Scalar> w;
        for (unsigned i = 0; i < r && w.empty(); ++i) {
            std::vector<Scalar> row(r);
            bool nonzero = false;
            for (unsigned j = 0; j < r; ++j) {
                row[j] = d.at(i, j);
                nonzero = nonzero || !row[j].is_zero();
            }
            if (nonzero) w = row;
        }
        // Normalize first nonzero coordinate to 1.
        Scalar pivot(0);
        for (const auto& c : w)
            if (!c.is_zero()) {
                pivot = c;
                break;
            }
        Scalar inv = pivot.inverse();
        MultiPoly alpha(r);
        for (unsigned j = 0; j < r; ++j)
            if (!w[j].is_zero()) alpha += (inv * w[j]) * MultiPoly::variable(r, j);

        // g . alpha = lambda . alpha with lambda the conormal eigenvalue.
        MultiPoly image = G.act_on_poly(g, alpha);
        Scalar lambda(0);
        for (const auto& [e, c] : alpha.terms()) {
            auto it = image.terms().find(e);
            if (it == image.terms().end()) throw EigenvalueNotInField("alpha is not an eigenvector");
            lambda = it->second / c;
            break;
        }
        if (!(image == lambda * alpha) || lambda == Scalar(1))
            throw EigenvalueNotInField("conormal eigenvalue is not a scalar in the field");

        int hyper = -1;
        for (std::size_t k = 0; k < alphas.size(); ++k)
            if (alphas[k] == alpha) hyper = int(k);
        if (hyper < 0) {
            hyper = int(alphas.size());
            alphas.push_back(alpha);
        }
        data.push_back(ReflectionDatum{g, alpha, lambda, hyper});
    }
    return data;
}

std::vector<MultiPoly> reflection_arrangement(const std::vector<ReflectionDatum>& data) {
    std::vector<MultiPoly> alphas;
    for (const auto& d : data) {
        if (std::size_t(d.hyperplane) >= alphas.size()) alphas.resize(d.hyperplane + 1, MultiPoly(0));
        alphas[d.hyperplane] = d.alpha;
    }
    return alphas;
}

std::vector<std::vector<int>> conjugacy_classes(const Group& G,
                                                const std::vector<ReflectionDatum>& data) {
    // A reflection fixes exactly one hyperplane, so the datum is determined
    // by the group element.
    std::vector<int> datum_of(G.size(), -1);
    for (std::size_t i = 0; i < data.size(); ++i) datum_of[data[i].g] = int(i);

    std::vector<int> cls(data.size(), -1);
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (cls[i] >= 0) continue;
        int id = int(classes.size());
        std::vector<int> orbit;
        // Full conjugation sweep from the representative.
        for (int h = 0; h < int(G.size()); ++h) {
            int conj = G.mult(G.mult(G.inverse(h), data[i].g), h);
            int j = datum_of[conj];
            if (j < 0) throw Error("conjugate of a reflection is not a reflection");
            if (cls[j] < 0) {
                cls[j] = id;
                orbit.push_back(j);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(orbit);
    }
    return classes;
}

Scalar ReflectionFunction::value(const std::vector<std::vector<int>>& classes,
                                 int datum_index) const {
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (int i : classes[k])
            if (i == datum_index) return by_class.at(k);
    throw Error("datum index not covered by the class partition");
}

} // namespace cherednik
