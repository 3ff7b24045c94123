#pragma once

#include <vector>

#include "cherednik/matrix.hpp"
#include "cherednik/poly.hpp"

namespace cherednik {

/// Finite matrix group acting on affine r-space. The action on functions is
/// (g . f)(x) = f(M_g x); the multiplication table is arranged so that this
/// is a left action, i.e. M_{g*h} = M_h * M_g.
class Group {
public:
    static constexpr std::size_t kDefaultBound = 20000;

    static Group closure(const std::vector<Matrix>& generators,
                         std::size_t bound = kDefaultBound);

    // Built-in families.
    static Group cyclic(unsigned m);            // Z/m on K^1, over Q(zeta_m)
    static Group symmetric(unsigned n);         // S_n permuting coordinates of K^n
    static Group dihedral(unsigned m);          // I_2(m); crystallographic over Q for m in {2,3,4,6}, else over Q(zeta_m)
    static Group hyperoctahedral(unsigned n);   // B_n, signed permutations of K^n

    std::size_t size() const { return elems_.size(); }
    unsigned rank() const { return rank_; }
    const Matrix& matrix(int g) const { return elems_[g]; }
    int identity() const { return 0; }
    int mult(int g, int h) const { return mult_[g][h]; }
    int inverse(int g) const { return inv_[g]; }
    int find(const Matrix& m) const; // -1 if absent

    /// Left action on polynomials: (g . f)(x) = f(M_g x).
    MultiPoly act_on_poly(int g, const MultiPoly& f) const;
    /// Induced action on constant vector fields: v -> M_g^{-1} v.
    std::vector<Scalar> act_on_field(int g, const std::vector<Scalar>& v) const;

private:
    unsigned rank_ = 0;
    std::vector<Matrix> elems_;             // elems_[0] = identity
    std::vector<std::vector<int>> mult_;    // mult_[g][h] = label of g*h
    std::vector<int> inv_;
    std::vector<Matrix> inverses_;          // cached M_g^{-1}
};

/// A pseudo-reflection with its hyperplane form and conormal eigenvalue.
struct ReflectionDatum {
    int g;             // group label, rank(M_g - I) = 1
    MultiPoly alpha;   // linear form cutting out the fixed hyperplane,
                       // first nonzero coordinate normalized to 1
    Scalar lambda;     // g . alpha = lambda . alpha; root of unity != 1
    int hyperplane;    // index into the arrangement (distinct alphas)
};

/// All reflection data of the group; hyperplane indices refer to the list of
/// distinct normalized alphas returned by reflection_arrangement.
std::vector<ReflectionDatum> enumerate_reflections(const Group& G);

/// Distinct normalized hyperplane forms, in order of first appearance.
std::vector<MultiPoly> reflection_arrangement(const std::vector<ReflectionDatum>& data);

/// Partition of reflection data into conjugation orbits
/// (Y, g) -> (h(Y), h^-1 g h). Each class lists datum indices, smallest first;
/// classes ordered by their representative.
std::vector<std::vector<int>> conjugacy_classes(const Group& G,
                                                const std::vector<ReflectionDatum>& data);

/// G-conjugation-invariant deformation parameter: one value per class.
struct ReflectionFunction {
    std::vector<Scalar> by_class;

    Scalar value(const std::vector<std::vector<int>>& classes, int datum_index) const;
};

} // namespace cherednik
