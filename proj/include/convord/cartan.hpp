#pragma once

#include <string>
#include <utility>
#include <vector>

#include "convord/linalg.hpp"

namespace convord {

/// A root of the finite system, as integer coefficients over the simple basis.
struct FiniteRoot {
    IntVec coords;

    bool operator==(const FiniteRoot& o) const { return coords == o.coords; }
    bool operator<(const FiniteRoot& o) const { return coords < o.coords; }
};

/// Element of the finite Weyl group acting on simple-root coordinates.
struct FiniteWeylElement {
    IntMat mat;

    bool operator==(const FiniteWeylElement& o) const { return mat == o.mat; }
    bool operator<(const FiniteWeylElement& o) const { return mat < o.mat; }
};

inline FiniteWeylElement operator*(const FiniteWeylElement& x, const FiniteWeylElement& y) {
    return {x.mat * y.mat};
}

/// Cartan data for a finite type X_l, plus the standard affine labels of X_l^(1).
/// The bilinear form is normalized so the highest root theta has (theta|theta) = 2.
struct CartanData {
    char type_label = 'A';
    int rank = 0;
    IntMat cartan;                   // a_ij = 2(alpha_i|alpha_j)/(alpha_i|alpha_i)
    std::vector<Int> labels;         // a_0, a_1, ..., a_l with a_0 = 1
    std::vector<RatVec> gram;        // (alpha_i|alpha_j)
    std::vector<FiniteRoot> roots;   // all of the finite root system, sorted
    FiniteRoot theta;                // highest root

    Rat pair(const IntVec& u, const IntVec& v) const;
    Rat pair(const IntVec& u, const RatVec& v) const;
    bool is_finite_root(const IntVec& c) const;
    /// Coordinates of the coroot 2*alpha_j/(alpha_j|alpha_j), j in 1..l.
    RatVec coroot(int j) const;
};

/// Sign of a finite root: +1 for positive, -1 for negative.
int finite_root_sign(const FiniteRoot& r);

CartanData build_cartan(char type_label, int rank);

std::vector<FiniteRoot> enumerate_finite_roots(const CartanData& c);

struct SubsystemRoots {
    std::vector<FiniteRoot> roots;            // the parabolic subsystem, sorted
    std::vector<std::vector<int>> components; // irreducible components of J (1-based indices)
    std::vector<FiniteRoot> theta;            // highest root per component
};

/// Roots supported on J together with the irreducible decomposition.
SubsystemRoots subsystem_roots(const CartanData& c, const std::vector<int>& J);

FiniteWeylElement finite_identity(const CartanData& c);
FiniteWeylElement simple_reflection_matrix(const CartanData& c, int j);
/// Reflection in an arbitrary root of the finite system.
FiniteWeylElement reflection_matrix(const CartanData& c, const FiniteRoot& r);

IntVec act(const FiniteWeylElement& w, const IntVec& v);

/// Full enumeration of the parabolic Weyl group generated by {s_j : j in J}.
std::vector<FiniteWeylElement> enumerate_finite_weyl(const CartanData& c, const std::vector<int>& J);

bool in_finite_weyl(const CartanData& c, const std::vector<int>& J, const FiniteWeylElement& w);

/// Length inside the parabolic subgroup; throws if w is not a member.
Int finite_length(const CartanData& c, const std::vector<int>& J, const FiniteWeylElement& w);

/// Deterministic reduced word (smallest available descent first); product equals w.
std::vector<int> finite_reduced_word(const CartanData& c, const std::vector<int>& J,
                                     const FiniteWeylElement& w);

/// Inversion set of w inside the parabolic subsystem.
std::vector<FiniteRoot> finite_inversions(const CartanData& c, const std::vector<int>& J,
                                          const FiniteWeylElement& w);

/// Unique element with the given inversion set; throws if the set is not one.
FiniteWeylElement recover_from_finite_inversions(const CartanData& c, const std::vector<int>& J,
                                                 std::vector<FiniteRoot> inv);

/// Minimal right-coset representatives {w in W_J : w(alpha_k) > 0 for all k in K}.
std::vector<FiniteWeylElement> minimal_coset_reps(const CartanData& c, const std::vector<int>& J,
                                                  const std::vector<int>& K);

/// Unique factorization w = w^K * w_K with w^K minimal in w W_K.
std::pair<FiniteWeylElement, FiniteWeylElement> decompose_coset(const CartanData& c,
                                                                const std::vector<int>& J,
                                                                const std::vector<int>& K,
                                                                const FiniteWeylElement& w);

/// Longest element of the parabolic W_J.
FiniteWeylElement longest_element(const CartanData& c, const std::vector<int>& J);

std::vector<int> full_index_set(const CartanData& c);  // {1, ..., l}

}  // namespace convord
