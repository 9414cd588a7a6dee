#pragma once

#include <vector>

#include "convord/cartan.hpp"

namespace convord {

/// An element m*delta + epsilon of the affine root lattice slice we work in.
/// Not required to be a root or to be positive; those are predicates.
struct Root {
    Int level = 0;
    IntVec finite;

    bool operator==(const Root& o) const { return level == o.level && finite == o.finite; }
    bool operator<(const Root& o) const {
        if (level != o.level) return level < o.level;
        return finite < o.finite;
    }
};

inline Root operator+(const Root& x, const Root& y) {
    return {x.level + y.level, x.finite + y.finite};
}

inline Root operator-(const Root& x) { return {-x.level, -x.finite}; }

/// Affine Weyl group element x = t_tau * w, stored by its translation part
/// (in simple-root coordinates, a point of the lattice M) and finite part.
struct AffineWeylElement {
    RatVec tau;
    IntMat fin;

    bool operator==(const AffineWeylElement& o) const { return tau == o.tau && fin == o.fin; }
    bool operator<(const AffineWeylElement& o) const {
        if (fin.a != o.fin.a) return fin.a < o.fin.a;
        return tau < o.tau;
    }
};

struct ReducedWord {
    std::vector<int> letters;  // indices into I = {0, ..., l}
};

bool is_real_root(const CartanData& c, const Root& r);
bool is_imaginary_root(const CartanData& c, const Root& r);
bool is_root(const CartanData& c, const Root& r);
/// Positive as an element of the affine root system (input must be a root).
bool is_positive(const CartanData& c, const Root& r);
Int height(const CartanData& c, const Root& r);

Root alpha(const CartanData& c, int i);  // alpha_i as a Root, i in 0..l
Root delta_root(const CartanData& c);
Root finite_as_root(const FiniteRoot& r);

AffineWeylElement affine_identity(const CartanData& c);
AffineWeylElement affine_of(const FiniteWeylElement& w);
/// t_lambda for lambda given in simple-root coordinates; validated against M.
AffineWeylElement translation(const CartanData& c, const RatVec& lambda);
AffineWeylElement simple_reflection(const CartanData& c, int i);  // i in 0..l
/// Reflection in an arbitrary positive real root.
AffineWeylElement reflection(const CartanData& c, const Root& r);

AffineWeylElement mul(const AffineWeylElement& x, const AffineWeylElement& y);
AffineWeylElement inverse_element(const CartanData& c, const AffineWeylElement& x);

Root act(const CartanData& c, const AffineWeylElement& x, const Root& beta);
Root act(const CartanData& c, const FiniteWeylElement& w, const Root& beta);

/// Checks tau against the coroot lattice M; throws otherwise.
void validate_lattice(const CartanData& c, const RatVec& tau);

Int length(const CartanData& c, const AffineWeylElement& x);
ReducedWord reduced_word(const CartanData& c, const AffineWeylElement& x);
AffineWeylElement product_of_word(const CartanData& c, const ReducedWord& w);
/// Inversion set via partial products of the deterministic reduced word,
/// listed in word order.
std::vector<Root> inversion_set(const CartanData& c, const AffineWeylElement& x);

}  // namespace convord
