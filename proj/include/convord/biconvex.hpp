#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "convord/subsys.hpp"

namespace convord {

/// Truncation: keep roots of level at most max_level.
struct Window {
    Int max_level = 1;
};

/// Parameter triple (K, u, y) for the biconvex set Delta^K_J(u,-) + u Phi_K(y),
/// with u a minimal coset representative and y in the subsystem group of K.
struct BiconvexParam {
    std::vector<int> J;
    std::vector<int> K;
    FiniteWeylElement u;
    AffineWeylElement y;
};

/// Levelwise slice <P> of a set of finite roots, truncated to the window.
std::set<Root> slice(const CartanData& c, const std::vector<FiniteRoot>& P, Window w);

/// Finite roots w(Delta_J \ Delta_K) restricted to one sign.
std::vector<FiniteRoot> shifted_complement(const CartanData& c, const std::vector<int>& J,
                                           const std::vector<int>& K, const FiniteWeylElement& w,
                                           int sign);

/// Truncated Delta^K_J(w, sign) with sign = -1 or +1.
std::set<Root> delta_K_J(const CartanData& c, const std::vector<int>& J, const std::vector<int>& K,
                         const FiniteWeylElement& w, int sign, Window win);

/// Exact membership and truncated enumeration for a parameterized set.
class NablaSet {
  public:
    NablaSet(const CartanData& c, BiconvexParam param);

    bool contains(const Root& beta) const;
    std::set<Root> enumerate(Window w) const;
    /// Largest level appearing in the finite part u Phi_K(y).
    Int residue_max_level() const;
    const BiconvexParam& param() const { return param_; }
    const std::vector<FiniteRoot>& eventual_finite_parts() const { return pbar_; }
    const std::set<Root>& residue() const { return residue_; }

  private:
    CartanData cartan_;
    BiconvexParam param_;
    std::vector<FiniteRoot> pbar_;  // u(Delta_J \ Delta_K)_-, sorted
    std::set<Root> residue_;        // u Phi_K(y)
};

bool nabla_membership(const CartanData& c, const BiconvexParam& p, const Root& beta);
std::set<Root> nabla_enumerate(const CartanData& c, const BiconvexParam& p, Window w);

enum class NablaCmp { DotEqual, DotSubset, DotSuperset, Incomparable };

/// Decides almost-containment purely from the parameters.
NablaCmp nabla_compare(const CartanData& c, const BiconvexParam& p1, const BiconvexParam& p2);

struct BiconvexReport {
    bool ok = true;
    std::string condition;  // "C(i)" or "C(ii)" when failed
    Root beta, gamma, sum;
    Int window = 0;
    size_t checked = 0;
    size_t skipped = 0;  // pairs whose sum leaves the window
};

/// Checks convexity and coconvexity of B inside the listed ambient window.
BiconvexReport check_biconvex(const std::set<Root>& B, const std::vector<Root>& ambient_window,
                              const CartanData& c, Window w);

/// Truncated maximal biconvex set Delta_J(w,-).
std::set<Root> maximal_biconvex(const CartanData& c, const std::vector<int>& J,
                                const FiniteWeylElement& w, Window win);

/// Positive roots of Delta_{J+} with level at most the window bound.
std::vector<Root> positive_window(const CartanData& c, const std::vector<int>& J, Window w,
                                  bool include_imaginary);

/// Recovers the unique (K, u, y) whose parameterized set has the given slice
/// behaviour: `eventual` answers, for a finite root eps of the J-subsystem,
/// whether the whole slice <eps> eventually belongs to the set, and `residue`
/// lists the finitely many members outside those slices. Throws if the data
/// is not of that shape.
BiconvexParam parameterize_biconvex(const CartanData& c, const std::vector<int>& J,
                                    const std::function<bool(const FiniteRoot&)>& eventual,
                                    const std::set<Root>& residue);

}  // namespace convord
