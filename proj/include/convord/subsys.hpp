#pragma once

#include <map>
#include <string>
#include <vector>

#include "convord/affine.hpp"

namespace convord {

/// Coxeter subsystem (W_J, S_J) attached to a subset J of the finite index set.
/// Generators are the finite simple reflections s_j (j in J, ascending) followed
/// by one reflection s_{delta - theta_c} per irreducible component of J.
struct Subsystem {
    CartanData cartan;
    std::vector<int> J;                        // sorted, 1-based
    std::vector<std::vector<int>> components;  // irreducible components of J
    std::vector<FiniteRoot> theta_c;           // highest root per component
    std::vector<FiniteRoot> delta_J;           // finite roots supported on J
    std::vector<Root> pi;                      // Pi_J, aligned with gens
    std::vector<AffineWeylElement> gens;       // S_J, aligned with pi
    std::vector<std::string> gen_ids;          // "s(m;c1,...,cl)" per generator

    int num_generators() const { return int(gens.size()); }
    bool in_delta_J(const IntVec& coords) const;
};

Subsystem build_subsystem(const CartanData& c, std::vector<int> J);

/// Canonical generator id from the generator's root.
std::string generator_id(const Root& r);

bool in_subsystem(const Subsystem& s, const AffineWeylElement& y);

/// Length in (W_J, S_J); throws "element not in subsystem" for non-members.
Int subsystem_length(const Subsystem& s, const AffineWeylElement& y);

/// Deterministic reduced word over S_J (letters index into s.gens).
std::vector<int> subsystem_reduced_word(const Subsystem& s, const AffineWeylElement& y);

AffineWeylElement subsystem_product(const Subsystem& s, const std::vector<int>& letters);

/// Inversion set Phi_J(y), listed in partial-product order.
std::vector<Root> phi_J(const Subsystem& s, const AffineWeylElement& y);

/// Unique y in W_J with Phi_J(y) equal to the given set; throws otherwise.
AffineWeylElement recover_from_phi(const Subsystem& s, const std::vector<Root>& phi);

/// Element of M_J pairing to zero with alpha_k (k in K) and strictly positively
/// with alpha_j (j in J \ K). Targets default to 1 and may be overridden.
RatVec lattice_element(const Subsystem& s, const std::vector<int>& K,
                       const std::map<int, Int>& targets = {});

}  // namespace convord
