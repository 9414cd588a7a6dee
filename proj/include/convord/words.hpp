#pragma once

#include "convord/biconvex.hpp"

namespace convord {

/// Eventually periodic infinite word over the generators S_J of a subsystem.
/// The stored period is normalized so that its product is a translation; the
/// letter sequence itself is unchanged by the normalization.
struct InfiniteWord {
    Subsystem sub;
    std::vector<int> prefix;  // indices into sub.gens
    std::vector<int> period;  // nonempty; product is t_lambda
    AffineWeylElement z_prefix;
    AffineWeylElement z_prefix_inv;
    AffineWeylElement t_period;
    AffineWeylElement t_period_inv;
    RatVec lambda;
    Int declared_period_len = 0;  // period length before normalization
    Int certified_depth = 0;

    int letter(Int p) const {  // 1-based position
        Int a = Int(prefix.size());
        if (p <= a) return prefix[size_t(p - 1)];
        return period[size_t((p - a - 1) % Int(period.size()))];
    }
};

/// Builds and certifies a word; throws if the sequence is not reduced up to
/// the certification depth |prefix| + 2|period|.
InfiniteWord make_word(const Subsystem& sub, std::vector<int> prefix, std::vector<int> period);

/// z_s(p) and phi_s(p) = z_s(p-1)(alpha_{s(p)}).
std::pair<AffineWeylElement, Root> word_prefix_products(const InfiniteWord& w, Int p);

/// Re-checks positivity and distinctness of the phi values up to depth and the
/// length of the certification prefix; returns the word with certified_depth
/// updated. Throws naming the failing position.
InfiniteWord validate_word(InfiniteWord w, Int depth);

/// Exact membership of beta in the union of the inversion sets of the prefixes.
bool phi_infty_membership(const InfiniteWord& w, const Root& beta);

/// The unique p with phi_s(p) = beta; throws for non-members.
Int word_index(const InfiniteWord& w, const Root& beta);

/// Canonical periodic word: empty prefix, period a reduced word of a
/// translation pairing positively with J \ K and trivially with K.
InfiniteWord build_Z(const Subsystem& sub, const std::vector<int>& K);

/// Left action of x on the word class (Steps 1-3): prefix replacement by a
/// reduced expression of x z_s(p0), with the shifted periodic tail.
InfiniteWord act_on_word(const AffineWeylElement& x, const InfiniteWord& w);

/// The unique (K, u, y) with the same infinite inversion set as the word.
BiconvexParam canonical_param(const InfiniteWord& w);

}  // namespace convord
