#pragma once

#include "convord/words.hpp"

namespace convord {

/// Chain of nested parameterized sets inside Delta_J(w,-): subsets
/// J = K_0 > K_1 > ... > K_n = empty with y_i in the K_i-subsystem group.
struct ChainParam {
    std::vector<int> J;
    FiniteWeylElement w;
    std::vector<std::vector<int>> K_chain;  // K_0 .. K_n
    std::vector<AffineWeylElement> y_chain; // y_1 .. y_n

    int rows() const { return int(y_chain.size()); }
};

/// A chain together with one infinite word per level, ordering each row.
struct RowParam {
    ChainParam chain;
    std::vector<InfiniteWord> words;  // s_0 .. s_{n-1}, word i over K_i
};

/// Compatibility test for a quadruple (K, L, y, z): both triples lie below
/// Delta_J(w,-) and the finite parts nest.
bool check_Q(const CartanData& c, const std::vector<int>& J, const FiniteWeylElement& w,
             const std::vector<int>& K, const std::vector<int>& L, const AffineWeylElement& y,
             const AffineWeylElement& z);

/// The parameter of the i-th chain set (K_i, w^{K_i}, y_i).
BiconvexParam chain_level_param(const CartanData& c, const ChainParam& chain, int i);

/// One recursion step: from (K, y) and an admissible choice (L, g) below
/// v = ybar^{-1} w_K, produce the next level (L, z_x). Throws when the choice
/// violates the admissibility conditions.
std::pair<std::vector<int>, AffineWeylElement> extend_chain(
    const CartanData& c, const std::vector<int>& J, const FiniteWeylElement& w,
    const std::vector<int>& K, const AffineWeylElement& y, const std::vector<int>& L,
    const AffineWeylElement& g);

/// Validates the chain invariants (nesting via check_Q, shapes); throws on failure.
void validate_chain(const CartanData& c, const ChainParam& chain);

/// Truncated chain sets C_1 <= ... <= C_n.
std::vector<std::set<Root>> chain_sets(const CartanData& c, const ChainParam& chain, Window w);

/// Parameter of the set B_{i-1} over K_{i-1} solving
/// C_i = C_{i-1} + w^{K_{i-1}} y_{i-1} B_{i-1}, for i in 1..n.
BiconvexParam extract_B(const CartanData& c, const ChainParam& chain, int i);

/// Validates the words against the chain (each word's canonical parameter must
/// match extract_B at its level); throws naming the offending level.
void validate_rows(const CartanData& c, const RowParam& rows);

/// Truncated rows R_i = C_i \ C_{i-1}; checks the row/word compatibility.
std::vector<std::set<Root>> row_sets(const CartanData& c, const RowParam& rows, Window w);

/// All chains over (J, w) with every subsystem length l_{K_i}(y_i) bounded,
/// in a canonical deterministic order.
std::vector<ChainParam> enumerate_chains(const CartanData& c, const std::vector<int>& J,
                                         const FiniteWeylElement& w, Int length_bound);

/// Elements of the K-subsystem group with subsystem length at most the bound,
/// sorted canonically (identity for K empty).
std::vector<AffineWeylElement> subsystem_length_ball(const CartanData& c,
                                                     const std::vector<int>& K, Int bound);

}  // namespace convord
