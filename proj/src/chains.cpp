#include "convord/chains.hpp"

#include <algorithm>
#include <map>

namespace convord {

namespace {

bool subset_of(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Phi_K(y) inside Delta_K(w_K,-): every member's finite part lies in
// w_K(Delta_K-negatives).
bool phi_below(const CartanData& c, const std::vector<int>& K, const FiniteWeylElement& wK,
               const AffineWeylElement& y) {
    if (K.empty()) return y == affine_identity(c);
    auto sub = build_subsystem(c, K);
    if (!in_subsystem(sub, y)) return false;
    auto allowed = shifted_complement(c, K, {}, wK, -1);
    for (const auto& beta : phi_J(sub, y))
        if (!std::binary_search(allowed.begin(), allowed.end(), FiniteRoot{beta.finite}))
            return false;
    return true;
}

}  // namespace

bool check_Q(const CartanData& c, const std::vector<int>& J, const FiniteWeylElement& w,
             const std::vector<int>& K, const std::vector<int>& L, const AffineWeylElement& y,
             const AffineWeylElement& z) {
    if (!subset_of(L, K) || !subset_of(K, J)) return false;
    auto [wK, wKpart] = decompose_coset(c, J, K, w);
    auto [wL, wLpart] = decompose_coset(c, J, L, w);
    if (!phi_below(c, K, wKpart, y) || !phi_below(c, L, wLpart, z)) return false;

    // Q(ii): w^K Phi_K(y) intersected with w^L Delta_{L+} sits inside w^L Phi_L(z).
    if (K.empty()) return true;
    auto subK = build_subsystem(c, K);
    std::set<Root> phiL;
    if (!L.empty()) {
        auto subL = build_subsystem(c, L);
        for (const auto& r : phi_J(subL, z)) phiL.insert(r);
    }
    std::set<FiniteRoot> deltaL;
    if (!L.empty()) {
        auto subL = subsystem_roots(c, L);
        deltaL.insert(subL.roots.begin(), subL.roots.end());
    }
    auto wLinv = affine_of(FiniteWeylElement{inverse(wL.mat)});
    for (const auto& beta : phi_J(subK, y)) {
        Root img = act(c, affine_of(wK), beta);
        Root pre = act(c, wLinv, img);
        if (!deltaL.count(FiniteRoot{pre.finite}) || !is_positive(c, pre)) continue;
        if (!phiL.count(pre)) return false;
    }
    return true;
}

BiconvexParam chain_level_param(const CartanData& c, const ChainParam& chain, int i) {
    if (i < 1 || i > chain.rows()) throw std::invalid_argument("chain_level_param: bad level");
    const auto& Ki = chain.K_chain[size_t(i)];
    auto wKi = decompose_coset(c, chain.J, Ki, chain.w).first;
    return {chain.J, Ki, wKi, chain.y_chain[size_t(i - 1)]};
}

std::pair<std::vector<int>, AffineWeylElement> extend_chain(
    const CartanData& c, const std::vector<int>& J, const FiniteWeylElement& w,
    const std::vector<int>& K, const AffineWeylElement& y, const std::vector<int>& L,
    const AffineWeylElement& g) {
    if (!subset_of(L, K) || !subset_of(K, J))
        throw std::invalid_argument("extend_chain: need L <= K <= J");
    auto [wK, wKpart] = decompose_coset(c, J, K, w);
    if (!phi_below(c, K, wKpart, y))
        throw std::invalid_argument("extend_chain: (K, y) not admissible under w");

    // v = ybar^{-1} w_K inside the finite group of K.
    FiniteWeylElement ybar{y.fin};
    FiniteWeylElement v{inverse(ybar.mat) * wKpart.mat};
    auto [vL, vLpart] = decompose_coset(c, K, L, v);
    if (!phi_below(c, L, vLpart, g))
        throw std::invalid_argument("extend_chain: choice (L, g) not admissible under v");

    AffineWeylElement x = mul(y, mul(affine_of(vL), g));
    if (L.empty()) return {L, affine_identity(c)};

    FiniteWeylElement xbar{x.fin};
    auto xL = decompose_coset(c, K, L, xbar).first;
    AffineWeylElement h = mul(affine_of(FiniteWeylElement{inverse(xL.mat)}), x);

    auto subK = build_subsystem(c, K);
    auto subL = build_subsystem(c, L);
    std::vector<Root> S;
    for (const auto& beta : phi_J(subK, h))
        if (subL.in_delta_J(beta.finite)) S.push_back(beta);
    return {L, recover_from_phi(subL, S)};
}

void validate_chain(const CartanData& c, const ChainParam& chain) {
    const int n = chain.rows();
    if (n < 1) throw std::invalid_argument("validate_chain: empty chain");
    if (int(chain.K_chain.size()) != n + 1) throw std::invalid_argument("validate_chain: K/y shape");
    if (chain.K_chain.front() != chain.J || !chain.K_chain.back().empty())
        throw std::invalid_argument("validate_chain: K_0 must be J and K_n empty");
    if (!in_finite_weyl(c, chain.J, chain.w))
        throw std::invalid_argument("validate_chain: w not in W_J");
    for (int i = 1; i <= n; ++i) {
        const auto& prev = chain.K_chain[size_t(i - 1)];
        const auto& cur = chain.K_chain[size_t(i)];
        if (!subset_of(cur, prev) || cur.size() == prev.size())
            throw std::invalid_argument("validate_chain: K_chain not strictly decreasing");
        const AffineWeylElement y_prev =
            i == 1 ? affine_identity(c) : chain.y_chain[size_t(i - 2)];
        if (!check_Q(c, chain.J, chain.w, prev, cur, y_prev, chain.y_chain[size_t(i - 1)]))
            throw std::invalid_argument("validate_chain: quadruple " + std::to_string(i) +
                                        " fails Q");
    }
}

std::vector<std::set<Root>> chain_sets(const CartanData& c, const ChainParam& chain, Window w) {
    validate_chain(c, chain);
    std::vector<std::set<Root>> out;
    for (int i = 1; i <= chain.rows(); ++i)
        out.push_back(NablaSet(c, chain_level_param(c, chain, i)).enumerate(w));
    return out;
}

BiconvexParam extract_B(const CartanData& c, const ChainParam& chain, int i) {
    if (i < 1 || i > chain.rows()) throw std::invalid_argument("extract_B: bad level");
    const auto& K = chain.K_chain[size_t(i - 1)];
    auto wK = decompose_coset(c, chain.J, K, chain.w).first;
    const AffineWeylElement y_prev = i == 1 ? affine_identity(c) : chain.y_chain[size_t(i - 2)];
    AffineWeylElement xhat = mul(affine_of(wK), y_prev);
    AffineWeylElement xinv = inverse_element(c, xhat);

    NablaSet Ci(c, chain_level_param(c, chain, i));
    std::optional<NablaSet> Cprev;
    if (i >= 2) Cprev.emplace(c, chain_level_param(c, chain, i - 1));

    const auto& Pi = Ci.eventual_finite_parts();
    std::vector<FiniteRoot> Pprev;
    if (Cprev) Pprev = Cprev->eventual_finite_parts();

    auto eventual = [&](const FiniteRoot& eps) {
        FiniteRoot img{xhat.fin * eps.coords};
        return std::binary_search(Pi.begin(), Pi.end(), img) &&
               !std::binary_search(Pprev.begin(), Pprev.end(), img);
    };
    std::set<Root> residue;
    for (const auto& rho : Ci.residue()) {
        if (Cprev && Cprev->contains(rho)) continue;
        Root beta = act(c, xinv, rho);
        if (!is_positive(c, beta))
            throw std::invalid_argument("extract_B: residue preimage not positive at level " +
                                        std::to_string(i));
        residue.insert(beta);
    }
    auto param = parameterize_biconvex(c, K, eventual, residue);

    // The recovered set must reproduce the gap C_i \ C_{i-1} on a window.
    NablaSet got(c, param);
    Window probe{std::max(got.residue_max_level(), Ci.residue_max_level()) + 2};
    for (const auto& beta : positive_window(c, K, probe, false)) {
        Root img = act(c, xhat, beta);
        bool in_gap = Ci.contains(img) && !(Cprev && Cprev->contains(img));
        if (got.contains(beta) != in_gap)
            throw std::invalid_argument("extract_B: gap mismatch at level " + std::to_string(i));
    }
    return param;
}

void validate_rows(const CartanData& c, const RowParam& rows) {
    validate_chain(c, rows.chain);
    const int n = rows.chain.rows();
    if (int(rows.words.size()) != n) throw std::invalid_argument("validate_rows: need one word per row");
    for (int i = 1; i <= n; ++i) {
        const auto& word = rows.words[size_t(i - 1)];
        if (word.sub.J != rows.chain.K_chain[size_t(i - 1)])
            throw std::invalid_argument("validate_rows: word " + std::to_string(i - 1) +
                                        " lives over the wrong subsystem");
        auto fromword = canonical_param(word);
        auto fromchain = extract_B(c, rows.chain, i);
        if (!(fromword.K == fromchain.K && fromword.u == fromchain.u && fromword.y == fromchain.y))
            throw std::invalid_argument("validate_rows: word/chain mismatch at level " +
                                        std::to_string(i));
    }
}

std::vector<std::set<Root>> row_sets(const CartanData& c, const RowParam& rows, Window w) {
    validate_rows(c, rows);
    auto sets = chain_sets(c, rows.chain, w);
    std::vector<std::set<Root>> out(sets.size());
    for (size_t i = 0; i < sets.size(); ++i) {
        out[i] = sets[i];
        if (i > 0)
            for (const auto& r : sets[i - 1]) out[i].erase(r);
    }
    // Cross-check each row against its word through the level transform.
    for (size_t i = 0; i < out.size(); ++i) {
        const auto& K = rows.chain.K_chain[i];
        auto wK = decompose_coset(c, rows.chain.J, K, rows.chain.w).first;
        const AffineWeylElement y_prev =
            i == 0 ? affine_identity(c) : rows.chain.y_chain[i - 1];
        AffineWeylElement xinv = inverse_element(c, mul(affine_of(wK), y_prev));
        for (const auto& beta : sets.back()) {
            bool in_row = out[i].count(beta) > 0;
            Root pre = act(c, xinv, beta);
            bool by_word = is_positive(c, pre) && phi_infty_membership(rows.words[i], pre);
            if (in_row != by_word)
                throw std::invalid_argument("row_sets: row/word disagreement at level " +
                                            std::to_string(i + 1));
        }
    }
    return out;
}

std::vector<AffineWeylElement> subsystem_length_ball(const CartanData& c,
                                                     const std::vector<int>& K, Int bound) {
    if (K.empty()) return {affine_identity(c)};
    auto sub = build_subsystem(c, K);
    std::map<AffineWeylElement, std::vector<int>> words;
    words[affine_identity(c)] = {};
    std::vector<AffineWeylElement> frontier{affine_identity(c)};
    for (Int d = 0; d < bound; ++d) {
        std::vector<AffineWeylElement> next;
        for (const auto& x : frontier) {
            const auto& wx = words[x];
            for (int k = 0; k < sub.num_generators(); ++k) {
                auto y = mul(x, sub.gens[size_t(k)]);
                if (words.count(y)) continue;
                auto wy = wx;
                wy.push_back(k);
                words.emplace(y, std::move(wy));
                next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::pair<std::pair<size_t, std::vector<int>>, AffineWeylElement>> keyed;
    for (auto& [y, wd] : words) keyed.push_back({{wd.size(), wd}, y});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<AffineWeylElement> out;
    for (auto& [k, y] : keyed) out.push_back(y);
    return out;
}

namespace {

void decreasing_chains(const std::vector<int>& from, std::vector<std::vector<int>> acc,
                       std::vector<std::vector<std::vector<int>>>* out) {
    if (from.empty()) {
        out->push_back(std::move(acc));
        return;
    }
    // Iterate proper subsets of `from` in a canonical order (bitmask ascending).
    const size_t n = from.size();
    for (size_t mask = 0; mask + 1 < (size_t(1) << n); ++mask) {
        std::vector<int> next;
        for (size_t b = 0; b < n; ++b)
            if (mask & (size_t(1) << b)) next.push_back(from[b]);
        auto acc2 = acc;
        acc2.push_back(next);
        decreasing_chains(next, std::move(acc2), out);
    }
}

}  // namespace

std::vector<ChainParam> enumerate_chains(const CartanData& c, const std::vector<int>& J,
                                         const FiniteWeylElement& w, Int length_bound) {
    std::vector<std::vector<std::vector<int>>> kchains;
    decreasing_chains(J, {J}, &kchains);

    std::vector<ChainParam> out;
    for (const auto& kc : kchains) {
        const int n = int(kc.size()) - 1;
        std::vector<std::vector<AffineWeylElement>> balls;
        for (int i = 1; i <= n; ++i) balls.push_back(subsystem_length_ball(c, kc[size_t(i)], length_bound));
        std::vector<size_t> idx(size_t(n), 0);
        for (;;) {
            ChainParam chain{J, w, kc, {}};
            for (int i = 0; i < n; ++i) chain.y_chain.push_back(balls[size_t(i)][idx[size_t(i)]]);
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i) {
                const AffineWeylElement y_prev =
                    i == 1 ? affine_identity(c) : chain.y_chain[size_t(i - 2)];
                ok = check_Q(c, J, w, kc[size_t(i - 1)], kc[size_t(i)], y_prev,
                             chain.y_chain[size_t(i - 1)]);
            }
            if (ok) out.push_back(std::move(chain));
            int pos = n - 1;
            while (pos >= 0 && ++idx[size_t(pos)] == balls[size_t(pos)].size()) {
                idx[size_t(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    // Within one K_chain the generation order is already by (length, word) of
    // the y_i; the stable sort groups by row count and K_chain masks.
    std::stable_sort(out.begin(), out.end(), [&](const ChainParam& a, const ChainParam& b) {
        if (a.rows() != b.rows()) return a.rows() < b.rows();
        auto mask = [](const std::vector<std::vector<int>>& ks) {
            std::vector<unsigned> m;
            for (const auto& k : ks) {
                unsigned x = 0;
                for (int j : k) x |= 1u << j;
                m.push_back(x);
            }
            return m;
        };
        return mask(a.K_chain) < mask(b.K_chain);
    });
    return out;
}

}  // namespace convord
