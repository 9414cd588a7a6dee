#include "convord/words.hpp"

#include <algorithm>

namespace convord {

namespace {

AffineWeylElement product_of(const Subsystem& s, const std::vector<int>& letters) {
    AffineWeylElement x = affine_identity(s.cartan);
    for (int k : letters) x = mul(x, s.gens.at(size_t(k)));
    return x;
}

}  // namespace

InfiniteWord make_word(const Subsystem& sub, std::vector<int> prefix, std::vector<int> period) {
    if (period.empty()) throw std::invalid_argument("make_word: empty period");
    for (int k : prefix)
        if (k < 0 || k >= sub.num_generators()) throw std::invalid_argument("make_word: bad letter");
    for (int k : period)
        if (k < 0 || k >= sub.num_generators()) throw std::invalid_argument("make_word: bad letter");

    InfiniteWord w;
    w.sub = sub;
    w.prefix = std::move(prefix);
    w.declared_period_len = Int(period.size());
    // Raise the period to the smallest power whose product is a translation.
    AffineWeylElement pi = product_of(sub, period);
    AffineWeylElement pw = pi;
    std::vector<int> full = period;
    const IntMat id = IntMat::id(sub.cartan.rank);
    int guard = 0;
    while (!(pw.fin == id)) {
        pw = mul(pw, pi);
        full.insert(full.end(), period.begin(), period.end());
        if (++guard > 4096) throw std::runtime_error("make_word: period does not close up");
    }
    w.period = std::move(full);
    w.t_period = pw;
    w.t_period_inv = inverse_element(sub.cartan, pw);
    w.lambda = pw.tau;
    validate_lattice(sub.cartan, w.lambda);
    w.z_prefix = product_of(sub, w.prefix);
    w.z_prefix_inv = inverse_element(sub.cartan, w.z_prefix);
    const Int depth = Int(w.prefix.size()) + 2 * Int(w.period.size());
    return validate_word(std::move(w), depth);
}

std::pair<AffineWeylElement, Root> word_prefix_products(const InfiniteWord& w, Int p) {
    if (p < 1) throw std::invalid_argument("word_prefix_products: p must be positive");
    AffineWeylElement z = affine_identity(w.sub.cartan);
    Root phi;
    for (Int q = 1; q <= p; ++q) {
        int k = w.letter(q);
        phi = act(w.sub.cartan, z, w.sub.pi[size_t(k)]);
        z = mul(z, w.sub.gens[size_t(k)]);
    }
    return {z, phi};
}

InfiniteWord validate_word(InfiniteWord w, Int depth) {
    const Int a = Int(w.prefix.size());
    if (depth < a + 2 * w.declared_period_len)
        throw std::invalid_argument("validate_word: depth below prefix + 2 periods");
    std::set<Root> seen;
    AffineWeylElement z = affine_identity(w.sub.cartan);
    for (Int p = 1; p <= depth; ++p) {
        int k = w.letter(p);
        Root phi = act(w.sub.cartan, z, w.sub.pi[size_t(k)]);
        if (!is_positive(w.sub.cartan, phi))
            throw std::invalid_argument("validate_word: phi(" + std::to_string(p) + ") is negative");
        if (!seen.insert(phi).second)
            throw std::invalid_argument("validate_word: phi(" + std::to_string(p) + ") repeats");
        z = mul(z, w.sub.gens[size_t(k)]);
    }
    if (subsystem_length(w.sub, z) != depth)
        throw std::invalid_argument("validate_word: prefix of length " + std::to_string(depth) +
                                    " is not reduced");
    w.certified_depth = std::max(w.certified_depth, depth);
    return w;
}

bool phi_infty_membership(const InfiniteWord& w, const Root& beta) {
    const CartanData& c = w.sub.cartan;
    if (!is_real_root(c, beta) || !is_positive(c, beta) || !w.sub.in_delta_J(beta.finite))
        return false;
    // Along the subsequence z(a + k|period|) = z_prefix t_lambda^k the image
    // of beta has level shifted by k times a fixed pairing; inversion sets of
    // a reduced word increase, so membership is decided on the subsequence.
    Root r = act(c, w.z_prefix_inv, beta);
    Rat pairing = c.pair(r.finite, w.lambda);
    if (pairing < Rat(0)) return true;
    return !is_positive(c, r);
}

Int word_index(const InfiniteWord& w, const Root& beta) {
    if (!phi_infty_membership(w, beta)) throw std::invalid_argument("word_index: not a member");
    const CartanData& c = w.sub.cartan;
    const Int a = Int(w.prefix.size());
    const Int q = Int(w.period.size());
    // Smallest k with z(a + k q)^{-1}(beta) negative bounds the scan.
    Root r = act(c, w.z_prefix_inv, beta);
    Int k = 0;
    Root shifted = r;
    while (is_positive(c, shifted)) {
        ++k;
        shifted = act(c, w.t_period_inv, shifted);
        if (k > 1 + (std::abs(r.level) + 2) * (std::abs(height(c, beta)) + 2))
            throw std::runtime_error("word_index: bound exceeded, invalid word");
    }
    const Int bound = a + k * q;
    AffineWeylElement z = affine_identity(c);
    for (Int p = 1; p <= bound; ++p) {
        int g = w.letter(p);
        Root phi = act(c, z, w.sub.pi[size_t(g)]);
        if (phi == beta) return p;
        z = mul(z, w.sub.gens[size_t(g)]);
    }
    throw std::runtime_error("word_index: member not found within bound");
}

InfiniteWord build_Z(const Subsystem& sub, const std::vector<int>& K) {
    RatVec lambda = lattice_element(sub, K);
    AffineWeylElement t = translation(sub.cartan, lambda);
    auto word = subsystem_reduced_word(sub, t);
    return make_word(sub, {}, word);
}

InfiniteWord act_on_word(const AffineWeylElement& x, const InfiniteWord& w) {
    const CartanData& c = w.sub.cartan;
    // Step 1: p0 with Phi_J(x^{-1}) intersect the word's set inside Phi(z(p0)).
    Int p0 = 0;
    for (const auto& beta : phi_J(w.sub, inverse_element(c, x)))
        if (phi_infty_membership(w, beta)) p0 = std::max(p0, word_index(w, beta));

    // Step 2: reduced expression of x z(p0), then the shifted tail.
    AffineWeylElement z0 = p0 == 0 ? affine_identity(c) : word_prefix_products(w, p0).first;
    AffineWeylElement head = mul(x, z0);
    std::vector<int> prefix = subsystem_reduced_word(w.sub, head);

    const Int a = Int(w.prefix.size());
    const Int q = Int(w.period.size());
    std::vector<int> period;
    if (p0 <= a) {
        prefix.insert(prefix.end(), w.prefix.begin() + size_t(p0), w.prefix.end());
        period = w.period;
    } else {
        Int r = (p0 - a) % q;
        period.assign(w.period.begin() + size_t(r), w.period.end());
        period.insert(period.end(), w.period.begin(), w.period.begin() + size_t(r));
    }
    return make_word(w.sub, std::move(prefix), std::move(period));
}

BiconvexParam canonical_param(const InfiniteWord& w) {
    const CartanData& c = w.sub.cartan;
    const IntMat& wbar_inv = w.z_prefix_inv.fin;
    const AffineWeylElement& zinv = w.z_prefix_inv;

    auto pairing_of = [&](const FiniteRoot& eps) { return c.pair(wbar_inv * eps.coords, w.lambda); };
    auto eventual = [&](const FiniteRoot& eps) { return pairing_of(eps) < Rat(0); };

    // Finite residue: members on the pairing-zero slices. Along such a slice
    // the transformed level grows by one per delta step, so the scan is finite.
    std::set<Root> residue;
    for (const auto& eps : w.sub.delta_J) {
        if (pairing_of(eps) != Rat(0)) continue;
        Int m = finite_root_sign(eps) > 0 ? 0 : 1;
        for (;; ++m) {
            Root beta{m, eps.coords};
            Root r = act(c, zinv, beta);
            if (is_positive(c, r)) break;
            residue.insert(beta);
        }
    }
    BiconvexParam param;
    try {
        param = parameterize_biconvex(c, w.sub.J, eventual, residue);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("canonical_param: ") + e.what());
    }

    // Cross-check the parameterized set against the word on a small window.
    NablaSet nabla(c, param);
    Window probe{nabla.residue_max_level() + 2};
    for (const auto& beta : positive_window(c, w.sub.J, probe, false))
        if (nabla.contains(beta) != phi_infty_membership(w, beta))
            throw std::invalid_argument("canonical_param: not an infinite reduced word's inversion set");
    return param;
}

}  // namespace convord
