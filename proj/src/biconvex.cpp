#include "convord/biconvex.hpp"

#include <algorithm>

namespace convord {

std::set<Root> slice(const CartanData&, const std::vector<FiniteRoot>& P, Window w) {
    std::set<Root> out;
    for (const auto& e : P) {
        Int m0 = finite_root_sign(e) > 0 ? 0 : 1;
        for (Int m = m0; m <= w.max_level; ++m) out.insert({m, e.coords});
    }
    return out;
}

std::vector<FiniteRoot> shifted_complement(const CartanData& c, const std::vector<int>& J,
                                           const std::vector<int>& K, const FiniteWeylElement& w,
                                           int sign) {
    auto subJ = subsystem_roots(c, J);
    std::set<FiniteRoot> inK;
    if (!K.empty()) {
        auto subK = subsystem_roots(c, K);
        inK.insert(subK.roots.begin(), subK.roots.end());
    }
    std::vector<FiniteRoot> out;
    for (const auto& r : subJ.roots) {
        if (finite_root_sign(r) != sign || inK.count(r)) continue;
        out.push_back({w.mat * r.coords});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<Root> delta_K_J(const CartanData& c, const std::vector<int>& J, const std::vector<int>& K,
                         const FiniteWeylElement& w, int sign, Window win) {
    return slice(c, shifted_complement(c, J, K, w, sign), win);
}

NablaSet::NablaSet(const CartanData& c, BiconvexParam param) : cartan_(c), param_(std::move(param)) {
    if (!in_finite_weyl(cartan_, param_.J, param_.u))
        throw std::invalid_argument("NablaSet: u not in W_J");
    for (int k : param_.K) {
        IntVec e(cartan_.rank, 0);
        e[k - 1] = 1;
        if (finite_root_sign({param_.u.mat * e}) < 0)
            throw std::invalid_argument("NablaSet: u not a minimal coset representative");
    }
    pbar_ = shifted_complement(cartan_, param_.J, param_.K, param_.u, -1);
    if (!param_.K.empty()) {
        auto sub = build_subsystem(cartan_, param_.K);
        for (const auto& r : phi_J(sub, param_.y))
            residue_.insert(act(cartan_, param_.u, r));
    } else if (!(param_.y == affine_identity(cartan_))) {
        throw std::invalid_argument("NablaSet: K empty requires y = 1");
    }
}

bool NablaSet::contains(const Root& beta) const {
    if (!is_real_root(cartan_, beta) || !is_positive(cartan_, beta)) return false;
    if (std::binary_search(pbar_.begin(), pbar_.end(), FiniteRoot{beta.finite})) return true;
    return residue_.count(beta) > 0;
}

std::set<Root> NablaSet::enumerate(Window w) const {
    std::set<Root> out = slice(cartan_, pbar_, w);
    for (const auto& r : residue_)
        if (r.level <= w.max_level) out.insert(r);
    return out;
}

Int NablaSet::residue_max_level() const {
    Int m = 0;
    for (const auto& r : residue_) m = std::max(m, r.level);
    return m;
}

bool nabla_membership(const CartanData& c, const BiconvexParam& p, const Root& beta) {
    return NablaSet(c, p).contains(beta);
}

std::set<Root> nabla_enumerate(const CartanData& c, const BiconvexParam& p, Window w) {
    return NablaSet(c, p).enumerate(w);
}

NablaCmp nabla_compare(const CartanData& c, const BiconvexParam& p1, const BiconvexParam& p2) {
    if (p1.J != p2.J) throw std::invalid_argument("nabla_compare: different J");
    auto contains = [&](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    auto coset_eq = [&](const BiconvexParam& a, const BiconvexParam& b) {
        // a.u in b.u * W_{a.K}
        FiniteWeylElement q{inverse(b.u.mat) * a.u.mat};
        return a.K.empty() ? q == FiniteWeylElement{IntMat::id(c.rank)}
                           : in_finite_weyl(c, a.K, q);
    };
    bool sub = contains(p1.K, p2.K) && coset_eq(p1, p2);
    bool sup = contains(p2.K, p1.K) && coset_eq(p2, p1);
    if (sub && sup) return NablaCmp::DotEqual;
    if (sub) return NablaCmp::DotSubset;
    if (sup) return NablaCmp::DotSuperset;
    return NablaCmp::Incomparable;
}

BiconvexReport check_biconvex(const std::set<Root>& B, const std::vector<Root>& ambient_window,
                              const CartanData& c, Window w) {
    BiconvexReport rep;
    rep.window = w.max_level;
    std::set<Root> ambient(ambient_window.begin(), ambient_window.end());
    auto fail = [&](const char* cond, const Root& b, const Root& g, const Root& s) {
        rep.ok = false;
        rep.condition = cond;
        rep.beta = b;
        rep.gamma = g;
        rep.sum = s;
    };
    for (auto i = ambient_window.begin(); i != ambient_window.end() && rep.ok; ++i) {
        for (auto j = i; j != ambient_window.end() && rep.ok; ++j) {
            Root sum = *i + *j;
            if (!is_root(c, sum)) continue;
            if (sum.level > w.max_level) {
                ++rep.skipped;
                continue;
            }
            if (!ambient.count(sum)) continue;
            ++rep.checked;
            bool bi = B.count(*i), bj = B.count(*j), bs = B.count(sum);
            if (bi && bj && !bs) fail("C(i)", *i, *j, sum);
            if (!bi && !bj && bs) fail("C(ii)", *i, *j, sum);
        }
    }
    return rep;
}

std::set<Root> maximal_biconvex(const CartanData& c, const std::vector<int>& J,
                                const FiniteWeylElement& w, Window win) {
    return delta_K_J(c, J, {}, w, -1, win);
}

BiconvexParam parameterize_biconvex(const CartanData& c, const std::vector<int>& J,
                                    const std::function<bool(const FiniteRoot&)>& eventual,
                                    const std::set<Root>& residue) {
    auto subJ = subsystem_roots(c, J);
    std::vector<FiniteRoot> P, N;
    for (const auto& e : subJ.roots) {
        if (!eventual(e)) continue;
        if (eventual({-e.coords}))
            throw std::invalid_argument("parameterize_biconvex: slice and its negative both eventual");
        P.push_back(e);
        if (finite_root_sign(e) > 0) N.push_back(e);
    }
    FiniteWeylElement u = recover_from_finite_inversions(c, J, N);

    std::vector<int> K;
    for (int j : J) {
        IntVec e(c.rank, 0);
        e[j - 1] = 1;
        FiniteRoot uj{u.mat * e};
        if (!eventual(uj) && !eventual({-uj.coords})) K.push_back(j);
    }
    auto expect = shifted_complement(c, J, K, u, -1);
    std::sort(P.begin(), P.end());
    if (P != expect)
        throw std::invalid_argument("parameterize_biconvex: eventual slices are not a coset shape");

    AffineWeylElement y;
    if (K.empty()) {
        if (!residue.empty())
            throw std::invalid_argument("parameterize_biconvex: residue with empty K");
        y = affine_identity(c);
    } else {
        auto subK = build_subsystem(c, K);
        auto uinv = affine_of(FiniteWeylElement{inverse(u.mat)});
        std::vector<Root> G;
        for (const auto& r : residue) {
            Root g = act(c, uinv, r);
            if (!is_positive(c, g) || !subK.in_delta_J(g.finite))
                throw std::invalid_argument("parameterize_biconvex: residue outside u Delta_{K+}");
            G.push_back(g);
        }
        y = recover_from_phi(subK, G);
    }
    return {J, K, u, y};
}

std::vector<Root> positive_window(const CartanData& c, const std::vector<int>& J, Window w,
                                  bool include_imaginary) {
    std::vector<Root> out;
    auto sub = subsystem_roots(c, J);
    for (const auto& e : sub.roots) {
        Int m0 = finite_root_sign(e) > 0 ? 0 : 1;
        for (Int m = m0; m <= w.max_level; ++m) out.push_back({m, e.coords});
    }
    if (include_imaginary)
        for (Int m = 1; m <= w.max_level; ++m) out.push_back({m, IntVec(c.rank, 0)});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace convord
