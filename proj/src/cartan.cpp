#include "convord/cartan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace convord {

Rat CartanData::pair(const IntVec& u, const IntVec& v) const {
    Rat s(0);
    for (int i = 0; i < rank; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < rank; ++j)
            if (v[j] != 0) s += Rat(u[i] * v[j]) * gram[i][j];
    }
    return s;
}

Rat CartanData::pair(const IntVec& u, const RatVec& v) const {
    Rat s(0);
    for (int i = 0; i < rank; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < rank; ++j) s += Rat(u[i]) * gram[i][j] * v[j];
    }
    return s;
}

bool CartanData::is_finite_root(const IntVec& c) const {
    FiniteRoot r{c};
    return std::binary_search(roots.begin(), roots.end(), r);
}

RatVec CartanData::coroot(int j) const {
    RatVec v(rank, Rat(0));
    v[j - 1] = Rat(2) / gram[j - 1][j - 1];
    return v;
}

int finite_root_sign(const FiniteRoot& r) {
    for (Int c : r.coords)
        if (c != 0) return c > 0 ? 1 : -1;
    throw std::invalid_argument("finite_root_sign: zero vector");
}

std::vector<int> full_index_set(const CartanData& c) {
    std::vector<int> J(c.rank);
    for (int i = 0; i < c.rank; ++i) J[i] = i + 1;
    return J;
}

namespace {

IntMat cartan_matrix(char t, int l) {
    auto bad = [&] {
        throw std::invalid_argument(std::string("build_cartan: invalid type/rank pair ") + t +
                                    "_" + std::to_string(l));
    };
    IntMat a(l);
    for (int i = 0; i < l; ++i) a(i, i) = 2;
    auto edge = [&](int i, int j, Int aij, Int aji) {  // 1-based
        a(i - 1, j - 1) = aij;
        a(j - 1, i - 1) = aji;
    };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) edge(i, i + 1, -1, -1);
    };
    switch (t) {
        case 'A':
            if (l < 1) bad();
            chain(1, l);
            break;
        case 'B':  // alpha_l short
            if (l < 2) bad();
            chain(1, l - 1);
            edge(l - 1, l, -1, -2);
            break;
        case 'C':  // alpha_l long
            if (l < 2) bad();
            chain(1, l - 1);
            edge(l - 1, l, -2, -1);
            break;
        case 'D':
            if (l < 4) bad();
            chain(1, l - 1);
            edge(l - 2, l, -1, -1);
            break;
        case 'E':
            if (l < 6 || l > 8) bad();
            edge(1, 3, -1, -1);
            edge(2, 4, -1, -1);
            for (int i = 3; i < l; ++i) edge(i, i + 1, -1, -1);
            break;
        case 'F':
            if (l != 4) bad();
            edge(1, 2, -1, -1);
            edge(2, 3, -1, -2);
            edge(3, 4, -1, -1);
            break;
        case 'G':
            if (l != 2) bad();
            edge(1, 2, -1, -3);
            break;
        default:
            bad();
    }
    return a;
}

// Half square lengths d_i = (alpha_i|alpha_i)/2, propagated along the Dynkin
// graph from d_1 and normalized so the long roots have d = 1.
std::vector<Rat> half_lengths(const IntMat& a) {
    const int l = a.n;
    std::vector<Rat> d(l, Rat(0));
    d[0] = Rat(1);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < l; ++j) {
            if (j == i || a(i, j) == 0 || d[j] != Rat(0)) continue;
            d[j] = d[i] * Rat(a(i, j)) / Rat(a(j, i));
            stack.push_back(j);
        }
    }
    Rat dmax = d[0];
    for (int i = 1; i < l; ++i) dmax = std::max(dmax, d[i]);
    for (int i = 0; i < l; ++i) d[i] /= dmax;
    return d;
}

}  // namespace

IntVec act(const FiniteWeylElement& w, const IntVec& v) { return w.mat * v; }

FiniteWeylElement finite_identity(const CartanData& c) { return {IntMat::id(c.rank)}; }

FiniteWeylElement simple_reflection_matrix(const CartanData& c, int j) {
    // s_j(alpha_i) = alpha_i - a_{ji} alpha_j
    IntMat m = IntMat::id(c.rank);
    for (int i = 0; i < c.rank; ++i) m(j - 1, i) -= c.cartan(j - 1, i);
    return {m};
}

FiniteWeylElement reflection_matrix(const CartanData& c, const FiniteRoot& r) {
    Rat rr = c.pair(r.coords, r.coords);
    IntMat m(c.rank);
    for (int i = 0; i < c.rank; ++i) {
        IntVec e(c.rank, 0);
        e[i] = 1;
        Rat coef = Rat(2) * c.pair(e, r.coords) / rr;
        for (int k = 0; k < c.rank; ++k) {
            Rat v = Rat(k == i ? 1 : 0) - coef * Rat(r.coords[k]);
            if (!is_integral(v)) throw std::runtime_error("reflection_matrix: not integral");
            m(k, i) = v.numerator();
        }
    }
    return {m};
}

CartanData build_cartan(char type_label, int rank) {
    CartanData c;
    c.type_label = type_label;
    c.rank = rank;
    c.cartan = cartan_matrix(type_label, rank);
    auto d = half_lengths(c.cartan);
    c.gram.assign(rank, RatVec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) c.gram[i][j] = d[i] * Rat(c.cartan(i, j));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (c.gram[i][j] != c.gram[j][i]) throw std::runtime_error("build_cartan: gram not symmetric");

    // Close the simple roots under all simple reflections.
    std::vector<IntMat> refl;
    for (int j = 1; j <= rank; ++j) refl.push_back(simple_reflection_matrix(c, j).mat);
    std::set<IntVec> seen;
    std::vector<IntVec> work;
    for (int i = 0; i < rank; ++i) {
        IntVec e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        work.push_back(e);
    }
    while (!work.empty()) {
        IntVec v = work.back();
        work.pop_back();
        for (const auto& s : refl) {
            IntVec u = s * v;
            if (seen.insert(u).second) work.push_back(u);
        }
    }
    for (const auto& v : seen) c.roots.push_back({v});
    std::sort(c.roots.begin(), c.roots.end());

    // Highest root: maximal height among positives, checked to dominate all of them.
    const FiniteRoot* best = nullptr;
    Int besth = -1;
    for (const auto& r : c.roots) {
        if (finite_root_sign(r) < 0) continue;
        Int h = 0;
        for (Int x : r.coords) h += x;
        if (h > besth) {
            besth = h;
            best = &r;
        }
    }
    for (const auto& r : c.roots) {
        if (finite_root_sign(r) < 0) continue;
        for (int i = 0; i < rank; ++i)
            if (best->coords[i] < r.coords[i])
                throw std::runtime_error("build_cartan: highest root does not dominate");
    }
    c.theta = *best;
    if (c.pair(c.theta.coords, c.theta.coords) != Rat(2))
        throw std::runtime_error("build_cartan: (theta|theta) != 2");

    c.labels.assign(rank + 1, 1);
    for (int i = 0; i < rank; ++i) c.labels[i + 1] = c.theta.coords[i];
    return c;
}

std::vector<FiniteRoot> enumerate_finite_roots(const CartanData& c) { return c.roots; }

SubsystemRoots subsystem_roots(const CartanData& c, const std::vector<int>& J) {
    if (J.empty()) throw std::invalid_argument("subsystem_roots: empty J");
    SubsystemRoots out;
    std::set<int> Jset(J.begin(), J.end());
    for (const auto& r : c.roots) {
        bool ok = true;
        for (int i = 0; i < c.rank && ok; ++i)
            if (r.coords[i] != 0 && !Jset.count(i + 1)) ok = false;
        if (ok) out.roots.push_back(r);
    }
    std::sort(out.roots.begin(), out.roots.end());

    // Connected components of J in the Dynkin graph.
    std::set<int> left(Jset);
    while (!left.empty()) {
        std::vector<int> comp;
        std::vector<int> stack{*left.begin()};
        left.erase(left.begin());
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            comp.push_back(j);
            for (auto it = left.begin(); it != left.end();) {
                if (c.cartan(j - 1, *it - 1) != 0) {
                    stack.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(comp);
    }
    std::sort(out.components.begin(), out.components.end());

    for (const auto& comp : out.components) {
        std::set<int> cs(comp.begin(), comp.end());
        const FiniteRoot* best = nullptr;
        Int besth = -1;
        for (const auto& r : out.roots) {
            if (finite_root_sign(r) < 0) continue;
            bool inside = true;
            Int h = 0;
            for (int i = 0; i < c.rank && inside; ++i) {
                if (r.coords[i] != 0 && !cs.count(i + 1)) inside = false;
                h += r.coords[i];
            }
            if (!inside) continue;
            if (h > besth) {
                besth = h;
                best = &r;
            }
        }
        for (const auto& r : out.roots) {
            if (finite_root_sign(r) < 0) continue;
            bool inside = true;
            for (int i = 0; i < c.rank && inside; ++i)
                if (r.coords[i] != 0 && !cs.count(i + 1)) inside = false;
            if (!inside) continue;
            for (int i = 0; i < c.rank; ++i)
                if (best->coords[i] < r.coords[i])
                    throw std::runtime_error("subsystem_roots: no dominating component root");
        }
        out.theta.push_back(*best);
    }
    return out;
}

std::vector<FiniteWeylElement> enumerate_finite_weyl(const CartanData& c, const std::vector<int>& J) {
    std::vector<IntMat> gens;
    for (int j : J) gens.push_back(simple_reflection_matrix(c, j).mat);
    std::set<IntMat> seen{IntMat::id(c.rank)};
    std::vector<IntMat> work{IntMat::id(c.rank)};
    while (!work.empty()) {
        IntMat m = work.back();
        work.pop_back();
        for (const auto& g : gens) {
            IntMat x = m * g;
            if (seen.insert(x).second) work.push_back(x);
        }
    }
    std::vector<FiniteWeylElement> out;
    for (const auto& m : seen) out.push_back({m});
    return out;
}

namespace {

// Peels right descents (smallest j first); returns letters so that
// w = s_{word[0]} ... s_{word.back()}, or nothing if w leaves the subgroup.
bool peel_finite(const CartanData& c, const std::vector<int>& J, FiniteWeylElement w,
                 std::vector<int>* word) {
    word->clear();
    for (;;) {
        bool found = false;
        for (int j : J) {
            IntVec e(c.rank, 0);
            e[j - 1] = 1;
            IntVec img = w.mat * e;
            if (finite_root_sign({img}) < 0) {
                w = w * simple_reflection_matrix(c, j);
                word->push_back(j);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    std::reverse(word->begin(), word->end());
    return w.mat == IntMat::id(c.rank);
}

}  // namespace

bool in_finite_weyl(const CartanData& c, const std::vector<int>& J, const FiniteWeylElement& w) {
    std::vector<int> word;
    return peel_finite(c, J, w, &word);
}

Int finite_length(const CartanData& c, const std::vector<int>& J, const FiniteWeylElement& w) {
    std::vector<int> word;
    if (!peel_finite(c, J, w, &word)) throw std::invalid_argument("finite_length: not in W_J");
    return Int(word.size());
}

std::vector<int> finite_reduced_word(const CartanData& c, const std::vector<int>& J,
                                     const FiniteWeylElement& w) {
    std::vector<int> word;
    if (!peel_finite(c, J, w, &word)) throw std::invalid_argument("finite_reduced_word: not in W_J");
    return word;
}

std::vector<FiniteRoot> finite_inversions(const CartanData& c, const std::vector<int>& J,
                                          const FiniteWeylElement& w) {
    auto sub = subsystem_roots(c, J);
    IntMat winv = inverse(w.mat);
    std::vector<FiniteRoot> out;
    for (const auto& r : sub.roots) {
        if (finite_root_sign(r) < 0) continue;
        if (finite_root_sign({winv * r.coords}) < 0) out.push_back(r);
    }
    return out;
}

FiniteWeylElement recover_from_finite_inversions(const CartanData& c, const std::vector<int>& J,
                                                 std::vector<FiniteRoot> inv) {
    std::set<FiniteRoot> N(inv.begin(), inv.end());
    std::vector<int> letters;
    while (!N.empty()) {
        int found = 0;
        for (int j : J) {
            IntVec e(c.rank, 0);
            e[j - 1] = 1;
            if (N.count({e})) {
                found = j;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("recover_from_finite_inversions: not an inversion set");
        letters.push_back(found);
        IntVec e(c.rank, 0);
        e[found - 1] = 1;
        N.erase({e});
        auto s = simple_reflection_matrix(c, found);
        std::set<FiniteRoot> next;
        for (const auto& r : N) next.insert({s.mat * r.coords});
        N.swap(next);
    }
    FiniteWeylElement w = finite_identity(c);
    for (int j : letters) w = w * simple_reflection_matrix(c, j);
    return w;
}

std::vector<FiniteWeylElement> minimal_coset_reps(const CartanData& c, const std::vector<int>& J,
                                                  const std::vector<int>& K) {
    std::vector<FiniteWeylElement> out;
    for (const auto& w : enumerate_finite_weyl(c, J)) {
        bool ok = true;
        for (int k : K) {
            IntVec e(c.rank, 0);
            e[k - 1] = 1;
            if (finite_root_sign({w.mat * e}) < 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<FiniteWeylElement, FiniteWeylElement> decompose_coset(const CartanData& c,
                                                                const std::vector<int>& J,
                                                                const std::vector<int>& K,
                                                                const FiniteWeylElement& w) {
    if (!in_finite_weyl(c, J, w)) throw std::invalid_argument("decompose_coset: w not in W_J");
    FiniteWeylElement v = w;
    FiniteWeylElement d = finite_identity(c);
    for (;;) {
        bool found = false;
        for (int k : K) {
            IntVec e(c.rank, 0);
            e[k - 1] = 1;
            if (finite_root_sign({v.mat * e}) < 0) {
                auto s = simple_reflection_matrix(c, k);
                v = v * s;
                d = s * d;
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    return {v, d};
}

FiniteWeylElement longest_element(const CartanData& c, const std::vector<int>& J) {
    FiniteWeylElement v = finite_identity(c);
    for (;;) {
        bool found = false;
        for (int j : J) {
            IntVec e(c.rank, 0);
            e[j - 1] = 1;
            if (finite_root_sign({v.mat * e}) > 0) {
                v = v * simple_reflection_matrix(c, j);
                found = true;
                break;
            }
        }
        if (!found) return v;
    }
}

}  // namespace convord
