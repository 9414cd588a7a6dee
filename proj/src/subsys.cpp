#include "convord/subsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace convord {

std::string generator_id(const Root& r) {
    std::ostringstream os;
    os << "s(" << r.level << ";";
    for (size_t i = 0; i < r.finite.size(); ++i) {
        if (i) os << ",";
        os << r.finite[i];
    }
    os << ")";
    return os.str();
}

bool Subsystem::in_delta_J(const IntVec& coords) const {
    return std::binary_search(delta_J.begin(), delta_J.end(), FiniteRoot{coords});
}

Subsystem build_subsystem(const CartanData& c, std::vector<int> J) {
    if (J.empty()) throw std::invalid_argument("build_subsystem: empty J");
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    for (int j : J)
        if (j < 1 || j > c.rank) throw std::invalid_argument("build_subsystem: index out of range");

    Subsystem s;
    s.cartan = c;
    s.J = J;
    auto sub = subsystem_roots(c, J);
    s.components = sub.components;
    s.theta_c = sub.theta;
    s.delta_J = sub.roots;

    for (int j : J) {
        Root a = alpha(c, j);
        s.pi.push_back(a);
        s.gens.push_back(simple_reflection(c, j));
        s.gen_ids.push_back(generator_id(a));
    }
    for (const auto& th : s.theta_c) {
        Root a{1, -th.coords};  // delta - theta_c
        s.pi.push_back(a);
        s.gens.push_back(reflection(c, a));
        s.gen_ids.push_back(generator_id(a));
    }
    for (size_t k = 0; k < s.gens.size(); ++k) {
        Root img = act(c, s.gens[k], s.pi[k]);
        if (!(img == -s.pi[k])) throw std::runtime_error("build_subsystem: s(alpha_s) != -alpha_s");
    }
    return s;
}

namespace {

int left_descent(const Subsystem& s, const AffineWeylElement& yinv) {
    for (int k = 0; k < s.num_generators(); ++k) {
        Root r = act(s.cartan, yinv, s.pi[k]);
        if (!is_positive(s.cartan, r)) return k;
    }
    return -1;
}

// Returns letters with y = gens[w[0]] * ... * gens[w.back()]; false if stalled.
bool peel(const Subsystem& s, const AffineWeylElement& y, std::vector<int>* word) {
    word->clear();
    AffineWeylElement cur = y;
    AffineWeylElement curinv = inverse_element(s.cartan, y);
    for (;;) {
        int k = left_descent(s, curinv);
        if (k < 0) break;
        cur = mul(s.gens[k], cur);
        curinv = mul(curinv, s.gens[k]);
        word->push_back(k);
    }
    return cur == affine_identity(s.cartan);
}

}  // namespace

bool in_subsystem(const Subsystem& s, const AffineWeylElement& y) {
    std::vector<int> w;
    return peel(s, y, &w);
}

Int subsystem_length(const Subsystem& s, const AffineWeylElement& y) {
    std::vector<int> w;
    if (!peel(s, y, &w)) throw std::invalid_argument("element not in subsystem");
    return Int(w.size());
}

std::vector<int> subsystem_reduced_word(const Subsystem& s, const AffineWeylElement& y) {
    std::vector<int> w;
    if (!peel(s, y, &w)) throw std::invalid_argument("element not in subsystem");
    return w;
}

AffineWeylElement subsystem_product(const Subsystem& s, const std::vector<int>& letters) {
    AffineWeylElement y = affine_identity(s.cartan);
    for (int k : letters) y = mul(y, s.gens.at(k));
    return y;
}

std::vector<Root> phi_J(const Subsystem& s, const AffineWeylElement& y) {
    auto word = subsystem_reduced_word(s, y);
    std::vector<Root> out;
    AffineWeylElement z = affine_identity(s.cartan);
    for (int k : word) {
        out.push_back(act(s.cartan, z, s.pi[k]));
        z = mul(z, s.gens[k]);
    }
    return out;
}

AffineWeylElement recover_from_phi(const Subsystem& s, const std::vector<Root>& phi) {
    std::set<Root> G(phi.begin(), phi.end());
    std::vector<int> letters;
    while (!G.empty()) {
        int found = -1;
        for (int k = 0; k < s.num_generators(); ++k) {
            if (G.count(s.pi[k])) {
                found = k;
                break;
            }
        }
        if (found < 0) throw std::invalid_argument("recover_from_phi: not an inversion set");
        letters.push_back(found);
        G.erase(s.pi[found]);
        std::set<Root> next;
        for (const auto& r : G) next.insert(act(s.cartan, s.gens[found], r));
        G.swap(next);
    }
    return subsystem_product(s, letters);
}

RatVec lattice_element(const Subsystem& s, const std::vector<int>& K,
                       const std::map<int, Int>& targets) {
    std::set<int> Kset(K.begin(), K.end());
    for (int k : K)
        if (!std::count(s.J.begin(), s.J.end(), k))
            throw std::invalid_argument("lattice_element: K not inside J");
    if (Kset.size() == s.J.size()) throw std::invalid_argument("lattice_element: K = J");

    // Solve for lambda = sum_j c_j coroot(j), j in J, with prescribed pairings.
    const int n = int(s.J.size());
    std::vector<RatVec> A(n, RatVec(n));
    RatVec b(n);
    for (int row = 0; row < n; ++row) {
        int jr = s.J[row];
        IntVec e(s.cartan.rank, 0);
        e[jr - 1] = 1;
        for (int col = 0; col < n; ++col) A[row][col] = s.cartan.pair(e, s.cartan.coroot(s.J[col]));
        if (Kset.count(jr)) {
            b[row] = Rat(0);
        } else {
            auto it = targets.find(jr);
            Int t = it == targets.end() ? 1 : it->second;
            if (t <= 0) throw std::invalid_argument("lattice_element: target must be positive");
            b[row] = Rat(t);
        }
    }
    RatVec coeff = solve_rational(A, b);

    Int scale = 1;
    for (const Rat& x : coeff) scale = std::lcm(scale, x.denominator());
    RatVec lambda(s.cartan.rank, Rat(0));
    for (int col = 0; col < n; ++col) {
        RatVec cr = s.cartan.coroot(s.J[col]);
        for (int i = 0; i < s.cartan.rank; ++i) lambda[i] += coeff[col] * Rat(scale) * cr[i];
    }
    validate_lattice(s.cartan, lambda);
    return lambda;
}

}  // namespace convord
