#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "convord/cartan.hpp"

using namespace convord;

namespace {

// Independent closure oracle working purely on coordinate vectors and the
// Cartan matrix: s_i(v) = v - <v, alpha_i^vee> e_i with <v, alpha_i^vee> =
// sum_j a_ij v_j.
std::set<IntVec> closure_oracle(const IntMat& a) {
    const int l = a.n;
    std::set<IntVec> roots;
    std::vector<IntVec> work;
    for (int i = 0; i < l; ++i) {
        IntVec e(l, 0);
        e[i] = 1;
        roots.insert(e);
        work.push_back(e);
    }
    while (!work.empty()) {
        IntVec v = work.back();
        work.pop_back();
        for (int i = 0; i < l; ++i) {
            Int pairing = 0;
            for (int j = 0; j < l; ++j) pairing += a(i, j) * v[j];
            IntVec u = v;
            u[i] -= pairing;
            if (roots.insert(u).second) work.push_back(u);
        }
    }
    return roots;
}

Rat det_rational(std::vector<RatVec> m) {
    const size_t n = m.size();
    Rat det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == Rat(0)) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            Rat f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

FiniteWeylElement s(const CartanData& c, int j) { return simple_reflection_matrix(c, j); }

}  // namespace

TEST_CASE("build_cartan A2 matches the standard data") {
    auto c = build_cartan('A', 2);
    CHECK(c.cartan(0, 0) == 2);
    CHECK(c.cartan(0, 1) == -1);
    CHECK(c.cartan(1, 0) == -1);
    CHECK(c.cartan(1, 1) == 2);
    CHECK(c.labels == std::vector<Int>{1, 1, 1});
    CHECK(c.theta.coords == IntVec{1, 1});
}

TEST_CASE("build_cartan A1") {
    auto c = build_cartan('A', 1);
    CHECK(c.cartan(0, 0) == 2);
    CHECK(c.theta.coords == IntVec{1});
    CHECK(c.labels == std::vector<Int>{1, 1});
}

TEST_CASE("build_cartan G2 labels derived from the highest root") {
    auto c = build_cartan('G', 2);
    auto oracle = closure_oracle(c.cartan);
    CHECK(oracle.size() == 12);
    // Unique maximal root of the oracle under coordinatewise dominance.
    IntVec best;
    for (const auto& v : oracle) {
        bool dominates = true;
        for (const auto& u : oracle)
            for (size_t i = 0; i < v.size(); ++i)
                if (v[i] < u[i]) dominates = false;
        if (dominates) best = v;
    }
    REQUIRE(!best.empty());
    CHECK(c.theta.coords == best);
    CHECK(c.labels[0] == 1);
    CHECK(c.labels[1] == best[0]);
    CHECK(c.labels[2] == best[1]);
}

TEST_CASE("build_cartan rejects invalid type/rank pairs") {
    CHECK_THROWS(build_cartan('A', 0));
    CHECK_THROWS(build_cartan('B', 1));
    CHECK_THROWS(build_cartan('C', 1));
    CHECK_THROWS(build_cartan('D', 3));
    CHECK_THROWS(build_cartan('E', 9));
    CHECK_THROWS(build_cartan('E', 5));
    CHECK_THROWS(build_cartan('F', 3));
    CHECK_THROWS(build_cartan('G', 3));
    CHECK_THROWS(build_cartan('H', 3));
}

TEST_CASE("root counts and symmetry for all enumerated types of rank <= 4") {
    struct Row {
        char t;
        int l;
        size_t count;
    };
    const Row rows[] = {{'A', 1, 2},  {'A', 2, 6},  {'A', 3, 12}, {'A', 4, 20},
                        {'B', 2, 8},  {'B', 3, 18}, {'B', 4, 32}, {'C', 2, 8},
                        {'C', 3, 18}, {'C', 4, 32}, {'D', 4, 24}, {'F', 4, 48},
                        {'G', 2, 12}};
    for (const auto& row : rows) {
        auto c = build_cartan(row.t, row.l);
        auto roots = enumerate_finite_roots(c);
        CHECK(roots.size() == row.count);
        CHECK(closure_oracle(c.cartan).size() == row.count);
        for (const auto& r : roots) CHECK(c.is_finite_root(-r.coords));
    }
    CHECK(enumerate_finite_roots(build_cartan('E', 6)).size() == 72);
}

TEST_CASE("gram matrix is symmetric positive definite and matches the Cartan matrix") {
    for (auto [t, l] : std::vector<std::pair<char, int>>{
             {'A', 3}, {'B', 3}, {'C', 2}, {'D', 4}, {'F', 4}, {'G', 2}}) {
        auto c = build_cartan(t, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                CHECK(c.gram[i][j] == c.gram[j][i]);
                CHECK(Rat(c.cartan(i, j)) == Rat(2) * c.gram[i][j] / c.gram[i][i]);
            }
        for (int k = 1; k <= l; ++k) {
            std::vector<RatVec> minor(k, RatVec(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) minor[i][j] = c.gram[i][j];
            CHECK(det_rational(minor) > Rat(0));
        }
    }
}

TEST_CASE("subsystem_roots on A2 and A3") {
    auto c = build_cartan('A', 2);
    auto s1 = subsystem_roots(c, {1});
    CHECK(s1.roots.size() == 2);
    CHECK(s1.components == std::vector<std::vector<int>>{{1}});
    CHECK(s1.theta[0].coords == IntVec{1, 0});

    auto s12 = subsystem_roots(c, {1, 2});
    CHECK(s12.roots.size() == 6);
    CHECK(s12.theta[0] == c.theta);

    auto c3 = build_cartan('A', 3);
    auto s13 = subsystem_roots(c3, {1, 3});
    CHECK(s13.components.size() == 2);
    CHECK(s13.roots.size() == 4);
    CHECK_THROWS(subsystem_roots(c3, {}));
}

TEST_CASE("weyl group enumeration and length agree with inversion counts") {
    for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'G', 2}}) {
        auto c = build_cartan(t, l);
        auto J = full_index_set(c);
        auto W = enumerate_finite_weyl(c, J);
        size_t expected = 0;
        if (t == 'A') expected = l == 2 ? 6 : 24;
        if (t == 'B') expected = 8;
        if (t == 'G') expected = 12;
        CHECK(W.size() == expected);
        for (const auto& w : W) {
            CHECK(finite_length(c, J, w) == Int(finite_inversions(c, J, w).size()));
            // Reduced word multiplies back.
            FiniteWeylElement p = finite_identity(c);
            for (int j : finite_reduced_word(c, J, w)) p = p * s(c, j);
            CHECK(p == w);
            // w preserves the bilinear form on the basis.
            for (int i = 1; i <= l; ++i)
                for (int j = 1; j <= l; ++j) {
                    IntVec ei(l, 0), ej(l, 0);
                    ei[i - 1] = 1;
                    ej[j - 1] = 1;
                    CHECK(c.pair(w.mat * ei, w.mat * ej) == c.pair(ei, ej));
                }
        }
    }
}

TEST_CASE("minimal coset representatives on A2") {
    auto c = build_cartan('A', 2);
    auto J = full_index_set(c);
    auto reps = minimal_coset_reps(c, J, {1});
    CHECK(reps.size() == 3);  // |W| / |W_{1}| = 6 / 2

    auto w = s(c, 2) * s(c, 1);
    auto [wK, wKpart] = decompose_coset(c, J, {1}, w);
    CHECK(wK == s(c, 2));
    CHECK(wKpart == s(c, 1));
    IntVec e1{1, 0};
    CHECK(finite_root_sign({wK.mat * e1}) > 0);

    CHECK(minimal_coset_reps(c, J, {}).size() == 6);
    auto trivial = minimal_coset_reps(c, J, J);
    CHECK(trivial.size() == 1);
    CHECK(trivial[0] == finite_identity(c));

    auto [a, b] = decompose_coset(c, J, {2}, s(c, 2));
    CHECK(a == finite_identity(c));
    CHECK(b == s(c, 2));

    auto [i1, i2] = decompose_coset(c, J, {1}, finite_identity(c));
    CHECK(i1 == finite_identity(c));
    CHECK(i2 == finite_identity(c));
}

TEST_CASE("coset decomposition roundtrip and transitivity at rank <= 3") {
    auto c = build_cartan('A', 3);
    auto J = full_index_set(c);
    std::vector<std::vector<int>> Ks = {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    for (const auto& K : Ks) {
        auto reps = minimal_coset_reps(c, J, K);
        for (const auto& w : enumerate_finite_weyl(c, J)) {
            auto [wK, wKpart] = decompose_coset(c, J, K, w);
            CHECK(wK * wKpart == w);
            CHECK(in_finite_weyl(c, K.empty() ? std::vector<int>{} : K, wKpart));
            CHECK(std::count(reps.begin(), reps.end(), wK) == 1);
            for (int k : K) {
                IntVec e(c.rank, 0);
                e[k - 1] = 1;
                CHECK(finite_root_sign({wK.mat * e}) > 0);
            }
        }
    }
    // W^K_J W^L_K = W^L_J for L inside K inside J.
    std::vector<int> K{1, 2}, L{1};
    auto left1 = minimal_coset_reps(c, J, K);
    auto left2 = minimal_coset_reps(c, K, L);
    std::set<FiniteWeylElement> prod;
    for (const auto& a : left1)
        for (const auto& b : left2) prod.insert(a * b);
    auto rhs = minimal_coset_reps(c, J, L);
    CHECK(prod == std::set<FiniteWeylElement>(rhs.begin(), rhs.end()));
}

TEST_CASE("longest element sends all positives to negatives") {
    for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'A', 3}}) {
        auto c = build_cartan(t, l);
        auto J = full_index_set(c);
        auto w0 = longest_element(c, J);
        for (const auto& r : enumerate_finite_roots(c)) {
            if (finite_root_sign(r) < 0) continue;
            CHECK(finite_root_sign({w0.mat * r.coords}) < 0);
        }
        CHECK(w0 * w0 == finite_identity(c));
    }
    // Parabolic longest element on A2, J = {1}.
    auto c = build_cartan('A', 2);
    CHECK(longest_element(c, {1}) == s(c, 1));
}

TEST_CASE("inversion set recovery roundtrip over W(A3)") {
    auto c = build_cartan('A', 3);
    auto J = full_index_set(c);
    for (const auto& w : enumerate_finite_weyl(c, J)) {
        auto inv = finite_inversions(c, J, w);
        CHECK(recover_from_finite_inversions(c, J, inv) == w);
    }
    CHECK_THROWS(recover_from_finite_inversions(
        c, J, {FiniteRoot{IntVec{1, 1, 0}}}));  // not closed: missing simple roots
}
