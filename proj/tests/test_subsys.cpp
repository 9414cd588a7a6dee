#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "convord/subsys.hpp"

using namespace convord;

namespace {

Root rt(Int level, IntVec fin) { return {level, std::move(fin)}; }

std::map<AffineWeylElement, Int> subsystem_ball(const Subsystem& s, Int maxlen) {
    std::map<AffineWeylElement, Int> dist;
    std::vector<AffineWeylElement> frontier{affine_identity(s.cartan)};
    dist[frontier[0]] = 0;
    for (Int d = 0; d < maxlen; ++d) {
        std::vector<AffineWeylElement> next;
        for (const auto& x : frontier)
            for (const auto& g : s.gens) {
                auto y = mul(g, x);
                if (dist.emplace(y, d + 1).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return dist;
}

}  // namespace

TEST_CASE("subsystem bases on A2^(1)") {
    auto c = build_cartan('A', 2);

    auto s1 = build_subsystem(c, {1});
    CHECK(s1.pi == std::vector<Root>{rt(0, {1, 0}), rt(1, {-1, 0})});
    CHECK(s1.num_generators() == 2);
    CHECK(s1.gen_ids[1] == "s(1;-1,0)");

    auto sI = build_subsystem(c, {1, 2});
    CHECK(sI.pi == std::vector<Root>{rt(0, {1, 0}), rt(0, {0, 1}), rt(1, {-1, -1})});
    CHECK(sI.num_generators() == 3);

    CHECK_THROWS(build_subsystem(c, {}));

    auto c3 = build_cartan('A', 3);
    auto s13 = build_subsystem(c3, {1, 3});
    CHECK(s13.components.size() == 2);
    CHECK(s13.num_generators() == 4);
}

TEST_CASE("subsystem length and membership") {
    auto c = build_cartan('A', 2);
    auto s1 = build_subsystem(c, {1});
    CHECK(subsystem_length(s1, affine_identity(c)) == 0);

    auto y = mul(s1.gens[0], s1.gens[1]);  // s_1 s_{delta-alpha1}
    CHECK(subsystem_length(s1, y) == 2);

    // s_2 is not in W_{{1}}.
    CHECK(!in_subsystem(s1, simple_reflection(c, 2)));
    CHECK_THROWS_WITH(subsystem_length(s1, simple_reflection(c, 2)), "element not in subsystem");

    // For J equal to the full finite index set, l_J agrees with the affine length.
    auto sI = build_subsystem(c, {1, 2});
    auto x = mul(mul(simple_reflection(c, 0), simple_reflection(c, 1)), simple_reflection(c, 2));
    CHECK(subsystem_length(sI, x) == length(c, x));
}

TEST_CASE("phi_J examples and window filter equality") {
    auto c = build_cartan('A', 2);
    auto s1 = build_subsystem(c, {1});
    CHECK(phi_J(s1, affine_identity(c)).empty());

    auto y = mul(s1.gens[0], s1.gens[1]);
    auto phi = phi_J(s1, y);
    CHECK(std::set<Root>(phi.begin(), phi.end()) ==
          std::set<Root>{rt(0, {1, 0}), rt(1, {1, 0})});

    auto sI = build_subsystem(c, {1, 2});
    auto phi2 = phi_J(sI, simple_reflection(c, 2));
    CHECK(std::set<Root>(phi2.begin(), phi2.end()) == std::set<Root>{rt(0, {0, 1})});

    // Partial-product formula equals the filter definition on a window, and
    // y -> Phi_J(y) is injective on the ball.
    const Int D = 8;
    for (const auto& sub : {s1, sI}) {
        std::vector<Root> window;
        for (const auto& e : sub.delta_J) {
            Int m0 = finite_root_sign(e) > 0 ? 0 : 1;
            for (Int m = m0; m <= D; ++m) window.push_back({m, e.coords});
        }
        std::map<std::set<Root>, AffineWeylElement> seen;
        for (const auto& [yy, len] : subsystem_ball(sub, 6)) {
            auto pp = phi_J(sub, yy);
            CHECK(Int(pp.size()) == len);
            std::set<Root> formula(pp.begin(), pp.end());
            auto yinv = inverse_element(c, yy);
            std::set<Root> filter;
            for (const auto& r : window)
                if (!is_positive(c, act(c, yinv, r))) filter.insert(r);
            CHECK(formula == filter);
            auto [it, fresh] = seen.emplace(formula, yy);
            CHECK(fresh);
        }
    }
}

TEST_CASE("translation factorization W_J = T_J W_J-finite") {
    auto c = build_cartan('A', 2);
    for (const auto& J : std::vector<std::vector<int>>{{1}, {1, 2}}) {
        auto sub = build_subsystem(c, J);
        for (const auto& [y, len] : subsystem_ball(sub, 6)) {
            // Translation part lies in M_J: integral coefficients over J-coroots,
            // vanishing elsewhere.
            RatVec tau = y.tau;
            for (int j : sub.J) {
                Rat cj = tau[j - 1] * c.gram[j - 1][j - 1] / Rat(2);
                CHECK(is_integral(cj));
                tau[j - 1] = Rat(0);
            }
            for (const auto& x : tau) CHECK(x == Rat(0));
            // Finite part lies in the finite parabolic subgroup.
            CHECK(in_finite_weyl(c, sub.J, FiniteWeylElement{y.fin}));
        }
    }
}

TEST_CASE("generators of distinct components commute and inversion sets factor") {
    auto c = build_cartan('A', 3);
    auto sub = build_subsystem(c, {1, 3});
    // Gens: s_1, s_3, then the affine generator of each component.
    REQUIRE(sub.num_generators() == 4);
    std::vector<int> comp_of = {0, 1, 0, 1};  // by construction order
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (comp_of[a] == comp_of[b]) continue;
            CHECK(mul(sub.gens[a], sub.gens[b]) == mul(sub.gens[b], sub.gens[a]));
        }
    auto y = mul(mul(sub.gens[0], sub.gens[1]), mul(sub.gens[2], sub.gens[3]));
    auto phi = phi_J(sub, y);
    CHECK(phi.size() == 4);
    // Each member is supported on a single component.
    for (const auto& r : phi) {
        bool on1 = r.finite[0] != 0, on3 = r.finite[2] != 0;
        CHECK(r.finite[1] == 0);
        CHECK((on1 ^ on3));
    }
}

TEST_CASE("lattice_element pairings") {
    auto c = build_cartan('A', 2);
    auto sI = build_subsystem(c, {1, 2});
    auto check_pairings = [&](const Subsystem& sub, const std::vector<int>& K, const RatVec& lam) {
        std::set<int> Kset(K.begin(), K.end());
        for (int j : sub.J) {
            IntVec e(c.rank, 0);
            e[j - 1] = 1;
            Rat p = c.pair(e, lam);
            if (Kset.count(j))
                CHECK(p == Rat(0));
            else
                CHECK(p > Rat(0));
        }
    };
    auto l0 = lattice_element(sI, {});
    check_pairings(sI, {}, l0);
    auto l1 = lattice_element(sI, {1});
    check_pairings(sI, {1}, l1);

    auto s1 = build_subsystem(c, {1});
    auto l2 = lattice_element(s1, {});
    check_pairings(s1, {}, l2);

    CHECK_THROWS(lattice_element(sI, {1, 2}));

    // The worked example: lambda = coroot(1) + 2*coroot(2) pairs to (0, 3) on (alpha_1, alpha_2).
    IntVec e1{1, 0}, e2{0, 1};
    RatVec lam = lattice_element(sI, {1}, {{2, 3}});
    CHECK(c.pair(e1, lam) == Rat(0));
    CHECK(c.pair(e2, lam) > Rat(0));
}

TEST_CASE("recover_from_phi inverts phi_J on a ball") {
    auto c = build_cartan('A', 2);
    auto sub = build_subsystem(c, {1, 2});
    for (const auto& [y, len] : subsystem_ball(sub, 5)) {
        CHECK(recover_from_phi(sub, phi_J(sub, y)) == y);
    }
    CHECK_THROWS(recover_from_phi(sub, {rt(1, {1, 1})}));
}
