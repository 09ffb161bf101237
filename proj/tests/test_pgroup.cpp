#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gshds/pgroup.hpp"

using namespace gshds;

TEST_CASE("make_group computes v, s, beta") {
    GroupSpec a = make_group(3, {1, 1, 1});
    CHECK(a.v == 27);
    CHECK(a.s == 1);
    CHECK(a.beta == 3);
    GroupSpec b = make_group(3, {2, 2});
    CHECK(b.v == 81);
    CHECK(b.s == 2);
    CHECK(b.beta == 4);
    GroupSpec c = make_group(3, {2, 2, 2, 1});
    CHECK(c.v == 2187);
    CHECK(c.s == 2);
    CHECK(c.beta == 7);
}

TEST_CASE("make_group rejects bad input") {
    CHECK_THROWS_AS(make_group(4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(make_group(9, {1}), std::invalid_argument);
    CHECK_THROWS_AS(make_group(2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(make_group(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_group(3, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_group(3, {2, 0}), std::invalid_argument);
}

TEST_CASE("group DSL round trip") {
    GroupSpec G = parse_group_dsl("p=3; exps=2,2,1");
    CHECK(G.v == 3 * 9 * 9);
    CHECK(group_dsl(G) == "p=3;exps=2,2,1");
    CHECK_THROWS_AS(parse_group_dsl("p=3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_dsl("exps=1;p=3"), std::invalid_argument);
}

TEST_CASE("scalar_mul basics") {
    GroupSpec G = make_group(3, {2});
    CHECK(scalar_mul(G, 1, {3}) == GroupElement{3});
    CHECK(scalar_mul(G, 4, {3}) == GroupElement{3});  // 12 mod 9
    CHECK(scalar_mul(G, 9, {1}) == GroupElement{0});  // n = exp(G)
    CHECK(scalar_mul(G, -1, {1}) == GroupElement{8});
}

TEST_CASE("element orders") {
    GroupSpec G = make_group(3, {2});
    CHECK(elem_order(G, {0}) == 1);
    CHECK(elem_order(G, {3}) == 3);
    CHECK(elem_order(G, {1}) == 9);
    GroupSpec H = make_group(3, {2, 1});
    CHECK(elem_order(H, {3, 2}) == 3);
    CHECK(elem_order(H, {2, 1}) == 9);
}

TEST_CASE("scalar_mul is a bijection for units") {
    GroupSpec G = make_group(3, {2, 1});
    for (long long n : {1, 2, 4, 5, 7, 8}) {
        std::set<long long> img;
        for (long long r = 0; r < G.v; ++r)
            img.insert(G.rank(scalar_mul(G, n, G.unrank(r))));
        CHECK(img.size() == static_cast<size_t>(G.v));
    }
}

TEST_CASE("orbit tables for Z/9") {
    GroupSpec G = make_group(3, {2});
    UnitOrbitTable T = orbit_tables(G);
    REQUIRE(T.r() == 2);
    // cyclic canonical ordering: descending powers p^{s-1}, ..., 1
    CHECK(T.reps[0] == GroupElement{3});
    CHECK(T.reps[1] == GroupElement{1});
    CHECK(T.omega_size[0] == 2);
    CHECK(T.omega_size[1] == 6);
    CHECK(T.n0 == 2);
    // squares mod 9 are {1,4,7}
    CHECK(T.orbit_pos[1] == std::vector<GroupElement>{{1}, {4}, {7}});
    CHECK(T.orbit_neg[1] == std::vector<GroupElement>{{2}, {5}, {8}});
}

TEST_CASE("orbit tables cover G minus 0 with equal halves") {
    for (auto exps : {std::vector<int>{1, 1, 1}, std::vector<int>{2, 1},
                      std::vector<int>{2, 2}, std::vector<int>{3}}) {
        GroupSpec G = make_group(3, exps);
        UnitOrbitTable T = orbit_tables(G);
        long long total = 0;
        for (long i = 0; i < T.r(); ++i) {
            CHECK(T.orbit_pos[i].size() == T.orbit_neg[i].size());
            total += T.omega_size[i];
        }
        CHECK(total == G.v - 1);
    }
}

TEST_CASE("orbit counts: r = 13 for (Z/3)^3 and r = 1 for Z/3") {
    CHECK(orbit_tables(make_group(3, {1, 1, 1})).r() == 13);
    UnitOrbitTable T = orbit_tables(make_group(3, {1}));
    REQUIRE(T.r() == 1);
    CHECK(T.orbit_pos[0] == std::vector<GroupElement>{{1}});
    CHECK(T.orbit_neg[0] == std::vector<GroupElement>{{2}});
}

TEST_CASE("n0^2 maps each orbit half to itself") {
    GroupSpec G = make_group(5, {1, 1});
    UnitOrbitTable T = orbit_tables(G);
    long long n0sq = T.n0 * T.n0;
    for (long i = 0; i < T.r(); ++i)
        for (const auto& g : T.orbit_pos[i]) {
            long long rk = G.rank(scalar_mul(G, n0sq, g));
            CHECK(T.orbit_of[rk] == i);
            CHECK(T.half_of[rk] == 1);
        }
}

TEST_CASE("kernel and image of mu_{p^k}") {
    GroupSpec G = make_group(3, {2});
    SUBCASE("k = 0") {
        KernelImage KI = kernel_image_mu(G, 0);
        CHECK(KI.kernel.size() == 1);
        CHECK(KI.image.size() == 9);
    }
    SUBCASE("k = 1") {
        KernelImage KI = kernel_image_mu(G, 1);
        CHECK(KI.kernel.size() == 3);
        CHECK(KI.image.size() == 3);
        CHECK(KI.kernel.spec.exponents == std::vector<int>{1});
        std::vector<GroupElement> want = {{0}, {3}, {6}};
        CHECK(KI.kernel.elements == want);
        CHECK(KI.image.elements == want);
    }
    SUBCASE("|L| |H| = |G| always") {
        GroupSpec H = make_group(3, {2, 2});
        for (int k = 0; k <= 2; ++k) {
            KernelImage KI = kernel_image_mu(H, k);
            CHECK(KI.kernel.size() * KI.image.size() == H.v);
        }
        KernelImage KI = kernel_image_mu(H, 1);
        CHECK(KI.kernel.size() == 9);
        CHECK(KI.image.size() == 9);
    }
}

TEST_CASE("subgroup_from_elements rejects non-closed lists") {
    GroupSpec G = make_group(3, {2});
    CHECK_THROWS_AS(subgroup_from_elements(G, {{0}, {3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(subgroup_from_elements(G, {{3}, {6}}),
                    std::invalid_argument);  // missing 0
}

TEST_CASE("quotient projection: trivial and identity cases") {
    GroupSpec G = make_group(3, {2});
    SUBCASE("L = G gives the trivial quotient") {
        Subgroup L = subgroup_from_elements(G, all_elements(G));
        QuotientProjection Q = quotient_projection(G, L);
        CHECK(Q.quotient.v == 1);
        CHECK(Q.quotient.is_trivial());
    }
    SUBCASE("L = {0} gives an identity projection") {
        Subgroup L = subgroup_from_elements(G, {G.zero()});
        QuotientProjection Q = quotient_projection(G, L);
        CHECK(Q.quotient.v == G.v);
        CHECK(Q.quotient.exponents == G.exponents);
        for (long long r = 0; r < G.v; ++r)
            CHECK(Q.coset_reps[Q.proj[r]] == G.unrank(r));
    }
}

TEST_CASE("quotient of (Z/9)x(Z/3) by <3>x{0} is (Z/3)^2") {
    GroupSpec G = make_group(3, {2, 1});
    std::vector<GroupElement> ls = {{0, 0}, {3, 0}, {6, 0}};
    Subgroup L = subgroup_from_elements(G, ls);
    QuotientProjection Q = quotient_projection(G, L);
    CHECK(Q.quotient.exponents == std::vector<int>{1, 1});
    // surjective homomorphism with kernel L, compatible with scalar_mul
    const GroupSpec& H = Q.quotient;
    std::set<long long> image;
    for (long long r = 0; r < G.v; ++r) image.insert(Q.proj[r]);
    CHECK(image.size() == static_cast<size_t>(H.v));
    for (long long a = 0; a < G.v; ++a) {
        GroupElement ga = G.unrank(a);
        CHECK((Q.proj[a] == Q.proj[0]) == L.contains(ga));
        for (long long b = 0; b < G.v; ++b) {
            GroupElement gb = G.unrank(b);
            long long lhs = Q.proj[G.rank(G.add(ga, gb))];
            GroupElement ha = H.unrank(Q.proj[a]);
            GroupElement hb = H.unrank(Q.proj[b]);
            CHECK(lhs == H.rank(H.add(ha, hb)));
        }
        CHECK(Q.proj[G.rank(scalar_mul(G, 5, ga))] ==
              H.rank(scalar_mul(H, 5, H.unrank(Q.proj[a]))));
    }
}

TEST_CASE("subgroup coordinates embed consistently") {
    GroupSpec G = make_group(3, {2, 2});
    KernelImage KI = kernel_image_mu(G, 1);
    const Subgroup& L = KI.kernel;
    for (const auto& e : L.elements) {
        auto c = L.coords_of(e);
        REQUIRE(c.has_value());
        CHECK(L.embed(*c) == e);
    }
    CHECK(!L.coords_of(GroupElement{1, 0}).has_value());
}

TEST_CASE("random subgroups decompose correctly") {
    GroupSpec G = make_group(3, {2, 1, 1});
    // cyclic subgroups generated by each element
    for (long long r = 0; r < G.v; ++r) {
        GroupElement g = G.unrank(r);
        std::vector<GroupElement> elems;
        GroupElement cur = G.zero();
        do {
            elems.push_back(cur);
            cur = G.add(cur, g);
        } while (G.rank(cur) != 0);
        Subgroup S = subgroup_from_elements(G, elems);
        CHECK(S.size() == elem_order(G, g));
        CHECK(S.spec.v == S.size());
    }
}

TEST_CASE("generated subgroups decompose into valid structures") {
    std::mt19937 rng(43);
    GroupSpec G = make_group(3, {2, 2, 1});
    for (int trial = 0; trial < 12; ++trial) {
        // closure of two random generators
        GroupElement a = G.unrank(rng() % G.v), b = G.unrank(rng() % G.v);
        std::vector<char> in(G.v, 0);
        std::vector<long long> stack = {0};
        in[0] = 1;
        while (!stack.empty()) {
            GroupElement g = G.unrank(stack.back());
            stack.pop_back();
            for (const GroupElement* gen : {&a, &b}) {
                long long r = G.rank(G.add(g, *gen));
                if (!in[r]) {
                    in[r] = 1;
                    stack.push_back(r);
                }
            }
        }
        std::vector<GroupElement> elems;
        for (long long r = 0; r < G.v; ++r)
            if (in[r]) elems.push_back(G.unrank(r));
        Subgroup S = subgroup_from_elements(G, elems);
        CHECK(S.spec.v == S.size());
        // coordinates are a bijection onto the element list
        std::set<long long> seen;
        for (long long sr = 0; sr < S.spec.v; ++sr) {
            GroupElement img = S.embed(S.spec.unrank(sr));
            CHECK(S.contains(img));
            seen.insert(G.rank(img));
        }
        CHECK(seen.size() == static_cast<size_t>(S.size()));
    }
}

TEST_CASE("legendre and smallest qnr") {
    CHECK(legendre(2, 3) == -1);
    CHECK(legendre(0, 3) == 0);
    CHECK(legendre(4, 5) == 1);
    CHECK(smallest_qnr(3) == 2);
    CHECK(smallest_qnr(5) == 2);
    CHECK(smallest_qnr(7) == 3);
}
