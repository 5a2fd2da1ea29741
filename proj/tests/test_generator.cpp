#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symwsc/generator.hpp"
#include "symwsc/separation.hpp"

#include <numeric>
#include <set>

using namespace symwsc;

namespace {

KSubset ks(std::vector<int> v, int n) { return KSubset(std::move(v), n); }

Collection coll(int n, int k, std::vector<std::vector<int>> vs) {
    std::vector<KSubset> xs;
    for (auto& v : vs) xs.push_back(ks(v, n));
    return Collection(n, k, std::move(xs));
}

const Collection golden_363 = coll(6, 3,
                                   {{1, 2, 3},
                                    {2, 3, 4},
                                    {3, 4, 5},
                                    {4, 5, 6},
                                    {1, 5, 6},
                                    {1, 2, 6},
                                    {1, 2, 5},
                                    {2, 4, 5},
                                    {1, 2, 4},
                                    {1, 4, 5}});

std::vector<Feasibility> feasible_divisible(int max_n) {
    std::vector<Feasibility> out;
    for (int n = 2; n <= max_n; ++n)
        for (int ell = 1; ell < n; ++ell) {
            if (n % ell != 0) continue;
            for (int k = 1; k < n; ++k) {
                Feasibility f = feasibility(k, n, ell);
                if (f.feasible) out.push_back(f);
            }
        }
    return out;
}

} // namespace

TEST_CASE("successor on sorted ground sets") {
    std::vector<int> P = {1, 2, 4, 5};
    CHECK(successor(P, 5) == 1);
    CHECK(successor(P, 2) == 4);
    CHECK(successor({7}, 7) == 7);
    CHECK_THROWS_AS(successor(P, 3), InputError);
    CHECK(predecessor(P, 1) == 5);
}

TEST_CASE("stage ground sets of the running example") {
    Feasibility f = feasibility(3, 6, 3);
    OrbitOrder order{{3, 2, 1}};

    auto g1 = ground_sets(f, order, 1);
    CHECK(g1.P == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(g1.P_h[0] == std::vector<int>{1, 2, 3, 4, 5}); // drops a_1 + ell = 6
    CHECK(g1.P_h[1] == g1.P);

    auto g2 = ground_sets(f, order, 2);
    CHECK(g2.P == std::vector<int>{1, 2, 4, 5});
    CHECK(g2.P_h[0] == std::vector<int>{1, 2, 4});
    CHECK(g2.P_h[1] == std::vector<int>{1, 2, 4, 5});

    auto g3 = ground_sets(f, order, 3);
    CHECK(g3.P == std::vector<int>{1, 4});
}

TEST_CASE("index windows") {
    Feasibility f = feasibility(3, 6, 3);
    OrbitOrder order{{3, 2, 1}};
    CHECK(index_window(f, order, 1) == std::vector<int>{1, 2, 3});
    CHECK(index_window(f, order, 2) == std::vector<int>{1, 2});

    // wraparound: a_s - ell reduces to n and the window starts at its successor
    Feasibility f2 = feasibility(2, 4, 2);
    OrbitOrder o2{{2, 1}};
    CHECK(index_window(f2, o2, 1) == std::vector<int>{1, 2});
}

TEST_CASE("interval extraction") {
    Feasibility f = feasibility(3, 6, 3);
    OrbitOrder order{{3, 2, 1}};

    auto full = interval_I(f, order, 1, 1, f.d);
    REQUIRE(full.has_value());
    CHECK(*full == ks({1, 2, 3}, 6));

    auto trunc = interval_I(f, order, 2, 1, 1);
    REQUIRE(trunc.has_value());
    CHECK(*trunc == ks({1, 2, 4}, 6));

    // stage 3 has |P_3| = 2 < k: everything collides
    for (int i : {1, 4})
        for (int h = 1; h <= 2; ++h) CHECK_FALSE(interval_I(f, order, 3, i, h).has_value());

    // i outside the truncation is rejected: 5 = a_2 + ell is cut from P_{2,1}
    CHECK_FALSE(interval_I(f, order, 2, 5, 1).has_value());
    CHECK(interval_I(f, order, 2, 5, 2).has_value());
}

TEST_CASE("orbit representatives B_s") {
    Feasibility f = feasibility(3, 6, 3);
    OrbitOrder order{{3, 2, 1}};
    CHECK(build_B_s(f, order, 1) == coll(6, 3, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}));
    CHECK(build_B_s(f, order, 2) == coll(6, 3, {{1, 2, 4}, {2, 4, 5}}));
    CHECK(build_B_s(f, order, 3).empty());
}

TEST_CASE("orbit closures L_s") {
    Feasibility f = feasibility(3, 6, 3);
    OrbitOrder order{{3, 2, 1}};
    CHECK(build_L_s(f, order, 1) ==
          coll(6, 3, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {1, 5, 6}, {1, 2, 6}}));
    CHECK(build_L_s(f, order, 2) == coll(6, 3, {{1, 2, 4}, {1, 4, 5}, {2, 4, 5}, {1, 2, 5}}));
    CHECK(build_L_s(f, order, 3).empty());
}

TEST_CASE("predicted sizes") {
    Feasibility f = feasibility(3, 6, 3); // c = 1, r = 1
    auto p1 = predicted_sizes(f, 1);
    CHECK(*p1.B == 3);
    CHECK(*p1.L == 6);
    auto p2 = predicted_sizes(f, 2); // s = ell - r: k - r under c = 1
    CHECK(*p2.B == 2);
    CHECK(*p2.L == 4);
    auto p3 = predicted_sizes(f, 3);
    CHECK(*p3.L == 0);

    Feasibility f2 = feasibility(2, 6, 3); // c = 0, r = 1
    CHECK(*predicted_sizes(f2, 1).B == 2);
    CHECK(*predicted_sizes(f2, 2).B == 2);
    CHECK(*predicted_sizes(f2, 3).L == 1);

    Feasibility f3 = feasibility(2, 6, 2); // d = 3, c = -1, r = 1
    CHECK(*predicted_sizes(f3, 1).B == 2);
    CHECK(*predicted_sizes(f3, 2).L == 3); // k + 1
}

TEST_CASE("divisible generator reproduces the golden collection") {
    Feasibility f = feasibility(3, 6, 3);
    OrbitOrder order{{3, 2, 1}};
    CHECK(generate_divisible(f, order) == golden_363);
}

TEST_CASE("k = 1 yields the singletons") {
    for (int n : {4, 6, 9})
        for (int ell = 1; ell < n; ++ell) {
            if (n % ell != 0) continue;
            CHECK(generate(1, n, ell) == all_cyclic_intervals(n, 1));
        }
}

TEST_CASE("derived instance (2,6,3)") {
    Collection D = generate(2, 6, 3, OrbitOrder{{3, 2, 1}});
    CHECK(D.size() == 9);
    CHECK(is_ws_collection(D).separated);
    CHECK(is_rho_symmetric(D, 3).symmetric);
    CHECK(check_maximal(D).maximal);
    CHECK(D == coll(6, 2,
                    {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {2, 4}, {1, 5}, {1, 4}}));
}

TEST_CASE("stagewise counts and invariants over the divisible sweep") {
    for (const Feasibility& f : feasible_divisible(9)) {
        OrbitOrder order = OrbitOrder::descending(f.ell);
        GeneratorTrace trace = generate_divisible_trace(f, order);

        Collection seen(f.n, f.k);
        for (const StageTrace& st : trace.stages) {
            if (st.predicted.B) CHECK(st.B.size() == *st.predicted.B);
            if (st.predicted.L) CHECK(st.L.size() == *st.predicted.L);

            // L_s is the orbit closure of B_s and disjoint from earlier stages
            CHECK(is_rho_symmetric(st.L, f.ell).symmetric);
            for (const KSubset& I : st.L.members) CHECK_FALSE(seen.contains(I));
            seen.merge(st.L);

            // each representative's orbit is internally separated
            for (const KSubset& I : st.B.members)
                CHECK(is_ws_collection(rho_orbit(I, f.ell)).separated);
        }

        // cross-stage separation
        for (size_t a = 0; a < trace.stages.size(); ++a)
            for (size_t b = a + 1; b < trace.stages.size(); ++b)
                for (const KSubset& I : trace.stages[a].L.members)
                    for (const KSubset& J : trace.stages[b].L.members)
                        CHECK(is_weakly_separated(I, J).separated);

        auto rep = check_maximal(trace.result);
        CHECK(rep.maximal);
        CHECK(rep.has_all_intervals);
        CHECK(is_rho_symmetric(trace.result, f.ell).symmetric);
    }
}

TEST_CASE("fold map") {
    // n = 6, ell = 4: g = 2, d = 3
    CHECK(fold_map_apply(ks({3}, 6), 4) == ks({5}, 12));
    CHECK(fold_map_apply(ks({6}, 6), 4) == ks({10}, 12));
    CHECK(fold_map_apply(ks({1}, 6), 4) == ks({1}, 12));
    CHECK(fold_map_invert(ks({1, 2, 5}, 12), 6, 4) == ks({1, 2, 3}, 6));
    CHECK_THROWS_AS(fold_map_invert(ks({3}, 12), 6, 4), InputError);

    // F is increasing and commutes with the successor maps (F o S_[n] = S_A o F)
    const int n = 6, ell = 4;
    const int g = 2, d = 3;
    std::vector<int> image; // A = image of F, sorted
    for (int e = 1; e <= n; ++e) image.push_back(fold_map_apply(ks({e}, n), ell).elems[0]);
    std::vector<int> A = image;
    std::sort(A.begin(), A.end());
    CHECK(static_cast<int>(A.size()) == g * d);
    for (int e = 1; e <= n; ++e) {
        int lhs = image[reduce1(e + 1, n) - 1];
        int rhs = successor(A, image[e - 1]);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("folding instance (3,6,4)") {
    GeneratorTrace trace = generate_trace(3, 6, 4);
    CHECK(trace.folded);
    REQUIRE(trace.fold.has_value());
    CHECK(trace.fold->n_prime == 12);
    CHECK(trace.fold->dropped_stages == 2);
    CHECK(trace.fold->D_prime.size() == 10);

    const Collection& D = trace.result;
    CHECK(D.size() == 10);
    CHECK(is_ws_collection(D).separated);
    CHECK(is_rho_symmetric(D, 4).symmetric);
    CHECK(check_maximal(D).maximal);
    CHECK(check_maximal(D).has_all_intervals);
}

TEST_CASE("orbit order validation") {
    CHECK_THROWS_AS(validate_order(OrbitOrder{{1, 2}}, 3, 3), InputError);
    CHECK_THROWS_AS(validate_order(OrbitOrder{{1, 1, 2}}, 3, 3), InputError);
    // folding constraint for (3,6,4): g = 2, classes {3,4} must come first
    CHECK_THROWS_AS(validate_order(OrbitOrder{{1, 2, 3, 4}}, 4, 2), InputError);
    CHECK_NOTHROW(validate_order(OrbitOrder{{4, 3, 2, 1}}, 4, 2));
    CHECK_THROWS_AS(generate(3, 6, 4, OrbitOrder{{1, 2, 3, 4}}), InputError);
}

TEST_CASE("generate rejects infeasible parameters") {
    CHECK_THROWS_AS(generate(2, 5, 1), InfeasibleError);
    CHECK(generate(3, 6, 3, OrbitOrder{{3, 2, 1}}) == golden_363);
}

TEST_CASE("informal walk of the running example") {
    Feasibility f = feasibility(3, 6, 3);
    OrbitOrder order{{3, 2, 1}};
    InformalTrace trace = informal_generate(f, order);

    // the stage-2 walk seeded at the interval ending in a_2 = 2 visits
    // {5,1,2} -> {1,2,4} -> {2,4,5} -> {2,4,1}
    bool found = false;
    for (const InformalWalk& w : trace.walks) {
        if (w.s != 2 || w.start != 5) continue;
        found = true;
        REQUIRE(w.visited.size() == 4);
        CHECK(w.visited[0] == ks({1, 2, 5}, 6));
        CHECK(w.visited[1] == ks({1, 2, 4}, 6));
        CHECK(w.visited[2] == ks({2, 4, 5}, 6));
        CHECK(w.visited[3] == ks({1, 2, 4}, 6));
    }
    CHECK(found);

    CHECK(trace.result == golden_363);
    CHECK(trace.B[2].empty()); // degenerate stage: |P_3| < k
}

TEST_CASE("informal process agrees with the formal one") {
    for (const Feasibility& f : feasible_divisible(9)) {
        OrbitOrder order = OrbitOrder::descending(f.ell);
        CHECK(informal_generate(f, order).result == generate_divisible(f, order));
    }
}
