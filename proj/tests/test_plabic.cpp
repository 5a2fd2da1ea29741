#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symwsc/generator.hpp"
#include "symwsc/oracle.hpp"
#include "symwsc/plabic.hpp"
#include "symwsc/separation.hpp"

#include <set>

using namespace symwsc;

namespace {

KSubset ks(std::vector<int> v, int n) { return KSubset(std::move(v), n); }

Collection coll(int n, int k, std::vector<std::vector<int>> vs) {
    std::vector<KSubset> xs;
    for (auto& v : vs) xs.push_back(ks(v, n));
    return Collection(n, k, std::move(xs));
}

Collection example36() {
    return coll(6, 3,
                {{1, 2, 3},
                 {2, 3, 4},
                 {3, 4, 5},
                 {4, 5, 6},
                 {1, 5, 6},
                 {1, 2, 6},
                 {1, 3, 6},
                 {2, 3, 6},
                 {3, 4, 6},
                 {3, 5, 6}});
}

const Clique* find_clique(const std::vector<Clique>& cs, Clique::Color color,
                          std::vector<int> core) {
    for (const Clique& c : cs)
        if (c.color == color && c.core == core) return &c;
    return nullptr;
}

std::vector<Collection> sweep_collections(int max_n) {
    std::vector<Collection> out;
    for (int n = 4; n <= max_n; ++n)
        for (int ell = 1; ell < n; ++ell)
            for (int k = 1; k <= n / 2; ++k) {
                Feasibility f = feasibility(k, n, ell);
                if (!f.feasible) continue;
                out.push_back(generate(k, n, ell));
            }
    return out;
}

} // namespace

TEST_CASE("cliques of the running example") {
    auto cs = cliques(example36());

    std::set<std::vector<int>> white_nontrivial, black_nontrivial;
    for (const Clique& c : cs) {
        if (!c.nontrivial()) continue;
        (c.color == Clique::Color::White ? white_nontrivial : black_nontrivial).insert(c.core);
    }
    CHECK(white_nontrivial == std::set<std::vector<int>>{
                                  {2, 3}, {5, 6}, {1, 6}, {3, 4}, {3, 6}});
    CHECK(black_nontrivial == std::set<std::vector<int>>{
                                  {1, 2, 3, 6}, {3, 4, 5, 6}, {2, 3, 4, 6}, {1, 3, 5, 6}});

    const Clique* w36 = find_clique(cs, Clique::Color::White, {3, 6});
    REQUIRE(w36 != nullptr);
    CHECK(w36->members == std::vector<KSubset>{ks({1, 3, 6}, 6), ks({2, 3, 6}, 6),
                                               ks({3, 4, 6}, 6), ks({3, 5, 6}, 6)});

    const Clique* b1356 = find_clique(cs, Clique::Color::Black, {1, 3, 5, 6});
    REQUIRE(b1356 != nullptr);
    CHECK(b1356->members == std::vector<KSubset>{ks({3, 5, 6}, 6), ks({1, 5, 6}, 6),
                                                 ks({1, 3, 6}, 6)});
    // sorted by the removed element b: 1 -> 356, 3 -> 156, 5 -> 136
    CHECK(b1356->members[0] == ks({3, 5, 6}, 6));
    CHECK(b1356->members[1] == ks({1, 5, 6}, 6));
    CHECK(b1356->members[2] == ks({1, 3, 6}, 6));
}

TEST_CASE("cliques at k = 1") {
    Collection singles = all_cyclic_intervals(5, 1);
    auto cs = cliques(singles);
    int nontrivial_white = 0, nontrivial_black = 0;
    for (const Clique& c : cs) {
        if (!c.nontrivial()) continue;
        if (c.color == Clique::Color::White) {
            ++nontrivial_white;
            CHECK(c.core.empty());
            CHECK(c.members.size() == 5);
        } else {
            ++nontrivial_black;
        }
    }
    CHECK(nontrivial_white == 1);
    CHECK(nontrivial_black == 0);
}

TEST_CASE("tiling of the running example") {
    PlabicTiling T = build_tiling(example36());
    CHECK(T.vertices.size() == 10);
    CHECK(T.faces.size() == 9);
    int whites = 0, blacks = 0;
    for (const Clique& c : T.faces) (c.color == Clique::Color::White ? whites : blacks)++;
    CHECK(whites == 5);
    CHECK(blacks == 4);
    CHECK(T.edges.size() == 18); // V - E + F = 1
    CHECK(T.boundary_cycle.size() == 6);
    CHECK(T.boundary_cycle[0] == ks({1, 2, 3}, 6));
}

TEST_CASE("tiling rejects non-maximal input") {
    Collection small = coll(6, 3, {{1, 2, 3}, {2, 3, 4}});
    CHECK_THROWS_AS(build_tiling(small), ValidationError);
}

TEST_CASE("k = 1 tiling and its dual star") {
    Collection singles = all_cyclic_intervals(5, 1);
    PlabicTiling T = build_tiling(singles);
    CHECK(T.faces.size() == 1);
    CHECK(T.edges.size() == 5);

    PlabicGraph G = dual_plabic_graph(T);
    CHECK(G.verts.size() == 1);
    CHECK(G.verts[0].color == VColor::White);
    CHECK(G.degree(0) == 5);
    auto perm = trip_permutation(G);
    for (int p = 1; p <= 5; ++p) CHECK(perm[p] == p % 5 + 1);
}

TEST_CASE("dual graph of the running example") {
    PlabicTiling T = build_tiling(example36());
    PlabicGraph G = dual_plabic_graph(T);
    CHECK(G.verts.size() == 9);
    CHECK(G.edges.size() == 18); // 12 internal + 6 pendants

    // bipartite with white vertices dual to white cliques
    for (const auto& e : G.edges) {
        if (e.a >= 0 && e.b >= 0)
            CHECK(G.verts[e.a].color != G.verts[e.b].color);
    }

    // the face labels reproduce the collection and have uniform size 3
    Collection labels = face_label_collection(G);
    CHECK(labels == example36());
    CHECK(graph_rank(G) == 3);

    // trips shift by k
    auto perm = trip_permutation(G);
    for (int p = 1; p <= 6; ++p) CHECK(perm[p] == reduce1(p + 3, 6));
}

TEST_CASE("duality round-trip over the sweep") {
    for (const Collection& D : sweep_collections(9)) {
        PlabicTiling T = build_tiling(D);
        PlabicGraph G = dual_plabic_graph(T);
        CHECK(face_label_collection(G) == D);
        auto perm = trip_permutation(G);
        for (int p = 1; p <= D.n; ++p) CHECK(perm[p] == reduce1(p + D.k, D.n));
    }
}

TEST_CASE("delete bivalent preserves trips") {
    // hand-built: path 1 - w - b - 2 with w bivalent white, b bivalent black
    // on a 2-marked disk
    PlabicGraph G;
    G.n = 2;
    G.verts.push_back({VColor::White, Tag::face({1}), {}});
    G.verts.push_back({VColor::Black, Tag::face({2}), {}});
    G.edges.push_back({-1, 0}); // marked 1 to w
    G.edges.push_back({0, 1});  // w to b
    G.edges.push_back({1, -2}); // b to marked 2
    G.verts[0].rot = {0, 1};
    G.verts[1].rot = {1, 2};
    G.finalize();
    validate_graph(G);
    auto before = trip_permutation(G);

    PlabicGraph H = apply_move(G, DeleteBivalent{Tag::face({1})});
    CHECK(H.verts.size() == 1);
    auto after = trip_permutation(H);
    CHECK(before == after);
}

TEST_CASE("make_trivalent preserves labels and trips") {
    for (auto [k, n, ell] : std::vector<std::array<int, 3>>{{3, 6, 3}, {2, 6, 3}, {4, 8, 2}}) {
        Collection D = generate(k, n, ell);
        PlabicGraph G = dual_plabic_graph(build_tiling(D));
        TrivalentResult tri = make_trivalent(G, ell);
        for (size_t v = 0; v < tri.graph.verts.size(); ++v)
            CHECK(tri.graph.degree(static_cast<int>(v)) == 3);
        CHECK(face_label_collection(tri.graph) == D);
        CHECK(trip_permutation(tri.graph) == trip_permutation(G));

        // contracting the resolution trees recovers the original graph shape
        PlabicGraph back = contract_resolutions(tri.graph);
        CHECK(back.verts.size() == G.verts.size());
        CHECK(face_label_collection(back) == D);
    }
}

TEST_CASE("make_trivalent leaves trivalent graphs unchanged") {
    Collection D = coll(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
    PlabicGraph G = dual_plabic_graph(build_tiling(D)); // already trivalent
    TrivalentResult tri = make_trivalent(G, 4);
    CHECK(tri.graph.verts.size() == G.verts.size());
    CHECK(tri.graph.edges.size() == G.edges.size());
    CHECK(tri.reresolution_sites.empty());
    CHECK(face_label_collection(tri.graph) == D);
}

TEST_CASE("contract then re-expand keeps the label set") {
    Collection D = generate(3, 6, 3);
    TrivalentResult tri = make_trivalent(dual_plabic_graph(build_tiling(D)), 3);
    // find a spine edge (same color, both spine tags)
    const PlabicGraph& G = tri.graph;
    Tag a, b;
    bool found = false;
    for (const auto& e : G.edges) {
        if (e.a < 0 || e.b < 0) continue;
        if (G.verts[e.a].color != G.verts[e.b].color) continue;
        a = G.verts[e.a].tag;
        b = G.verts[e.b].tag;
        found = true;
        break;
    }
    REQUIRE(found);
    PlabicGraph contracted = apply_move(G, ContractSameColor{a, b});
    CHECK(face_label_collection(contracted) == D);
    TrivalentResult again = make_trivalent(contracted, 3);
    CHECK(face_label_collection(again.graph) == D);
}

TEST_CASE("square move exchanges exactly one label") {
    // rank-2 square: D = {12,23,34,14,13} over n = 4 has a quadrilateral
    // internal face with four trivalent corners
    Collection D = coll(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
    PlabicGraph G = dual_plabic_graph(build_tiling(D));
    auto sites = square_move_sites(G);
    REQUIRE(sites.size() == 1);
    CHECK(sites[0] == ks({1, 3}, 4));

    PlabicGraph H = apply_move(G, SquareMove{ks({1, 3}, 4)});
    Collection after = face_label_collection(H);
    Collection expected = coll(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4}});
    CHECK(after == expected);
    CHECK(check_maximal(after).maximal);

    // the mutated collection is the other maximal one found by the oracle
    auto all = oracle_enumerate(2, 4);
    CHECK(all.size() == 2);
    bool seen = false;
    for (const auto& c : all) seen = seen || c == after;
    CHECK(seen);

    // involution
    PlabicGraph back = apply_move(H, SquareMove{ks({2, 4}, 4)});
    CHECK(face_label_collection(back) == D);
}

TEST_CASE("square move on a trivalent hexagon graph") {
    Collection D = generate(3, 6, 3);
    TrivalentResult tri = make_trivalent(dual_plabic_graph(build_tiling(D)), 3);
    auto sites = square_move_sites(tri.graph);
    REQUIRE(!sites.empty());
    PlabicGraph H = apply_move(tri.graph, SquareMove{sites[0]});
    Collection after = face_label_collection(H);
    CHECK(after.size() == D.size());
    CHECK(check_maximal(after).maximal);
    int diff = 0;
    for (const KSubset& s : D.members)
        if (!after.contains(s)) ++diff;
    CHECK(diff == 1);
}

TEST_CASE("tiling symmetry certificates") {
    PlabicTiling T = build_tiling(example36());
    CHECK(rotational_symmetry_certificate(T, 3).ok);

    auto bad = rotational_symmetry_certificate(T, 1);
    CHECK_FALSE(bad.ok);
    CHECK(bad.witness.find("{2,4,7}") == std::string::npos); // witness is 1-based reduced
    CHECK_FALSE(bad.witness.empty());

    CHECK(rotational_symmetry_certificate(T, 6).ok); // identity
}

TEST_CASE("graph symmetry certificates") {
    Collection D = generate(3, 6, 3);
    PlabicGraph G = dual_plabic_graph(build_tiling(D));
    CHECK(rotational_symmetry_certificate(G, 3).ok);
    CHECK_FALSE(rotational_symmetry_certificate(G, 1).ok);
    CHECK(rotational_symmetry_certificate(G, 6).ok);

    // equivariant resolution keeps the certificate
    TrivalentResult tri = make_trivalent(G, 3);
    CHECK(rotational_symmetry_certificate(tri.graph, 3).ok);
}
