#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symwsc/json_io.hpp"
#include "symwsc/render.hpp"

using namespace symwsc;

namespace {

KSubset ks(std::vector<int> v, int n) { return KSubset(std::move(v), n); }

Collection example36() {
    std::vector<KSubset> xs;
    for (auto v : std::vector<std::vector<int>>{{1, 2, 3},
                                                {2, 3, 4},
                                                {3, 4, 5},
                                                {4, 5, 6},
                                                {1, 5, 6},
                                                {1, 2, 6},
                                                {1, 3, 6},
                                                {2, 3, 6},
                                                {3, 4, 6},
                                                {3, 5, 6}})
        xs.push_back(ks(v, 6));
    return Collection(6, 3, std::move(xs));
}

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t count = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("collection round-trip is byte identical") {
    Collection D = generate(3, 6, 3, OrbitOrder{{3, 2, 1}});
    std::string first = dump_canonical(to_json(D));
    Collection back = collection_from_json(json::parse(first));
    CHECK(back == D);
    CHECK(dump_canonical(to_json(back)) == first);
}

TEST_CASE("generator trace round-trip") {
    GeneratorTrace t = generate_trace(3, 6, 4);
    json j = to_json(t);
    GeneratorTrace back = generator_trace_from_json(j);
    CHECK(dump_canonical(to_json(back)) == dump_canonical(j));
    CHECK(back.result == t.result);
}

TEST_CASE("graph and weave round-trips") {
    PipelineReport rep = symmetric_weave_pipeline(3, 6, 3);
    json gj = to_json(rep.trivalent);
    PlabicGraph g = graph_from_json(gj);
    CHECK(dump_canonical(to_json(g)) == dump_canonical(gj));
    CHECK(face_label_collection(g) == face_label_collection(rep.trivalent));

    json wj = to_json(rep.weave.weave);
    WeaveGraph w = weave_from_json(wj);
    CHECK(dump_canonical(to_json(w)) == dump_canonical(wj));
    CHECK(boundary_braid(w).to_string() == rep.braid.to_string());
}

TEST_CASE("pipeline report round-trip is value equal") {
    PipelineReport rep = symmetric_weave_pipeline(3, 6, 3);
    json j = to_json(rep);
    PipelineReport back = pipeline_from_json(j);
    CHECK(dump_canonical(to_json(back)) == dump_canonical(j));
}

TEST_CASE("tiling round-trip") {
    PlabicTiling T = build_tiling(example36());
    json j = to_json(T);
    PlabicTiling back = tiling_from_json(j);
    CHECK(dump_canonical(to_json(back)) == dump_canonical(j));
}

TEST_CASE("malformed payloads are rejected") {
    // duplicate member
    json dup{{"n", 6},
             {"k", 3},
             {"members", json::array({json::array({1, 2, 3}), json::array({1, 2, 3})})}};
    CHECK_THROWS_AS(collection_from_json(dup), InputError);

    json badsize{{"n", 6}, {"k", 3}, {"members", json::array({json::array({1, 2})})}};
    CHECK_THROWS_AS(collection_from_json(badsize), InputError);

    CHECK_THROWS_AS(parse_payload("{nope"), InputError);

    json old_schema{{"schema_version", 99}, {"payload", json::object()}};
    CHECK_THROWS_AS(parse_payload(old_schema.dump()), InputError);
}

TEST_CASE("envelope determinism") {
    Collection D = generate(2, 6, 3);
    json a = make_envelope("collection", "generate", json{{"k", 2}}, to_json(D), 1.0);
    json b = make_envelope("collection", "generate", json{{"k", 2}}, to_json(D), 99.0);
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(dump_canonical(a) == dump_canonical(b));
}

TEST_CASE("tiling render is structurally consistent") {
    PlabicTiling T = build_tiling(example36());
    std::string svg = render_tiling(T, RenderFormat::Svg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(svg, "<polygon") == T.faces.size());
    CHECK(count_occurrences(svg, "<circle") == static_cast<size_t>(T.vertices.size()));
    CHECK(count_occurrences(svg, "<text") == static_cast<size_t>(T.vertices.size()));
    CHECK(svg.find(">123<") != std::string::npos); // compact labels at n <= 9

    std::string tikz = render_tiling(T, RenderFormat::Tikz);
    CHECK(tikz.rfind("\\begin{tikzpicture}", 0) == 0);
    CHECK(tikz.find("\\end{tikzpicture}") != std::string::npos);

    // deterministic output
    CHECK(render_tiling(T, RenderFormat::Svg) == svg);
}

TEST_CASE("k = 1 tiling renders a single polygon") {
    PlabicTiling T = build_tiling(all_cyclic_intervals(5, 1));
    std::string svg = render_tiling(T, RenderFormat::Svg);
    CHECK(count_occurrences(svg, "<polygon") == 1);
    CHECK(count_occurrences(svg, "<text") == 5);
}

TEST_CASE("weave render carries one tick per boundary slot") {
    PipelineReport rep = symmetric_weave_pipeline(3, 6, 3);
    std::string svg = render_weave(rep.weave.weave, RenderFormat::Svg);
    // ticks are stroke-width 2 lines, one per slot: n * (k-1) = 12
    CHECK(count_occurrences(svg, "stroke-width=\"2.00\"") == 12);
    // two layer colors
    CHECK(svg.find("#c0392b") != std::string::npos);
    CHECK(svg.find("#2980b9") != std::string::npos);
    CHECK(svg.find("#27ae60") == std::string::npos); // no third layer
}

TEST_CASE("graph render shows all vertices") {
    PipelineReport rep = symmetric_weave_pipeline(2, 6, 3);
    std::string svg = render_graph(rep.dual, RenderFormat::Svg);
    CHECK(count_occurrences(svg, "<circle") == rep.dual.verts.size() + 6);
}

TEST_CASE("subset text forms parse in payload context") {
    CHECK(parse_subset("126", 6) == ks({1, 2, 6}, 6));
    json j = to_json(ks({1, 2, 6}, 6));
    CHECK(subset_from_json(j, 6) == ks({1, 2, 6}, 6));
}
