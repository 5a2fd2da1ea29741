#include "symwsc/json_io.hpp"

#include <algorithm>
#include <set>

namespace symwsc {

namespace {

json color_str(Clique::Color c) { return c == Clique::Color::White ? "white" : "black"; }
json color_str(VColor c) { return c == VColor::White ? "white" : "black"; }

VColor vcolor(const std::string& s) {
    if (s == "white") return VColor::White;
    if (s == "black") return VColor::Black;
    throw InputError("bad vertex color: " + s);
}

template <typename T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("bad field '") + key + "'");
    }
}

json subfield(const json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

json to_json(const Feasibility& f) {
    json j{{"k", f.k}, {"n", f.n}, {"ell", f.ell},
           {"g", f.g}, {"d", f.d}, {"feasible", f.feasible}};
    if (f.feasible) {
        j["r"] = f.r;
        j["c"] = f.c;
    }
    return j;
}

Feasibility feasibility_from_json(const json& j) {
    return feasibility(field<int>(j, "k"), field<int>(j, "n"), field<int>(j, "ell"));
}

json to_json(const KSubset& s) { return json(s.elems); }

KSubset subset_from_json(const json& j, int n) {
    if (!j.is_array()) throw InputError("subset must be an array");
    return KSubset(j.get<std::vector<int>>(), n);
}

json to_json(const Collection& c) {
    json members = json::array();
    for (const KSubset& s : c.members) members.push_back(to_json(s));
    return json{{"n", c.n}, {"k", c.k}, {"members", members}};
}

Collection collection_from_json(const json& j) {
    const int n = field<int>(j, "n");
    const int k = field<int>(j, "k");
    if (!j.contains("members") || !j.at("members").is_array())
        throw InputError("collection needs a members array");
    std::vector<KSubset> xs;
    std::set<std::vector<int>> seen;
    for (const json& m : j.at("members")) {
        KSubset s = subset_from_json(m, n);
        if (s.k() != k) throw InputError("member " + s.to_string() + " has the wrong size");
        if (!seen.insert(s.elems).second) throw InputError("duplicate member " + s.to_string());
        xs.push_back(std::move(s));
    }
    return Collection(n, k, std::move(xs));
}

json to_json(const SizePrediction& p) {
    json j = json::object();
    if (p.B) j["B"] = *p.B;
    if (p.L) j["L"] = *p.L;
    return j;
}

json to_json(const StageTrace& st) {
    return json{{"s", st.s},          {"rep", st.rep},
                {"P", st.P},          {"P_h", st.P_h},
                {"window", st.window},
                {"B", to_json(st.B)}, {"L", to_json(st.L)},
                {"predicted", to_json(st.predicted)}};
}

json to_json(const GeneratorTrace& t) {
    json j{{"params", to_json(t.params)},
           {"run_params", to_json(t.run_params)},
           {"order", t.order.reps},
           {"folded", t.folded}};
    if (t.fold) {
        j["fold"] = json{{"n_prime", t.fold->n_prime},
                         {"dropped_stages", t.fold->dropped_stages},
                         {"C", to_json(t.fold->C)},
                         {"D_prime", to_json(t.fold->D_prime)}};
    }
    json stages = json::array();
    for (const StageTrace& st : t.stages) stages.push_back(to_json(st));
    j["stages"] = stages;
    j["result"] = to_json(t.result);
    return j;
}

GeneratorTrace generator_trace_from_json(const json& j) {
    GeneratorTrace t;
    t.params = feasibility_from_json(subfield(j, "params"));
    t.run_params = feasibility_from_json(subfield(j, "run_params"));
    t.order.reps = field<std::vector<int>>(j, "order");
    t.folded = field<bool>(j, "folded");
    if (t.folded) {
        const json fj = subfield(j, "fold");
        FoldInfo fi;
        fi.n_prime = field<int>(fj, "n_prime");
        fi.dropped_stages = field<int>(fj, "dropped_stages");
        fi.C = collection_from_json(subfield(fj, "C"));
        fi.D_prime = collection_from_json(subfield(fj, "D_prime"));
        t.fold = std::move(fi);
    }
    for (const json& sj : subfield(j, "stages")) {
        StageTrace st;
        st.s = field<int>(sj, "s");
        st.rep = field<int>(sj, "rep");
        st.P = field<std::vector<int>>(sj, "P");
        st.P_h = field<std::vector<std::vector<int>>>(sj, "P_h");
        st.window = field<std::vector<int>>(sj, "window");
        st.B = collection_from_json(subfield(sj, "B"));
        st.L = collection_from_json(subfield(sj, "L"));
        const json pj = subfield(sj, "predicted");
        if (pj.contains("B")) st.predicted.B = pj.at("B").get<long long>();
        if (pj.contains("L")) st.predicted.L = pj.at("L").get<long long>();
        t.stages.push_back(std::move(st));
    }
    t.result = collection_from_json(subfield(j, "result"));
    return t;
}

json to_json(const Clique& c) {
    json members = json::array();
    for (const KSubset& s : c.members) members.push_back(to_json(s));
    return json{{"color", color_str(c.color)},
                {"core", c.core},
                {"members", members},
                {"nontrivial", c.nontrivial()}};
}

json to_json(const TilingEdge& e) {
    return json{{"a", to_json(e.a)},
                {"b", to_json(e.b)},
                {"white_core", e.white_core},
                {"black_core", e.black_core},
                {"boundary", e.boundary}};
}

json to_json(const PlabicTiling& t) {
    json faces = json::array(), all = json::array(), edges = json::array(),
         cycle = json::array();
    for (const Clique& c : t.faces) faces.push_back(to_json(c));
    for (const Clique& c : t.all_cliques) all.push_back(to_json(c));
    for (const TilingEdge& e : t.edges) edges.push_back(to_json(e));
    for (const KSubset& s : t.boundary_cycle) cycle.push_back(to_json(s));
    return json{{"n", t.n},
                {"k", t.k},
                {"vertices", to_json(t.vertices)},
                {"faces", faces},
                {"all_cliques", all},
                {"edges", edges},
                {"boundary_cycle", cycle}};
}

PlabicTiling tiling_from_json(const json& j) {
    // the collection determines the tiling; rebuild and cross-check
    PlabicTiling t = build_tiling(collection_from_json(subfield(j, "vertices")));
    if (subfield(j, "edges").size() != t.edges.size())
        throw InputError("tiling payload does not match its collection");
    return t;
}

json to_json(const PlabicGraph& g) {
    json verts = json::array(), edges = json::array();
    for (const auto& v : g.verts) {
        std::vector<int> rot;
        for (int h : v.rot) rot.push_back(h / 2);
        verts.push_back(
            json{{"color", color_str(v.color)}, {"tag", v.tag.to_string()}, {"rot", rot}});
    }
    for (const auto& e : g.edges) edges.push_back(json{{"a", e.a}, {"b", e.b}});
    json labels = json::array();
    for (const KSubset& s : face_label_collection(g).members) labels.push_back(to_json(s));
    return json{{"n", g.n}, {"vertices", verts}, {"edges", edges}, {"face_labels", labels}};
}

PlabicGraph graph_from_json(const json& j) {
    PlabicGraph g;
    g.n = field<int>(j, "n");
    for (const json& vj : subfield(j, "vertices")) {
        PlabicGraph::Internal v;
        v.color = vcolor(field<std::string>(vj, "color"));
        v.tag = Tag::parse(field<std::string>(vj, "tag"));
        v.rot = field<std::vector<int>>(vj, "rot");
        g.verts.push_back(std::move(v));
    }
    for (const json& ej : subfield(j, "edges"))
        g.edges.push_back({field<int>(ej, "a"), field<int>(ej, "b")});
    try {
        g.finalize();
        validate_graph(g);
    } catch (const ValidationError& err) {
        throw InputError(std::string("malformed graph payload: ") + err.what());
    }
    if (j.contains("face_labels")) {
        Collection want = face_label_collection(g);
        json labels = json::array();
        for (const KSubset& s : want.members) labels.push_back(to_json(s));
        if (j.at("face_labels") != labels)
            throw InputError("graph payload face labels do not match the rotation system");
    }
    return g;
}

json to_json(const TilingCertificate& c) {
    json j{{"ok", c.ok}, {"ell", c.ell}};
    if (!c.ok) j["witness"] = c.witness;
    return j;
}

json to_json(const GraphCertificate& c) {
    json j{{"ok", c.ok}, {"ell", c.ell}};
    if (!c.ok)
        j["witness"] = c.witness;
    else {
        json m = json::array();
        for (auto& [a, b] : c.vertex_map) m.push_back(json{{"from", a}, {"to", b}});
        j["vertex_map"] = m;
    }
    return j;
}

json to_json(const WeaveGraph& w) {
    json verts = json::array(), edges = json::array(), boundary = json::array();
    for (const auto& v : w.verts)
        verts.push_back(json{{"hexavalent", v.hexavalent},
                             {"sigma", v.sigma},
                             {"tag", v.tag.to_string()},
                             {"rot", v.rot}});
    for (const auto& e : w.edges)
        edges.push_back(json{{"sigma", e.sigma}, {"u", e.u}, {"v", e.v}});
    for (const auto& b : w.boundary)
        boundary.push_back(json{{"p", b.p}, {"sigma", b.sigma}, {"edge", b.edge}});
    return json{
        {"n", w.n}, {"k", w.k}, {"vertices", verts}, {"edges", edges}, {"boundary", boundary}};
}

WeaveGraph weave_from_json(const json& j) {
    WeaveGraph w;
    w.n = field<int>(j, "n");
    w.k = field<int>(j, "k");
    for (const json& vj : subfield(j, "vertices")) {
        WeaveGraph::Vertex v;
        v.hexavalent = field<bool>(vj, "hexavalent");
        v.sigma = field<int>(vj, "sigma");
        v.tag = Tag::parse(field<std::string>(vj, "tag"));
        v.rot = field<std::vector<int>>(vj, "rot");
        w.verts.push_back(std::move(v));
    }
    for (const json& ej : subfield(j, "edges"))
        w.edges.push_back({field<int>(ej, "sigma"), field<int>(ej, "u"), field<int>(ej, "v")});
    for (const json& bj : subfield(j, "boundary"))
        w.boundary.push_back(
            {field<int>(bj, "p"), field<int>(bj, "sigma"), field<int>(bj, "edge")});
    auto bad = validate_ngraph(w);
    if (!bad.empty()) throw InputError("malformed weave payload: " + bad.front());
    return w;
}

json to_json(const WeaveBuild& wb) {
    json layers = json::array(), sites = json::array(), input_sites = json::array();
    for (const auto& L : wb.layers) layers.push_back(to_json(L));
    for (const auto& per : wb.layer_sites) {
        json s = json::array();
        for (const Tag& t : per) s.push_back(t.to_string());
        sites.push_back(s);
    }
    for (const Tag& t : wb.input_sites) input_sites.push_back(t.to_string());
    return json{{"weave", to_json(wb.weave)}, {"input", to_json(wb.input)},
                {"input_sites", input_sites}, {"layers", layers},
                {"ranks", wb.ranks},          {"layer_sites", sites}};
}

WeaveBuild weave_build_from_json(const json& j) {
    WeaveBuild wb;
    wb.weave = weave_from_json(subfield(j, "weave"));
    wb.input = graph_from_json(subfield(j, "input"));
    for (const json& t : subfield(j, "input_sites"))
        wb.input_sites.push_back(Tag::parse(t.get<std::string>()));
    for (const json& lj : subfield(j, "layers")) wb.layers.push_back(graph_from_json(lj));
    wb.ranks = field<std::vector<int>>(j, "ranks");
    for (const json& per : subfield(j, "layer_sites")) {
        std::vector<Tag> tags;
        for (const json& t : per) tags.push_back(Tag::parse(t.get<std::string>()));
        wb.layer_sites.push_back(std::move(tags));
    }
    return wb;
}

json to_json(const WeaveCertificate& c) {
    return json{{"ok", c.ok},
                {"ell", c.ell},
                {"reresolution_sites", c.reresolution_sites},
                {"violations", c.violations}};
}

json to_json(const BraidWord& b) {
    return json{{"letters", b.letters}, {"word", b.to_string()}};
}

json to_json(const PipelineReport& r) {
    json sites = json::array();
    for (const Tag& t : r.trivalent_sites) sites.push_back(t.to_string());
    return json{{"params", to_json(r.params)},
                {"order", r.order.reps},
                {"trace", to_json(r.trace)},
                {"tiling", to_json(r.tiling)},
                {"tiling_certificate", to_json(r.tiling_cert)},
                {"dual", to_json(r.dual)},
                {"dual_certificate", to_json(r.dual_cert)},
                {"trivalent", to_json(r.trivalent)},
                {"trivalent_certificate", to_json(r.trivalent_cert)},
                {"trivalent_certificate_contracted_ok", r.trivalent_cert_contracted_ok},
                {"trivalent_sites", sites},
                {"weave_build", to_json(r.weave)},
                {"weave_violations", r.weave_violations},
                {"braid", to_json(r.braid)},
                {"weave_certificate", to_json(r.weave_cert)},
                {"ranks", r.ranks}};
}

PipelineReport pipeline_from_json(const json& j) {
    PipelineReport r;
    r.params = feasibility_from_json(subfield(j, "params"));
    r.order.reps = field<std::vector<int>>(j, "order");
    r.trace = generator_trace_from_json(subfield(j, "trace"));
    r.tiling = tiling_from_json(subfield(j, "tiling"));
    r.dual = graph_from_json(subfield(j, "dual"));
    r.trivalent = graph_from_json(subfield(j, "trivalent"));
    r.trivalent_cert_contracted_ok = field<bool>(j, "trivalent_certificate_contracted_ok");
    for (const json& t : subfield(j, "trivalent_sites"))
        r.trivalent_sites.push_back(Tag::parse(t.get<std::string>()));
    r.weave = weave_build_from_json(subfield(j, "weave_build"));
    r.weave_violations = field<std::vector<std::string>>(j, "weave_violations");
    r.braid.letters = subfield(j, "braid").at("letters").get<std::vector<int>>();
    r.ranks = field<std::vector<int>>(j, "ranks");
    // certificates are deterministic functions of the artifacts: recompute
    const int ell = r.params.ell;
    r.tiling_cert = rotational_symmetry_certificate(r.tiling, ell);
    r.dual_cert = rotational_symmetry_certificate(r.dual, ell);
    r.trivalent_cert = rotational_symmetry_certificate(r.trivalent, ell);
    r.weave_cert = weave_symmetry_certificate(r.weave, ell);
    return r;
}

json make_envelope(const std::string& kind, const std::string& command, json input,
                   json payload, double timing_ms) {
    return json{{"schema_version", kSchemaVersion},
                {"tool", kToolName},
                {"version", kToolVersion},
                {"kind", kind},
                {"command", command},
                {"input", std::move(input)},
                {"conventions",
                 json{{"marked_points", "counterclockwise"},
                      {"tshift_boundary",
                       "new marked point counterclockwise of the old; old point dropped"},
                      {"boundary_slots", "(position, layer) lexicographic counterclockwise"}}},
                {"payload", std::move(payload)},
                {"timing_ms", timing_ms}};
}

json parse_payload(const std::string& text, std::string* kind_out) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("payload") && j.contains("schema_version")) {
        const int v = j.at("schema_version").get<int>();
        if (v != kSchemaVersion)
            throw InputError("unsupported schema version " + std::to_string(v));
        if (kind_out && j.contains("kind")) *kind_out = j.at("kind").get<std::string>();
        return j.at("payload");
    }
    if (kind_out) kind_out->clear();
    return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

} // namespace symwsc
