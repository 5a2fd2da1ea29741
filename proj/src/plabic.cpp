#include "symwsc/plabic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace symwsc {

// ---------------------------------------------------------------------------
// Tags

Tag Tag::white_clique(std::vector<int> core) {
    Tag t;
    t.kind = Kind::WhiteClique;
    t.label = std::move(core);
    return t;
}
Tag Tag::black_clique(std::vector<int> core) {
    Tag t;
    t.kind = Kind::BlackClique;
    t.label = std::move(core);
    return t;
}
Tag Tag::face(std::vector<int> lbl) {
    Tag t;
    t.kind = Kind::Face;
    t.label = std::move(lbl);
    return t;
}
Tag Tag::spine(const Tag& base, int index) {
    if (base.kind == Kind::Spine || base.kind == Kind::Marked)
        throw InputError("spine tags must be based on clique or face tags");
    Tag t;
    t.kind = Kind::Spine;
    t.base_kind = base.kind;
    t.base_label = base.label;
    t.index = index;
    return t;
}
Tag Tag::marked(int p) {
    Tag t;
    t.kind = Kind::Marked;
    t.label = {p};
    return t;
}

namespace {
std::vector<int> shift_label(const std::vector<int>& label, int ell, int n) {
    std::vector<int> out;
    out.reserve(label.size());
    for (int x : label) out.push_back(reduce1(static_cast<long long>(x) + ell, n));
    std::sort(out.begin(), out.end());
    return out;
}
} // namespace

Tag Tag::shifted(int ell, int n) const {
    Tag t = *this;
    if (kind == Kind::Spine)
        t.base_label = shift_label(base_label, ell, n);
    else
        t.label = shift_label(label, ell, n);
    return t;
}

std::string Tag::to_string() const {
    auto join = [](const std::vector<int>& v) {
        std::ostringstream out;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out << ',';
            out << v[i];
        }
        return out.str();
    };
    switch (kind) {
        case Kind::WhiteClique: return "W:" + join(label);
        case Kind::BlackClique: return "B:" + join(label);
        case Kind::Face: return "F:" + join(label);
        case Kind::Marked: return "m:" + join(label);
        case Kind::Spine: {
            const char* b = base_kind == Kind::WhiteClique   ? "W"
                            : base_kind == Kind::BlackClique ? "B"
                                                             : "F";
            return std::string("sp[") + b + ":" + join(base_label) + "]:" +
                   std::to_string(index);
        }
    }
    return "?";
}

Tag Tag::parse(const std::string& s) {
    auto parse_label = [](const std::string& body) {
        std::vector<int> out;
        std::istringstream in(body);
        std::string tok;
        while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    };
    try {
        if (s.rfind("W:", 0) == 0) return white_clique(parse_label(s.substr(2)));
        if (s.rfind("B:", 0) == 0) return black_clique(parse_label(s.substr(2)));
        if (s.rfind("F:", 0) == 0) return face(parse_label(s.substr(2)));
        if (s.rfind("m:", 0) == 0) return marked(std::stoi(s.substr(2)));
        if (s.rfind("sp[", 0) == 0) {
            auto close = s.find("]:");
            if (close == std::string::npos) throw InputError("bad spine tag: " + s);
            std::string inner = s.substr(3, close - 3);
            Tag base;
            if (inner.rfind("W:", 0) == 0)
                base = white_clique(parse_label(inner.substr(2)));
            else if (inner.rfind("B:", 0) == 0)
                base = black_clique(parse_label(inner.substr(2)));
            else if (inner.rfind("F:", 0) == 0)
                base = face(parse_label(inner.substr(2)));
            else
                throw InputError("bad spine base: " + s);
            return spine(base, std::stoi(s.substr(close + 2)));
        }
    } catch (const std::invalid_argument&) {
        throw InputError("unparseable tag: " + s);
    }
    throw InputError("unparseable tag: " + s);
}

// ---------------------------------------------------------------------------
// Half-edge assembly

std::optional<int> PlabicGraph::vertex_by_tag(const Tag& t) const {
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i].tag == t) return static_cast<int>(i);
    return std::nullopt;
}

void PlabicGraph::finalize() {
    if (!h_src.empty()) throw ValidationError("graph already finalized");
    if (n < 1) throw ValidationError("graph needs marked points");
    const int E = static_cast<int>(edges.size());
    arc_base = 2 * E;
    const int H = 2 * E + 2 * n;
    h_src.assign(H, 0);

    std::vector<int> pendant(n + 1, -1);
    for (int e = 0; e < E; ++e) {
        const Edge& ed = edges[e];
        h_src[2 * e] = ed.a;
        h_src[2 * e + 1] = ed.b;
        for (int end : {ed.a, ed.b}) {
            if (end >= 0) {
                if (end >= static_cast<int>(verts.size()))
                    throw ValidationError("edge endpoint out of range");
            } else {
                const int p = -end;
                if (p < 1 || p > n) throw ValidationError("marked endpoint out of range");
                if (pendant[p] >= 0)
                    throw ValidationError("marked point " + std::to_string(p) +
                                          " has more than one pendant edge");
                pendant[p] = e;
            }
        }
        if (ed.a == ed.b) throw ValidationError("self-loop edge");
        if (ed.a < 0 && ed.b < 0) throw ValidationError("edge joins two marked points");
    }
    for (int p = 1; p <= n; ++p)
        if (pendant[p] < 0)
            throw ValidationError("marked point " + std::to_string(p) + " has no pendant edge");

    // Boundary arcs: arc p runs from marked p to marked p+1 counterclockwise.
    for (int p = 1; p <= n; ++p) {
        h_src[arc_base + 2 * (p - 1)] = -p;
        h_src[arc_base + 2 * (p - 1) + 1] = -(p % n + 1);
    }

    // Convert vertex rotations from edge ids to half-edge ids.
    std::vector<int> seen(H, 0);
    for (size_t v = 0; v < verts.size(); ++v) {
        for (int& slot : verts[v].rot) {
            const int e = slot;
            if (e < 0 || e >= E) throw ValidationError("rotation references a bad edge id");
            int h;
            if (edges[e].a == static_cast<int>(v))
                h = 2 * e;
            else if (edges[e].b == static_cast<int>(v))
                h = 2 * e + 1;
            else
                throw ValidationError("rotation lists an edge not incident to the vertex");
            slot = h;
            if (seen[h]++) throw ValidationError("half-edge appears twice in a rotation");
        }
    }

    marked_rot.assign(n, {0, 0, 0});
    for (int p = 1; p <= n; ++p) {
        const int e = pendant[p];
        const int ph = edges[e].a == -p ? 2 * e : 2 * e + 1;
        const int fwd = arc_base + 2 * (p - 1);
        const int prev_arc = arc_base + 2 * ((p - 2 + n) % n) + 1; // out-half toward p-1
        marked_rot[p - 1] = {fwd, ph, prev_arc};
        if (seen[ph]++) throw ValidationError("pendant half-edge appears twice");
    }
    for (int e = 0; e < E; ++e)
        for (int h : {2 * e, 2 * e + 1})
            if (!seen[h]) throw ValidationError("half-edge missing from every rotation");

    h_rot_next.assign(H, -1);
    h_rot_prev.assign(H, -1);
    auto link_cycle = [&](const std::vector<int>& cyc) {
        const int m = static_cast<int>(cyc.size());
        for (int i = 0; i < m; ++i) {
            h_rot_next[cyc[i]] = cyc[(i + 1) % m];
            h_rot_prev[cyc[i]] = cyc[(i - 1 + m) % m];
        }
    };
    for (const Internal& v : verts) link_cycle(v.rot);
    for (int p = 1; p <= n; ++p)
        link_cycle({marked_rot[p - 1][0], marked_rot[p - 1][1], marked_rot[p - 1][2]});
}

FaceData graph_faces(const PlabicGraph& G) {
    FaceData fd;
    const int H = G.half_count();
    fd.face_of.assign(H, -1);
    for (int h0 = 0; h0 < H; ++h0) {
        if (fd.face_of[h0] >= 0) continue;
        FaceData::Face face;
        int h = h0;
        do {
            fd.face_of[h] = static_cast<int>(fd.faces.size());
            face.halves.push_back(h);
            if (G.is_arc(h)) {
                const bool backward = (h - G.arc_base) % 2 == 1;
                (backward ? face.outer : face.boundary) = true;
            }
            // face to the left of h, rotations counterclockwise
            h = G.h_rot_prev[G.twin(h)];
            if (static_cast<int>(face.halves.size()) > H)
                throw ValidationError("face traversal failed to close");
        } while (h != h0);
        if (face.outer) {
            if (fd.outer >= 0) throw ValidationError("multiple outer faces");
            fd.outer = static_cast<int>(fd.faces.size());
        }
        fd.faces.push_back(std::move(face));
    }
    if (fd.outer < 0) throw ValidationError("no outer face found");
    if (static_cast<int>(fd.faces[fd.outer].halves.size()) != G.n)
        throw ValidationError("outer face does not have length n");
    return fd;
}

Trip trace_trip(const PlabicGraph& G, int p) {
    if (p < 1 || p > G.n) throw InputError("trip entry out of range");
    Trip t;
    t.entry = p;
    int h = G.pendant_half(p);
    const int cap = 2 * G.half_count() + 4;
    int guard = 0;
    while (true) {
        t.halves.push_back(h);
        const int target = G.dst(h);
        if (target < 0) {
            t.exit = -target;
            return t;
        }
        const int back = G.twin(h);
        h = G.verts[target].color == VColor::White ? G.h_rot_next[back] : G.h_rot_prev[back];
        if (++guard > cap) throw ValidationError("strand failed to terminate");
    }
}

std::vector<int> trip_permutation(const PlabicGraph& G) {
    std::vector<int> perm(G.n + 1, 0);
    for (int p = 1; p <= G.n; ++p) perm[p] = trace_trip(G, p).exit;
    return perm;
}

std::vector<std::optional<KSubset>> trip_face_labels(const PlabicGraph& G, const FaceData& fd) {
    // Close each strand along the boundary (counterclockwise from its exit
    // back to its entry); the faces in the region to the right of the closed
    // curve are labeled by the exit point. Flood fill across every edge the
    // curve does not use, seeded at the face right of the first half-edge.
    std::vector<std::set<int>> raw(fd.faces.size());
    const int H = G.half_count();
    for (int p = 1; p <= G.n; ++p) {
        Trip t = trace_trip(G, p);
        std::vector<char> barrier(H, 0);
        for (int h : t.halves) barrier[h] = barrier[G.twin(h)] = 1;
        for (int q = t.exit; q != t.entry; q = q % G.n + 1) {
            const int arc = G.arc_base + 2 * (q - 1);
            barrier[arc] = barrier[G.twin(arc)] = 1;
        }
        std::vector<char> in_region(fd.faces.size(), 0);
        std::vector<int> stack = {fd.face_of[G.twin(t.halves.front())]};
        in_region[stack.back()] = 1;
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            for (int h : fd.faces[f].halves) {
                if (barrier[h]) continue;
                const int g = fd.face_of[G.twin(h)];
                if (!in_region[g]) {
                    in_region[g] = 1;
                    stack.push_back(g);
                }
            }
        }
        for (size_t f = 0; f < fd.faces.size(); ++f)
            if (in_region[f]) raw[f].insert(t.exit);
    }
    std::vector<std::optional<KSubset>> labels(fd.faces.size());
    for (size_t f = 0; f < fd.faces.size(); ++f) {
        if (static_cast<int>(f) == fd.outer) continue;
        labels[f] = KSubset(std::vector<int>(raw[f].begin(), raw[f].end()), G.n);
    }
    return labels;
}

Collection face_label_collection(const PlabicGraph& G) {
    FaceData fd = graph_faces(G);
    auto labels = trip_face_labels(G, fd);
    int rank = -1;
    std::vector<KSubset> all;
    for (size_t f = 0; f < fd.faces.size(); ++f) {
        if (static_cast<int>(f) == fd.outer) continue;
        if (!labels[f]) throw ValidationError("missing face label");
        if (rank < 0) rank = labels[f]->k();
        if (labels[f]->k() != rank)
            throw ValidationError("face labels have mixed sizes " + std::to_string(rank) +
                                  " and " + std::to_string(labels[f]->k()));
        all.push_back(*labels[f]);
    }
    if (rank <= 0) throw ValidationError("graph has no labeled faces");
    Collection out(G.n, rank, all);
    if (out.size() != static_cast<int>(all.size()))
        throw ValidationError("face labels are not distinct");
    return out;
}

int graph_rank(const PlabicGraph& G) { return face_label_collection(G).k; }

void validate_graph(const PlabicGraph& G, int min_internal_degree) {
    for (size_t v = 0; v < G.verts.size(); ++v)
        if (G.degree(static_cast<int>(v)) < min_internal_degree)
            throw ValidationError("internal vertex " + G.verts[v].tag.to_string() +
                                  " has degree " +
                                  std::to_string(G.degree(static_cast<int>(v))));
    std::set<Tag> tags;
    for (const auto& v : G.verts)
        if (!tags.insert(v.tag).second)
            throw ValidationError("duplicate vertex tag " + v.tag.to_string());

    FaceData fd = graph_faces(G);
    const long long V = static_cast<long long>(G.verts.size()) + G.n;
    const long long E = static_cast<long long>(G.edges.size()) + G.n;
    const long long F = static_cast<long long>(fd.faces.size());
    if (V - E + F != 2)
        throw ValidationError("graph fails the sphere Euler check: V-E+F = " +
                              std::to_string(V - E + F));
    for (int h : fd.faces[fd.outer].halves)
        if (!G.is_arc(h)) throw ValidationError("outer face contains a non-arc half-edge");

    // connectivity over edges and arcs
    std::vector<char> seen_v(G.verts.size(), 0), seen_m(G.n + 1, 0);
    std::vector<int> stack = {-1};
    seen_m[1] = 1;
    while (!stack.empty()) {
        const int cur = stack.back();
        stack.pop_back();
        auto visit = [&](int end) {
            if (end >= 0 && !seen_v[end]) {
                seen_v[end] = 1;
                stack.push_back(end);
            } else if (end < 0 && !seen_m[-end]) {
                seen_m[-end] = 1;
                stack.push_back(end);
            }
        };
        if (cur >= 0)
            for (int h : G.verts[cur].rot) visit(G.dst(h));
        else {
            const int p = -cur;
            visit(G.dst(G.pendant_half(p)));
            visit(-(p % G.n + 1));
            visit(-((p - 2 + G.n) % G.n + 1));
        }
    }
    for (char c : seen_v)
        if (!c) throw ValidationError("graph is not connected");
}

// ---------------------------------------------------------------------------
// Dual construction

PlabicGraph dual_plabic_graph(const PlabicTiling& T) {
    PlabicGraph G;
    G.n = T.n;

    for (const Clique& c : T.faces) {
        PlabicGraph::Internal v;
        v.color = c.color == Clique::Color::White ? VColor::White : VColor::Black;
        v.tag = c.color == Clique::Color::White ? Tag::white_clique(c.core)
                                                : Tag::black_clique(c.core);
        G.verts.push_back(std::move(v));
    }

    // marked point p sits across the boundary edge (I_p, I_{p+1})
    std::map<std::pair<KSubset, KSubset>, int> marked_of;
    for (int p = 1; p <= T.n; ++p) {
        KSubset a = cyclic_interval(T.n, T.k, p);
        KSubset b = cyclic_interval(T.n, T.k, p + 1);
        if (b < a) std::swap(a, b);
        marked_of[{a, b}] = p;
    }

    struct Side {
        int vert = -1;
        int slot = -1;
    };
    struct Rec {
        Side white, black;
    };
    std::map<std::pair<KSubset, KSubset>, Rec> recs;

    for (size_t vi = 0; vi < T.faces.size(); ++vi) {
        const Clique& c = T.faces[vi];
        auto chain = c.boundary();
        for (size_t s = 0; s < chain.size(); ++s) {
            auto key = chain[s].first < chain[s].second
                           ? std::make_pair(chain[s].first, chain[s].second)
                           : std::make_pair(chain[s].second, chain[s].first);
            Side& side = c.color == Clique::Color::White ? recs[key].white : recs[key].black;
            side.vert = static_cast<int>(vi);
            side.slot = static_cast<int>(s);
        }
    }

    std::vector<std::vector<int>> rot_edges(G.verts.size());
    for (size_t v = 0; v < G.verts.size(); ++v)
        rot_edges[v].assign(T.faces[v].members.size(), -1);

    for (auto& [key, rec] : recs) {
        int a, b;
        if (rec.white.vert >= 0 && rec.black.vert >= 0) {
            a = rec.white.vert;
            b = rec.black.vert;
        } else {
            auto it = marked_of.find(key);
            if (it == marked_of.end())
                throw ValidationError("tiling edge with a single face is not a boundary edge");
            a = rec.white.vert >= 0 ? rec.white.vert : rec.black.vert;
            b = -it->second;
        }
        const int edge_id = static_cast<int>(G.edges.size());
        G.edges.push_back({a, b});
        if (rec.white.vert >= 0) rot_edges[rec.white.vert][rec.white.slot] = edge_id;
        if (rec.black.vert >= 0) rot_edges[rec.black.vert][rec.black.slot] = edge_id;
    }

    for (size_t v = 0; v < G.verts.size(); ++v) {
        for (int e : rot_edges[v])
            if (e < 0) throw ValidationError("clique chain slot without an edge");
        G.verts[v].rot = rot_edges[v];
    }

    G.finalize();
    validate_graph(G, 3);

    // The dual must reproduce D as its face-label set.
    Collection labels = face_label_collection(G);
    if (!(labels == T.vertices))
        throw ValidationError("dual graph face labels do not reproduce the collection");
    return G;
}

// ---------------------------------------------------------------------------
// Mutable rewriting core

namespace {

struct MutGraph {
    int n = 0;
    struct MV {
        VColor color = VColor::White;
        Tag tag;
        bool alive = true;
        std::vector<int> rot; // edge ids, ccw
    };
    std::vector<MV> verts;
    struct ME {
        int a = 0, b = 0;
        bool alive = true;
    };
    std::vector<ME> edges;

    static MutGraph from(const PlabicGraph& G) {
        MutGraph m;
        m.n = G.n;
        for (const auto& v : G.verts) {
            MV mv;
            mv.color = v.color;
            mv.tag = v.tag;
            for (int h : v.rot) mv.rot.push_back(h / 2);
            m.verts.push_back(std::move(mv));
        }
        for (const auto& e : G.edges) m.edges.push_back({e.a, e.b, true});
        return m;
    }

    PlabicGraph build() const {
        PlabicGraph G;
        G.n = n;
        std::vector<int> vmap(verts.size(), -1);
        for (size_t v = 0; v < verts.size(); ++v)
            if (verts[v].alive) {
                vmap[v] = static_cast<int>(G.verts.size());
                G.verts.push_back({verts[v].color, verts[v].tag, {}});
            }
        std::vector<int> emap(edges.size(), -1);
        for (size_t e = 0; e < edges.size(); ++e)
            if (edges[e].alive) {
                emap[e] = static_cast<int>(G.edges.size());
                auto remap = [&](int end) { return end >= 0 ? vmap[end] : end; };
                G.edges.push_back({remap(edges[e].a), remap(edges[e].b)});
            }
        for (size_t v = 0; v < verts.size(); ++v)
            if (verts[v].alive)
                for (int e : verts[v].rot) G.verts[vmap[v]].rot.push_back(emap[e]);
        G.finalize();
        return G;
    }

    int other(int e, int v) const {
        if (edges[e].a == v) return edges[e].b;
        if (edges[e].b == v) return edges[e].a;
        throw ValidationError("edge not incident to vertex");
    }

    int slot_of(int v, int e) const {
        for (size_t s = 0; s < verts[v].rot.size(); ++s)
            if (verts[v].rot[s] == e) return static_cast<int>(s);
        throw ValidationError("edge missing from rotation");
    }

    void replace_end(int e, int from, int to) {
        if (edges[e].a == from)
            edges[e].a = to;
        else if (edges[e].b == from)
            edges[e].b = to;
        else
            throw ValidationError("edge endpoint mismatch");
    }

    void delete_bivalent(int v) {
        if (!verts[v].alive || verts[v].rot.size() != 2)
            throw ValidationError("delete_bivalent needs a live degree-2 vertex");
        const int e1 = verts[v].rot[0], e2 = verts[v].rot[1];
        const int x = other(e1, v), y = other(e2, v);
        if (x == y && x >= 0) throw ValidationError("bivalent deletion would create a loop");
        if (x < 0 && y < 0)
            throw ValidationError("bivalent deletion would join two marked points");
        const int enew = static_cast<int>(edges.size());
        edges.push_back({x, y, true});
        if (x >= 0) verts[x].rot[slot_of(x, e1)] = enew;
        if (y >= 0) verts[y].rot[slot_of(y, e2)] = enew;
        edges[e1].alive = edges[e2].alive = false;
        verts[v].alive = false;
        verts[v].rot.clear();
    }

    void contract(int e) {
        const int u = edges[e].a, v = edges[e].b;
        if (u < 0 || v < 0) throw ValidationError("cannot contract a pendant edge");
        if (u == v) throw ValidationError("cannot contract a loop");
        const int i = slot_of(u, e), j = slot_of(v, e);
        const int mu = static_cast<int>(verts[u].rot.size());
        const int mv = static_cast<int>(verts[v].rot.size());
        std::vector<int> merged;
        for (int s = 1; s < mu; ++s) merged.push_back(verts[u].rot[(i + s) % mu]);
        for (int s = 1; s < mv; ++s) {
            const int ee = verts[v].rot[(j + s) % mv];
            if (other(ee, v) == u)
                throw ValidationError("contracting a bigon would create a loop");
            replace_end(ee, v, u);
            merged.push_back(ee);
        }
        verts[u].rot = std::move(merged);
        verts[v].alive = false;
        verts[v].rot.clear();
        edges[e].alive = false;
    }

    // Split the two rotation entries at cut_slot off v into a new vertex.
    int split_off(int v, int cut_slot, const Tag& tag) {
        const int m = static_cast<int>(verts[v].rot.size());
        if (m < 4) throw ValidationError("split_off needs degree >= 4");
        const int e1 = verts[v].rot[cut_slot % m];
        const int e2 = verts[v].rot[(cut_slot + 1) % m];
        const int w = static_cast<int>(verts.size());
        const int link = static_cast<int>(edges.size());
        edges.push_back({w, v, true});
        MV nv;
        nv.color = verts[v].color;
        nv.tag = tag;
        nv.rot = {e1, e2, link};
        replace_end(e1, v, w);
        replace_end(e2, v, w);
        std::vector<int> rest = {link};
        for (int s = 2; s < m; ++s) rest.push_back(verts[v].rot[(cut_slot + s) % m]);
        verts[v].rot = std::move(rest);
        verts.push_back(std::move(nv));
        return w;
    }

    Tag end_tag(int end) const { return end >= 0 ? verts[end].tag : Tag::marked(-end); }
};

} // namespace

// ---------------------------------------------------------------------------
// Moves

PlabicGraph apply_move(const PlabicGraph& G, const Move& m) {
    MutGraph mut = MutGraph::from(G);

    if (const auto* del = std::get_if<DeleteBivalent>(&m)) {
        auto v = G.vertex_by_tag(del->at);
        if (!v) throw InputError("no vertex tagged " + del->at.to_string());
        mut.delete_bivalent(*v);
        PlabicGraph out = mut.build();
        validate_graph(out);
        return out;
    }

    if (const auto* con = std::get_if<ContractSameColor>(&m)) {
        auto a = G.vertex_by_tag(con->a);
        auto b = G.vertex_by_tag(con->b);
        if (!a || !b) throw InputError("contract: vertex tag not found");
        if (G.verts[*a].color != G.verts[*b].color)
            throw InputError("contract requires endpoints of the same color");
        int eid = -1;
        for (size_t e = 0; e < G.edges.size(); ++e)
            if ((G.edges[e].a == *a && G.edges[e].b == *b) ||
                (G.edges[e].a == *b && G.edges[e].b == *a)) {
                if (eid >= 0) throw InputError("contract: edge is not unique");
                eid = static_cast<int>(e);
            }
        if (eid < 0) throw InputError("contract: vertices are not adjacent");
        mut.contract(eid);
        PlabicGraph out = mut.build();
        validate_graph(out);
        return out;
    }

    const auto& sq = std::get<SquareMove>(m);
    FaceData fd = graph_faces(G);
    auto labels = trip_face_labels(G, fd);
    int face = -1;
    for (size_t f = 0; f < fd.faces.size(); ++f)
        if (static_cast<int>(f) != fd.outer && labels[f] && *labels[f] == sq.face_label)
            face = static_cast<int>(f);
    if (face < 0) throw InputError("square move: no face labeled " + sq.face_label.to_string());
    const auto& halves = fd.faces[face].halves;
    if (halves.size() != 4) throw InputError("square move: face is not a quadrilateral");
    std::vector<int> corners;
    for (int h : halves) {
        const int v = G.src(h);
        if (v < 0) throw InputError("square move: face touches the boundary");
        corners.push_back(v);
    }
    std::set<int> uniq(corners.begin(), corners.end());
    if (uniq.size() != 4) throw InputError("square move: corners are not distinct");
    for (int v : corners)
        if (G.degree(v) != 3) throw InputError("square move: corner is not trivalent");
    for (int i = 0; i < 4; ++i)
        if (G.verts[corners[i]].color == G.verts[corners[(i + 1) % 4]].color)
            throw InputError("square move: colors do not alternate");

    for (int v : corners)
        mut.verts[v].color = mut.verts[v].color == VColor::White ? VColor::Black : VColor::White;
    PlabicGraph out = mut.build();
    validate_graph(out);
    return out;
}

std::vector<KSubset> square_move_sites(const PlabicGraph& G) {
    FaceData fd = graph_faces(G);
    auto labels = trip_face_labels(G, fd);
    std::vector<KSubset> sites;
    for (size_t f = 0; f < fd.faces.size(); ++f) {
        if (static_cast<int>(f) == fd.outer || !labels[f]) continue;
        const auto& halves = fd.faces[f].halves;
        if (halves.size() != 4) continue;
        std::vector<int> corners;
        bool ok = true;
        for (int h : halves) {
            const int v = G.src(h);
            if (v < 0 || G.degree(v) != 3) ok = false;
            corners.push_back(v);
        }
        if (!ok) continue;
        std::set<int> uniq(corners.begin(), corners.end());
        if (uniq.size() != 4) continue;
        for (int i = 0; i < 4 && ok; ++i)
            if (G.verts[corners[i]].color == G.verts[corners[(i + 1) % 4]].color) ok = false;
        if (ok) sites.push_back(*labels[f]);
    }
    std::sort(sites.begin(), sites.end());
    return sites;
}

// ---------------------------------------------------------------------------
// Trivalent resolution

TrivalentResult make_trivalent(const PlabicGraph& G, int ell) {
    MutGraph mut = MutGraph::from(G);
    std::map<Tag, int> by_tag;
    for (size_t v = 0; v < mut.verts.size(); ++v) by_tag[mut.verts[v].tag] = static_cast<int>(v);

    auto neighbor_tags = [&](int v) {
        std::vector<Tag> out;
        for (int e : mut.verts[v].rot) out.push_back(mut.end_tag(mut.other(e, v)));
        return out;
    };

    struct Plan {
        int vertex;
        int cut_slot;
    };
    std::vector<Plan> plans;
    std::vector<Tag> sites;
    std::set<int> planned;

    auto slot_of_tag = [&](int v, const Tag& t) -> int {
        const auto nbr = neighbor_tags(v);
        for (size_t s = 0; s < nbr.size(); ++s)
            if (nbr[s] == t) return static_cast<int>(s);
        return -1;
    };
    auto least_slot = [&](int v) {
        const auto nbr = neighbor_tags(v);
        return static_cast<int>(std::min_element(nbr.begin(), nbr.end()) - nbr.begin());
    };

    for (size_t v0 = 0; v0 < mut.verts.size(); ++v0) {
        if (planned.count(static_cast<int>(v0)) || mut.verts[v0].rot.size() <= 3) continue;

        // Chase the tag orbit of v0.
        std::vector<int> orbit = {static_cast<int>(v0)};
        bool closed = false;
        Tag t = mut.verts[v0].tag;
        for (int step = 0; step < G.n; ++step) {
            t = t.shifted(ell, G.n);
            auto it = by_tag.find(t);
            if (it == by_tag.end()) break;
            if (it->second == static_cast<int>(v0)) {
                closed = true;
                break;
            }
            if (mut.verts[it->second].rot.size() != mut.verts[v0].rot.size()) break;
            orbit.push_back(it->second);
        }

        if (!closed) {
            // No usable orbit: resolve canonically without a site record.
            plans.push_back({static_cast<int>(v0), least_slot(static_cast<int>(v0))});
            planned.insert(static_cast<int>(v0));
            continue;
        }

        const int p = static_cast<int>(orbit.size());
        // The stabilizer rho^p pins the vertex when it moves its edges.
        auto nbr0 = neighbor_tags(orbit[0]);
        auto shifted_seq = nbr0;
        for (Tag& nt : shifted_seq)
            for (int i = 0; i < p; ++i) nt = nt.shifted(ell, G.n);
        const bool pinned = !(shifted_seq == nbr0);

        if (pinned) {
            for (int v : orbit) {
                plans.push_back({v, least_slot(v)});
                planned.insert(v);
                sites.push_back(mut.verts[v].tag);
            }
        } else {
            // Transported resolution: cut the representative at its least
            // neighbor and carry that choice around the orbit.
            int rep_pos = 0;
            for (int i = 1; i < p; ++i)
                if (mut.verts[orbit[i]].tag < mut.verts[orbit[rep_pos]].tag) rep_pos = i;
            auto rep_nbr = neighbor_tags(orbit[rep_pos]);
            Tag cut_tag = *std::min_element(rep_nbr.begin(), rep_nbr.end());
            for (int i = 0; i < p; ++i) {
                const int v = orbit[(rep_pos + i) % p];
                Tag want = cut_tag;
                for (int j = 0; j < i; ++j) want = want.shifted(ell, G.n);
                const int cut = slot_of_tag(v, want);
                plans.push_back({v, cut >= 0 ? cut : least_slot(v)});
                planned.insert(v);
            }
        }
    }

    for (const Plan& plan : plans) {
        Tag base = mut.verts[plan.vertex].tag;
        if (base.kind == Tag::Kind::Spine) {
            // re-expanding a partially contracted tree: keep the original base
            Tag b;
            b.kind = base.base_kind;
            b.label = base.base_label;
            base = b;
        }
        // fresh spine indices, above anything already present for this base
        int index = 0;
        for (const auto& v : mut.verts)
            if (v.alive && v.tag.kind == Tag::Kind::Spine && v.tag.base_kind == base.kind &&
                v.tag.base_label == base.label)
                index = std::max(index, v.tag.index + 1);
        int cut = plan.cut_slot;
        while (mut.verts[plan.vertex].rot.size() > 3) {
            mut.split_off(plan.vertex, cut, Tag::spine(base, index++));
            cut = 0; // remainder rotation starts at the fresh link edge
        }
        mut.verts[plan.vertex].tag = Tag::spine(base, index);
    }

    TrivalentResult res;
    res.graph = mut.build();
    res.reresolution_sites = std::move(sites);
    validate_graph(res.graph, 3);
    return res;
}

PlabicGraph contract_resolutions(const PlabicGraph& G) {
    MutGraph mut = MutGraph::from(G);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t e = 0; e < mut.edges.size(); ++e) {
            if (!mut.edges[e].alive) continue;
            const int a = mut.edges[e].a, b = mut.edges[e].b;
            if (a < 0 || b < 0) continue;
            const Tag& ta = mut.verts[a].tag;
            const Tag& tb = mut.verts[b].tag;
            if (ta.kind == Tag::Kind::Spine && tb.kind == Tag::Kind::Spine &&
                ta.base_kind == tb.base_kind && ta.base_label == tb.base_label) {
                mut.contract(static_cast<int>(e));
                changed = true;
            }
        }
    }
    // Rename a fully contracted tree back to its base; spine tags inherited
    // from an earlier layer (no tree edges in this graph) are left alone.
    std::map<Tag, int> base_count;
    for (const auto& v : mut.verts)
        if (v.alive && v.tag.kind == Tag::Kind::Spine) {
            Tag base;
            base.kind = v.tag.base_kind;
            base.label = v.tag.base_label;
            ++base_count[base];
        }
    for (auto& v : mut.verts) {
        if (!v.alive || v.tag.kind != Tag::Kind::Spine) continue;
        Tag base;
        base.kind = v.tag.base_kind;
        base.label = v.tag.base_label;
        if (base_count[base] == 1) v.tag = base;
    }
    PlabicGraph out = mut.build();
    validate_graph(out);
    return out;
}

// ---------------------------------------------------------------------------
// Symmetry certificate

GraphCertificate rotational_symmetry_certificate(const PlabicGraph& G, int ell) {
    // The candidate automorphism is forced: marked point p must go to p+ell
    // and the half-edge map then propagates through twins and rotations.
    // Vertices must land on their shifted tags; spine indices inside one
    // resolution tree are free, so only the spine base is pinned.
    GraphCertificate cert;
    cert.ell = ell;

    const int H = G.half_count();
    std::vector<int> hmap(H, -1);
    std::vector<int> queue;
    std::string conflict;
    auto assign = [&](int h, int img) {
        if (img < 0 || img >= H) {
            conflict = "half-edge image out of range";
            return false;
        }
        if (hmap[h] >= 0) {
            if (hmap[h] != img) conflict = "half-edge map is inconsistent";
            return hmap[h] == img;
        }
        hmap[h] = img;
        queue.push_back(h);
        return true;
    };

    for (int p = 1; p <= G.n; ++p) {
        const int q = reduce1(p + ell, G.n);
        if (!assign(G.pendant_half(p), G.pendant_half(q)) ||
            !assign(G.arc_base + 2 * (p - 1), G.arc_base + 2 * (q - 1))) {
            cert.witness = conflict;
            return cert;
        }
    }
    while (!queue.empty()) {
        const int h = queue.back();
        queue.pop_back();
        const int img = hmap[h];
        if (!assign(G.twin(h), G.twin(img)) ||
            !assign(G.h_rot_next[h], G.h_rot_next[img])) {
            cert.witness = conflict + " near half-edge of " +
                           (G.src(h) >= 0 ? G.verts[G.src(h)].tag.to_string()
                                          : "m" + std::to_string(-G.src(h)));
            return cert;
        }
    }

    std::vector<int> vertex_image(G.verts.size(), -1);
    for (int h = 0; h < H; ++h) {
        if (hmap[h] < 0) {
            cert.witness = "half-edge map is not total";
            return cert;
        }
        const int v = G.src(h), w = G.src(hmap[h]);
        if (v < 0) {
            if (w != -reduce1(-v + ell, G.n)) {
                cert.witness = "marked point " + std::to_string(-v) + " does not shift";
                return cert;
            }
            continue;
        }
        if (w < 0) {
            cert.witness = "internal vertex maps to the boundary";
            return cert;
        }
        if (vertex_image[v] >= 0 && vertex_image[v] != w) {
            cert.witness = "vertex image is ambiguous at " + G.verts[v].tag.to_string();
            return cert;
        }
        vertex_image[v] = w;
    }

    for (size_t v = 0; v < G.verts.size(); ++v) {
        const int w = vertex_image[v];
        if (w < 0) {
            cert.witness = "vertex " + G.verts[v].tag.to_string() + " has no image";
            return cert;
        }
        if (G.verts[v].color != G.verts[w].color) {
            cert.witness = "vertex " + G.verts[v].tag.to_string() + " changes color";
            return cert;
        }
        const Tag& tv = G.verts[v].tag;
        const Tag& tw = G.verts[w].tag;
        const Tag want = tv.shifted(ell, G.n);
        const bool tag_ok = tv.kind == Tag::Kind::Spine
                                ? (tw.kind == Tag::Kind::Spine &&
                                   tw.base_kind == want.base_kind &&
                                   tw.base_label == want.base_label)
                                : tw == want;
        if (!tag_ok) {
            cert.witness = "vertex " + tv.to_string() + " maps to " + tw.to_string() +
                           ", expected " + want.to_string();
            return cert;
        }
        cert.vertex_map.emplace_back(tv.to_string(), tw.to_string());
    }

    // face labels must be closed under the relabeling
    Collection labels = face_label_collection(G);
    for (const KSubset& I : labels.members) {
        KSubset J = cyclic_shift_subset(I, ell);
        if (!labels.contains(J)) {
            cert.witness = "face label " + I.to_string() + " shifts outside the label set";
            return cert;
        }
    }

    cert.ok = true;
    return cert;
}

} // namespace symwsc
