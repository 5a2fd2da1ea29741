#include "symwsc/weave.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace symwsc {

WeaveBuild build_weave(const PlabicGraph& G, int ell, std::vector<Tag> input_sites) {
    const int k = graph_rank(G);
    if (k < 2) throw InputError("weave assembly requires rank at least 2");

    WeaveBuild wb;
    wb.input = G;
    wb.input_sites = std::move(input_sites);
    wb.ranks.push_back(k);
    PlabicGraph cur = G;
    for (int j = 1; j <= k - 1; ++j) {
        TShiftResult sh = t_shift(cur, ell);
        wb.ranks.push_back(sh.rank_out);
        wb.layer_sites.push_back(sh.reresolution_sites);
        wb.layers.push_back(std::move(sh.graph));
        cur = wb.layers.back();
    }

    WeaveGraph& W = wb.weave;
    W.n = G.n;
    W.k = k;

    // Vertices: tags are stable through the recoloring, so the black vertex
    // of layer j and the white vertex of layer j+1 share a tag and merge.
    std::map<Tag, int> vid;
    for (int j = 1; j <= k - 1; ++j) {
        const PlabicGraph& L = wb.layers[j - 1];
        for (const auto& v : L.verts) {
            if (v.color == VColor::White) {
                if (j == 1) {
                    vid[v.tag] = static_cast<int>(W.verts.size());
                    W.verts.push_back({false, 1, v.tag, {}});
                } else {
                    auto it = vid.find(v.tag);
                    if (it == vid.end())
                        throw ValidationError(
                            "layer merge mismatch: white vertex " + v.tag.to_string() +
                            " of layer " + std::to_string(j) + " has no black ancestor");
                    W.verts[it->second].hexavalent = true; // sigma stays j-1
                }
            } else {
                vid[v.tag] = static_cast<int>(W.verts.size());
                W.verts.push_back({false, j, v.tag, {}});
            }
        }
    }

    // Every hexavalent candidate must actually have been recolored: a black
    // of layer j < k-1 reappears as a white of layer j+1.
    for (int j = 1; j <= k - 2; ++j) {
        const PlabicGraph& L = wb.layers[j - 1];
        const PlabicGraph& Lnext = wb.layers[j];
        for (const auto& v : L.verts)
            if (v.color == VColor::Black && !Lnext.vertex_by_tag(v.tag))
                throw ValidationError("layer merge mismatch: black vertex " +
                                      v.tag.to_string() + " of layer " + std::to_string(j) +
                                      " is missing from layer " + std::to_string(j + 1));
    }

    // Boundary slots (p, j) in counterclockwise reading order.
    for (int p = 1; p <= W.n; ++p)
        for (int j = 1; j <= k - 1; ++j) W.boundary.push_back({p, j, -1});
    auto slot_index = [&](int p, int j) { return (p - 1) * (k - 1) + (j - 1); };

    // Edges per layer, remembering per (layer, vertex) the slot order.
    // edge_ref[j][tag] lists weave edge ids in the layer rotation order.
    std::vector<std::map<Tag, std::vector<int>>> edge_ref(k);
    for (int j = 1; j <= k - 1; ++j) {
        const PlabicGraph& L = wb.layers[j - 1];
        std::map<int, int> weave_edge_of; // layer edge id -> weave edge id
        for (size_t e = 0; e < L.edges.size(); ++e) {
            const auto& ed = L.edges[e];
            WeaveGraph::Edge we;
            we.sigma = j;
            const int id = static_cast<int>(W.edges.size());
            auto endref = [&](int end) -> int {
                if (end >= 0) return vid.at(L.verts[end].tag);
                const int b = slot_index(-end, j);
                if (W.boundary[b].edge >= 0)
                    throw ValidationError("duplicate boundary endpoint");
                W.boundary[b].edge = id;
                return -(b + 1);
            };
            we.u = endref(ed.a);
            we.v = endref(ed.b);
            W.edges.push_back(we);
            weave_edge_of[static_cast<int>(e)] = id;
        }
        for (const auto& v : L.verts) {
            std::vector<int>& slots = edge_ref[j][v.tag];
            for (int h : v.rot) slots.push_back(weave_edge_of.at(h / 2));
        }
    }

    // Rotations: trivalent vertices keep their layer rotation; a hexavalent
    // vertex interleaves its sigma_j rotation with the corner-aligned
    // sigma_{j+1} rotation produced by the shift.
    for (auto& v : W.verts) {
        if (!v.hexavalent) {
            v.rot = edge_ref[v.sigma].at(v.tag);
            if (v.rot.size() != 3)
                throw ValidationError("trivalent weave vertex with degree != 3");
        } else {
            const auto& low = edge_ref[v.sigma].at(v.tag);
            const auto& high = edge_ref[v.sigma + 1].at(v.tag);
            if (low.size() != 3 || high.size() != 3)
                throw ValidationError("hexavalent weave vertex with bad slot counts");
            for (int s = 0; s < 3; ++s) {
                v.rot.push_back(low[s]);
                v.rot.push_back(high[s]);
            }
        }
    }

    return wb;
}

std::vector<std::string> validate_ngraph(const WeaveGraph& W) {
    std::vector<std::string> bad;
    for (size_t v = 0; v < W.verts.size(); ++v) {
        const auto& vx = W.verts[v];
        if (!vx.hexavalent) {
            if (vx.rot.size() != 3)
                bad.push_back("trivalent vertex " + vx.tag.to_string() + " has degree " +
                              std::to_string(vx.rot.size()));
            for (int e : vx.rot)
                if (W.edges[e].sigma != vx.sigma)
                    bad.push_back("trivalent vertex " + vx.tag.to_string() +
                                  " meets an edge labeled s" +
                                  std::to_string(W.edges[e].sigma));
        } else {
            if (vx.rot.size() != 6) {
                bad.push_back("hexavalent vertex " + vx.tag.to_string() + " has degree " +
                              std::to_string(vx.rot.size()));
                continue;
            }
            for (int s = 0; s < 6; ++s) {
                const int want = s % 2 == 0 ? vx.sigma : vx.sigma + 1;
                if (W.edges[vx.rot[s]].sigma != want)
                    bad.push_back("hexavalent vertex " + vx.tag.to_string() +
                                  " breaks label alternation at slot " + std::to_string(s));
            }
        }
        for (int e : vx.rot) {
            if (W.edges[e].u != static_cast<int>(v) && W.edges[e].v != static_cast<int>(v))
                bad.push_back("rotation of " + vx.tag.to_string() +
                              " lists edge " + std::to_string(e) + " not incident to it");
        }
    }
    // every edge end is either a vertex listing it or a boundary endpoint
    for (size_t e = 0; e < W.edges.size(); ++e) {
        for (int end : {W.edges[e].u, W.edges[e].v}) {
            if (end >= 0) {
                const auto& r = W.verts[end].rot;
                if (std::count(r.begin(), r.end(), static_cast<int>(e)) != 1)
                    bad.push_back("edge " + std::to_string(e) +
                                  " is not listed exactly once at a vertex end");
            } else {
                const int b = -end - 1;
                if (b < 0 || b >= static_cast<int>(W.boundary.size()) ||
                    W.boundary[b].edge != static_cast<int>(e))
                    bad.push_back("edge " + std::to_string(e) + " has a dangling boundary end");
            }
        }
    }
    return bad;
}

std::string BraidWord::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out << ' ';
        out << 's' << letters[i];
    }
    return out.str();
}

BraidWord boundary_braid(const WeaveGraph& W) {
    std::map<std::pair<int, int>, int> filled;
    for (const auto& b : W.boundary)
        if (b.edge >= 0) ++filled[{b.p, b.sigma}];
    BraidWord word;
    for (const auto& b : W.boundary) {
        auto it = filled.find({b.p, b.sigma});
        if (b.edge < 0 || it == filled.end() || it->second != 1)
            throw ValidationError("unslotted boundary endpoint at (" + std::to_string(b.p) +
                                  ", s" + std::to_string(b.sigma) + ")");
        const auto& e = W.edges[b.edge];
        const int bref = -(static_cast<int>(&b - W.boundary.data()) + 1);
        if (e.u != bref && e.v != bref)
            throw ValidationError("boundary endpoint does not own its edge end");
        word.letters.push_back(b.sigma);
    }
    if (static_cast<int>(word.letters.size()) != W.n * (W.k - 1))
        throw ValidationError("stray boundary endpoints");
    return word;
}

namespace {

Tag spine_base_of(const Tag& t) {
    if (t.kind != Tag::Kind::Spine) return t;
    Tag b;
    b.kind = t.base_kind;
    b.label = t.base_label;
    return b;
}

// Vertices of G whose identity descends from one of the site tags.
std::set<Tag> expand_site_tags(const PlabicGraph& G, const std::vector<Tag>& sites) {
    std::set<Tag> bases;
    for (const Tag& s : sites) bases.insert(spine_base_of(s));
    std::set<Tag> out;
    for (const auto& v : G.verts)
        if (bases.count(spine_base_of(v.tag))) out.insert(v.tag);
    return out;
}

// Exact tag-shift isomorphism on the complement of the excused region:
// excused neighbors act as wildcards, everything else must transport.
bool layer_symmetric_outside(const PlabicGraph& L, int ell, const std::set<Tag>& excused,
                             std::string& witness) {
    std::map<Tag, int> by_tag;
    for (size_t v = 0; v < L.verts.size(); ++v) by_tag[L.verts[v].tag] = static_cast<int>(v);

    const Tag WILD = Tag::marked(0); // sentinel, never a real tag
    auto neighbor_pattern = [&](int v, bool shift) {
        std::vector<Tag> out;
        for (int h : L.verts[v].rot) {
            const int end = L.dst(h);
            Tag t = end >= 0 ? L.verts[end].tag : Tag::marked(-end);
            if (end >= 0 && excused.count(t))
                t = WILD;
            else if (shift)
                t = t.shifted(ell, L.n);
            out.push_back(t);
        }
        return out;
    };

    for (size_t v = 0; v < L.verts.size(); ++v) {
        const Tag& tv = L.verts[v].tag;
        if (excused.count(tv)) continue;
        const Tag want = tv.shifted(ell, L.n);
        auto it = by_tag.find(want);
        if (it == by_tag.end()) {
            witness = "vertex " + tv.to_string() + " has no image " + want.to_string();
            return false;
        }
        const int w = it->second;
        if (L.verts[v].color != L.verts[w].color) {
            witness = "vertex " + tv.to_string() + " changes color";
            return false;
        }
        auto nv = neighbor_pattern(static_cast<int>(v), true);
        auto nw = neighbor_pattern(w, false);
        if (nv.size() != nw.size()) {
            witness = "vertex " + tv.to_string() + " changes degree";
            return false;
        }
        const int m = static_cast<int>(nv.size());
        bool match = false;
        for (int off = 0; off < m && !match; ++off) {
            bool eq = true;
            for (int s = 0; s < m; ++s)
                if (!(nv[s] == nw[(s + off) % m])) {
                    eq = false;
                    break;
                }
            match = eq;
        }
        if (!match) {
            witness = "rotation at " + tv.to_string() + " does not transport";
            return false;
        }
    }
    return true;
}

} // namespace

WeaveCertificate weave_symmetry_certificate(const WeaveBuild& wb, int ell) {
    WeaveCertificate cert;
    cert.ell = ell;

    // Influence regions: a pinned tree contaminates its own vertices, the
    // vertices they become in the next layer, and the face vertices of the
    // faces it borders; contamination then propagates layer by layer.
    std::vector<std::set<Tag>> excused(wb.layers.size());
    std::set<Tag> prev = expand_site_tags(wb.input, wb.input_sites);
    const PlabicGraph* prevG = &wb.input;
    for (size_t j = 0; j < wb.layers.size(); ++j) {
        std::set<Tag> ex;
        if (!prev.empty()) {
            // recolored descendants keep their tags
            for (const auto& v : wb.layers[j].verts)
                if (prev.count(v.tag)) ex.insert(v.tag);
            // face vertices of contaminated faces
            FaceData fd = graph_faces(*prevG);
            auto labels = trip_face_labels(*prevG, fd);
            std::set<Tag> dirty_faces;
            for (size_t f = 0; f < fd.faces.size(); ++f) {
                if (static_cast<int>(f) == fd.outer) continue;
                for (int h : fd.faces[f].halves) {
                    const int s = prevG->src(h);
                    if (s >= 0 && prev.count(prevG->verts[s].tag)) {
                        dirty_faces.insert(Tag::face(labels[f]->elems));
                        break;
                    }
                }
            }
            for (const auto& v : wb.layers[j].verts)
                if (dirty_faces.count(spine_base_of(v.tag))) ex.insert(v.tag);
        }
        for (const Tag& site : expand_site_tags(wb.layers[j], wb.layer_sites[j])) ex.insert(site);
        excused[j] = std::move(ex);
        prev = excused[j];
        prevG = &wb.layers[j];
    }

    bool any_excusal = false;
    for (size_t j = 0; j < wb.layers.size(); ++j) {
        GraphCertificate exact = rotational_symmetry_certificate(wb.layers[j], ell);
        if (exact.ok) continue;
        any_excusal = true;
        std::string witness;
        if (!layer_symmetric_outside(wb.layers[j], ell, excused[j], witness))
            cert.violations.push_back("layer " + std::to_string(j + 1) + ": " + witness);
    }

    if (any_excusal) {
        for (const Tag& t : wb.input_sites)
            cert.reresolution_sites.push_back("input: " + t.to_string());
        for (size_t j = 0; j < wb.layer_sites.size(); ++j)
            for (const Tag& t : wb.layer_sites[j])
                cert.reresolution_sites.push_back("layer " + std::to_string(j + 1) + ": " +
                                                  t.to_string());
        if (cert.reresolution_sites.empty())
            cert.violations.push_back("asymmetry without any recorded re-resolution site");
    }

    cert.ok = cert.violations.empty();
    return cert;
}

} // namespace symwsc
