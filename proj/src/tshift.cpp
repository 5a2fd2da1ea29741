#include "symwsc/tshift.hpp"

#include <algorithm>
#include <map>

namespace symwsc {

TShiftResult t_shift(const PlabicGraph& G, int ell) {
    for (size_t v = 0; v < G.verts.size(); ++v)
        if (G.degree(static_cast<int>(v)) != 3)
            throw InputError("t_shift requires a trivalent graph; vertex " +
                             G.verts[v].tag.to_string() + " has degree " +
                             std::to_string(G.degree(static_cast<int>(v))));

    FaceData fd = graph_faces(G);
    auto labels = trip_face_labels(G, fd);

    TShiftResult res;
    res.rank_in = graph_rank(G);

    PlabicGraph H;
    H.n = G.n;

    // Whites of the new graph: the recolored internal blacks of G.
    std::map<int, int> white_of; // G vertex -> H vertex
    for (size_t v = 0; v < G.verts.size(); ++v)
        if (G.verts[v].color == VColor::Black) {
            white_of[static_cast<int>(v)] = static_cast<int>(H.verts.size());
            H.verts.push_back({VColor::White, G.verts[v].tag, {}});
            res.recolored.push_back(G.verts[v].tag);
        }

    // Blacks of the new graph: one per non-outer face of G, tagged by label.
    std::map<int, int> black_of_face; // face index -> H vertex
    for (size_t f = 0; f < fd.faces.size(); ++f) {
        if (static_cast<int>(f) == fd.outer) continue;
        black_of_face[static_cast<int>(f)] = static_cast<int>(H.verts.size());
        H.verts.push_back({VColor::Black, Tag::face(labels[f]->elems), {}});
    }

    // Edges: one per (black vertex of G, corner). The corner after rotation
    // slot j of v is the face left of its out-half rot[j], so slot j of the
    // white copy points into that corner and the hexavalent interleave of the
    // weave assembly can zip the two rotations positionwise.
    std::map<int, int> edge_of_half; // G half-edge (at a black vertex) -> H edge
    std::vector<std::vector<int>> rot_edges(H.verts.size());
    for (size_t v = 0; v < G.verts.size(); ++v) {
        if (G.verts[v].color != VColor::Black) continue;
        const int w = white_of[static_cast<int>(v)];
        for (int h : G.verts[v].rot) {
            const int f = fd.face_of[h];
            if (f == fd.outer) throw ValidationError("internal corner touches the outer face");
            const int u = black_of_face[f];
            const int e = static_cast<int>(H.edges.size());
            H.edges.push_back({w, u});
            edge_of_half[h] = e;
            rot_edges[w].push_back(e);
        }
    }

    // Walk each face to place the black vertex's rotation; the new marked
    // point p replaces the forward arc from old p to old p+1.
    for (size_t f = 0; f < fd.faces.size(); ++f) {
        if (static_cast<int>(f) == fd.outer) continue;
        const int u = black_of_face[static_cast<int>(f)];
        for (int h : fd.faces[f].halves) {
            if (G.is_arc(h)) {
                const int p = G.src(h) < 0 ? -G.src(h) : 0;
                if ((h - G.arc_base) % 2 != 0)
                    throw ValidationError("backward arc inside a non-outer face");
                const int e = static_cast<int>(H.edges.size());
                H.edges.push_back({u, -p});
                rot_edges[u].push_back(e);
            } else if (auto it = edge_of_half.find(h); it != edge_of_half.end()) {
                rot_edges[u].push_back(it->second);
            }
            // halves at white vertices and pendant halves are dropped
        }
    }

    for (size_t v = 0; v < H.verts.size(); ++v) H.verts[v].rot = rot_edges[v];
    H.finalize();
    validate_graph(H);

    // Step 4: remove bivalent blacks, then expand the multivalent ones.
    PlabicGraph cur = std::move(H);
    while (true) {
        int target = -1;
        for (size_t v = 0; v < cur.verts.size(); ++v)
            if (cur.verts[v].color == VColor::Black && cur.degree(static_cast<int>(v)) == 2) {
                target = static_cast<int>(v);
                break;
            }
        if (target < 0) break;
        cur = apply_move(cur, DeleteBivalent{cur.verts[target].tag});
    }

    TrivalentResult tri = make_trivalent(cur, ell);
    res.graph = std::move(tri.graph);
    res.reresolution_sites = std::move(tri.reresolution_sites);

    res.rank_out = graph_rank(res.graph);
    if (res.rank_out != res.rank_in - 1)
        throw ValidationError("t_shift rank " + std::to_string(res.rank_out) +
                              ", expected " + std::to_string(res.rank_in - 1));
    auto perm = trip_permutation(res.graph);
    for (int p = 1; p <= res.graph.n; ++p)
        if (perm[p] != reduce1(p + res.rank_out, res.graph.n))
            throw ValidationError("t_shift output has an unexpected trip permutation");
    return res;
}

} // namespace symwsc
