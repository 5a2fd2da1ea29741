#pragma once

#include "symwsc/tiling.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace symwsc {

enum class VColor { White, Black };

/// Stable identity of a graph vertex, preserved through rewrites. A clique
/// tag comes from the dual construction; a face tag names a T-shift face
/// vertex by the face label; a spine tag names one vertex of a trivalent
/// resolution tree; a marked tag is a boundary point.
struct Tag {
    enum class Kind { WhiteClique, BlackClique, Face, Spine, Marked };
    Kind kind = Kind::Marked;
    std::vector<int> label;          // core / face label / {p}
    Kind base_kind = Kind::Marked;   // spine only
    std::vector<int> base_label;     // spine only
    int index = 0;                   // spine only

    static Tag white_clique(std::vector<int> core);
    static Tag black_clique(std::vector<int> core);
    static Tag face(std::vector<int> lbl);
    static Tag spine(const Tag& base, int index);
    static Tag marked(int p);

    /// The image under the relabeling x -> x + ell (mod n, 1-based).
    Tag shifted(int ell, int n) const;
    std::string to_string() const;
    static Tag parse(const std::string&);

    auto operator<=>(const Tag&) const = default;
};

/// A plabic graph as a half-edge planar map on the marked disk. Marked
/// points 1..n sit counterclockwise on the boundary; the boundary arcs
/// between consecutive marked points are materialized so that faces can be
/// read off the rotation system. Rotations list outgoing half-edges
/// counterclockwise; twin(h) = h ^ 1.
struct PlabicGraph {
    int n = 0;

    struct Internal {
        VColor color = VColor::White;
        Tag tag;
        std::vector<int> rot; // ccw outgoing half-edges
    };
    std::vector<Internal> verts;

    // Declared edges: endpoints >= 0 are internal indices, -p is marked p.
    struct Edge {
        int a = 0, b = 0;
    };
    std::vector<Edge> edges;      // non-arc edges; edge e owns halves 2e, 2e+1
    int arc_base = 0;             // first half-edge id of the boundary arcs

    // Derived tables (filled by finalize()).
    std::vector<int> h_src;       // half-edge -> endpoint (>=0 internal, -p marked)
    std::vector<int> h_rot_next;  // ccw successor at the source
    std::vector<int> h_rot_prev;
    std::vector<std::array<int, 3>> marked_rot; // per marked point

    int half_count() const { return static_cast<int>(h_src.size()); }
    int twin(int h) const { return h ^ 1; }
    int src(int h) const { return h_src[h]; }
    int dst(int h) const { return h_src[twin(h)]; }
    bool is_arc(int h) const { return h >= arc_base; }
    int pendant_half(int p) const { return marked_rot[p - 1][1]; }
    int degree(int v) const { return static_cast<int>(verts[v].rot.size()); }
    std::optional<int> vertex_by_tag(const Tag& t) const;

    /// Rebuild the derived tables; validates the rotation system.
    void finalize();
};

/// Face structure computed from the rotation system.
struct FaceData {
    struct Face {
        std::vector<int> halves; // the cycle under h -> rot_next(twin(h))
        bool outer = false;
        bool boundary = false;   // touches a boundary arc
    };
    std::vector<Face> faces;
    std::vector<int> face_of; // half-edge -> face index
    int outer = -1;
};

FaceData graph_faces(const PlabicGraph& G);

/// Trips (zig-zag strands) and the face labels they induce.
struct Trip {
    int entry = 0, exit = 0;
    std::vector<int> halves;
};

Trip trace_trip(const PlabicGraph& G, int p);
/// exit point per entry point (1-based vector of size n).
std::vector<int> trip_permutation(const PlabicGraph& G);

/// Face labels: face F is labeled by the set of endpoints i whose strand
/// passes F on the right. Non-outer faces of a reduced graph all receive
/// labels of the common size rank(G).
std::vector<std::optional<KSubset>> trip_face_labels(const PlabicGraph& G, const FaceData& fd);

/// The label set F(G) as a collection; throws ValidationError when labels
/// are missing or of mixed size.
Collection face_label_collection(const PlabicGraph& G);

/// Common face-label size.
int graph_rank(const PlabicGraph& G);

/// Structural validation: rotation closure, sphere Euler count, one outer
/// face of length n, no internal vertex of degree < minimum.
void validate_graph(const PlabicGraph& G, int min_internal_degree = 1);

/// Dual of a plabic tiling: one internal vertex per nontrivial clique,
/// one edge per tiling edge, marked point p attached across the boundary
/// edge (I_p, I_{p+1}). Trivial boundary cliques are elided, which is the
/// result of deleting their bivalent dual vertices.
PlabicGraph dual_plabic_graph(const PlabicTiling& T);

// --- local moves -----------------------------------------------------------

struct DeleteBivalent {
    Tag at;
};
struct ContractSameColor {
    Tag a, b;
};
struct SquareMove {
    KSubset face_label;
};
using Move = std::variant<DeleteBivalent, ContractSameColor, SquareMove>;

PlabicGraph apply_move(const PlabicGraph& G, const Move& m);

/// Locate quadrilateral faces with four distinct alternating trivalent
/// corners, returned by face label.
std::vector<KSubset> square_move_sites(const PlabicGraph& G);

// --- trivalent resolution ---------------------------------------------------

struct TrivalentResult {
    PlabicGraph graph;
    std::vector<Tag> reresolution_sites; // vertices pinned by the rotation
};

/// Expand every internal vertex of degree > 3 into a trivalent tree by
/// repeated inverse contraction. Vertices in a free rho^ell-orbit receive the
/// same tree transported by the rotation; vertices whose stabilizer moves
/// their edges get a canonical tree and are reported as re-resolution sites.
TrivalentResult make_trivalent(const PlabicGraph& G, int ell);

/// Contract every resolution tree back to its base vertex.
PlabicGraph contract_resolutions(const PlabicGraph& G);

// --- symmetry ---------------------------------------------------------------

struct GraphCertificate {
    bool ok = false;
    int ell = 0;
    std::vector<std::pair<std::string, std::string>> vertex_map; // tag -> tag
    std::string witness;
};

/// Check that the tag relabeling induced by x -> x + ell is a color- and
/// rotation-preserving automorphism sending marked point p to p + ell.
GraphCertificate rotational_symmetry_certificate(const PlabicGraph& G, int ell);

} // namespace symwsc
