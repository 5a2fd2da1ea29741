#pragma once

#include "symwsc/tshift.hpp"

#include <string>

namespace symwsc {

/// The N-graph assembled from the iterated T-shift layers. Layer j carries
/// label sigma_j; an internal black vertex of layer j and the white vertex it
/// becomes in layer j+1 merge into a hexavalent vertex with alternating
/// labels. Boundary endpoints occupy slots (p, j) read counterclockwise.
struct WeaveGraph {
    int n = 0, k = 0;

    struct Vertex {
        bool hexavalent = false;
        int sigma = 0; // trivalent label, or the lower of the two hex labels
        Tag tag;
        std::vector<int> rot; // weave edge ids, ccw; 3 entries, or 6 alternating
    };
    std::vector<Vertex> verts;

    struct Edge {
        int sigma = 0;
        int u = -1, v = -1; // >= 0 vertex id; -(b+1) references boundary[b]
    };
    std::vector<Edge> edges;

    struct Endpoint {
        int p = 0;     // boundary position 1..n
        int sigma = 0; // layer
        int edge = -1;
    };
    std::vector<Endpoint> boundary; // sorted by (p, sigma)
};

struct WeaveBuild {
    WeaveGraph weave;
    PlabicGraph input;                          // the trivalent start graph
    std::vector<Tag> input_sites;               // pinned sites of the input resolution
    std::vector<PlabicGraph> layers;            // G_1 .. G_{k-1}
    std::vector<int> ranks;                     // k, k-1, ..., 1
    std::vector<std::vector<Tag>> layer_sites;  // re-resolution sites per shift
};

/// Iterate the T-shift k-1 times and merge the layers. Throws InputError for
/// rank < 2 inputs and ValidationError("layer merge mismatch...") when a
/// black vertex of one layer has no white successor in the next.
/// `input_sites` are the pinned sites recorded while making G trivalent; they
/// seed the influence regions the symmetry certificate may excuse.
WeaveBuild build_weave(const PlabicGraph& G, int ell, std::vector<Tag> input_sites = {});

/// Local N-graph validity: trivalent vertices carry one label, hexavalent
/// vertices six alternating edges of adjacent labels, rotations closed.
/// Violations are returned, not thrown.
std::vector<std::string> validate_ngraph(const WeaveGraph& W);

struct BraidWord {
    std::vector<int> letters; // Artin generator indices
    std::string to_string() const;
};

/// Read the boundary word counterclockwise from slot (1,1). Throws
/// ValidationError when a slot is missing or duplicated.
BraidWord boundary_braid(const WeaveGraph& W);

struct WeaveCertificate {
    bool ok = false;
    int ell = 0;
    std::vector<std::string> reresolution_sites; // "layer j: tag"
    std::vector<std::string> violations;
};

/// Per-layer rotational symmetry up to the recorded tree re-resolutions:
/// each layer must pass the exact certificate, or pass it after contracting
/// its resolution trees (the pinned sites are then reported).
WeaveCertificate weave_symmetry_certificate(const WeaveBuild& wb, int ell);

} // namespace symwsc
