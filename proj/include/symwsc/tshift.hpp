#pragma once

#include "symwsc/plabic.hpp"

namespace symwsc {

/// Result of one T-shift. The output graph's white vertices are the input's
/// internal black vertices (same tags, recolored), its black vertices sit in
/// the input's faces, and marked point i is the point added slightly
/// counterclockwise of the old point i.
struct TShiftResult {
    PlabicGraph graph;
    int rank_in = 0;
    int rank_out = 0;
    /// Tags of the recolored vertices (black in the input, white here).
    std::vector<Tag> recolored;
    /// For each recolored vertex tag, its three output edges listed in the
    /// corner order of the input rotation; used to interleave hexavalent
    /// rotations during weave assembly. Entries are output edge ids.
    std::map<Tag, std::array<int, 3>> corner_edges;
    /// Re-resolution sites created by the equivariant tree expansion.
    std::vector<Tag> reresolution_sites;
};

/// The four-step rewrite on a trivalent plabic graph: recolor blacks white,
/// drop the old whites and edges, put a black vertex in each face joined to
/// the recolored vertices on its boundary, attach new marked points, then
/// delete bivalent blacks and expand multivalent blacks into trivalent trees
/// (equivariantly with respect to x -> x + ell).
TShiftResult t_shift(const PlabicGraph& G, int ell);

} // namespace symwsc
