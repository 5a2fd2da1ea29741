#pragma once

#include "symwsc/subset.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace symwsc {

/// A white clique W(K) = {S in D : K subset of S} for a (k-1)-set K, or a
/// black clique B(L) = {S in D : S subset of L} for a (k+1)-set L.
/// Members are sorted by the distinguishing element (added for white,
/// removed for black); this order traverses the clique face counterclockwise.
struct Clique {
    enum class Color { White, Black };
    Color color = Color::White;
    std::vector<int> core;
    std::vector<KSubset> members;

    bool nontrivial() const { return members.size() >= 3; }
    /// Boundary pairs: the full cyclic chain for nontrivial cliques, the
    /// single pair for 2-member cliques.
    std::vector<std::pair<KSubset, KSubset>> boundary() const;
};

/// All white and black cliques of D with at least two members.
/// Requires D weakly separated.
std::vector<Clique> cliques(const Collection& D);

struct TilingEdge {
    KSubset a, b;                 // the two vertex labels, a < b
    std::vector<int> white_core;  // a intersect b
    std::vector<int> black_core;  // a union b
    bool boundary = false;        // lies on the n-gon boundary
};

/// The 2-complex on the n-gon: vertices are the members of a maximal D,
/// edges come from nontrivial clique boundaries, faces are the nontrivial
/// cliques. Incidence is purely label-combinatorial; coordinates are
/// attached only at render time.
struct PlabicTiling {
    int n = 0, k = 0;
    Collection vertices;
    std::vector<Clique> all_cliques;      // every clique with >= 2 members
    std::vector<Clique> faces;            // the nontrivial ones
    std::vector<TilingEdge> edges;
    std::vector<KSubset> boundary_cycle;  // I_1, ..., I_n in rotational order
};

/// Build and validate the tiling of a maximal weakly separated collection.
/// Throws ValidationError when D is not maximal or the complex fails the
/// Euler / boundary checks.
PlabicTiling build_tiling(const Collection& D);

struct TilingCertificate {
    bool ok = false;
    int ell = 0;
    std::string witness; // empty when ok
};

/// Check combinatorially that relabeling by I -> I +_n ell is an automorphism
/// of the tiling; on failure the witness names the violating cell.
TilingCertificate rotational_symmetry_certificate(const PlabicTiling& T, int ell);

} // namespace symwsc
