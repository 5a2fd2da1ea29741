#pragma once

#include "symwsc/subset.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace symwsc {

/// Outcome of a pairwise weak-separation test. When the pair fails,
/// `witness` holds a < b < c < d alternating between the two difference sets.
struct SeparationResult {
    bool separated = true;
    std::optional<std::array<int, 4>> witness;
};

/// Two sets S, T are weakly separated when no a < b < c < d alternate
/// between S\T and T\S (in either role assignment).
SeparationResult is_weakly_separated(const KSubset& S, const KSubset& T);

struct CollectionCheck {
    bool separated = true;
    std::vector<std::pair<KSubset, KSubset>> failing_pairs; // exhaustive
};

/// Check every unordered pair of D.
CollectionCheck is_ws_collection(const Collection& D);

struct SymmetryCheck {
    bool symmetric = true;
    std::vector<KSubset> violators; // members whose shift is missing
};

/// Check that D is closed under I -> I +_n ell.
SymmetryCheck is_rho_symmetric(const Collection& D, int ell);

struct MaximalityReport {
    bool maximal = false;
    int size = 0;
    int expected = 0; // k(n-k)+1
    bool has_all_intervals = false; // diagnostic, not gating
};

/// Cardinality test |D| = k(n-k)+1. Throws ValidationError when D is not
/// weakly separated (the count is only meaningful for separated collections).
MaximalityReport check_maximal(const Collection& D);

inline bool is_maximal(const Collection& D) { return check_maximal(D).maximal; }

} // namespace symwsc
