#pragma once

#include "symwsc/base.hpp"

#include <compare>
#include <string>
#include <vector>

namespace symwsc {

/// A k-element subset of {1,...,n}, stored strictly increasing.
struct KSubset {
    std::vector<int> elems; // strictly increasing, values in 1..n
    int n = 0;

    KSubset() = default;
    /// Validating constructor: sorts, requires distinct values in 1..n.
    KSubset(std::vector<int> v, int ambient_n);

    int k() const { return static_cast<int>(elems.size()); }
    bool contains(int x) const;

    auto operator<=>(const KSubset&) const = default;

    /// Canonical text form "{1,2,6}".
    std::string to_string() const;
    /// Compact digit form "126"; only valid for n <= 9.
    std::string to_compact() const;
};

/// Parse "{1,2,6}", "1,2,6" or (for n <= 9) the digit string "126".
KSubset parse_subset(const std::string& text, int n);

/// Shift every element by t, reduced 1-based into 1..n, and re-sort.
KSubset cyclic_shift_subset(const KSubset& I, int t);

/// The cyclic interval {start, start+1, ..., start+k-1} reduced into [n].
KSubset cyclic_interval(int n, int k, int start);

/// An ordered, deduplicated set of KSubsets with common ambient (n, k).
struct Collection {
    int n = 0;
    int k = 0;
    std::vector<KSubset> members; // sorted lexicographically, unique

    Collection() = default;
    Collection(int ambient_n, int subset_k) : n(ambient_n), k(subset_k) {}
    /// Validating constructor: sorts, dedupes, checks every member has ambient (n, k).
    Collection(int ambient_n, int subset_k, std::vector<KSubset> xs);

    int size() const { return static_cast<int>(members.size()); }
    bool empty() const { return members.empty(); }
    bool contains(const KSubset& s) const;
    /// Insert keeping order; returns false when already present.
    bool insert(KSubset s);
    /// Union in place.
    void merge(const Collection& other);

    auto operator<=>(const Collection&) const = default;
};

/// The orbit {I +_n x*ell : x in [d]} of I under repeated shifting by ell.
Collection rho_orbit(const KSubset& I, int ell);

/// All n cyclic intervals of length k.
Collection all_cyclic_intervals(int n, int k);

/// Elementwise complement [n] \ A of every member.
Collection complement_collection(const Collection& D);

} // namespace symwsc
