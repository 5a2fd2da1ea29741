#pragma once

#include "symwsc/params.hpp"
#include "symwsc/subset.hpp"

#include <optional>
#include <vector>

namespace symwsc {

/// A total order on the element orbits of the divisible instance: reps[s-1]
/// is the representative a_s of the s-th smallest orbit.
struct OrbitOrder {
    std::vector<int> reps; // permutation of 1..ell

    static OrbitOrder descending(int ell); // (ell, ell-1, ..., 1), the default
};

/// Validate that `order` is a permutation of [ell]; when fold_g < ell the
/// folding constraint applies: positions 1..ell-g must hold {g+1,...,ell}.
void validate_order(const OrbitOrder& order, int ell, int fold_g);

/// Next element of sorted P after x, wrapping from max to min.
/// Throws InputError when x is not in P.
int successor(const std::vector<int>& P, int x);

/// Predecessor in the same cyclic order.
int predecessor(const std::vector<int>& P, int x);

/// Stage ground sets: P_s = [n] minus the first s-1 orbits, and the
/// truncations P_{s,h} = P_s \ {a_s + h*ell, ..., a_s + (d-1)*ell} for
/// h = 1..d-1, with P_{s,d} = P_s.
struct GroundSets {
    std::vector<int> P;                    // P_s
    std::vector<std::vector<int>> P_h;     // index h-1 -> P_{s,h}
};
GroundSets ground_sets(const Feasibility& params, const OrbitOrder& order, int s);

/// Elements of P_s in the cyclic window from S_{P_s}(a_s - ell) to a_s
/// inclusive, traversed in the cyclic order of P_s; has ell-s+1 entries.
std::vector<int> index_window(const Feasibility& params, const OrbitOrder& order, int s);

/// The interval {i, S(i), S^2(i), ..., S^{k-1}(i)} inside P_{s,h}; empty
/// optional when i is missing from P_{s,h} or the iterates collide.
std::optional<KSubset> interval_I(const Feasibility& params, const OrbitOrder& order, int s,
                                  int i, int h);

/// Orbit representatives B_s: accepted intervals over the window and h in [d].
/// Only window entries within k-1 successor steps of a_s can seed an interval
/// through a_s, so the scan covers the last min(ell-s+1, k) window entries.
Collection build_B_s(const Feasibility& params, const OrbitOrder& order, int s);

/// Orbit closure L_s of B_s.
Collection build_L_s(const Feasibility& params, const OrbitOrder& order, int s);

/// Predicted stage sizes. B is predicted for s <= ell-r, L for all
/// s <= ell-r+1; absent optionals mean the stage carries no pinned count.
struct SizePrediction {
    std::optional<long long> B;
    std::optional<long long> L;
};
SizePrediction predicted_sizes(const Feasibility& params, int s);

/// Full per-stage record kept for auditing and the counting tests.
struct StageTrace {
    int s = 0;
    int rep = 0; // a_s, 0 for the vacuous stage s = ell+1
    std::vector<int> P;
    std::vector<std::vector<int>> P_h;
    std::vector<int> window;
    Collection B;
    Collection L;
    SizePrediction predicted;
};

struct FoldInfo {
    int n_prime = 0;                 // d * ell
    int dropped_stages = 0;          // ell - g
    Collection C;                    // divisible output over [n']
    Collection D_prime;              // C minus the dropped orbits
};

struct GeneratorTrace {
    Feasibility params;              // the requested (k, n, ell)
    Feasibility run_params;          // equals params when divisible, else (k, n', ell)
    OrbitOrder order;
    bool folded = false;
    std::optional<FoldInfo> fold;
    std::vector<StageTrace> stages;  // stages of the divisible run
    Collection result;               // the final collection over [n]
};

/// The divisible-case construction (requires n = d*ell): the union of the
/// orbit closures L_1, ..., L_{ell-r+1}.
Collection generate_divisible(const Feasibility& params, const OrbitOrder& order);
GeneratorTrace generate_divisible_trace(const Feasibility& params, const OrbitOrder& order);

/// Elementwise fold map F(a + g*x) = a + ell*x from [n] into [d*ell].
KSubset fold_map_apply(const KSubset& I, int ell);
/// Inverse on the image; throws InputError when an element of J lies outside
/// the image classes 1..g.
KSubset fold_map_invert(const KSubset& J, int n, int ell);

/// Entry point: divisible instances run directly, otherwise the construction
/// runs at n' = d*ell, drops the first ell-g orbit stages and pulls the rest
/// back along the fold map. Throws InfeasibleError when the congruence fails.
Collection generate(int k, int n, int ell, std::optional<OrbitOrder> order = std::nullopt);
GeneratorTrace generate_trace(int k, int n, int ell,
                              std::optional<OrbitOrder> order = std::nullopt);

/// One remove-left/append-right walk of the informal process, kept as a
/// differential oracle against the formal stages.
struct InformalWalk {
    int s = 0;
    int start = 0;
    std::vector<KSubset> visited; // in walk order, may repeat earlier sets
};

struct InformalTrace {
    std::vector<InformalWalk> walks;
    std::vector<Collection> B; // per stage
    Collection result;
};

/// The informal generating process (divisible case only).
InformalTrace informal_generate(const Feasibility& params, const OrbitOrder& order);

} // namespace symwsc
