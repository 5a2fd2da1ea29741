#include "symwsc/tiling.hpp"

#include "symwsc/separation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace symwsc {

std::vector<std::pair<KSubset, KSubset>> Clique::boundary() const {
    std::vector<std::pair<KSubset, KSubset>> chain;
    if (members.size() < 2) return chain;
    if (members.size() == 2) {
        chain.emplace_back(members[0], members[1]);
        return chain;
    }
    for (size_t i = 0; i < members.size(); ++i)
        chain.emplace_back(members[i], members[(i + 1) % members.size()]);
    return chain;
}

std::vector<Clique> cliques(const Collection& D) {
    auto ws = is_ws_collection(D);
    if (!ws.separated) throw ValidationError("cliques: collection is not weakly separated");

    // Collect candidate cores from the members themselves: every white core
    // is some S minus an element, every black core some S plus an element.
    std::map<std::vector<int>, std::vector<std::pair<int, KSubset>>> white, black;
    for (const KSubset& S : D.members) {
        for (int x : S.elems) {
            std::vector<int> core;
            for (int e : S.elems)
                if (e != x) core.push_back(e);
            white[core].emplace_back(x, S);
        }
        for (int x = 1; x <= D.n; ++x) {
            if (S.contains(x)) continue;
            std::vector<int> core = S.elems;
            core.insert(std::lower_bound(core.begin(), core.end(), x), x);
            black[core].emplace_back(x, S);
        }
    }

    std::vector<Clique> out;
    for (auto& [core, entries] : white) {
        if (entries.size() < 2) continue;
        std::sort(entries.begin(), entries.end());
        Clique c;
        c.color = Clique::Color::White;
        c.core = core;
        for (auto& [x, S] : entries) c.members.push_back(S);
        out.push_back(std::move(c));
    }
    for (auto& [core, entries] : black) {
        if (entries.size() < 2) continue;
        std::sort(entries.begin(), entries.end());
        Clique c;
        c.color = Clique::Color::Black;
        c.core = core;
        for (auto& [x, S] : entries) c.members.push_back(S);
        out.push_back(std::move(c));
    }
    return out;
}

PlabicTiling build_tiling(const Collection& D) {
    MaximalityReport rep = check_maximal(D);
    if (!rep.maximal)
        throw ValidationError("build_tiling: collection has " + std::to_string(rep.size) +
                              " members, maximality requires " + std::to_string(rep.expected));

    PlabicTiling T;
    T.n = D.n;
    T.k = D.k;
    T.vertices = D;
    T.all_cliques = cliques(D);
    for (const Clique& c : T.all_cliques)
        if (c.nontrivial()) T.faces.push_back(c);

    // Edges are the pairs appearing in a nontrivial boundary chain.
    std::set<std::pair<KSubset, KSubset>> edge_set;
    for (const Clique& c : T.faces)
        for (auto& [a, b] : c.boundary())
            edge_set.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));

    std::map<std::vector<int>, const Clique*> face_by_core_white, face_by_core_black;
    for (const Clique& c : T.faces)
        (c.color == Clique::Color::White ? face_by_core_white : face_by_core_black)[c.core] = &c;

    for (auto& [a, b] : edge_set) {
        TilingEdge e;
        e.a = a;
        e.b = b;
        std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                              std::back_inserter(e.white_core));
        std::set_union(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                       std::back_inserter(e.black_core));
        const int incident = (face_by_core_white.count(e.white_core) ? 1 : 0) +
                             (face_by_core_black.count(e.black_core) ? 1 : 0);
        if (incident == 0)
            throw ValidationError("tiling edge " + a.to_string() + "-" + b.to_string() +
                                  " bounds no face");
        e.boundary = incident == 1;
        T.edges.push_back(std::move(e));
    }

    // The boundary edges must be exactly the consecutive-interval pairs.
    std::set<std::pair<KSubset, KSubset>> expected_boundary;
    for (int p = 1; p <= T.n; ++p) {
        KSubset a = cyclic_interval(T.n, T.k, p);
        KSubset b = cyclic_interval(T.n, T.k, p + 1);
        expected_boundary.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
        T.boundary_cycle.push_back(a);
    }
    std::set<std::pair<KSubset, KSubset>> actual_boundary;
    for (const TilingEdge& e : T.edges)
        if (e.boundary) actual_boundary.insert({e.a, e.b});
    if (actual_boundary != expected_boundary)
        throw ValidationError("tiling boundary is not the interval cycle");

    // Disk Euler relation V - E + F = 1.
    const long long euler = static_cast<long long>(T.vertices.size()) -
                            static_cast<long long>(T.edges.size()) +
                            static_cast<long long>(T.faces.size());
    if (euler != 1)
        throw ValidationError("tiling fails the Euler check: V-E+F = " + std::to_string(euler));

    return T;
}

TilingCertificate rotational_symmetry_certificate(const PlabicTiling& T, int ell) {
    TilingCertificate cert;
    cert.ell = ell;

    for (const KSubset& I : T.vertices.members) {
        KSubset J = cyclic_shift_subset(I, ell);
        if (!T.vertices.contains(J)) {
            cert.witness = "label " + I.to_string() + " shifts to " + J.to_string() +
                           " which is not a vertex";
            return cert;
        }
    }

    std::set<std::pair<KSubset, KSubset>> edge_set;
    for (const TilingEdge& e : T.edges) edge_set.insert({e.a, e.b});
    for (const TilingEdge& e : T.edges) {
        KSubset a = cyclic_shift_subset(e.a, ell);
        KSubset b = cyclic_shift_subset(e.b, ell);
        if (b < a) std::swap(a, b);
        if (!edge_set.count({a, b})) {
            cert.witness = "edge " + e.a.to_string() + "-" + e.b.to_string() +
                           " has no shifted partner";
            return cert;
        }
    }

    std::set<std::pair<int, std::vector<int>>> face_cores;
    for (const Clique& c : T.faces)
        face_cores.insert({c.color == Clique::Color::White ? 0 : 1, c.core});
    for (const Clique& c : T.faces) {
        KSubset core(c.core, T.n);
        std::vector<int> shifted = cyclic_shift_subset(core, ell).elems;
        if (!face_cores.count({c.color == Clique::Color::White ? 0 : 1, shifted})) {
            cert.witness = "face with core " + core.to_string() + " has no shifted partner";
            return cert;
        }
    }

    cert.ok = true;
    return cert;
}

} // namespace symwsc
