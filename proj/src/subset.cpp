#include "symwsc/subset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symwsc {

KSubset::KSubset(std::vector<int> v, int ambient_n) : elems(std::move(v)), n(ambient_n) {
    if (n < 1) throw InputError("KSubset ambient n must be positive");
    std::sort(elems.begin(), elems.end());
    for (size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 1 || elems[i] > n)
            throw InputError("KSubset element " + std::to_string(elems[i]) +
                             " out of range 1.." + std::to_string(n));
        if (i > 0 && elems[i] == elems[i - 1])
            throw InputError("KSubset has duplicate element " + std::to_string(elems[i]));
    }
}

bool KSubset::contains(int x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
}

std::string KSubset::to_string() const {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < elems.size(); ++i) {
        if (i) out << ',';
        out << elems[i];
    }
    out << '}';
    return out.str();
}

std::string KSubset::to_compact() const {
    if (n > 9) throw InputError("compact subset form requires n <= 9");
    std::string s;
    for (int e : elems) s += static_cast<char>('0' + e);
    return s;
}

KSubset parse_subset(const std::string& text, int n) {
    std::string body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw InputError("unbalanced braces in subset literal: " + text);
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> vals;
    if (body.find(',') == std::string::npos && !body.empty() &&
        std::all_of(body.begin(), body.end(), [](char c) { return c >= '1' && c <= '9'; }) &&
        n <= 9) {
        for (char c : body) vals.push_back(c - '0');
    } else {
        std::istringstream in(body);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw InputError("empty element in subset literal: " + text);
            try {
                vals.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw InputError("bad element '" + tok + "' in subset literal: " + text);
            }
        }
    }
    if (vals.empty()) throw InputError("empty subset literal: " + text);
    return KSubset(std::move(vals), n);
}

KSubset cyclic_shift_subset(const KSubset& I, int t) {
    std::vector<int> shifted;
    shifted.reserve(I.elems.size());
    for (int e : I.elems) shifted.push_back(reduce1(static_cast<long long>(e) + t, I.n));
    return KSubset(std::move(shifted), I.n);
}

KSubset cyclic_interval(int n, int k, int start) {
    std::vector<int> v;
    v.reserve(k);
    for (int i = 0; i < k; ++i) v.push_back(reduce1(start + i, n));
    return KSubset(std::move(v), n);
}

Collection::Collection(int ambient_n, int subset_k, std::vector<KSubset> xs)
    : n(ambient_n), k(subset_k), members(std::move(xs)) {
    for (const KSubset& s : members) {
        if (s.n != n)
            throw InputError("collection member " + s.to_string() + " has ambient n=" +
                             std::to_string(s.n) + ", expected " + std::to_string(n));
        if (s.k() != k)
            throw InputError("collection member " + s.to_string() + " has size " +
                             std::to_string(s.k()) + ", expected k=" + std::to_string(k));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool Collection::contains(const KSubset& s) const {
    return std::binary_search(members.begin(), members.end(), s);
}

bool Collection::insert(KSubset s) {
    if (s.n != n || s.k() != k)
        throw InputError("cannot insert " + s.to_string() + " into collection over (n=" +
                         std::to_string(n) + ", k=" + std::to_string(k) + ")");
    auto it = std::lower_bound(members.begin(), members.end(), s);
    if (it != members.end() && *it == s) return false;
    members.insert(it, std::move(s));
    return true;
}

void Collection::merge(const Collection& other) {
    for (const KSubset& s : other.members) insert(s);
}

Collection rho_orbit(const KSubset& I, int ell) {
    const int d = I.n / std::gcd(I.n, ell);
    Collection orbit(I.n, I.k());
    for (int x = 1; x <= d; ++x) orbit.insert(cyclic_shift_subset(I, x * ell));
    return orbit;
}

Collection all_cyclic_intervals(int n, int k) {
    Collection out(n, k);
    for (int start = 1; start <= n; ++start) out.insert(cyclic_interval(n, k, start));
    return out;
}

Collection complement_collection(const Collection& D) {
    Collection out(D.n, D.n - D.k);
    for (const KSubset& s : D.members) {
        std::vector<int> comp;
        comp.reserve(D.n - D.k);
        for (int x = 1; x <= D.n; ++x)
            if (!s.contains(x)) comp.push_back(x);
        out.insert(KSubset(std::move(comp), D.n));
    }
    return out;
}

} // namespace symwsc
