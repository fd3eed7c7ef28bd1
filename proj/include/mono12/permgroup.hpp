// Minimal permutation-group utilities: closure, orbits, cycle types.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace mono12::permgroup {

using Perm = std::vector<int>;  // images of 0..n-1

inline Perm identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

// apply g first, then f
inline Perm compose(const Perm& f, const Perm& g) {
    Perm out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
    return out;
}

inline std::vector<int> cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> type;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

inline std::vector<Perm> closure(const std::vector<Perm>& gens, size_t limit = 1000000) {
    if (gens.empty()) throw std::invalid_argument("closure: no generators");
    size_t n = gens[0].size();
    for (const Perm& g : gens)
        if (g.size() != n) throw std::invalid_argument("closure: mixed degrees");
    std::set<Perm> elems;
    std::vector<Perm> queue{identity(static_cast<int>(n))};
    elems.insert(queue[0]);
    while (!queue.empty()) {
        Perm cur = std::move(queue.back());
        queue.pop_back();
        for (const Perm& g : gens) {
            Perm nxt = compose(g, cur);
            if (elems.insert(nxt).second) {
                if (elems.size() > limit) throw std::runtime_error("closure: group too large");
                queue.push_back(std::move(nxt));
            }
        }
    }
    return {elems.begin(), elems.end()};
}

inline bool is_transitive(const std::vector<Perm>& group, int n) {
    if (group.empty()) return false;
    std::vector<bool> orbit(n, false);
    orbit[0] = true;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (const Perm& g : group)
            if (!orbit[g[x]]) {
                orbit[g[x]] = true;
                queue.push_back(g[x]);
            }
    }
    return std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });
}

// multiset of cycle types with element counts
inline std::map<std::vector<int>, int> cycle_type_counts(const std::vector<Perm>& group) {
    std::map<std::vector<int>, int> out;
    for (const Perm& g : group) out[cycle_type(g)] += 1;
    return out;
}

}  // namespace mono12::permgroup
