#pragma once

// Exhaustive families of small simplicial complexes for property tests:
// every complex on an exact vertex set, all labeled trees, cycles, and the
// standard 6-vertex projective-plane triangulation.

#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

namespace complexes {

/// Facet lists (as 1-based vertex lists) of every simplicial complex whose
/// vertex set is exactly {1..n}. Complexes are families of nonempty faces
/// closed under taking nonempty subsets; a complex is encoded during the
/// search as a bitset over the 2^n - 1 nonempty vertex masks.
inline std::vector<std::vector<std::vector<int>>> all_on_exact_vertices(int n) {
    const int nfaces = (1 << n) - 1;
    std::set<std::uint64_t> seen;
    std::queue<std::uint64_t> todo;
    seen.insert(0);
    todo.push(0);
    while (!todo.empty()) {
        std::uint64_t state = todo.front();
        todo.pop();
        for (int m = 1; m <= nfaces; ++m) {
            if (state >> (m - 1) & 1ull) continue;
            bool addable = true;
            for (int sub = (m - 1) & m; sub; sub = (sub - 1) & m)
                if (sub != m && !(state >> (sub - 1) & 1ull)) { addable = false; break; }
            if (!addable) continue;
            std::uint64_t next = state | (1ull << (m - 1));
            if (seen.insert(next).second) todo.push(next);
        }
    }

    std::vector<std::vector<std::vector<int>>> out;
    for (std::uint64_t state : seen) {
        if (state == 0) continue;
        int covered = 0;
        for (int m = 1; m <= nfaces; ++m)
            if (state >> (m - 1) & 1ull) covered |= m;
        if (covered != nfaces) continue; // some vertex missing
        std::vector<std::vector<int>> facets;
        for (int m = 1; m <= nfaces; ++m) {
            if (!(state >> (m - 1) & 1ull)) continue;
            bool maximal = true;
            for (int m2 = 1; m2 <= nfaces && maximal; ++m2)
                if (m2 != m && (m2 & m) == m && (state >> (m2 - 1) & 1ull)) maximal = false;
            if (!maximal) continue;
            std::vector<int> facet;
            for (int v = 1; v <= n; ++v)
                if (m >> (v - 1) & 1) facet.push_back(v);
            facets.push_back(facet);
        }
        out.push_back(facets);
    }
    return out;
}

/// Edge lists of every labeled tree on n vertices via Prufer decoding
/// (n^(n-2) trees for n >= 2; the single-vertex complex for n = 1).
inline std::vector<std::vector<std::vector<int>>> all_trees(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    if (n == 1) {
        out.push_back({{1}});
        return out;
    }
    if (n == 2) {
        out.push_back({{1, 2}});
        return out;
    }
    std::vector<int> code(static_cast<size_t>(n) - 2, 1);
    for (;;) {
        std::vector<int> degree(static_cast<size_t>(n) + 1, 1);
        for (int v : code) ++degree[static_cast<size_t>(v)];
        std::vector<std::vector<int>> edges;
        std::vector<int> work = code;
        std::set<int> leaves;
        for (int v = 1; v <= n; ++v)
            if (degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
        for (int v : work) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back({std::min(leaf, v), std::max(leaf, v)});
            if (--degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
        }
        int a = *leaves.begin(), b = *leaves.rbegin();
        edges.push_back({std::min(a, b), std::max(a, b)});
        out.push_back(edges);

        // next Prufer code
        int i = static_cast<int>(code.size()) - 1;
        while (i >= 0 && code[static_cast<size_t>(i)] == n) {
            code[static_cast<size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++code[static_cast<size_t>(i)];
    }
    return out;
}

inline std::vector<std::vector<int>> cycle_facets(int m) {
    std::vector<std::vector<int>> facets;
    for (int v = 1; v < m; ++v) facets.push_back({v, v + 1});
    facets.push_back({1, m});
    return facets;
}

/// Minimal 6-vertex triangulation of the real projective plane: 10
/// triangles, every one of the 15 edges in exactly two of them.
inline std::vector<std::vector<int>> rp2_facets() {
    return {{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6},
            {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}};
}

} // namespace complexes
