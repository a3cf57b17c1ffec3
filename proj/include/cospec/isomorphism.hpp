#pragma once

#include "cospec/hypergraph.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace cospec {

namespace detail {

// Per-vertex invariant preserved by isomorphism: own degree plus the sorted
// degrees of 2-section neighbours. Cheap, and enough to split the candidate
// classes for the instances this library targets (n <= 16).
inline std::vector<std::vector<int>> vertex_invariants(const Hypergraph& g) {
    const int n = g.n();
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n) + 1,
                                       std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            ++deg[static_cast<std::size_t>(e[i])];
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                adj[static_cast<std::size_t>(e[i])][static_cast<std::size_t>(e[j])] = 1;
                adj[static_cast<std::size_t>(e[j])][static_cast<std::size_t>(e[i])] = 1;
            }
        }
    }
    std::vector<std::vector<int>> inv(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        std::vector<int>& row = inv[static_cast<std::size_t>(v)];
        row.push_back(deg[static_cast<std::size_t>(v)]);
        std::vector<int> nbr;
        for (int u = 1; u <= n; ++u) {
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) {
                nbr.push_back(deg[static_cast<std::size_t>(u)]);
            }
        }
        std::sort(nbr.begin(), nbr.end());
        row.insert(row.end(), nbr.begin(), nbr.end());
    }
    return inv;
}

struct IsoState {
    const Hypergraph* g;
    const Hypergraph* h;
    std::vector<std::vector<int>> cand;       // cand[v]: candidate images for v, ascending
    std::vector<std::vector<int>> g_inc;      // edge indices incident to each g vertex
    std::vector<std::vector<int>> h_inc;
    std::vector<int> g_left;                  // unmapped vertices remaining per edge
    std::vector<int> h_left;
    std::vector<int> map;                     // 1-based; 0 = unassigned
    std::vector<int> inv_map;
};

inline bool iso_edges_ok(IsoState& st, int v, int w) {
    // Every g edge completed by v must map onto an h edge, and every h edge
    // completed by w must pull back to a g edge.
    for (int ei : st.g_inc[static_cast<std::size_t>(v)]) {
        if (st.g_left[static_cast<std::size_t>(ei)] != 0) continue;
        Edge mapped = st.g->edges()[static_cast<std::size_t>(ei)];
        for (int& x : mapped) x = st.map[static_cast<std::size_t>(x)];
        std::sort(mapped.begin(), mapped.end());
        if (!st.h->has_edge(mapped)) return false;
    }
    for (int fi : st.h_inc[static_cast<std::size_t>(w)]) {
        if (st.h_left[static_cast<std::size_t>(fi)] != 0) continue;
        Edge pulled = st.h->edges()[static_cast<std::size_t>(fi)];
        for (int& x : pulled) x = st.inv_map[static_cast<std::size_t>(x)];
        std::sort(pulled.begin(), pulled.end());
        if (!st.g->has_edge(pulled)) return false;
    }
    return true;
}

inline bool iso_dfs(IsoState& st, int v) {
    const int n = st.g->n();
    if (v > n) return true;
    for (int w : st.cand[static_cast<std::size_t>(v)]) {
        if (st.inv_map[static_cast<std::size_t>(w)] != 0) continue;
        st.map[static_cast<std::size_t>(v)] = w;
        st.inv_map[static_cast<std::size_t>(w)] = v;
        for (int ei : st.g_inc[static_cast<std::size_t>(v)]) --st.g_left[static_cast<std::size_t>(ei)];
        for (int fi : st.h_inc[static_cast<std::size_t>(w)]) --st.h_left[static_cast<std::size_t>(fi)];
        if (iso_edges_ok(st, v, w) && iso_dfs(st, v + 1)) return true;
        for (int ei : st.g_inc[static_cast<std::size_t>(v)]) ++st.g_left[static_cast<std::size_t>(ei)];
        for (int fi : st.h_inc[static_cast<std::size_t>(w)]) ++st.h_left[static_cast<std::size_t>(fi)];
        st.map[static_cast<std::size_t>(v)] = 0;
        st.inv_map[static_cast<std::size_t>(w)] = 0;
    }
    return false;
}

}  // namespace detail

// Backtracking search for a hypergraph isomorphism. Returns the image vector
// (v maps to result[v-1]) of the first bijection found, trying vertices in
// id order and candidate images in ascending order; G vs G therefore yields
// the identity. Returns nullopt when none exists.
inline std::optional<std::vector<int>> are_isomorphic(const Hypergraph& g, const Hypergraph& h) {
    if (g.n() != h.n() || g.k() != h.k() || g.edge_count() != h.edge_count()) {
        return std::nullopt;
    }
    const int n = g.n();
    const auto ig = detail::vertex_invariants(g);
    const auto ih = detail::vertex_invariants(h);
    {
        auto sg = ig;
        auto sh = ih;
        std::sort(sg.begin() + 1, sg.end());
        std::sort(sh.begin() + 1, sh.end());
        if (sg != sh) return std::nullopt;
    }

    detail::IsoState st;
    st.g = &g;
    st.h = &h;
    st.cand.assign(static_cast<std::size_t>(n) + 1, {});
    for (int v = 1; v <= n; ++v) {
        for (int w = 1; w <= n; ++w) {
            if (ig[static_cast<std::size_t>(v)] == ih[static_cast<std::size_t>(w)]) {
                st.cand[static_cast<std::size_t>(v)].push_back(w);
            }
        }
        if (st.cand[static_cast<std::size_t>(v)].empty()) return std::nullopt;
    }
    st.g_inc.assign(static_cast<std::size_t>(n) + 1, {});
    st.h_inc.assign(static_cast<std::size_t>(n) + 1, {});
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        for (int v : g.edges()[ei]) st.g_inc[static_cast<std::size_t>(v)].push_back(static_cast<int>(ei));
    }
    for (std::size_t fi = 0; fi < h.edges().size(); ++fi) {
        for (int v : h.edges()[fi]) st.h_inc[static_cast<std::size_t>(v)].push_back(static_cast<int>(fi));
    }
    st.g_left.assign(g.edges().size(), g.k());
    st.h_left.assign(h.edges().size(), h.k());
    st.map.assign(static_cast<std::size_t>(n) + 1, 0);
    st.inv_map.assign(static_cast<std::size_t>(n) + 1, 0);

    if (!detail::iso_dfs(st, 1)) return std::nullopt;
    return std::vector<int>(st.map.begin() + 1, st.map.end());
}

}  // namespace cospec
