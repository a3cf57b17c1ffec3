#pragma once

#include "cospec/hypergraph.hpp"
#include "cospec/switching.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cospec {

// Deterministic RNG wrapper. std::mt19937_64 output is pinned by the
// standard, and bounded draws below use plain modulo instead of the
// library's distributions (whose sequences vary across implementations), so
// a seed reproduces the same instances everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform-ish draw from [0, bound); bound >= 1
    int below(int bound) {
        if (bound < 1) throw std::invalid_argument("rng: bound must be positive");
        return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
    }

    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

    bool coin() { return (next() & 1) != 0; }

    // r distinct elements of pool, returned ascending
    VertexSet sample(const VertexSet& pool, int r) {
        if (r < 0 || r > static_cast<int>(pool.size())) {
            throw std::invalid_argument("rng: sample size out of range");
        }
        VertexSet tmp = pool;
        for (int i = 0; i < r; ++i) {
            std::swap(tmp[static_cast<std::size_t>(i)],
                      tmp[static_cast<std::size_t>(i + below(static_cast<int>(tmp.size()) - i))]);
        }
        tmp.resize(static_cast<std::size_t>(r));
        std::sort(tmp.begin(), tmp.end());
        return tmp;
    }

    // image vector for Hypergraph::permuted / Matrix::permutation
    std::vector<int> permutation(int n) {
        std::vector<int> image(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i) {
            std::swap(image[static_cast<std::size_t>(i)],
                      image[static_cast<std::size_t>(below(i + 1))]);
        }
        return image;
    }

  private:
    std::mt19937_64 engine_;
};

// Family parameters for random instances that satisfy the tensor-side
// switching conditions by construction. n = 2*m*t + d_size.
struct EwqhFamily {
    int k = 3;
    int t = 2;
    int m = 1;
    int d_size = 3;       // must be at least k-1
    int d_edges = 2;      // random edges fully inside D (skipped if |D| < k)
    int subsets = 2;      // distinct (k-1)-subsets of D used as attachment stems
    bool shuffle_labels = false;
    bool ensure_switch = true;  // force at least one full-cell attachment
};

// Family parameters for random instances that satisfy the matrix-side
// switching conditions by construction. n = 2*m*t + k - 1.
struct MwqhFamily {
    int k = 3;
    int t = 2;
    int m = 1;
    int internal_seeds = 2;  // rotation-closed edge orbits inside the cells
    bool shuffle_labels = false;
    bool ensure_switch = true;
};

struct GeneratedInstance {
    Hypergraph g;
    SwitchingPartition partition;
};

namespace detail {

inline std::vector<VertexSet> contiguous_cells(int m, int t) {
    std::vector<VertexSet> cells(static_cast<std::size_t>(2 * m));
    for (int ci = 0; ci < 2 * m; ++ci) {
        for (int j = 0; j < t; ++j) cells[static_cast<std::size_t>(ci)].push_back(ci * t + j + 1);
    }
    return cells;
}

inline GeneratedInstance relabel_instance(Rng& rng, Hypergraph g, SwitchingPartition p) {
    const std::vector<int> image = rng.permutation(g.n());
    Hypergraph shuffled = g.permuted(image);
    for (int& v : p.D) v = image[static_cast<std::size_t>(v) - 1];
    std::sort(p.D.begin(), p.D.end());
    for (VertexSet& c : p.cells) {
        for (int& v : c) v = image[static_cast<std::size_t>(v) - 1];
        std::sort(c.begin(), c.end());
    }
    return {std::move(shuffled), std::move(p)};
}

}  // namespace detail

// Construction: contiguous cells and D, optional edges fully inside D, and
// for every chosen (k-1)-subset S of D one independent attachment mode per
// cell pair: all of the odd cell, all of the even cell, or r vertices from
// each. Unchosen subsets have empty cell neighbourhoods and the chosen ones
// realise exactly the allowed neighbourhood shapes, so the admissibility
// conditions hold by construction (the test suite re-checks them anyway).
inline GeneratedInstance random_ewqh_instance(Rng& rng, const EwqhFamily& f) {
    if (f.k < 2 || f.t < 1 || f.m < 1) {
        throw std::invalid_argument("random_ewqh_instance: need k >= 2, t >= 1, m >= 1");
    }
    if (f.d_size < f.k - 1) {
        throw std::invalid_argument("random_ewqh_instance: need d_size >= k-1");
    }
    const int n = 2 * f.m * f.t + f.d_size;
    std::vector<VertexSet> cells = detail::contiguous_cells(f.m, f.t);
    VertexSet d;
    for (int v = 2 * f.m * f.t + 1; v <= n; ++v) d.push_back(v);

    std::set<Edge> edges;
    if (f.d_size >= f.k) {
        for (int i = 0; i < f.d_edges; ++i) edges.insert(rng.sample(d, f.k));
    }
    std::set<VertexSet> stems;
    for (int attempt = 0; attempt < 4 * f.subsets && static_cast<int>(stems.size()) < f.subsets;
         ++attempt) {
        stems.insert(rng.sample(d, f.k - 1));
    }
    bool forced = f.ensure_switch;
    for (const VertexSet& s : stems) {
        for (int pi = 0; pi < f.m; ++pi) {
            const VertexSet& ci = cells[static_cast<std::size_t>(2 * pi)];
            const VertexSet& cj = cells[static_cast<std::size_t>(2 * pi + 1)];
            const int mode = forced ? 0 : rng.below(3);
            forced = false;
            if (mode == 0) {
                for (int v : ci) edges.insert(detail::with_vertex(s, v));
            } else if (mode == 1) {
                for (int v : cj) edges.insert(detail::with_vertex(s, v));
            } else {
                const int r = rng.below(f.t + 1);
                for (int v : rng.sample(ci, r)) edges.insert(detail::with_vertex(s, v));
                for (int v : rng.sample(cj, r)) edges.insert(detail::with_vertex(s, v));
            }
        }
    }

    SwitchingPartition p{std::move(cells), std::move(d), n, f.k};
    Hypergraph g(f.k, n, {edges.begin(), edges.end()});
    if (f.shuffle_labels) return detail::relabel_instance(rng, std::move(g), std::move(p));
    return {std::move(g), std::move(p)};
}

// Construction: D is the forced k-1 tail; each pair receives the D-edges
// either over the whole odd cell (a switch) or over r vertices of both cells
// (balanced); cell-internal edges are added as whole orbits of the
// simultaneous one-step rotation inside every cell together with the swap of
// the two cells of each pair. Rotation invariance forces constant row and
// column sums on every cell-pair block; swap invariance makes B_{ij} and the
// block with both pair roles flipped share that sum. Constant sums alone are
// not enough: Q has the averaging blocks on every pair, so conjugation adds
// (a_{i+1,j+1} - a_{ij})/t * J to B_{ij}, and the switched hypergraph only
// matches when those opposing sums agree. D-edges never touch these blocks.
inline GeneratedInstance random_mwqh_instance(Rng& rng, const MwqhFamily& f) {
    if (f.k < 2 || f.t < 1 || f.m < 1) {
        throw std::invalid_argument("random_mwqh_instance: need k >= 2, t >= 1, m >= 1");
    }
    const int n = 2 * f.m * f.t + f.k - 1;
    std::vector<VertexSet> cells = detail::contiguous_cells(f.m, f.t);
    VertexSet d;
    for (int v = 2 * f.m * f.t + 1; v <= n; ++v) d.push_back(v);

    std::set<Edge> edges;
    for (int pi = 0; pi < f.m; ++pi) {
        const VertexSet& ci = cells[static_cast<std::size_t>(2 * pi)];
        const VertexSet& cj = cells[static_cast<std::size_t>(2 * pi + 1)];
        const int mode = (pi == 0 && f.ensure_switch) ? 0 : rng.below(2);
        if (mode == 0) {
            for (int v : ci) edges.insert(detail::with_vertex(d, v));
        } else {
            const int r = rng.below(f.t + 1);
            for (int v : rng.sample(ci, r)) edges.insert(detail::with_vertex(d, v));
            for (int v : rng.sample(cj, r)) edges.insert(detail::with_vertex(d, v));
        }
    }
    const int cell_vertices = 2 * f.m * f.t;
    if (cell_vertices >= f.k) {
        VertexSet pool;
        for (int v = 1; v <= cell_vertices; ++v) pool.push_back(v);
        auto rotate = [&](const Edge& e) {
            Edge out = e;
            for (int& v : out) {
                const int cell = (v - 1) / f.t;
                const int pos = (v - 1) % f.t;
                v = cell * f.t + (pos + 1) % f.t + 1;
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        auto swap_pair = [&](const Edge& e, int pair) {
            Edge out = e;
            const int lo = 2 * pair * f.t + 1;
            const int hi = lo + 2 * f.t - 1;
            for (int& v : out) {
                if (v < lo || v > hi) continue;
                v = (v - lo < f.t) ? v + f.t : v - f.t;
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        for (int s = 0; s < f.internal_seeds; ++s) {
            std::set<Edge> orbit;
            std::vector<Edge> frontier{rng.sample(pool, f.k)};
            while (!frontier.empty()) {
                Edge cur = frontier.back();
                frontier.pop_back();
                if (!orbit.insert(cur).second) continue;
                frontier.push_back(rotate(cur));
                for (int pi = 0; pi < f.m; ++pi) frontier.push_back(swap_pair(cur, pi));
            }
            edges.insert(orbit.begin(), orbit.end());
        }
    }

    SwitchingPartition p{std::move(cells), std::move(d), n, f.k};
    Hypergraph g(f.k, n, {edges.begin(), edges.end()});
    if (f.shuffle_labels) return detail::relabel_instance(rng, std::move(g), std::move(p));
    return {std::move(g), std::move(p)};
}

}  // namespace cospec
