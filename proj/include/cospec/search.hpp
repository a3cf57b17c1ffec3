#pragma once

#include "cospec/generator.hpp"
#include "cospec/isomorphism.hpp"
#include "cospec/switching.hpp"

#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cospec {

enum class SearchKind { Ewqh, Egm, Mwqh, MgmSimplified };

struct IntRange {
    int lo = 1;
    int hi = 1;
};

struct SearchConfig {
    SearchKind kind = SearchKind::Ewqh;
    IntRange t_range{1, 2};  // for egm this ranges over |C|/2
    IntRange m_range{1, 1};
    std::uint64_t max_candidates = std::numeric_limits<std::uint64_t>::max();
    std::chrono::milliseconds time_budget{0};  // 0 = unbounded
    std::uint64_t seed = 0;
    bool require_nonisomorphic = false;
    bool strict_mwqh = false;
};

struct Certificates {
    bool q_orthogonal = false;
    bool sandwich_equal = false;   // tensor-side kinds
    bool matrix_similar = false;   // matrix-side kinds
    bool charpoly_equal = false;   // matrix-side kinds
    Polynomial shared_char_poly;   // matrix-side kinds, scaled adjacency
};

// Every emitted result is fully re-verified; `verified` is recorded rather
// than assumed so the JSON output is self-describing.
struct SearchResult {
    SearchKind kind;
    SwitchingPartition partition;
    VertexSet switching_set;  // set-based kinds (egm, mgm-simplified)
    Hypergraph h;
    CheckReport report;
    bool verified = false;
    bool isomorphic_to_g = false;
    Certificates certificates;
};

struct SearchOutcome {
    std::vector<SearchResult> results;
    bool truncated = false;  // a candidate or time budget stopped the sweep
    std::uint64_t candidates_checked = 0;
};

namespace detail {

struct Budget {
    explicit Budget(const SearchConfig& cfg)
        : max_candidates(cfg.max_candidates),
          deadline(std::chrono::steady_clock::now() + cfg.time_budget),
          use_deadline(cfg.time_budget.count() > 0) {}

    // Call before examining a candidate; false means stop (budget spent).
    bool tick() {
        if (checked >= max_candidates) {
            truncated = true;
            return false;
        }
        if (use_deadline && std::chrono::steady_clock::now() >= deadline) {
            truncated = true;
            return false;
        }
        ++checked;
        return true;
    }

    std::uint64_t checked = 0;
    std::uint64_t max_candidates;
    std::chrono::steady_clock::time_point deadline;
    bool use_deadline;
    bool truncated = false;
};

inline std::vector<std::uint64_t> two_section_masks(const Hypergraph& g) {
    if (g.n() > 63) throw std::invalid_argument("search: n must be at most 63");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.n()) + 1, 0);
    for (const auto& [u, v] : g.two_section()) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return adj;
}

// Independent sets of the 2-section with exactly `size` vertices, ascending
// ids, lexicographic order. f returns false to stop the sweep.
template <typename F>
inline bool independent_sets_rec(const std::vector<std::uint64_t>& adj, int n, int size,
                                 int next_v, std::uint64_t banned, VertexSet& cur, F&& f) {
    if (size == 0) return f(static_cast<const VertexSet&>(cur));
    for (int v = next_v; v <= n - size + 1; ++v) {
        if (banned & (std::uint64_t{1} << v)) continue;
        cur.push_back(v);
        if (!independent_sets_rec(adj, n, size - 1, v + 1,
                                  banned | adj[static_cast<std::size_t>(v)], cur, f)) {
            return false;
        }
        cur.pop_back();
    }
    return true;
}

// Lexicographic r-combinations of a sorted pool. f returns false to stop.
template <typename F>
inline bool for_each_combination(const VertexSet& pool, int r, F&& f) {
    const int n = static_cast<int>(pool.size());
    if (r < 0 || r > n) return true;
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        VertexSet combo(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) combo[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (!f(static_cast<const VertexSet&>(combo))) return false;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

// Canonical assignments of a sorted vertex set into pairs of t-cells:
// each block of 2t contains the smallest unassigned vertex, and within a
// block the first cell contains the block minimum. This hits every
// assignment exactly once up to the symmetries that leave the switch
// unchanged (pair order, and cell order within a pair).
template <typename F>
inline bool cell_assignments_rec(const VertexSet& remaining, int t, std::vector<VertexSet>& cells,
                                 F&& f) {
    if (remaining.empty()) return f(static_cast<const std::vector<VertexSet>&>(cells));
    const int anchor = remaining[0];
    const VertexSet rest(remaining.begin() + 1, remaining.end());
    bool keep = true;
    for_each_combination(rest, 2 * t - 1, [&](const VertexSet& block_rest) {
        const VertexSet block = with_vertex(block_rest, anchor);
        const VertexSet block_others(block.begin() + 1, block.end());
        for_each_combination(block_others, t - 1, [&](const VertexSet& cell_rest) {
            VertexSet cell_a = with_vertex(cell_rest, anchor);
            VertexSet cell_b = set_difference(block, cell_a);
            cells.push_back(std::move(cell_a));
            cells.push_back(std::move(cell_b));
            keep = cell_assignments_rec(set_difference(remaining, block), t, cells, f);
            cells.pop_back();
            cells.pop_back();
            return keep;
        });
        return keep;
    });
    return keep;
}

}  // namespace detail

// All independent sets of the 2-section with exactly `size` vertices,
// lexicographic order. Exposed for exhaustive negative sweeps.
inline std::vector<VertexSet> independent_vertex_sets(const Hypergraph& g, int size) {
    std::vector<VertexSet> out;
    if (size < 0 || size > g.n()) return out;
    const auto adj = detail::two_section_masks(g);
    VertexSet cur;
    detail::independent_sets_rec(adj, g.n(), size, 1, 0, cur, [&out](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

// Exhaustive sweep over cell-pair partitions whose union is independent in
// the 2-section (a necessary condition, so nothing admissible is skipped).
// Results carry only verified, switch-performing partitions.
inline SearchOutcome find_ewqh_partitions(const Hypergraph& g, const SearchConfig& cfg) {
    const int n = g.n();
    const auto adj = detail::two_section_masks(g);
    detail::Budget budget(cfg);
    SearchOutcome out;
    std::optional<Tensor> a_g;
    bool stopped = false;
    for (int t = cfg.t_range.lo; t <= cfg.t_range.hi && !stopped; ++t) {
        for (int m = cfg.m_range.lo; m <= cfg.m_range.hi && !stopped; ++m) {
            if (t < 1 || m < 1) continue;
            const int size = 2 * t * m;
            if (size > n) continue;
            VertexSet cur;
            std::vector<VertexSet> cells;
            stopped = !detail::independent_sets_rec(adj, n, size, 1, 0, cur, [&](const VertexSet& u) {
                return detail::cell_assignments_rec(u, t, cells, [&](const std::vector<VertexSet>& cs) {
                    if (!budget.tick()) return false;
                    SwitchingPartition p{cs, detail::complement_of(u, n), n, g.k()};
                    CheckReport report = check_ewqh(g, p);
                    if (!report.ok || report.plan.empty()) return true;
                    Hypergraph h = apply_switch_moves(g, p, report);
                    const Matrix q = build_switching_matrix(SwitchKind::EwqhTensor, p, n);
                    Certificates certs;
                    certs.q_orthogonal = is_orthogonal(q);
                    if (!a_g) a_g = adjacency_tensor(g);
                    certs.sandwich_equal = (sandwich(q, *a_g) == adjacency_tensor(h));
                    if (!certs.q_orthogonal || !certs.sandwich_equal) return true;
                    const auto iso = are_isomorphic(g, h);
                    if (cfg.require_nonisomorphic && iso) return true;
                    out.results.push_back({SearchKind::Ewqh, std::move(p), {}, std::move(h),
                                           std::move(report), true, iso.has_value(),
                                           std::move(certs)});
                    return true;
                });
            });
        }
    }
    out.truncated = budget.truncated;
    out.candidates_checked = budget.checked;
    return out;
}

// Exhaustive sweep over even independent sets C with |C|/2 in t_range.
inline SearchOutcome find_egm_sets(const Hypergraph& g, const SearchConfig& cfg) {
    const int n = g.n();
    const auto adj = detail::two_section_masks(g);
    detail::Budget budget(cfg);
    SearchOutcome out;
    std::optional<Tensor> a_g;
    bool stopped = false;
    for (int t = cfg.t_range.lo; t <= cfg.t_range.hi && !stopped; ++t) {
        if (t < 1 || 2 * t > n) continue;
        VertexSet cur;
        stopped = !detail::independent_sets_rec(adj, n, 2 * t, 1, 0, cur, [&](const VertexSet& c) {
            if (!budget.tick()) return false;
            CheckReport report = check_egm(g, c);
            if (!report.ok || report.plan.empty()) return true;
            Hypergraph h = apply_egm(g, c, report);
            const Matrix q = build_gm_switching_matrix(c, n);
            Certificates certs;
            certs.q_orthogonal = is_orthogonal(q);
            if (!a_g) a_g = adjacency_tensor(g);
            certs.sandwich_equal = (sandwich(q, *a_g) == adjacency_tensor(h));
            if (!certs.q_orthogonal || !certs.sandwich_equal) return true;
            const auto iso = are_isomorphic(g, h);
            if (cfg.require_nonisomorphic && iso) return true;
            out.results.push_back({SearchKind::Egm, {}, c, std::move(h), std::move(report), true,
                                   iso.has_value(), std::move(certs)});
            return true;
        });
    }
    out.truncated = budget.truncated;
    out.candidates_checked = budget.checked;
    return out;
}

namespace detail {

inline bool edge_d_compatible(const Hypergraph& g, const VertexSet& d) {
    for (const Edge& e : g.edges()) {
        const std::size_t cnt = set_intersection(VertexSet(e), d).size();
        if (cnt != 0 && cnt != static_cast<std::size_t>(g.k() - 1)) return false;
    }
    return true;
}

}  // namespace detail

// Exhaustive sweep over candidate sets D of size k-1 (pre-filtered by the
// edge condition, which depends on D alone). kind Mwqh assigns the rest into
// cell pairs for every (t, m) fitting the ranges; kind MgmSimplified treats
// the rest as C directly and derives the bipartition, ignoring the ranges.
inline SearchOutcome find_mwqh_partitions(const Hypergraph& g, const SearchConfig& cfg) {
    if (cfg.kind != SearchKind::Mwqh && cfg.kind != SearchKind::MgmSimplified) {
        throw std::invalid_argument("find_mwqh_partitions: kind must be mwqh or mgm-simplified");
    }
    const int n = g.n();
    const int k = g.k();
    if (n > 63) throw std::invalid_argument("search: n must be at most 63");
    detail::Budget budget(cfg);
    SearchOutcome out;
    std::optional<Matrix> a_g;
    std::optional<Polynomial> phi_g;

    VertexSet pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    detail::for_each_combination(pool, k - 1, [&](const VertexSet& d) {
        if (!detail::edge_d_compatible(g, d)) return true;
        const VertexSet rest = detail::complement_of(d, n);

        auto emit = [&](SwitchingPartition p, CheckReport report, VertexSet switching_set) {
            Hypergraph h = apply_switch_moves(g, p, report);
            const Matrix q = build_switching_matrix(SwitchKind::MwqhMatrix, p, n);
            Certificates certs;
            certs.q_orthogonal = is_orthogonal(q);
            if (!a_g) a_g = adjacency_matrix(g, true);
            const Matrix a_h = adjacency_matrix(h, true);
            // The conjugation certificate needs the opposing pair-diagonal
            // block sums to agree as well, which conditions 1-4 alone do not
            // force (the bundled 14-vertex pair is the canonical miss), so
            // cospectrality is gated on the characteristic polynomials and
            // matrix_similar is reported as the stronger extra certificate.
            certs.matrix_similar = (q * (*a_g) * q.transposed() == a_h);
            if (!phi_g) phi_g = char_poly(*a_g);
            certs.charpoly_equal = (*phi_g == char_poly(a_h));
            certs.shared_char_poly = *phi_g;
            if (!certs.q_orthogonal || !certs.charpoly_equal) return true;
            const auto iso = are_isomorphic(g, h);
            if (cfg.require_nonisomorphic && iso) return true;
            out.results.push_back({cfg.kind, std::move(p), std::move(switching_set), std::move(h),
                                   std::move(report), true, iso.has_value(), std::move(certs)});
            return true;
        };

        if (cfg.kind == SearchKind::MgmSimplified) {
            if (rest.size() < 2 || rest.size() % 2 != 0) return true;
            if (!budget.tick()) return false;
            CheckReport report = check_mgm_simplified(g, rest);
            if (!report.ok || report.plan.empty()) return true;
            return emit(mgm_induced_partition(g, rest), std::move(report), rest);
        }

        bool keep = true;
        for (int t = cfg.t_range.lo; t <= cfg.t_range.hi && keep; ++t) {
            for (int m = cfg.m_range.lo; m <= cfg.m_range.hi && keep; ++m) {
                if (t < 1 || m < 1 || 2 * t * m != static_cast<int>(rest.size())) continue;
                std::vector<VertexSet> cells;
                keep = detail::cell_assignments_rec(rest, t, cells,
                                                    [&](const std::vector<VertexSet>& cs) {
                    if (!budget.tick()) return false;
                    SwitchingPartition p{cs, d, n, k};
                    CheckReport report = check_mwqh(g, p, cfg.strict_mwqh);
                    if (!report.ok || report.plan.empty()) return true;
                    return emit(std::move(p), std::move(report), {});
                });
            }
        }
        return keep;
    });
    out.truncated = budget.truncated;
    out.candidates_checked = budget.checked;
    return out;
}

// Generator-backed driver: produces `instances` random admissible instances,
// applies the switch, and keeps only fully verified pairs.
struct PairFamily {
    SearchKind kind = SearchKind::Ewqh;  // Ewqh or Mwqh
    EwqhFamily ewqh{};
    MwqhFamily mwqh{};
    int instances = 100;
};

struct CospectralPair {
    Hypergraph g;
    SearchResult result;
};

inline std::vector<CospectralPair> find_cospectral_pairs(const PairFamily& family,
                                                         const SearchConfig& cfg) {
    if (family.kind != SearchKind::Ewqh && family.kind != SearchKind::Mwqh) {
        throw std::invalid_argument("find_cospectral_pairs: family kind must be ewqh or mwqh");
    }
    Rng rng(cfg.seed);
    std::vector<CospectralPair> out;
    for (int i = 0; i < family.instances; ++i) {
        if (family.kind == SearchKind::Ewqh) {
            GeneratedInstance inst = random_ewqh_instance(rng, family.ewqh);
            CheckReport report = check_ewqh(inst.g, inst.partition);
            if (!report.ok || report.plan.empty()) continue;
            Hypergraph h = apply_switch_moves(inst.g, inst.partition, report);
            const Matrix q =
                build_switching_matrix(SwitchKind::EwqhTensor, inst.partition, inst.g.n());
            Certificates certs;
            certs.q_orthogonal = is_orthogonal(q);
            certs.sandwich_equal =
                (sandwich(q, adjacency_tensor(inst.g)) == adjacency_tensor(h));
            if (!certs.q_orthogonal || !certs.sandwich_equal) continue;
            const auto iso = are_isomorphic(inst.g, h);
            if (cfg.require_nonisomorphic && iso) continue;
            out.push_back({std::move(inst.g),
                           {SearchKind::Ewqh, std::move(inst.partition), {}, std::move(h),
                            std::move(report), true, iso.has_value(), std::move(certs)}});
        } else {
            GeneratedInstance inst = random_mwqh_instance(rng, family.mwqh);
            CheckReport report = check_mwqh(inst.g, inst.partition, cfg.strict_mwqh);
            if (!report.ok || report.plan.empty()) continue;
            Hypergraph h = apply_switch_moves(inst.g, inst.partition, report);
            const Matrix q =
                build_switching_matrix(SwitchKind::MwqhMatrix, inst.partition, inst.g.n());
            Certificates certs;
            certs.q_orthogonal = is_orthogonal(q);
            const Matrix a_g = adjacency_matrix(inst.g, true);
            const Matrix a_h = adjacency_matrix(h, true);
            certs.matrix_similar = (q * a_g * q.transposed() == a_h);
            certs.shared_char_poly = char_poly(a_g);
            certs.charpoly_equal = (certs.shared_char_poly == char_poly(a_h));
            if (!certs.q_orthogonal || !certs.matrix_similar || !certs.charpoly_equal) continue;
            const auto iso = are_isomorphic(inst.g, h);
            if (cfg.require_nonisomorphic && iso) continue;
            out.push_back({std::move(inst.g),
                           {SearchKind::Mwqh, std::move(inst.partition), {}, std::move(h),
                            std::move(report), true, iso.has_value(), std::move(certs)}});
        }
    }
    return out;
}

}  // namespace cospec
