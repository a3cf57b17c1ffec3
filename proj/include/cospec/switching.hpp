#pragma once

#include "cospec/hypergraph.hpp"
#include "cospec/matrix.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/tensor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

// Ordered switching cells C1..C2m (consecutive pairs act together) plus the
// set D of remaining vertices. All ids 1-based; n and k echo the host
// hypergraph so a partition cannot silently be applied to the wrong one.
struct SwitchingPartition {
    std::vector<VertexSet> cells;
    VertexSet D;
    int n = 0;
    int k = 0;
};

enum class SwitchKind { EwqhTensor, MwqhMatrix };

struct ConditionResult {
    std::string id;
    bool pass = false;
    std::string witness;  // empty on pass, first counterexample on fail
};

// One planned replacement: the edges {v} + subset for v in the source cell
// are removed and re-attached over the target cell. The E-GM complement
// move stores 0/0 for the cell indices (the subset's neighbourhood inside C
// is complemented instead).
struct SwitchMove {
    VertexSet subset;
    int source_cell = 0;
    int target_cell = 0;
};

struct AlphaEntry {
    int i = 0;
    int j = 0;
    Rational value;
};

struct CheckReport {
    bool ok = false;
    std::vector<ConditionResult> conditions;
    std::vector<SwitchMove> plan;
    std::vector<AlphaEntry> alpha;  // block sums, matrix-condition kinds only
};

namespace detail {

inline std::string set_str(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s[i]);
    }
    out += '}';
    return out;
}

inline void check_sorted_set(const VertexSet& s, int n, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n) {
            throw std::invalid_argument(std::string(what) + ": vertex id out of range");
        }
        if (i > 0 && s[i] <= s[i - 1]) {
            throw std::invalid_argument(std::string(what) + ": ids must be strictly increasing");
        }
    }
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet complement_of(const VertexSet& s, int n) {
    VertexSet out;
    std::size_t i = 0;
    for (int v = 1; v <= n; ++v) {
        if (i < s.size() && s[i] == v) {
            ++i;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

inline Edge with_vertex(const VertexSet& s, int v) {
    Edge e = s;
    e.insert(std::upper_bound(e.begin(), e.end(), v), v);
    return e;
}

// All (k-1)-subsets of d that sit inside at least one edge; conditions are
// vacuous elsewhere, so nothing else needs to be visited.
inline std::set<VertexSet> d_subsets_in_edges(const Hypergraph& g, const VertexSet& d) {
    std::set<VertexSet> out;
    for (const Edge& e : g.edges()) {
        for (std::size_t skip = 0; skip < e.size(); ++skip) {
            VertexSet s;
            s.reserve(e.size() - 1);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i != skip) s.push_back(e[i]);
            }
            if (std::includes(d.begin(), d.end(), s.begin(), s.end())) out.insert(std::move(s));
        }
    }
    return out;
}

// Shared structural validation: sorted in-range cells and D, all pairwise
// disjoint, an even number (>= 2) of cells, n/k matching the host. The
// stricter per-kind requirements are layered on top by the callers.
inline void validate_partition_base(const Hypergraph& g, const SwitchingPartition& p) {
    if (p.n != g.n() || p.k != g.k()) {
        throw std::invalid_argument("partition: n/k do not match the hypergraph");
    }
    if (p.cells.size() < 2 || p.cells.size() % 2 != 0) {
        throw std::invalid_argument("partition: need an even number (>= 2) of cells");
    }
    VertexSet all;
    for (const VertexSet& c : p.cells) {
        check_sorted_set(c, g.n(), "partition cell");
        all.insert(all.end(), c.begin(), c.end());
    }
    check_sorted_set(p.D, g.n(), "partition D");
    all.insert(all.end(), p.D.begin(), p.D.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("partition: cells and D must be pairwise disjoint");
    }
}

inline VertexSet cells_union(const SwitchingPartition& p) {
    VertexSet all;
    for (const VertexSet& c : p.cells) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace detail

// Co-occurrence matrix: entry (u,v) counts edges containing both, divided by
// k-1 when scaled (so row sums equal degrees). Diagonal is zero.
inline Matrix adjacency_matrix(const Hypergraph& g, bool scaled = true) {
    Matrix a(g.n(), g.n());
    const Rational w = scaled ? Rational(1, g.k() - 1) : Rational(1);
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                a.at(e[i] - 1, e[j] - 1) += w;
                a.at(e[j] - 1, e[i] - 1) += w;
            }
        }
    }
    return a;
}

// Orthogonal switching matrix: identity outside the cells; each cell pair
// (C_i, C_{i+1}) of common size t gets the involution
//   [ I - J/t    J/t   ]
//   [   J/t    I - J/t ]
// scattered to the true vertex positions. For t = 1 this is a plain
// transposition. The kind selects which structural contract to enforce.
inline Matrix build_switching_matrix(SwitchKind kind, const SwitchingPartition& p, int n) {
    if (p.n != n) throw std::invalid_argument("build_switching_matrix: n mismatch");
    if (p.cells.size() < 2 || p.cells.size() % 2 != 0) {
        throw std::invalid_argument("build_switching_matrix: need an even number (>= 2) of cells");
    }
    VertexSet all;
    for (const VertexSet& c : p.cells) {
        detail::check_sorted_set(c, n, "switching cell");
        all.insert(all.end(), c.begin(), c.end());
    }
    detail::check_sorted_set(p.D, n, "partition D");
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("build_switching_matrix: cells overlap");
    }
    for (std::size_t pi = 0; pi + 1 < p.cells.size(); pi += 2) {
        if (p.cells[pi].size() != p.cells[pi + 1].size()) {
            throw std::invalid_argument("build_switching_matrix: paired cells differ in size");
        }
    }
    if (kind == SwitchKind::EwqhTensor) {
        if (p.D != detail::complement_of(all, n)) {
            throw std::invalid_argument("build_switching_matrix: D must be the cell complement");
        }
    } else {
        if (p.k < 2 || static_cast<int>(p.D.size()) != p.k - 1) {
            throw std::invalid_argument("build_switching_matrix: |D| must be k-1");
        }
        VertexSet merged = all;
        merged.insert(merged.end(), p.D.begin(), p.D.end());
        std::sort(merged.begin(), merged.end());
        if (static_cast<int>(merged.size()) != n ||
            std::adjacent_find(merged.begin(), merged.end()) != merged.end()) {
            throw std::invalid_argument("build_switching_matrix: cells and D must partition 1..n");
        }
    }

    Matrix q = Matrix::identity(n);
    for (std::size_t pi = 0; pi + 1 < p.cells.size(); pi += 2) {
        const VertexSet& ci = p.cells[pi];
        const VertexSet& cj = p.cells[pi + 1];
        const int t = static_cast<int>(ci.size());
        if (t == 0) continue;
        const Rational off(1, t);
        const Rational diag = Rational(1) - off;
        for (int a = 0; a < t; ++a) {
            for (int b = 0; b < t; ++b) {
                const Rational x = (a == b) ? diag : -off;
                q.at(ci[static_cast<std::size_t>(a)] - 1, ci[static_cast<std::size_t>(b)] - 1) = x;
                q.at(cj[static_cast<std::size_t>(a)] - 1, cj[static_cast<std::size_t>(b)] - 1) = x;
                q.at(ci[static_cast<std::size_t>(a)] - 1, cj[static_cast<std::size_t>(b)] - 1) = off;
                q.at(cj[static_cast<std::size_t>(a)] - 1, ci[static_cast<std::size_t>(b)] - 1) = off;
            }
        }
    }
    return q;
}

// Classical GM block: (2/|C|) J - I on C, identity elsewhere. Symmetric and
// orthogonal; used to certify the set-based switchings.
inline Matrix build_gm_switching_matrix(const VertexSet& c, int n) {
    detail::check_sorted_set(c, n, "switching set C");
    if (c.size() < 2 || c.size() % 2 != 0) {
        throw std::invalid_argument("build_gm_switching_matrix: |C| must be even and >= 2");
    }
    Matrix q = Matrix::identity(n);
    const Rational two_over(2, static_cast<int>(c.size()));
    for (int a : c) {
        for (int b : c) {
            q.at(a - 1, b - 1) = (a == b) ? two_over - 1 : two_over;
        }
    }
    return q;
}

// ---------------------------------------------------------------------------
// Tensor-side switching on cell pairs.
//
// Admissibility for (G, P):
//   1. every edge contains at most one vertex from the union of the cells;
//   2. for every (k-1)-subset S of D lying inside some edge and every pair
//      (C_i, C_{i+1}): the neighbourhood of S restricted to the pair either
//      equals C_i exactly, equals C_{i+1} exactly, or meets both cells in
//      the same number of vertices.
// The plan records one move per (S, pair) where the neighbourhood equals one
// cell; applying it re-attaches those edges over the opposite cell.
// ---------------------------------------------------------------------------
inline CheckReport check_ewqh(const Hypergraph& g, const SwitchingPartition& p) {
    detail::validate_partition_base(g, p);
    const VertexSet all = detail::cells_union(p);
    for (std::size_t pi = 0; pi + 1 < p.cells.size(); pi += 2) {
        if (p.cells[pi].size() != p.cells[pi + 1].size()) {
            throw std::invalid_argument("partition: paired cells differ in size");
        }
    }
    if (p.D != detail::complement_of(all, g.n())) {
        throw std::invalid_argument("partition: D must be the complement of the cells");
    }

    CheckReport report;
    {
        std::string witness;
        for (const Edge& e : g.edges()) {
            const VertexSet hit = detail::set_intersection(VertexSet(e), all);
            if (hit.size() > 1) {
                witness = "edge " + detail::set_str(e) + " meets the cells in " +
                          std::to_string(hit.size()) + " vertices";
                break;
            }
        }
        report.conditions.push_back({"edge-cell-intersection", witness.empty(), witness});
    }
    {
        std::string witness;
        for (const VertexSet& s : detail::d_subsets_in_edges(g, p.D)) {
            const VertexSet gamma = g.neighbourhood(s);
            for (std::size_t pi = 0; pi + 1 < p.cells.size(); pi += 2) {
                const VertexSet& ci = p.cells[pi];
                const VertexSet& cj = p.cells[pi + 1];
                const VertexSet gi = detail::set_intersection(gamma, ci);
                const VertexSet gj = detail::set_intersection(gamma, cj);
                if (!ci.empty() && gi.size() == ci.size() && gj.empty()) {
                    report.plan.push_back({s, static_cast<int>(pi) + 1, static_cast<int>(pi) + 2});
                } else if (!cj.empty() && gj.size() == cj.size() && gi.empty()) {
                    report.plan.push_back({s, static_cast<int>(pi) + 2, static_cast<int>(pi) + 1});
                } else if (gi.size() != gj.size()) {
                    witness = "neighbourhood of " + detail::set_str(s) + " meets C" +
                              std::to_string(pi + 1) + " in " + std::to_string(gi.size()) +
                              " and C" + std::to_string(pi + 2) + " in " +
                              std::to_string(gj.size()) + " vertices";
                    break;
                }
            }
            if (!witness.empty()) break;
        }
        report.conditions.push_back({"neighbourhood-balance", witness.empty(), witness});
    }
    report.ok = true;
    for (const ConditionResult& c : report.conditions) report.ok = report.ok && c.pass;
    if (!report.ok) report.plan.clear();
    return report;
}

// Executes a trusted plan (normally one produced by the matching check_*).
inline Hypergraph apply_switch_moves(const Hypergraph& g, const SwitchingPartition& p,
                                     const CheckReport& report) {
    if (!report.ok) throw std::invalid_argument("apply: switching conditions not satisfied");
    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    for (const SwitchMove& mv : report.plan) {
        const VertexSet& src = p.cells.at(static_cast<std::size_t>(mv.source_cell) - 1);
        const VertexSet& tgt = p.cells.at(static_cast<std::size_t>(mv.target_cell) - 1);
        for (int v : src) {
            if (edges.erase(detail::with_vertex(mv.subset, v)) == 0) {
                throw std::logic_error("apply: plan does not match the edge set");
            }
        }
        for (int v : tgt) {
            if (!edges.insert(detail::with_vertex(mv.subset, v)).second) {
                throw std::logic_error("apply: plan collides with an existing edge");
            }
        }
    }
    return Hypergraph(g.k(), g.n(), {edges.begin(), edges.end()});
}

inline Hypergraph apply_ewqh(const Hypergraph& g, const SwitchingPartition& p,
                             const CheckReport& trusted) {
    return apply_switch_moves(g, p, trusted);
}

inline Hypergraph apply_ewqh(const Hypergraph& g, const SwitchingPartition& p) {
    const CheckReport report = check_ewqh(g, p);
    if (!report.ok) {
        std::string why;
        for (const ConditionResult& c : report.conditions) {
            if (!c.pass) {
                why = c.id + ": " + c.witness;
                break;
            }
        }
        throw std::invalid_argument("apply_ewqh: " + why);
    }
    return apply_switch_moves(g, p, report);
}

// Q A Q^T computed entirely in exact arithmetic against the order-k
// adjacency tensors; true only for genuinely equal tensors.
inline bool verify_tensor_similarity(const Hypergraph& g, const Hypergraph& h,
                                     const SwitchingPartition& p) {
    if (g.n() != h.n() || g.k() != h.k()) {
        throw std::invalid_argument("verify_tensor_similarity: size mismatch");
    }
    const Matrix q = build_switching_matrix(SwitchKind::EwqhTensor, p, g.n());
    return sandwich(q, adjacency_tensor(g)) == adjacency_tensor(h);
}

// ---------------------------------------------------------------------------
// Set-based switching on a single even set C.
//
// Admissibility for (G, C):
//   1. no edge contains two vertices of C;
//   2. every (k-1)-subset S of V minus C lying inside an edge has 0, |C|/2
//      or |C| neighbours in C.
// Applying complements the neighbourhood inside C for every S in the middle
// case.
// ---------------------------------------------------------------------------
inline CheckReport check_egm(const Hypergraph& g, const VertexSet& c) {
    detail::check_sorted_set(c, g.n(), "switching set C");
    if (c.size() < 2 || c.size() % 2 != 0) {
        throw std::invalid_argument("check_egm: |C| must be even and >= 2");
    }
    CheckReport report;
    {
        std::string witness;
        for (const Edge& e : g.edges()) {
            const VertexSet hit = detail::set_intersection(VertexSet(e), c);
            if (hit.size() > 1) {
                witness = "edge " + detail::set_str(e) + " has " + std::to_string(hit.size()) +
                          " vertices in C";
                break;
            }
        }
        report.conditions.push_back({"independent-set", witness.empty(), witness});
    }
    {
        const VertexSet d = detail::complement_of(c, g.n());
        const std::size_t half = c.size() / 2;
        std::string witness;
        for (const VertexSet& s : detail::d_subsets_in_edges(g, d)) {
            const std::size_t cnt = detail::set_intersection(g.neighbourhood(s), c).size();
            if (cnt == half) {
                report.plan.push_back({s, 0, 0});
            } else if (cnt != 0 && cnt != c.size()) {
                witness = "subset " + detail::set_str(s) + " has " + std::to_string(cnt) +
                          " neighbours in C, expected 0, " + std::to_string(half) + " or " +
                          std::to_string(c.size());
                break;
            }
        }
        report.conditions.push_back({"neighbour-count", witness.empty(), witness});
    }
    report.ok = report.conditions[0].pass && report.conditions[1].pass;
    if (!report.ok) report.plan.clear();
    return report;
}

inline Hypergraph apply_egm(const Hypergraph& g, const VertexSet& c, const CheckReport& trusted) {
    if (!trusted.ok) throw std::invalid_argument("apply_egm: switching conditions not satisfied");
    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    for (const SwitchMove& mv : trusted.plan) {
        const VertexSet gamma = detail::set_intersection(g.neighbourhood(mv.subset), c);
        for (int v : gamma) {
            if (edges.erase(detail::with_vertex(mv.subset, v)) == 0) {
                throw std::logic_error("apply_egm: plan does not match the edge set");
            }
        }
        for (int v : detail::set_difference(c, gamma)) {
            if (!edges.insert(detail::with_vertex(mv.subset, v)).second) {
                throw std::logic_error("apply_egm: plan collides with an existing edge");
            }
        }
    }
    return Hypergraph(g.k(), g.n(), {edges.begin(), edges.end()});
}

inline Hypergraph apply_egm(const Hypergraph& g, const VertexSet& c) {
    const CheckReport report = check_egm(g, c);
    if (!report.ok) {
        std::string why;
        for (const ConditionResult& cond : report.conditions) {
            if (!cond.pass) {
                why = cond.id + ": " + cond.witness;
                break;
            }
        }
        throw std::invalid_argument("apply_egm: " + why);
    }
    return apply_egm(g, c, report);
}

// ---------------------------------------------------------------------------
// Matrix-side switching on cell pairs with a short D.
//
// Admissibility for (G, P), checked in order with early stop:
//   1. partition-shape: all cells share one size t, |D| = k-1, cells and D
//      cover every vertex;
//   2. every edge meets D in 0 or k-1 vertices;
//   3. the neighbourhood of D restricted to each pair equals the odd cell,
//      equals the even cell (rejected in strict mode, otherwise the move
//      direction is reversed), or meets both cells equally;
//   4. every cell-pair block of the scaled adjacency matrix has constant row
//      sums and constant column sums; the common value is reported as
//      alpha_{ij}. The D rows/columns are unconstrained.
// ---------------------------------------------------------------------------
inline CheckReport check_mwqh(const Hypergraph& g, const SwitchingPartition& p,
                              bool strict = false) {
    detail::validate_partition_base(g, p);
    CheckReport report;
    auto fail = [&report](const char* id, std::string witness) {
        report.conditions.push_back({id, false, std::move(witness)});
        report.ok = false;
        report.plan.clear();
        report.alpha.clear();
    };

    const int k = g.k();
    const std::size_t t = p.cells[0].size();
    for (const VertexSet& c : p.cells) {
        if (c.size() != t) {
            fail("partition-shape", "cell sizes differ (" + std::to_string(c.size()) + " vs " +
                                        std::to_string(t) + ")");
            return report;
        }
    }
    if (static_cast<int>(p.D.size()) != k - 1) {
        fail("partition-shape", "|D| = " + std::to_string(p.D.size()) + ", expected k-1 = " +
                                    std::to_string(k - 1));
        return report;
    }
    if (p.cells.size() * t + p.D.size() != static_cast<std::size_t>(g.n())) {
        fail("partition-shape", "cells and D cover " +
                                    std::to_string(p.cells.size() * t + p.D.size()) + " of " +
                                    std::to_string(g.n()) + " vertices");
        return report;
    }
    report.conditions.push_back({"partition-shape", true, ""});

    for (const Edge& e : g.edges()) {
        const std::size_t cnt = detail::set_intersection(VertexSet(e), p.D).size();
        if (cnt != 0 && cnt != static_cast<std::size_t>(k - 1)) {
            fail("edge-d-intersection", "edge " + detail::set_str(e) + " meets D in " +
                                            std::to_string(cnt) + " vertices, expected 0 or " +
                                            std::to_string(k - 1));
            return report;
        }
    }
    report.conditions.push_back({"edge-d-intersection", true, ""});

    const VertexSet gamma = g.neighbourhood(p.D);
    for (std::size_t pi = 0; pi + 1 < p.cells.size(); pi += 2) {
        const VertexSet& ci = p.cells[pi];
        const VertexSet& cj = p.cells[pi + 1];
        const VertexSet gi = detail::set_intersection(gamma, ci);
        const VertexSet gj = detail::set_intersection(gamma, cj);
        if (t > 0 && gi.size() == t && gj.empty()) {
            report.plan.push_back({p.D, static_cast<int>(pi) + 1, static_cast<int>(pi) + 2});
        } else if (t > 0 && gj.size() == t && gi.empty()) {
            if (strict) {
                fail("gamma-d-alignment",
                     "neighbourhood of D equals C" + std::to_string(pi + 2) +
                         "; strict orientation requires C" + std::to_string(pi + 1));
                return report;
            }
            report.plan.push_back({p.D, static_cast<int>(pi) + 2, static_cast<int>(pi) + 1});
        } else if (gi.size() != gj.size()) {
            fail("gamma-d-alignment", "neighbourhood of D meets C" + std::to_string(pi + 1) +
                                          " in " + std::to_string(gi.size()) + " and C" +
                                          std::to_string(pi + 2) + " in " +
                                          std::to_string(gj.size()) + " vertices");
            return report;
        }
    }
    report.conditions.push_back({"gamma-d-alignment", true, ""});

    const Matrix a = adjacency_matrix(g, true);
    for (std::size_t bi = 0; bi < p.cells.size(); ++bi) {
        for (std::size_t bj = bi; bj < p.cells.size(); ++bj) {
            const VertexSet& rows = p.cells[bi];
            const VertexSet& cols = p.cells[bj];
            if (rows.empty()) continue;
            Rational common;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                Rational sum = 0;
                for (int u : cols) sum += a.at(rows[r] - 1, u - 1);
                if (r == 0) {
                    common = sum;
                } else if (sum != common) {
                    fail("block-sums", "block (" + std::to_string(bi + 1) + "," +
                                           std::to_string(bj + 1) + "): row sums differ (" +
                                           rational_str(common) + " vs " + rational_str(sum) + ")");
                    return report;
                }
            }
            for (std::size_t cidx = 0; cidx < cols.size(); ++cidx) {
                Rational sum = 0;
                for (int u : rows) sum += a.at(u - 1, cols[cidx] - 1);
                // equal-size blocks with constant row sums force the column
                // total, so a mismatch can only come from non-constant columns
                if (sum != common) {
                    fail("block-sums", "block (" + std::to_string(bi + 1) + "," +
                                           std::to_string(bj + 1) + "): column " +
                                           std::to_string(cols[cidx]) + " sums to " +
                                           rational_str(sum) + ", rows sum to " +
                                           rational_str(common));
                    return report;
                }
            }
            report.alpha.push_back(
                {static_cast<int>(bi) + 1, static_cast<int>(bj) + 1, common});
        }
    }
    report.conditions.push_back({"block-sums", true, ""});

    report.ok = true;
    return report;
}

inline Hypergraph apply_mwqh(const Hypergraph& g, const SwitchingPartition& p,
                             const CheckReport& trusted) {
    return apply_switch_moves(g, p, trusted);
}

inline Hypergraph apply_mwqh(const Hypergraph& g, const SwitchingPartition& p,
                             bool strict = false) {
    const CheckReport report = check_mwqh(g, p, strict);
    if (!report.ok) {
        std::string why;
        for (const ConditionResult& c : report.conditions) {
            if (!c.pass) {
                why = c.id + ": " + c.witness;
                break;
            }
        }
        throw std::invalid_argument("apply_mwqh: " + why);
    }
    return apply_switch_moves(g, p, report);
}

inline bool verify_matrix_cospectral(const Hypergraph& g, const Hypergraph& h,
                                     bool scaled = true) {
    if (g.n() != h.n()) throw std::invalid_argument("verify_matrix_cospectral: size mismatch");
    return char_poly(adjacency_matrix(g, scaled)) == char_poly(adjacency_matrix(h, scaled));
}

// ---------------------------------------------------------------------------
// Single-set entry point to the matrix-side switching: C is everything
// outside a forced D of size k-1, the first cell is the neighbourhood of D
// and must be exactly half of C, and the pair must satisfy the same block
// condition as above. Reuses the pair machinery once the bipartition is
// derived.
// ---------------------------------------------------------------------------
inline SwitchingPartition mgm_induced_partition(const Hypergraph& g, const VertexSet& c) {
    const VertexSet d = detail::complement_of(c, g.n());
    const VertexSet gamma = g.neighbourhood(d);
    return {{gamma, detail::set_difference(c, gamma)}, d, g.n(), g.k()};
}

inline CheckReport check_mgm_simplified(const Hypergraph& g, const VertexSet& c) {
    detail::check_sorted_set(c, g.n(), "switching set C");
    if (c.size() < 2 || c.size() % 2 != 0) {
        throw std::invalid_argument("check_mgm_simplified: |C| must be even and >= 2");
    }
    CheckReport report;
    auto fail = [&report](const char* id, std::string witness) {
        report.conditions.push_back({id, false, std::move(witness)});
        report.ok = false;
        report.plan.clear();
        report.alpha.clear();
    };

    const int k = g.k();
    const VertexSet d = detail::complement_of(c, g.n());
    if (static_cast<int>(d.size()) != k - 1) {
        fail("d-size", "V minus C has " + std::to_string(d.size()) + " vertices, expected k-1 = " +
                           std::to_string(k - 1));
        return report;
    }
    report.conditions.push_back({"d-size", true, ""});

    for (const Edge& e : g.edges()) {
        const std::size_t cnt = detail::set_intersection(VertexSet(e), d).size();
        if (cnt != 0 && cnt != static_cast<std::size_t>(k - 1)) {
            fail("edge-d-intersection", "edge " + detail::set_str(e) + " meets D in " +
                                            std::to_string(cnt) + " vertices, expected 0 or " +
                                            std::to_string(k - 1));
            return report;
        }
    }
    report.conditions.push_back({"edge-d-intersection", true, ""});

    const VertexSet gamma = g.neighbourhood(d);
    if (gamma.size() != c.size() / 2) {
        fail("gamma-bipartition", "neighbourhood of D has " + std::to_string(gamma.size()) +
                                      " vertices, expected |C|/2 = " +
                                      std::to_string(c.size() / 2));
        return report;
    }
    report.conditions.push_back({"gamma-bipartition", true, ""});

    const SwitchingPartition p = mgm_induced_partition(g, c);
    const Matrix a = adjacency_matrix(g, true);
    for (std::size_t bi = 0; bi < 2; ++bi) {
        for (std::size_t bj = bi; bj < 2; ++bj) {
            const VertexSet& rows = p.cells[bi];
            const VertexSet& cols = p.cells[bj];
            Rational common;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                Rational sum = 0;
                for (int u : cols) sum += a.at(rows[r] - 1, u - 1);
                if (r == 0) {
                    common = sum;
                } else if (sum != common) {
                    fail("block-sums", "block (" + std::to_string(bi + 1) + "," +
                                           std::to_string(bj + 1) + "): row sums differ (" +
                                           rational_str(common) + " vs " + rational_str(sum) + ")");
                    return report;
                }
            }
            for (std::size_t cidx = 0; cidx < cols.size(); ++cidx) {
                Rational sum = 0;
                for (int u : rows) sum += a.at(u - 1, cols[cidx] - 1);
                if (sum != common) {
                    fail("block-sums", "block (" + std::to_string(bi + 1) + "," +
                                           std::to_string(bj + 1) + "): column " +
                                           std::to_string(cols[cidx]) + " sums to " +
                                           rational_str(sum) + ", rows sum to " +
                                           rational_str(common));
                    return report;
                }
            }
            report.alpha.push_back(
                {static_cast<int>(bi) + 1, static_cast<int>(bj) + 1, common});
        }
    }
    report.conditions.push_back({"block-sums", true, ""});

    report.plan.push_back({d, 1, 2});
    report.ok = true;
    return report;
}

inline Hypergraph apply_mgm_simplified(const Hypergraph& g, const VertexSet& c,
                                       const CheckReport& trusted) {
    return apply_switch_moves(g, mgm_induced_partition(g, c), trusted);
}

inline Hypergraph apply_mgm_simplified(const Hypergraph& g, const VertexSet& c) {
    const CheckReport report = check_mgm_simplified(g, c);
    if (!report.ok) {
        std::string why;
        for (const ConditionResult& cond : report.conditions) {
            if (!cond.pass) {
                why = cond.id + ": " + cond.witness;
                break;
            }
        }
        throw std::invalid_argument("apply_mgm_simplified: " + why);
    }
    return apply_mgm_simplified(g, c, report);
}

}  // namespace cospec
