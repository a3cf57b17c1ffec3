#pragma once

#include "cospec/hypergraph.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/search.hpp"
#include "cospec/switching.hpp"

#include <json.hpp>

#include <string>

namespace cospec {

// ordered_json keeps insertion order, so every emitter below produces a
// stable key sequence. Rationals are always "num/den" strings; nothing is
// ever converted to floating point.
using Json = nlohmann::ordered_json;

inline Json vertex_set_json(const VertexSet& s) { return Json(s); }

inline Json hypergraph_json(const Hypergraph& g) {
    Json j;
    j["k"] = g.k();
    j["n"] = g.n();
    j["edges"] = g.edges();
    return j;
}

inline Json partition_json(const SwitchingPartition& p) {
    Json j;
    j["cells"] = p.cells;
    j["D"] = p.D;
    return j;
}

inline Json polynomial_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(rational_str(c));
    return arr;
}

inline Json report_json(const CheckReport& r) {
    Json j;
    j["ok"] = r.ok;
    Json conds = Json::array();
    for (const ConditionResult& c : r.conditions) {
        Json jc;
        jc["id"] = c.id;
        jc["pass"] = c.pass;
        if (!c.pass) jc["witness"] = c.witness;
        conds.push_back(std::move(jc));
    }
    j["conditions"] = std::move(conds);
    Json plan = Json::array();
    for (const SwitchMove& mv : r.plan) {
        Json jm;
        jm["subset"] = mv.subset;
        if (mv.source_cell != 0) {
            jm["source_cell"] = mv.source_cell;
            jm["target_cell"] = mv.target_cell;
        }
        plan.push_back(std::move(jm));
    }
    j["switch_plan"] = std::move(plan);
    if (!r.alpha.empty()) {
        Json alphas = Json::array();
        for (const AlphaEntry& a : r.alpha) {
            Json ja;
            ja["i"] = a.i;
            ja["j"] = a.j;
            ja["value"] = rational_str(a.value);
            alphas.push_back(std::move(ja));
        }
        j["alpha"] = std::move(alphas);
    }
    return j;
}

inline const char* search_kind_name(SearchKind kind) {
    switch (kind) {
        case SearchKind::Ewqh: return "ewqh";
        case SearchKind::Egm: return "egm";
        case SearchKind::Mwqh: return "mwqh";
        case SearchKind::MgmSimplified: return "mgm";
    }
    return "?";
}

inline Json search_result_json(const SearchResult& r) {
    Json j;
    j["kind"] = search_kind_name(r.kind);
    if (r.kind == SearchKind::Ewqh || r.kind == SearchKind::Mwqh) {
        j["partition"] = partition_json(r.partition);
    } else {
        j["C"] = r.switching_set;
        if (r.kind == SearchKind::MgmSimplified) j["partition"] = partition_json(r.partition);
    }
    j["h"] = hypergraph_json(r.h);
    j["verified"] = r.verified;
    j["isomorphic_to_g"] = r.isomorphic_to_g;
    Json certs;
    certs["q_orthogonal"] = r.certificates.q_orthogonal;
    if (r.kind == SearchKind::Ewqh || r.kind == SearchKind::Egm) {
        certs["sandwich_equal"] = r.certificates.sandwich_equal;
    } else {
        certs["matrix_similar"] = r.certificates.matrix_similar;
        certs["charpoly_equal"] = r.certificates.charpoly_equal;
        certs["char_poly"] = polynomial_json(r.certificates.shared_char_poly);
    }
    j["certificates"] = std::move(certs);
    j["report"] = report_json(r.report);
    return j;
}

namespace detail {

inline VertexSet ids_from_json(const Json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + ": expected an array of ids");
    VertexSet out;
    for (const Json& v : arr) {
        if (!v.is_number_integer()) {
            throw ParseError(std::string(what) + ": expected integer vertex ids");
        }
        out.push_back(v.get<int>());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// {"cells": [[...], ...], "D": [...]} with D optional (defaults to the
// complement of the cells). Host n and k are recorded into the partition.
inline SwitchingPartition partition_from_json(const Json& j, int n, int k) {
    if (!j.is_object() || !j.contains("cells")) {
        throw ParseError("partition: expected an object with a 'cells' array");
    }
    SwitchingPartition p;
    p.n = n;
    p.k = k;
    if (!j["cells"].is_array()) throw ParseError("partition: 'cells' must be an array");
    for (const Json& cell : j["cells"]) {
        p.cells.push_back(detail::ids_from_json(cell, "partition cell"));
    }
    if (j.contains("D")) {
        p.D = detail::ids_from_json(j["D"], "partition D");
    } else {
        VertexSet all;
        for (const VertexSet& c : p.cells) all.insert(all.end(), c.begin(), c.end());
        std::sort(all.begin(), all.end());
        p.D = detail::complement_of(all, n);
    }
    return p;
}

// {"C": [...]} for the set-based kinds.
inline VertexSet switching_set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("C")) {
        throw ParseError("switching set: expected an object with a 'C' array");
    }
    return detail::ids_from_json(j["C"], "switching set C");
}

}  // namespace cospec
