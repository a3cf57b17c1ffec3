#pragma once

#include "cospec/hypergraph.hpp"
#include "cospec/switching.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cospec {

// Bundled reference instances, also reachable through `cospec example`.
// Each carries the source hypergraph, the admissible partition, and the
// expected switch output; the test suite pins every derived quantity
// (plans, alpha tables, spectra) against these.
struct BuiltinExample {
    std::string name;
    std::string description;
    Hypergraph g;
    Hypergraph h;
    SwitchingPartition partition;
};

inline const std::vector<BuiltinExample>& builtin_examples() {
    static const std::vector<BuiltinExample> examples = [] {
        std::vector<BuiltinExample> out;

        // 9 vertices, 3-uniform, one cell pair of size 3 with D = {7,8,9}.
        // The {7,8}-edges move from {1,2,3} to {4,5,6}; the resulting pair is
        // cospectral for the adjacency tensor but not isomorphic.
        out.push_back(BuiltinExample{
            "paper-ex1",
            "9-vertex 3-uniform pair related by a tensor-side cell-pair switch (t=3, m=1)",
            Hypergraph(3, 9,
                       {{1, 7, 8},
                        {1, 8, 9},
                        {2, 7, 8},
                        {2, 7, 9},
                        {3, 7, 8},
                        {3, 7, 9},
                        {4, 7, 9},
                        {4, 8, 9},
                        {5, 7, 9}}),
            Hypergraph(3, 9,
                       {{1, 8, 9},
                        {2, 7, 9},
                        {3, 7, 9},
                        {4, 7, 8},
                        {4, 7, 9},
                        {4, 8, 9},
                        {5, 7, 8},
                        {5, 7, 9},
                        {6, 7, 8}}),
            SwitchingPartition{{{1, 2, 3}, {4, 5, 6}}, {7, 8, 9}, 9, 3}});

        // 14 vertices, 3-uniform, two cell pairs of size 3 with D = {13,14}.
        // The D-edges move from {1,2,3} to {4,5,6}; the pair (C3, C4) is
        // balanced, so it stays put. The outputs share the characteristic
        // polynomial of the scaled adjacency matrix without being isomorphic.
        out.push_back(BuiltinExample{
            "paper-ex2",
            "14-vertex 3-uniform pair related by a matrix-side switch (t=3, m=2)",
            Hypergraph(3, 14,
                       {{1, 2, 3},
                        {1, 4, 5},
                        {1, 13, 14},
                        {2, 5, 6},
                        {2, 13, 14},
                        {3, 4, 6},
                        {3, 13, 14},
                        {7, 10, 12},
                        {7, 13, 14},
                        {8, 10, 11},
                        {9, 11, 12},
                        {10, 13, 14}}),
            Hypergraph(3, 14,
                       {{1, 2, 3},
                        {1, 4, 5},
                        {2, 5, 6},
                        {3, 4, 6},
                        {4, 13, 14},
                        {5, 13, 14},
                        {6, 13, 14},
                        {7, 10, 12},
                        {7, 13, 14},
                        {8, 10, 11},
                        {9, 11, 12},
                        {10, 13, 14}}),
            SwitchingPartition{
                {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}}, {13, 14}, 14, 3}});

        return out;
    }();
    return examples;
}

inline const BuiltinExample& builtin_example(std::string_view name) {
    for (const BuiltinExample& e : builtin_examples()) {
        if (e.name == name) return e;
    }
    throw ParseError("unknown example: '" + std::string(name) + "'");
}

}  // namespace cospec
