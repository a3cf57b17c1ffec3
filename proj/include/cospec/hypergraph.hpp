#pragma once

#include "cospec/rational.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cospec {

// Both aliases hold strictly increasing 1-based vertex ids.
using Edge = std::vector<int>;
using VertexSet = std::vector<int>;

// k-uniform hypergraph on vertex set {1..n}. Edges are kept sorted
// internally and the edge list is kept in lexicographic order with set
// semantics, so operator== is structural equality and serialization is
// canonical.
class Hypergraph {
  public:
    Hypergraph(int k, int n, std::vector<Edge> edges = {}) : k_(k), n_(n) {
        if (k < 2) throw std::invalid_argument("hypergraph: k must be at least 2");
        if (n < 1) throw std::invalid_argument("hypergraph: n must be at least 1");
        for (Edge& e : edges) {
            if (static_cast<int>(e.size()) != k) {
                throw std::invalid_argument("hypergraph: edge size differs from k");
            }
            std::sort(e.begin(), e.end());
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 1 || e[i] > n) {
                    throw std::invalid_argument("hypergraph: vertex id out of range");
                }
                if (i > 0 && e[i] == e[i - 1]) {
                    throw std::invalid_argument("hypergraph: repeated vertex in edge");
                }
            }
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
            throw std::invalid_argument("hypergraph: duplicate edge");
        }
        edges_ = std::move(edges);
    }

    int k() const { return k_; }
    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    // e must be sorted ascending.
    bool has_edge(const Edge& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (const Edge& e : edges_) {
            if (std::binary_search(e.begin(), e.end(), v)) ++d;
        }
        return d;
    }

    // Neighbourhood of a (k-1)-set S: all v with S + {v} an edge, ascending.
    VertexSet neighbourhood(const VertexSet& s) const {
        if (static_cast<int>(s.size()) != k_ - 1) {
            throw std::invalid_argument("neighbourhood: set size must be k-1");
        }
        VertexSet sorted = s;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            check_vertex(sorted[i]);
            if (i > 0 && sorted[i] == sorted[i - 1]) {
                throw std::invalid_argument("neighbourhood: repeated vertex in set");
            }
        }
        VertexSet out;
        for (const Edge& e : edges_) {
            if (!std::includes(e.begin(), e.end(), sorted.begin(), sorted.end())) continue;
            for (int v : e) {
                if (!std::binary_search(sorted.begin(), sorted.end(), v)) {
                    out.push_back(v);
                    break;
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Edge set of the 2-section graph: {u,v} with u < v co-occurring in
    // some edge.
    std::vector<std::pair<int, int>> two_section() const {
        std::set<std::pair<int, int>> pairs;
        for (const Edge& e : edges_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (std::size_t j = i + 1; j < e.size(); ++j) pairs.emplace(e[i], e[j]);
            }
        }
        return {pairs.begin(), pairs.end()};
    }

    // Relabels vertices: v becomes image[v-1]. image must be a bijection on
    // 1..n (Matrix::permutation validates and shares the convention).
    Hypergraph permuted(const std::vector<int>& image) const {
        if (static_cast<int>(image.size()) != n_) {
            throw std::invalid_argument("permuted: image size differs from n");
        }
        std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
        for (int v : image) {
            if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("permuted: image is not a bijection on 1..n");
            }
            seen[static_cast<std::size_t>(v)] = 1;
        }
        std::vector<Edge> mapped = edges_;
        for (Edge& e : mapped) {
            for (int& v : e) v = image[static_cast<std::size_t>(v) - 1];
        }
        return Hypergraph(k_, n_, std::move(mapped));
    }

    bool operator==(const Hypergraph&) const = default;

  private:
    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw std::invalid_argument("hypergraph: vertex id out of range");
    }

    int k_;
    int n_;
    std::vector<Edge> edges_;
};

namespace detail {

// Strict tokenization: fields separated by exactly one space, no leading or
// trailing blanks, so serialization round-trips bit for bit.
inline std::vector<std::string_view> split_fields(std::string_view line, int line_no) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t space = line.find(' ', start);
        const std::string_view field =
            space == std::string_view::npos ? line.substr(start) : line.substr(start, space - start);
        if (field.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": malformed spacing");
        }
        fields.push_back(field);
        if (space == std::string_view::npos) break;
        start = space + 1;
    }
    return fields;
}

inline int parse_id(std::string_view field, int line_no) {
    int value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                         std::string(field) + "'");
    }
    return value;
}

}  // namespace detail

// Text format: optional '#' comment lines anywhere, then a "k n" header,
// then one edge per line as k ascending ids separated by single spaces.
// A trailing newline is required; parse(serialize(g)) == g bit for bit.
inline Hypergraph parse_hypergraph(std::string_view text) {
    if (text.empty() || text.back() != '\n') {
        throw ParseError("hypergraph text must end with a newline");
    }
    int k = 0;
    int n = 0;
    bool have_header = false;
    std::set<Edge> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        const auto fields = detail::split_fields(line, line_no);
        if (!have_header) {
            if (fields.size() != 2) {
                throw ParseError("line " + std::to_string(line_no) + ": header must be 'k n'");
            }
            k = detail::parse_id(fields[0], line_no);
            n = detail::parse_id(fields[1], line_no);
            if (k < 2) throw ParseError("line " + std::to_string(line_no) + ": k must be at least 2");
            if (n < 1) throw ParseError("line " + std::to_string(line_no) + ": n must be at least 1");
            have_header = true;
            continue;
        }
        if (static_cast<int>(fields.size()) != k) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(k) +
                             " vertex ids");
        }
        Edge e(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) {
            e[i] = detail::parse_id(fields[i], line_no);
            if (e[i] < 1 || e[i] > n) {
                throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
            }
            if (i > 0 && e[i] <= e[i - 1]) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": vertex ids must be strictly increasing");
            }
        }
        if (!edges.insert(std::move(e)).second) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate edge");
        }
    }
    if (!have_header) throw ParseError("missing 'k n' header");
    return Hypergraph(k, n, {edges.begin(), edges.end()});
}

inline std::string serialize_hypergraph(const Hypergraph& g) {
    std::string out = std::to_string(g.k()) + ' ' + std::to_string(g.n()) + '\n';
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace cospec
