#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zag {

class VertexRangeError : public std::out_of_range {
public:
    explicit VertexRangeError(const std::string& what) : std::out_of_range(what) {}
};

class SelfLoopError : public std::invalid_argument {
public:
    explicit SelfLoopError(const std::string& what) : std::invalid_argument(what) {}
};

// Re-adding an edge is an error, not a no-op: a generator that produces the
// same edge twice is buggy and silent deduplication would hide it.
class DuplicateEdgeError : public std::invalid_argument {
public:
    explicit DuplicateEdgeError(const std::string& what) : std::invalid_argument(what) {}
};

class EdgeListParseError : public std::runtime_error {
public:
    explicit EdgeListParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Multiset of unordered end-degree pairs. Keys are normalized (lo <= hi)
/// and counts are strictly positive; iteration order is sorted.
class EdgePartition {
public:
    using Key = std::pair<int, int>;

    void add(int du, int dv, std::int64_t count = 1) {
        if (count <= 0) {
            throw std::invalid_argument("EdgePartition: count must be positive");
        }
        if (du > dv) {
            std::swap(du, dv);
        }
        entries_[Key{du, dv}] += count;
    }

    std::int64_t count(int dlo, int dhi) const {
        if (dlo > dhi) {
            std::swap(dlo, dhi);
        }
        auto it = entries_.find(Key{dlo, dhi});
        return it == entries_.end() ? 0 : it->second;
    }

    std::int64_t total() const {
        std::int64_t sum = 0;
        for (const auto& [key, count] : entries_) {
            sum += count;
        }
        return sum;
    }

    bool empty() const { return entries_.empty(); }

    const std::map<Key, std::int64_t>& entries() const { return entries_; }

    bool operator==(const EdgePartition& other) const = default;

    /// "{(2,3):20;(3,3):16}" — semicolon-separated so the string stays a
    /// single CSV field without quoting.
    std::string str() const {
        std::ostringstream out;
        out << '{';
        bool first = true;
        for (const auto& [key, count] : entries_) {
            if (!first) {
                out << ';';
            }
            first = false;
            out << '(' << key.first << ',' << key.second << "):" << count;
        }
        out << '}';
        return out.str();
    }

private:
    std::map<Key, std::int64_t> entries_;
};

/// Undirected simple graph over dense vertex ids 0..V-1. Neighbor lists are
/// kept sorted so every iteration order (and every export) is deterministic.
/// Build it with add_edge, then treat it as read-only; concurrent readers
/// are safe on a fully built graph.
class Graph {
public:
    explicit Graph(int vertex_count) : adjacency_(check_vertex_count(vertex_count)) {}

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }

    std::int64_t edge_count() const { return edge_count_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) {
            throw SelfLoopError("add_edge: self-loop at vertex " + std::to_string(u));
        }
        auto& nu = adjacency_[static_cast<std::size_t>(u)];
        auto pos = std::lower_bound(nu.begin(), nu.end(), v);
        if (pos != nu.end() && *pos == v) {
            throw DuplicateEdgeError("add_edge: edge {" + std::to_string(u) + "," +
                                     std::to_string(v) + "} already present");
        }
        nu.insert(pos, v);
        auto& nv = adjacency_[static_cast<std::size_t>(v)];
        nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
        ++edge_count_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nu = adjacency_[static_cast<std::size_t>(u)];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adjacency_[static_cast<std::size_t>(v)];
    }

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> result;
        result.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < vertex_count(); ++u) {
            for (int v : adjacency_[static_cast<std::size_t>(u)]) {
                if (v > u) {
                    result.emplace_back(u, v);
                }
            }
        }
        return result;
    }

    /// Census of edges by the normalized degree pair of their endpoints.
    EdgePartition degree_pair_partition() const {
        EdgePartition partition;
        for (int u = 0; u < vertex_count(); ++u) {
            const int du = degree(u);
            for (int v : adjacency_[static_cast<std::size_t>(u)]) {
                if (v > u) {
                    partition.add(du, degree(v));
                }
            }
        }
        return partition;
    }

private:
    static int check_vertex_count(int vertex_count) {
        if (vertex_count < 0) {
            throw std::invalid_argument("Graph: vertex count must be non-negative");
        }
        return vertex_count;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count()) {
            throw VertexRangeError("vertex id " + std::to_string(v) + " out of range [0," +
                                   std::to_string(vertex_count()) + ")");
        }
    }

    std::vector<std::vector<int>> adjacency_;
    std::int64_t edge_count_ = 0;
};

// Edge-list text format:
//   p <num_vertices> <num_edges>
//   e <u> <v>          (one per edge, u < v, lexicographically sorted)
// Single spaces, every line newline-terminated.

inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << "e " << u << ' ' << v << '\n';
    }
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

inline Graph read_edge_list(std::istream& in) {
    std::string tag;
    if (!(in >> tag) || tag != "p") {
        throw EdgeListParseError("edge list: expected header line 'p <vertices> <edges>'");
    }
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    if (!(in >> vertices >> edges) || vertices < 0 || edges < 0) {
        throw EdgeListParseError("edge list: malformed header counts");
    }
    if (vertices > std::numeric_limits<int>::max()) {
        throw EdgeListParseError("edge list: vertex count too large");
    }
    Graph g(static_cast<int>(vertices));
    for (std::int64_t i = 0; i < edges; ++i) {
        int u = 0;
        int v = 0;
        if (!(in >> tag >> u >> v) || tag != "e") {
            throw EdgeListParseError("edge list: expected edge line 'e <u> <v>'");
        }
        try {
            g.add_edge(u, v);
        } catch (const std::exception& e) {
            throw EdgeListParseError(std::string("edge list: ") + e.what());
        }
    }
    if (in >> tag) {
        throw EdgeListParseError("edge list: trailing content after declared edges");
    }
    return g;
}

inline Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

}  // namespace zag
