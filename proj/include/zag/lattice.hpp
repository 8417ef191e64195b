#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zag/graph.hpp"

namespace zag {

enum class Family { hexagonal, triangular };
enum class Boundary { free, cylindrical, toroidal };

class SpecSyntaxError : public std::invalid_argument {
public:
    explicit SpecSyntaxError(const std::string& what) : std::invalid_argument(what) {}
};

/// Which lattice to build: family x boundary condition x size (m, n).
struct LatticeSpec {
    Family family;
    Boundary boundary;
    int m;
    int n;

    bool operator==(const LatticeSpec&) const = default;
};

inline const char* family_name(Family f) {
    return f == Family::hexagonal ? "hex" : "tri";
}

inline const char* boundary_name(Boundary b) {
    switch (b) {
        case Boundary::free: return "free";
        case Boundary::cylindrical: return "cyl";
        default: return "torus";
    }
}

inline std::string to_string(const LatticeSpec& spec) {
    return std::string(family_name(spec.family)) + ":" + boundary_name(spec.boundary) + ":" +
           std::to_string(spec.m) + "x" + std::to_string(spec.n);
}

/// A family/boundary combination without a size.
struct FamilyKey {
    Family family;
    Boundary boundary;

    bool operator==(const FamilyKey&) const = default;
};

inline const std::vector<FamilyKey>& all_families() {
    static const std::vector<FamilyKey> keys = {
        {Family::hexagonal, Boundary::free},     {Family::hexagonal, Boundary::cylindrical},
        {Family::hexagonal, Boundary::toroidal}, {Family::triangular, Boundary::free},
        {Family::triangular, Boundary::cylindrical}, {Family::triangular, Boundary::toroidal},
    };
    return keys;
}

namespace detail {

inline void check_lattice_size(int m, int n) {
    if (m < 3 || n < 3) {
        throw std::domain_error("lattice size: m and n must both be >= 3 (got " +
                                std::to_string(m) + "x" + std::to_string(n) + ")");
    }
    // Vertex ids must stay addressable as int.
    const std::int64_t worst = 2 * (static_cast<std::int64_t>(m) + 1) *
                               (static_cast<std::int64_t>(n) + 1);
    if (worst > std::numeric_limits<int>::max()) {
        throw std::domain_error("lattice size: m x n too large to address");
    }
}

}  // namespace detail

inline void validate(const LatticeSpec& spec) {
    detail::check_lattice_size(spec.m, spec.n);
}

/// Parses "<family>:<boundary>:<m>x<n>", e.g. "hex:torus:4x5" or "tri:free:6x6".
inline LatticeSpec parse_lattice_spec(std::string_view text) {
    const auto fail = [&] {
        throw SpecSyntaxError("bad lattice spec '" + std::string(text) +
                              "', expected <hex|tri>:<free|cyl|torus>:<m>x<n>");
    };
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string_view::npos ? first : first + 1);
    if (first == std::string_view::npos || second == std::string_view::npos) {
        fail();
    }
    const std::string_view family_part = text.substr(0, first);
    const std::string_view boundary_part = text.substr(first + 1, second - first - 1);
    const std::string_view size_part = text.substr(second + 1);

    LatticeSpec spec{};
    if (family_part == "hex") {
        spec.family = Family::hexagonal;
    } else if (family_part == "tri") {
        spec.family = Family::triangular;
    } else {
        fail();
    }
    if (boundary_part == "free") {
        spec.boundary = Boundary::free;
    } else if (boundary_part == "cyl") {
        spec.boundary = Boundary::cylindrical;
    } else if (boundary_part == "torus") {
        spec.boundary = Boundary::toroidal;
    } else {
        fail();
    }
    const auto x = size_part.find('x');
    if (x == std::string_view::npos || x == 0 || x + 1 == size_part.size()) {
        fail();
    }
    const auto parse_dim = [&](std::string_view s) {
        if (s.empty() || s.size() > 9) {
            fail();
        }
        int value = 0;
        for (char c : s) {
            if (c < '0' || c > '9') {
                fail();
            }
            value = value * 10 + (c - '0');
        }
        return value;
    };
    spec.m = parse_dim(size_part.substr(0, x));
    spec.n = parse_dim(size_part.substr(x + 1));
    return spec;
}

// Hexagonal lattices in brick-wall form: m+1 zigzag rows of 2n+2 vertices.
// Vertex (r, p) has id r*(2n+2) + p. Row edges join consecutive p; rung
// edges join (r, p) to (r+1, p-1) for odd p. The cylinder closes each row
// into a cycle; the torus additionally wraps the rung rule from row m back
// to row 0.

inline Graph hex_free(int m, int n) {
    detail::check_lattice_size(m, n);
    const int cols = 2 * n + 2;
    const auto id = [cols](int r, int p) { return r * cols + p; };
    Graph g((m + 1) * cols);
    for (int r = 0; r <= m; ++r) {
        for (int p = 0; p <= 2 * n; ++p) {
            g.add_edge(id(r, p), id(r, p + 1));
        }
    }
    for (int r = 0; r < m; ++r) {
        for (int p = 1; p <= 2 * n + 1; p += 2) {
            g.add_edge(id(r, p), id(r + 1, p - 1));
        }
    }
    return g;
}

inline Graph hex_cylindrical(int m, int n) {
    Graph g = hex_free(m, n);
    const int cols = 2 * n + 2;
    for (int r = 0; r <= m; ++r) {
        g.add_edge(r * cols + (2 * n + 1), r * cols);
    }
    return g;
}

inline Graph hex_toroidal(int m, int n) {
    Graph g = hex_cylindrical(m, n);
    const int cols = 2 * n + 2;
    for (int p = 1; p <= 2 * n + 1; p += 2) {
        g.add_edge(m * cols + p, p - 1);
    }
    return g;
}

// Triangular lattices: an m x n grid, vertex (i, j) with id i*n + j, with
// row, column and one consistent diagonal of edges ((i,j)-(i+1,j+1)). The
// cylinder wraps j, the torus wraps both directions.

inline Graph tri_free(int m, int n) {
    detail::check_lattice_size(m, n);
    const auto id = [n](int i, int j) { return i * n + j; };
    Graph g(m * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j + 1 < n; ++j) {
            g.add_edge(id(i, j), id(i, j + 1));
        }
    }
    for (int i = 0; i + 1 < m; ++i) {
        for (int j = 0; j < n; ++j) {
            g.add_edge(id(i, j), id(i + 1, j));
        }
    }
    for (int i = 0; i + 1 < m; ++i) {
        for (int j = 0; j + 1 < n; ++j) {
            g.add_edge(id(i, j), id(i + 1, j + 1));
        }
    }
    return g;
}

inline Graph tri_cylindrical(int m, int n) {
    Graph g = tri_free(m, n);
    const auto id = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < m; ++i) {
        g.add_edge(id(i, n - 1), id(i, 0));
    }
    for (int i = 0; i + 1 < m; ++i) {
        g.add_edge(id(i, n - 1), id(i + 1, 0));
    }
    return g;
}

inline Graph tri_toroidal(int m, int n) {
    Graph g = tri_cylindrical(m, n);
    const auto id = [n](int i, int j) { return i * n + j; };
    for (int j = 0; j < n; ++j) {
        g.add_edge(id(m - 1, j), id(0, j));
    }
    for (int j = 0; j < n; ++j) {
        g.add_edge(id(m - 1, j), id(0, (j + 1) % n));
    }
    return g;
}

inline Graph generate(const LatticeSpec& spec) {
    validate(spec);
    if (spec.family == Family::hexagonal) {
        switch (spec.boundary) {
            case Boundary::free: return hex_free(spec.m, spec.n);
            case Boundary::cylindrical: return hex_cylindrical(spec.m, spec.n);
            default: return hex_toroidal(spec.m, spec.n);
        }
    }
    switch (spec.boundary) {
        case Boundary::free: return tri_free(spec.m, spec.n);
        case Boundary::cylindrical: return tri_cylindrical(spec.m, spec.n);
        default: return tri_toroidal(spec.m, spec.n);
    }
}

inline std::int64_t expected_vertex_count(const LatticeSpec& spec) {
    validate(spec);
    const std::int64_t m = spec.m;
    const std::int64_t n = spec.n;
    if (spec.family == Family::hexagonal) {
        return 2 * (m + 1) * (n + 1);
    }
    return m * n;
}

inline std::int64_t expected_edge_count(const LatticeSpec& spec) {
    validate(spec);
    const std::int64_t m = spec.m;
    const std::int64_t n = spec.n;
    if (spec.family == Family::hexagonal) {
        switch (spec.boundary) {
            case Boundary::free: return m * (n + 1) + (m + 1) * (2 * n + 1);
            case Boundary::cylindrical: return (n + 1) * (3 * m + 2);
            default: return 3 * (m + 1) * (n + 1);
        }
    }
    switch (spec.boundary) {
        case Boundary::free: return m * (n - 1) + n * (m - 1) + (n - 1) * (m - 1);
        case Boundary::cylindrical: return 3 * m * n - 2 * n;
        default: return 3 * m * n;
    }
}

/// The known edge partition of a lattice, with each class count evaluated
/// at (m, n). Classes whose count evaluates to zero are omitted, matching
/// what a census of the generated graph produces.
inline EdgePartition expected_partition(const LatticeSpec& spec) {
    validate(spec);
    const std::int64_t m = spec.m;
    const std::int64_t n = spec.n;
    EdgePartition partition;
    const auto add = [&partition](int dlo, int dhi, std::int64_t count) {
        if (count < 0) {
            throw std::domain_error("expected_partition: negative class count");
        }
        if (count > 0) {
            partition.add(dlo, dhi, count);
        }
    };
    if (spec.family == Family::hexagonal) {
        switch (spec.boundary) {
            case Boundary::free:
                add(2, 3, 4 * m + 4 * n - 4);
                add(3, 3, m * (n - 1) + (2 * n - 1) * (m - 1));
                add(1, 3, 2);
                add(2, 2, 2);
                break;
            case Boundary::cylindrical:
                add(3, 3, (n + 1) * (3 * m - 2));
                add(2, 3, 4 * (n + 1));
                break;
            default:
                add(3, 3, 3 * (m + 1) * (n + 1));
                break;
        }
    } else {
        switch (spec.boundary) {
            case Boundary::free:
                add(2, 4, 4);
                add(3, 4, 4);
                add(3, 6, 2);
                add(4, 4, 2 * (m + n - 5));
                add(4, 6, 4 * (m + n - 5));
                add(6, 6, 3 * (m * n + 7) - 8 * (m + n));
                break;
            case Boundary::cylindrical:
                add(4, 4, 2 * n);
                add(4, 6, 4 * n);
                add(6, 6, 3 * m * n - 8 * n);
                break;
            default:
                add(6, 6, 3 * m * n);
                break;
        }
    }
    return partition;
}

}  // namespace zag
