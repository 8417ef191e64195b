#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zag/graph.hpp"
#include "zag/lattice.hpp"
#include "zag/value.hpp"

namespace zag {

/// General (a,b)-Zagreb index by direct summation over the edge set:
/// sum over uv of d_u^a d_v^b + d_u^b d_v^a. This is the ground-truth
/// oracle every closed form is checked against.
inline IndexValue general_zagreb(const Graph& g, const Exponents& e) {
    // Degrees repeat heavily; precompute d^a and d^b per degree value.
    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        max_degree = std::max(max_degree, g.degree(v));
    }
    std::vector<IndexValue> pow_a(static_cast<std::size_t>(max_degree) + 1);
    std::vector<IndexValue> pow_b(static_cast<std::size_t>(max_degree) + 1);
    std::vector<bool> cached(static_cast<std::size_t>(max_degree) + 1, false);
    const auto fill = [&](int d) {
        const auto i = static_cast<std::size_t>(d);
        if (!cached[i]) {
            pow_a[i] = pow_degree(d, e.a);
            pow_b[i] = pow_degree(d, e.b);
            cached[i] = true;
        }
    };

    IndexValue sum;
    if (!(e.a.is_integer() && e.b.is_integer())) {
        sum = IndexValue::approximate(0.0);
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        const int du = g.degree(u);
        for (int v : g.neighbors(u)) {
            if (v > u) {
                const int dv = g.degree(v);
                fill(du);
                fill(dv);
                const auto ui = static_cast<std::size_t>(du);
                const auto vi = static_cast<std::size_t>(dv);
                sum += pow_a[ui] * pow_b[vi] + pow_b[ui] * pow_a[vi];
            }
        }
    }
    return sum;
}

/// Same index from an edge partition: sum of count * (lo^a hi^b + lo^b hi^a).
inline IndexValue general_zagreb(const EdgePartition& partition, const Exponents& e) {
    IndexValue sum;
    if (!(e.a.is_integer() && e.b.is_integer())) {
        sum = IndexValue::approximate(0.0);
    }
    for (const auto& [degrees, count] : partition.entries()) {
        sum += count * pair_weight(degrees.first, degrees.second, e);
    }
    return sum;
}

/// Closed-form (a,b)-Zagreb value for a lattice, one formula per family.
/// Each case transcribes the published expression term by term; none of
/// them consults the generated graph or its partition.
inline IndexValue closed_form(const LatticeSpec& spec, const Exponents& e) {
    validate(spec);
    const std::int64_t m = spec.m;
    const std::int64_t n = spec.n;
    const Exponent& a = e.a;
    const Exponent& b = e.b;
    const auto p = [](std::int64_t base, const Exponent& exp) { return pow_degree(base, exp); };

    if (spec.family == Family::hexagonal) {
        switch (spec.boundary) {
            case Boundary::free:
                return (3 * m * n - 2 * m - 2 * n + 1) * (2 * p(3, a + b)) +
                       p(2, a + b + Exponent(2)) +
                       (4 * m + 4 * n - 4) * (p(3, a) * p(2, b) + p(3, b) * p(2, a)) +
                       2 * (p(3, a) + p(3, b));
            case Boundary::cylindrical:
                return 2 * (n + 1) * (3 * m - 2) * p(3, a + b) +
                       4 * (n + 1) * (p(3, a) * p(2, b) + p(3, b) * p(2, a));
            default:
                return 6 * (m + 1) * (n + 1) * p(3, a + b);
        }
    }
    switch (spec.boundary) {
        case Boundary::free:
            return 4 * (p(2, a + 2 * b) + p(2, 2 * a + b)) +
                   2 * (3 * (m * n + 7) - 8 * (m + n)) * p(6, a + b) +
                   2 * (p(3, a) * p(6, b) + p(3, b) * p(6, a)) +
                   (m + n - 5) * p(2, 2 * (a + b + Exponent(1))) +
                   4 * (m + n - 5) * (p(4, a) * p(6, b) + p(4, b) * p(6, a)) +
                   4 * (p(3, a) * p(4, b) + p(3, b) * p(4, a));
        case Boundary::cylindrical:
            return n * p(2, 2 * (a + b + Exponent(1))) +
                   4 * n * (p(4, a) * p(6, b) + p(4, b) * p(6, a)) +
                   2 * (3 * m * n - 8 * n) * p(6, a + b);
        default:
            return 6 * m * n * p(6, a + b);
    }
}

/// A degree-based index expressible through Z_{a,b} (first/second Zagreb,
/// forgotten, redefined Zagreb, general first Zagreb, general Randic,
/// symmetric division deg).
class DerivedIndex {
public:
    enum class Kind {
        first_zagreb,          // M1  = Z_{1,0}
        second_zagreb,         // M2  = 1/2 Z_{1,1}
        forgotten,             // F   = Z_{2,0}
        redefined_zagreb,      // ReZM = Z_{2,1}
        general_first_zagreb,  // M^a = Z_{a-1,0}, a != 0, 1
        general_randic,        // R_a = 1/2 Z_{a,a}, a != 0
        symmetric_division,    // SDD = Z_{1,-1}
    };

    static DerivedIndex first_zagreb() { return DerivedIndex(Kind::first_zagreb, Exponent(0)); }
    static DerivedIndex second_zagreb() { return DerivedIndex(Kind::second_zagreb, Exponent(0)); }
    static DerivedIndex forgotten() { return DerivedIndex(Kind::forgotten, Exponent(0)); }
    static DerivedIndex redefined_zagreb() {
        return DerivedIndex(Kind::redefined_zagreb, Exponent(0));
    }
    static DerivedIndex general_first_zagreb(Exponent alpha) {
        if (alpha.is(0) || alpha.is(1)) {
            throw std::invalid_argument("general first Zagreb index: exponent must not be 0 or 1");
        }
        return DerivedIndex(Kind::general_first_zagreb, alpha);
    }
    static DerivedIndex general_randic(Exponent alpha) {
        if (alpha.is(0)) {
            throw std::invalid_argument("general Randic index: exponent must not be 0");
        }
        return DerivedIndex(Kind::general_randic, alpha);
    }
    static DerivedIndex symmetric_division() {
        return DerivedIndex(Kind::symmetric_division, Exponent(0));
    }

    Kind kind() const { return kind_; }

    Exponent alpha() const { return alpha_; }

    /// The (a, b) pair this index reduces to.
    Exponents reduction() const {
        switch (kind_) {
            case Kind::first_zagreb: return {Exponent(1), Exponent(0)};
            case Kind::second_zagreb: return {Exponent(1), Exponent(1)};
            case Kind::forgotten: return {Exponent(2), Exponent(0)};
            case Kind::redefined_zagreb: return {Exponent(2), Exponent(1)};
            case Kind::general_first_zagreb: return {alpha_ - Exponent(1), Exponent(0)};
            case Kind::general_randic: return {alpha_, alpha_};
            default: return {Exponent(1), Exponent(-1)};
        }
    }

    /// 1/2 for the two symmetric-product reductions, 1 otherwise.
    Rational prefactor() const {
        if (kind_ == Kind::second_zagreb || kind_ == Kind::general_randic) {
            return Rational(1, 2);
        }
        return Rational(1);
    }

    std::string name() const {
        switch (kind_) {
            case Kind::first_zagreb: return "M1";
            case Kind::second_zagreb: return "M2";
            case Kind::forgotten: return "F";
            case Kind::redefined_zagreb: return "ReZM";
            case Kind::general_first_zagreb: return "M^a(a=" + alpha_.str() + ")";
            case Kind::general_randic: return "R_a(a=" + alpha_.str() + ")";
            default: return "SDD";
        }
    }

private:
    DerivedIndex(Kind kind, Exponent alpha) : kind_(kind), alpha_(alpha) {}

    Kind kind_;
    Exponent alpha_;
};

/// Derived index via the Z_{a,b} reduction, evaluated by brute force.
inline IndexValue derived_index(const Graph& g, const DerivedIndex& index) {
    return index.prefactor() * general_zagreb(g, index.reduction());
}

/// Derived index via the Z_{a,b} reduction, evaluated through the closed form.
inline IndexValue derived_index(const LatticeSpec& spec, const DerivedIndex& index) {
    return index.prefactor() * closed_form(spec, index.reduction());
}

// Direct-definition evaluators. These restate the classical vertex-sum and
// edge-sum forms without going through Z_{a,b}, so identities between the
// two routes are genuine cross-checks.

/// M1 as the vertex sum of squared degrees.
inline IndexValue first_zagreb_vertex_sum(const Graph& g) {
    Rational sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::int64_t d = g.degree(v);
        sum += Rational(d * d);
    }
    return IndexValue::exact(sum);
}

/// F as the vertex sum of cubed degrees.
inline IndexValue forgotten_vertex_sum(const Graph& g) {
    Rational sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::int64_t d = g.degree(v);
        sum += Rational(d * d * d);
    }
    return IndexValue::exact(sum);
}

/// General first Zagreb index as the vertex sum of d^alpha.
inline IndexValue general_first_zagreb_vertex_sum(const Graph& g, const Exponent& alpha) {
    IndexValue sum;
    if (!alpha.is_integer()) {
        sum = IndexValue::approximate(0.0);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d == 0) {
            // 0^alpha: zero for positive exponents, undefined otherwise.
            const bool positive = alpha.is_integer() ? alpha.as_integer() > 0 : alpha.as_real() > 0;
            if (!positive) {
                throw std::domain_error("general first Zagreb: isolated vertex with non-positive exponent");
            }
            continue;
        }
        sum += pow_degree(d, alpha);
    }
    return sum;
}

/// M1 as the edge sum of end-degree sums.
inline IndexValue first_zagreb_edge_sum(const Graph& g) {
    Rational sum = 0;
    for (const auto& [u, v] : g.edges()) {
        sum += Rational(static_cast<std::int64_t>(g.degree(u)) + g.degree(v));
    }
    return IndexValue::exact(sum);
}

/// F as the edge sum of squared end degrees.
inline IndexValue forgotten_edge_sum(const Graph& g) {
    Rational sum = 0;
    for (const auto& [u, v] : g.edges()) {
        const std::int64_t du = g.degree(u);
        const std::int64_t dv = g.degree(v);
        sum += Rational(du * du + dv * dv);
    }
    return IndexValue::exact(sum);
}

/// M2 as the edge sum of end-degree products.
inline IndexValue second_zagreb_edge_sum(const Graph& g) {
    Rational sum = 0;
    for (const auto& [u, v] : g.edges()) {
        sum += Rational(static_cast<std::int64_t>(g.degree(u)) * g.degree(v));
    }
    return IndexValue::exact(sum);
}

/// ReZM as the edge sum of d_u d_v (d_u + d_v).
inline IndexValue redefined_zagreb_edge_sum(const Graph& g) {
    Rational sum = 0;
    for (const auto& [u, v] : g.edges()) {
        const std::int64_t du = g.degree(u);
        const std::int64_t dv = g.degree(v);
        sum += Rational(du * dv * (du + dv));
    }
    return IndexValue::exact(sum);
}

/// SDD as the edge sum of d_u/d_v + d_v/d_u.
inline IndexValue symmetric_division_edge_sum(const Graph& g) {
    Rational sum = 0;
    for (const auto& [u, v] : g.edges()) {
        const std::int64_t du = g.degree(u);
        const std::int64_t dv = g.degree(v);
        sum += Rational(du, dv) + Rational(dv, du);
    }
    return IndexValue::exact(sum);
}

/// General Randic index as the edge sum of (d_u d_v)^alpha.
inline IndexValue general_randic_edge_sum(const Graph& g, const Exponent& alpha) {
    IndexValue sum;
    if (!alpha.is_integer()) {
        sum = IndexValue::approximate(0.0);
    }
    for (const auto& [u, v] : g.edges()) {
        sum += pow_degree(static_cast<std::int64_t>(g.degree(u)) * g.degree(v), alpha);
    }
    return sum;
}

/// The published specialized-index formula for a lattice, transcribed
/// verbatim. Deliberately not normalized against closed_form: one printed
/// entry (second Zagreb on the toroidal triangular lattice) disagrees with
/// the oracle, and verification is expected to surface that, not mask it.
inline IndexValue corollary_value(const LatticeSpec& spec, const DerivedIndex& index) {
    validate(spec);
    const std::int64_t m = spec.m;
    const std::int64_t n = spec.n;
    const Exponent a = index.alpha();
    const auto p = [](std::int64_t base, const Exponent& exp) { return pow_degree(base, exp); };
    const auto exact = [](const Rational& r) { return IndexValue::exact(r); };
    using Kind = DerivedIndex::Kind;

    if (spec.family == Family::hexagonal && spec.boundary == Boundary::free) {
        switch (index.kind()) {
            case Kind::first_zagreb: return exact(18 * m * n + 8 * m + 8 * n + 2);
            case Kind::second_zagreb: return exact(27 * m * n + 6 * m + 6 * n - 1);
            case Kind::forgotten: return exact(54 * m * n + 16 * m + 16 * n + 2);
            case Kind::redefined_zagreb: return exact(162 * m * n + 12 * m + 12 * n - 10);
            case Kind::general_first_zagreb:
                return 6 * m * n * p(3, a - Exponent(1)) + p(2, a + Exponent(1)) +
                       exact(2) + (4 * m + 4 * n - 4) * p(2, a - Exponent(1));
            case Kind::general_randic:
                return (3 * m * n - 2 * m - 2 * n + 1) * p(3, 2 * a) +
                       p(2, 2 * a + Exponent(1)) +
                       (4 * m + 4 * n - 4) * (p(2, a) * p(3, a)) + 2 * p(3, a);
            default:
                return exact(Rational(2 * (3 * m * n - 2 * m - 2 * n + 1)) +
                             Rational(13, 6) * Rational(4 * m + 4 * n - 4) + Rational(32, 3));
        }
    }
    if (spec.family == Family::hexagonal && spec.boundary == Boundary::cylindrical) {
        switch (index.kind()) {
            case Kind::first_zagreb: return exact(2 * (n + 1) * (9 * m + 4));
            case Kind::second_zagreb: return exact(3 * (n + 1) * (9 * m + 2));
            case Kind::forgotten: return exact(2 * (n + 1) * (27 * m + 8));
            case Kind::redefined_zagreb: return exact(6 * (n + 1) * (27 * m + 2));
            case Kind::general_first_zagreb:
                return 2 * (n + 1) * (3 * m - 2) * p(3, a - Exponent(1)) +
                       4 * (n + 1) * (p(3, a - Exponent(1)) + p(2, a - Exponent(1)));
            case Kind::general_randic:
                return (n + 1) * (3 * m - 2) * p(3, 2 * a) + 4 * (n + 1) * (p(3, a) * p(2, a));
            default:
                return exact(Rational(2 * (n + 1)) * (Rational(3 * m) + Rational(7, 3)));
        }
    }
    if (spec.family == Family::hexagonal) {  // toroidal
        switch (index.kind()) {
            case Kind::first_zagreb: return exact(18 * (m + 1) * (n + 1));
            case Kind::second_zagreb: return exact(27 * (m + 1) * (n + 1));
            case Kind::forgotten: return exact(54 * (m + 1) * (n + 1));
            case Kind::redefined_zagreb: return exact(162 * (m + 1) * (n + 1));
            case Kind::general_first_zagreb:
                return 6 * (m + 1) * (n + 1) * p(3, a - Exponent(1));
            case Kind::general_randic:
                return (m + 1) * (n + 1) * p(3, 2 * a + Exponent(1));
            default: return exact(6 * (m + 1) * (n + 1));
        }
    }
    if (spec.boundary == Boundary::free) {  // triangular free
        const std::int64_t hexes = 3 * (m * n + 7) - 8 * (m + n);
        const std::int64_t border = m + n - 5;
        switch (index.kind()) {
            case Kind::first_zagreb: return exact(12 * hexes + 56 * border + 70);
            case Kind::second_zagreb: return exact(36 * hexes + 128 * border + 116);
            case Kind::forgotten: return exact(72 * hexes + 272 * border + 270);
            case Kind::redefined_zagreb: return exact(432 * hexes + 1216 * border + 852);
            case Kind::general_first_zagreb:
                return 2 * hexes * p(6, a - Exponent(1)) +
                       2 * (p(3, a - Exponent(1)) + p(6, a - Exponent(1))) +
                       4 * (p(3, a - Exponent(1)) + p(4, a - Exponent(1))) +
                       4 * (p(2, a - Exponent(1)) + p(2, 2 * (a - Exponent(1)))) +
                       border * (p(2, 2 * a) + 4 * (p(4, a - Exponent(1)) + p(6, a - Exponent(1))));
            case Kind::general_randic:
                return hexes * p(6, 2 * a) + 4 * p(2, 3 * a) +
                       border * p(2, 4 * a + Exponent(1)) + 2 * (p(3, a) * p(6, a)) +
                       4 * border * (p(4, a) * p(6, a)) + 4 * (p(3, a) * p(4, a));
            default:
                return exact(Rational(2 * hexes) + Rational(38, 3) * Rational(border) +
                             Rational(70, 3));
        }
    }
    if (spec.boundary == Boundary::cylindrical) {  // triangular cylindrical
        const std::int64_t interior = 3 * m * n - 8 * n;
        switch (index.kind()) {
            case Kind::first_zagreb: return exact(56 * n + 12 * interior);
            case Kind::second_zagreb: return exact(128 * n + 36 * interior);
            case Kind::forgotten: return exact(272 * n + 72 * interior);
            case Kind::redefined_zagreb: return exact(1216 * n + 432 * interior);
            case Kind::general_first_zagreb:
                return n * p(2, 2 * a) +
                       4 * n * (p(4, a - Exponent(1)) + p(6, a - Exponent(1))) +
                       2 * interior * p(6, a - Exponent(1));
            case Kind::general_randic:
                return n * p(2, 4 * a + Exponent(1)) + 4 * n * (p(4, a) * p(6, a)) +
                       interior * p(6, 2 * a);
            default:
                return exact(Rational(38, 3) * Rational(n) + Rational(2 * interior));
        }
    }
    // triangular toroidal
    switch (index.kind()) {
        case Kind::first_zagreb: return exact(36 * m * n);
        case Kind::second_zagreb: return exact(18 * m * n);  // printed value; fails the oracle
        case Kind::forgotten: return exact(216 * m * n);
        case Kind::redefined_zagreb: return exact(1296 * m * n);
        case Kind::general_first_zagreb: return 6 * m * n * p(6, a - Exponent(1));
        case Kind::general_randic: return 3 * m * n * p(6, 2 * a);
        default: return exact(6 * m * n);
    }
}

}  // namespace zag
