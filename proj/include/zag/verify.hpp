#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "zag/graph.hpp"
#include "zag/index.hpp"
#include "zag/lattice.hpp"
#include "zag/value.hpp"

namespace zag {

enum class CheckKind { partition, theorem, corollary, reduction_identity };

inline const char* check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::partition: return "partition";
        case CheckKind::theorem: return "theorem";
        case CheckKind::corollary: return "corollary";
        default: return "reduction-identity";
    }
}

/// One comparison between two routes to the same quantity. For numeric
/// checks lhs is the formula under test and rhs the oracle; for partition
/// checks both sides are edge partitions.
struct VerificationRecord {
    std::optional<LatticeSpec> spec;  // absent for checks on arbitrary graphs
    CheckKind kind = CheckKind::partition;
    std::string subject;
    std::variant<IndexValue, EdgePartition> lhs;
    std::variant<IndexValue, EdgePartition> rhs;
    bool match = false;
    double abs_diff = 0.0;  // numeric checks only
    double rel_diff = 0.0;
    bool expected_erratum = false;

    std::string lhs_str() const { return side_str(lhs); }
    std::string rhs_str() const { return side_str(rhs); }

private:
    static std::string side_str(const std::variant<IndexValue, EdgePartition>& side) {
        if (std::holds_alternative<IndexValue>(side)) {
            return std::get<IndexValue>(side).str();
        }
        return std::get<EdgePartition>(side).str();
    }
};

/// Entries where two partitions disagree, as (degree pair, lhs count, rhs count).
inline std::vector<std::tuple<EdgePartition::Key, std::int64_t, std::int64_t>>
partition_diff(const EdgePartition& lhs, const EdgePartition& rhs) {
    std::set<EdgePartition::Key> keys;
    for (const auto& [key, count] : lhs.entries()) {
        keys.insert(key);
    }
    for (const auto& [key, count] : rhs.entries()) {
        keys.insert(key);
    }
    std::vector<std::tuple<EdgePartition::Key, std::int64_t, std::int64_t>> diff;
    for (const auto& key : keys) {
        const auto l = lhs.count(key.first, key.second);
        const auto r = rhs.count(key.first, key.second);
        if (l != r) {
            diff.emplace_back(key, l, r);
        }
    }
    return diff;
}

namespace detail {

inline const char* table_subject(const LatticeSpec& spec) {
    if (spec.family == Family::hexagonal) {
        switch (spec.boundary) {
            case Boundary::free: return "table2";
            case Boundary::cylindrical: return "table3";
            default: return "table4";
        }
    }
    switch (spec.boundary) {
        case Boundary::free: return "table5";
        case Boundary::cylindrical: return "table6";
        default: return "table7";
    }
}

inline int formula_number(const LatticeSpec& spec) {
    if (spec.family == Family::hexagonal) {
        switch (spec.boundary) {
            case Boundary::free: return 1;
            case Boundary::cylindrical: return 2;
            default: return 3;
        }
    }
    switch (spec.boundary) {
        case Boundary::free: return 4;
        case Boundary::cylindrical: return 5;
        default: return 6;
    }
}

inline const char* corollary_item(DerivedIndex::Kind kind) {
    using Kind = DerivedIndex::Kind;
    switch (kind) {
        case Kind::first_zagreb: return "i";
        case Kind::second_zagreb: return "ii";
        case Kind::forgotten: return "iii";
        case Kind::redefined_zagreb: return "iv";
        case Kind::general_first_zagreb: return "v";
        case Kind::general_randic: return "vi";
        default: return "vii";
    }
}

inline VerificationRecord compare_values(std::optional<LatticeSpec> spec, CheckKind kind,
                                         std::string subject, IndexValue lhs, IndexValue rhs,
                                         double tolerance) {
    VerificationRecord record;
    record.spec = spec;
    record.kind = kind;
    record.subject = std::move(subject);
    record.abs_diff = std::fabs(lhs.as_double() - rhs.as_double());
    record.rel_diff = relative_difference(lhs, rhs);
    if (lhs.is_exact() && rhs.is_exact()) {
        record.match = lhs.exact_value() == rhs.exact_value();
    } else {
        record.match = record.rel_diff <= tolerance;
    }
    record.lhs = std::move(lhs);
    record.rhs = std::move(rhs);
    return record;
}

}  // namespace detail

/// Generated-graph degree census vs the published partition table.
inline VerificationRecord verify_partition(const LatticeSpec& spec) {
    VerificationRecord record;
    record.spec = spec;
    record.kind = CheckKind::partition;
    record.subject = detail::table_subject(spec);
    EdgePartition actual = generate(spec).degree_pair_partition();
    EdgePartition expected = expected_partition(spec);
    record.match = actual == expected;
    record.lhs = std::move(actual);
    record.rhs = std::move(expected);
    return record;
}

/// Closed form vs the brute-force oracle at one exponent pair. Exact
/// comparison when both exponents are integers, relative tolerance otherwise.
inline VerificationRecord verify_theorem(const LatticeSpec& spec, const Exponents& e,
                                         double tolerance = 1e-9) {
    std::string subject = "theorem" + std::to_string(detail::formula_number(spec)) + "(a=" +
                          e.a.str() + ",b=" + e.b.str() + ")";
    return detail::compare_values(spec, CheckKind::theorem, std::move(subject),
                                  closed_form(spec, e), general_zagreb(generate(spec), e),
                                  tolerance);
}

/// All specialized-index formulas for one lattice vs the brute-force-derived
/// values. The parametric entries are probed at a = 3, and the Randic entry
/// additionally at a = -1.
inline std::vector<VerificationRecord> verify_corollaries(const LatticeSpec& spec,
                                                          double tolerance = 1e-9) {
    const Graph g = generate(spec);
    const int number = detail::formula_number(spec);
    std::vector<VerificationRecord> records;
    records.reserve(8);

    const auto check = [&](const DerivedIndex& index, const std::string& probe) {
        std::string subject = "corollary" + std::to_string(number) + "." +
                              detail::corollary_item(index.kind()) + probe;
        records.push_back(detail::compare_values(spec, CheckKind::corollary, std::move(subject),
                                                 corollary_value(spec, index),
                                                 derived_index(g, index), tolerance));
    };

    check(DerivedIndex::first_zagreb(), "");
    check(DerivedIndex::second_zagreb(), "");
    check(DerivedIndex::forgotten(), "");
    check(DerivedIndex::redefined_zagreb(), "");
    check(DerivedIndex::general_first_zagreb(Exponent(3)), "(a=3)");
    check(DerivedIndex::general_randic(Exponent(3)), "(a=3)");
    check(DerivedIndex::general_randic(Exponent(-1)), "(a=-1)");
    check(DerivedIndex::symmetric_division(), "");
    return records;
}

/// Direct vertex-sum / edge-sum definitions vs their Z_{a,b} reductions on
/// one graph. Everything here is exact arithmetic.
inline std::vector<VerificationRecord> verify_reduction_identities(
    const Graph& g, std::optional<LatticeSpec> spec = std::nullopt) {
    std::vector<VerificationRecord> records;
    records.reserve(10);
    const auto check = [&](std::string subject, IndexValue direct, IndexValue reduced) {
        records.push_back(detail::compare_values(spec, CheckKind::reduction_identity,
                                                 std::move(subject), std::move(direct),
                                                 std::move(reduced), 0.0));
    };

    check("identity.m1.vertex-vs-edge", first_zagreb_vertex_sum(g), first_zagreb_edge_sum(g));
    check("identity.f.vertex-vs-edge", forgotten_vertex_sum(g), forgotten_edge_sum(g));
    check("reduction.m1", first_zagreb_vertex_sum(g),
          derived_index(g, DerivedIndex::first_zagreb()));
    check("reduction.m2", second_zagreb_edge_sum(g),
          derived_index(g, DerivedIndex::second_zagreb()));
    check("reduction.f", forgotten_vertex_sum(g), derived_index(g, DerivedIndex::forgotten()));
    check("reduction.rezm", redefined_zagreb_edge_sum(g),
          derived_index(g, DerivedIndex::redefined_zagreb()));
    check("reduction.sdd", symmetric_division_edge_sum(g),
          derived_index(g, DerivedIndex::symmetric_division()));
    check("reduction.m_alpha(a=3)", general_first_zagreb_vertex_sum(g, Exponent(3)),
          derived_index(g, DerivedIndex::general_first_zagreb(Exponent(3))));
    check("reduction.randic(a=3)", general_randic_edge_sum(g, Exponent(3)),
          derived_index(g, DerivedIndex::general_randic(Exponent(3))));
    check("reduction.randic(a=-1)", general_randic_edge_sum(g, Exponent(-1)),
          derived_index(g, DerivedIndex::general_randic(Exponent(-1))));
    return records;
}

/// Subjects whose mismatch against the oracle is a known published erratum.
/// Kept in sync with data/errata.json; anything outside this set failing a
/// sweep is treated as a bug.
inline const std::set<std::string>& default_errata() {
    static const std::set<std::string> errata = {"corollary6.ii"};
    return errata;
}

/// Subject with any "(...)" probe suffix stripped; the stable identifier
/// used for summaries and the erratum allowlist.
inline std::string subject_base(const std::string& subject) {
    const auto paren = subject.find('(');
    return paren == std::string::npos ? subject : subject.substr(0, paren);
}

struct SweepConfig {
    std::vector<FamilyKey> families = all_families();
    int m_lo = 3;
    int m_hi = 8;
    int n_lo = 3;
    int n_hi = 8;
    int integer_exponent_bound = 3;  // checks all integer (a,b) with |a|,|b| <= bound
    std::vector<std::pair<double, double>> real_exponent_samples = {
        {0.5, -0.5}, {1.5, 2.5}, {-0.5, -0.5}};
    double tolerance = 1e-9;
    std::set<std::string> allowed_mismatch_subjects = default_errata();
    unsigned threads = 0;  // 0 = automatic; capped by LATTICE_ZAGREB_THREADS

    /// Throws std::invalid_argument when the configuration is unusable.
    void check() const {
        if (tolerance <= 0.0) {
            throw std::invalid_argument("sweep config: tolerance must be > 0");
        }
        if (integer_exponent_bound < 0) {
            throw std::invalid_argument("sweep config: integer exponent bound must be >= 0");
        }
        if (families.empty()) {
            throw std::invalid_argument("sweep config: no families selected");
        }
        const bool m_nonempty = m_lo <= m_hi;
        const bool n_nonempty = n_lo <= n_hi;
        if ((m_nonempty && m_lo < 3) || (n_nonempty && n_lo < 3)) {
            throw std::invalid_argument("sweep config: m and n ranges must start at >= 3");
        }
    }
};

struct SubjectTally {
    std::int64_t matches = 0;
    std::int64_t mismatches = 0;
    std::int64_t expected_mismatches = 0;
};

struct SweepReport {
    SweepConfig config;
    std::vector<VerificationRecord> records;
    std::map<std::string, SubjectTally> summary;  // keyed by subject_base
    std::int64_t total_matches = 0;
    std::int64_t total_mismatches = 0;
    std::int64_t unexpected_mismatches = 0;

    bool clean() const { return unexpected_mismatches == 0; }
};

namespace detail {

inline unsigned sweep_thread_count(const SweepConfig& cfg, std::size_t tasks) {
    unsigned threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
    if (const char* env = std::getenv("LATTICE_ZAGREB_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed > 0) {
            threads = std::min<unsigned>(threads != 0 ? threads : static_cast<unsigned>(parsed),
                                         static_cast<unsigned>(parsed));
        }
    }
    if (threads == 0) {
        threads = 1;
    }
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks, 1)));
}

}  // namespace detail

/// Runs partition, theorem and corollary checks over the configured grid.
/// Grid points are evaluated in parallel; the report order is fixed as
/// (family, m, n, check kind, subject) regardless of thread count.
inline SweepReport run_sweep(const SweepConfig& cfg) {
    cfg.check();

    std::vector<LatticeSpec> points;
    for (const auto& key : cfg.families) {
        for (int m = cfg.m_lo; m <= cfg.m_hi; ++m) {
            for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
                points.push_back(LatticeSpec{key.family, key.boundary, m, n});
            }
        }
    }

    std::vector<std::vector<VerificationRecord>> per_point(points.size());
    const auto evaluate_point = [&cfg](const LatticeSpec& spec) {
        std::vector<VerificationRecord> records;
        records.push_back(verify_partition(spec));
        const Graph g = generate(spec);
        const int bound = cfg.integer_exponent_bound;
        const std::string theorem = "theorem" + std::to_string(detail::formula_number(spec));
        for (int a = -bound; a <= bound; ++a) {
            for (int b = -bound; b <= bound; ++b) {
                const Exponents e{Exponent(a), Exponent(b)};
                records.push_back(detail::compare_values(
                    spec, CheckKind::theorem,
                    theorem + "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")",
                    closed_form(spec, e), general_zagreb(g, e), cfg.tolerance));
            }
        }
        for (const auto& [a, b] : cfg.real_exponent_samples) {
            const Exponents e{Exponent(a), Exponent(b)};
            records.push_back(detail::compare_values(
                spec, CheckKind::theorem,
                theorem + "(a=" + Exponent(a).str() + ",b=" + Exponent(b).str() + ")",
                closed_form(spec, e), general_zagreb(g, e), cfg.tolerance));
        }
        for (auto& record : verify_corollaries(spec, cfg.tolerance)) {
            records.push_back(std::move(record));
        }
        return records;
    };

    const unsigned threads = detail::sweep_thread_count(cfg, points.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            per_point[i] = evaluate_point(points[i]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= points.size()) {
                        return;
                    }
                    per_point[i] = evaluate_point(points[i]);
                }
            });
        }
        for (auto& worker : pool) {
            worker.join();
        }
    }

    SweepReport report;
    report.config = cfg;
    for (auto& records : per_point) {
        for (auto& record : records) {
            record.expected_erratum =
                !record.match &&
                cfg.allowed_mismatch_subjects.count(subject_base(record.subject)) > 0;
            auto& tally = report.summary[subject_base(record.subject)];
            if (record.match) {
                ++tally.matches;
                ++report.total_matches;
            } else {
                ++tally.mismatches;
                ++report.total_mismatches;
                if (record.expected_erratum) {
                    ++tally.expected_mismatches;
                } else {
                    ++report.unexpected_mismatches;
                }
            }
            report.records.push_back(std::move(record));
        }
    }
    return report;
}

// Report serialization. Both formats carry the run configuration (never
// wall-clock data), every record, and the per-subject summary, so reruns
// with the same configuration are byte-identical.

namespace detail {

inline std::string config_line(const SweepConfig& cfg) {
    std::string families;
    for (const auto& key : cfg.families) {
        if (!families.empty()) {
            families += '+';
        }
        families += std::string(family_name(key.family)) + ":" + boundary_name(key.boundary);
    }
    std::string reals;
    for (const auto& [a, b] : cfg.real_exponent_samples) {
        if (!reals.empty()) {
            reals += ';';
        }
        reals += "(" + format_double(a) + "," + format_double(b) + ")";
    }
    std::string allow;
    for (const auto& subject : cfg.allowed_mismatch_subjects) {
        if (!allow.empty()) {
            allow += ';';
        }
        allow += subject;
    }
    return "families=" + families + " m=" + std::to_string(cfg.m_lo) + ".." +
           std::to_string(cfg.m_hi) + " n=" + std::to_string(cfg.n_lo) + ".." +
           std::to_string(cfg.n_hi) + " int-box=" +
           std::to_string(cfg.integer_exponent_bound) + " real-pairs=" +
           (reals.empty() ? "none" : reals) + " tol=" + format_double(cfg.tolerance) +
           " errata=" + (allow.empty() ? "none" : allow);
}

inline const char* verdict_str(const VerificationRecord& record) {
    if (record.match) {
        return "match";
    }
    return record.expected_erratum ? "mismatch-expected" : "mismatch";
}

}  // namespace detail

inline void write_csv(const SweepReport& report, std::ostream& out) {
    out << "# lattice-zagreb sweep report\n";
    out << "# " << detail::config_line(report.config) << '\n';
    out << "family,boundary,m,n,check_kind,subject,lhs,rhs,verdict,rel_diff\n";
    for (const auto& record : report.records) {
        if (record.spec.has_value()) {
            out << family_name(record.spec->family) << ',' << boundary_name(record.spec->boundary)
                << ',' << record.spec->m << ',' << record.spec->n << ',';
        } else {
            out << ",,,,";
        }
        out << check_kind_name(record.kind) << ',' << record.subject << ',' << record.lhs_str()
            << ',' << record.rhs_str() << ',' << detail::verdict_str(record) << ','
            << format_double(record.rel_diff) << '\n';
    }
    out << "# summary matches=" << report.total_matches
        << " mismatches=" << report.total_mismatches
        << " unexpected=" << report.unexpected_mismatches << '\n';
    for (const auto& [subject, tally] : report.summary) {
        if (tally.mismatches > 0) {
            out << "# summary subject=" << subject << " matches=" << tally.matches
                << " mismatches=" << tally.mismatches
                << " expected=" << tally.expected_mismatches << '\n';
        }
    }
}

inline void write_json(const SweepReport& report, std::ostream& out) {
    nlohmann::json doc;
    doc["config"] = {
        {"families", detail::config_line(report.config)},
        {"m_lo", report.config.m_lo},
        {"m_hi", report.config.m_hi},
        {"n_lo", report.config.n_lo},
        {"n_hi", report.config.n_hi},
        {"integer_exponent_bound", report.config.integer_exponent_bound},
        {"tolerance", report.config.tolerance},
        {"errata", std::vector<std::string>(report.config.allowed_mismatch_subjects.begin(),
                                            report.config.allowed_mismatch_subjects.end())},
    };
    auto& records = doc["records"] = nlohmann::json::array();
    for (const auto& record : report.records) {
        nlohmann::json row;
        row["family"] = record.spec ? family_name(record.spec->family) : "";
        row["boundary"] = record.spec ? boundary_name(record.spec->boundary) : "";
        row["m"] = record.spec ? record.spec->m : 0;
        row["n"] = record.spec ? record.spec->n : 0;
        row["check_kind"] = check_kind_name(record.kind);
        row["subject"] = record.subject;
        row["lhs"] = record.lhs_str();
        row["rhs"] = record.rhs_str();
        row["verdict"] = record.match ? "match" : "mismatch";
        row["expected_erratum"] = record.expected_erratum;
        row["rel_diff"] = record.rel_diff;
        records.push_back(std::move(row));
    }
    auto& summary = doc["summary"];
    summary["matches"] = report.total_matches;
    summary["mismatches"] = report.total_mismatches;
    summary["unexpected_mismatches"] = report.unexpected_mismatches;
    auto& subjects = summary["subjects"] = nlohmann::json::object();
    for (const auto& [subject, tally] : report.summary) {
        subjects[subject] = {{"matches", tally.matches},
                             {"mismatches", tally.mismatches},
                             {"expected_mismatches", tally.expected_mismatches}};
    }
    out << doc.dump(2) << '\n';
}

/// Umbrella check for one lattice: partition, theorem probes over the
/// integer box and real samples, and all corollary items.
inline std::vector<VerificationRecord> verify_lattice(const LatticeSpec& spec,
                                                      int integer_exponent_bound = 3,
                                                      double tolerance = 1e-9) {
    SweepConfig cfg;
    cfg.families = {{spec.family, spec.boundary}};
    cfg.m_lo = cfg.m_hi = spec.m;
    cfg.n_lo = cfg.n_hi = spec.n;
    cfg.integer_exponent_bound = integer_exponent_bound;
    cfg.tolerance = tolerance;
    cfg.threads = 1;
    return run_sweep(cfg).records;
}

}  // namespace zag
