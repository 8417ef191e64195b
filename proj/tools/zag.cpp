// Command-line front end: lattice generation, index evaluation and
// formula verification.
//
// Exit codes: 0 success (and, for verify/sweep, no unexpected mismatch),
// 1 unexpected mismatch, 2 usage/syntax/config error, 3 size outside the
// validity domain, 4 I/O failure, 5 exponent error.

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zag/zag.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;
constexpr int kExitExponent = 5;

class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

zag::Exponent parse_exponent(const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const long long as_int = std::strtoll(text.c_str(), &end, 10);
    if (errno == 0 && end != text.c_str() && *end == '\0') {
        return zag::Exponent(static_cast<std::int64_t>(as_int));
    }
    errno = 0;
    const double as_real = std::strtod(text.c_str(), &end);
    if (errno == 0 && end != text.c_str() && *end == '\0') {
        return zag::Exponent(as_real);
    }
    throw CliError(kExitExponent, "unparseable exponent '" + text + "'");
}

zag::LatticeSpec parse_spec_arg(const std::string& text) {
    try {
        const zag::LatticeSpec spec = zag::parse_lattice_spec(text);
        zag::validate(spec);
        return spec;
    } catch (const zag::SpecSyntaxError& e) {
        throw CliError(kExitUsage, e.what());
    } catch (const std::domain_error& e) {
        throw CliError(kExitDomain, e.what());
    }
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    const auto parse_int = [&](const std::string& s) {
        errno = 0;
        char* end = nullptr;
        const long v = std::strtol(s.c_str(), &end, 10);
        if (errno != 0 || end == s.c_str() || *end != '\0') {
            throw CliError(kExitUsage, "bad range '" + text + "', expected <lo>..<hi>");
        }
        return static_cast<int>(v);
    };
    if (dots == std::string::npos) {
        const int v = parse_int(text);
        return {v, v};
    }
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

std::vector<zag::FamilyKey> parse_families(const std::string& text) {
    std::vector<zag::FamilyKey> keys;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) {
            continue;
        }
        bool known = false;
        for (const auto& key : zag::all_families()) {
            const std::string full =
                std::string(zag::family_name(key.family)) + ":" + zag::boundary_name(key.boundary);
            if (token == full || token == zag::family_name(key.family)) {
                keys.push_back(key);
                known = true;
            }
        }
        if (!known) {
            throw CliError(kExitUsage, "unknown family '" + token +
                                           "', expected hex, tri or <family>:<boundary>");
        }
    }
    if (keys.empty()) {
        throw CliError(kExitUsage, "no families selected");
    }
    return keys;
}

std::vector<std::pair<double, double>> parse_real_pairs(const std::string& text) {
    std::vector<std::pair<double, double>> pairs;
    if (text == "none") {
        return pairs;
    }
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ';')) {
        if (token.empty()) {
            continue;
        }
        const auto comma = token.find(',');
        if (comma == std::string::npos) {
            throw CliError(kExitUsage, "bad real pair '" + token + "', expected <a>,<b>");
        }
        errno = 0;
        char* end = nullptr;
        const std::string a_str = token.substr(0, comma);
        const std::string b_str = token.substr(comma + 1);
        const double a = std::strtod(a_str.c_str(), &end);
        if (errno != 0 || end == a_str.c_str() || *end != '\0') {
            throw CliError(kExitUsage, "bad real pair '" + token + "'");
        }
        const double b = std::strtod(b_str.c_str(), &end);
        if (errno != 0 || end == b_str.c_str() || *end != '\0') {
            throw CliError(kExitUsage, "bad real pair '" + token + "'");
        }
        pairs.emplace_back(a, b);
    }
    return pairs;
}

std::set<std::string> load_errata(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw CliError(kExitUsage, "cannot read errata file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw CliError(kExitUsage, "bad errata file '" + path + "': " + e.what());
    }
    std::set<std::string> subjects;
    const auto add_entry = [&subjects, &path](const nlohmann::json& entry) {
        if (entry.is_string()) {
            subjects.insert(entry.get<std::string>());
        } else if (entry.is_object() && entry.contains("subject")) {
            subjects.insert(entry.at("subject").get<std::string>());
        } else {
            throw CliError(kExitUsage, "bad errata entry in '" + path + "'");
        }
    };
    if (doc.is_array()) {
        for (const auto& entry : doc) {
            add_entry(entry);
        }
    } else if (doc.is_object() && doc.contains("allowed")) {
        for (const auto& entry : doc.at("allowed")) {
            add_entry(entry);
        }
    } else {
        throw CliError(kExitUsage, "errata file '" + path + "' must be a list or {allowed: [...]}");
    }
    return subjects;
}

/// Output sink: '-' means stdout.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) {
                throw CliError(kExitIo, "cannot open '" + path + "' for writing");
            }
            path_ = path;
        }
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

    void finish() {
        stream().flush();
        if (file_ && !*file_) {
            throw CliError(kExitIo, "writing '" + path_ + "' failed");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::string path_;
};

struct GenOptions {
    std::string spec;
    std::string output = "-";
    std::string format = "edgelist";
};

int run_gen(const GenOptions& opt) {
    const zag::LatticeSpec spec = parse_spec_arg(opt.spec);
    const zag::Graph g = zag::generate(spec);
    OutputTarget target(opt.output);
    if (opt.format == "edgelist") {
        zag::write_edge_list(g, target.stream());
    } else {
        nlohmann::json doc;
        doc["vertices"] = g.vertex_count();
        auto& edges = doc["edges"] = nlohmann::json::array();
        for (const auto& [u, v] : g.edges()) {
            edges.push_back({u, v});
        }
        target.stream() << doc.dump(2) << '\n';
    }
    target.finish();
    return 0;
}

struct PartitionOptions {
    std::string spec;
    bool expected = false;
};

int run_partition(const PartitionOptions& opt) {
    const zag::LatticeSpec spec = parse_spec_arg(opt.spec);
    const zag::EdgePartition actual = zag::generate(spec).degree_pair_partition();
    if (!opt.expected) {
        for (const auto& [key, count] : actual.entries()) {
            std::cout << '(' << key.first << ',' << key.second << ") " << count << '\n';
        }
        return 0;
    }
    const zag::EdgePartition expected = zag::expected_partition(spec);
    std::set<zag::EdgePartition::Key> keys;
    for (const auto& [key, count] : actual.entries()) {
        keys.insert(key);
    }
    for (const auto& [key, count] : expected.entries()) {
        keys.insert(key);
    }
    bool all_match = true;
    for (const auto& key : keys) {
        const auto got = actual.count(key.first, key.second);
        const auto want = expected.count(key.first, key.second);
        const bool match = got == want;
        all_match = all_match && match;
        std::cout << '(' << key.first << ',' << key.second << ") " << got << ' ' << want << ' '
                  << (match ? "match" : "MISMATCH") << '\n';
    }
    return all_match ? 0 : kExitMismatch;
}

struct IndexOptions {
    std::string source;
    std::string a;
    std::string b;
    std::string derived;
    std::string alpha;
};

zag::DerivedIndex parse_derived(const std::string& name, const std::string& alpha_text) {
    const auto need_alpha = [&]() {
        if (alpha_text.empty()) {
            throw CliError(kExitExponent, "--derived " + name + " requires --alpha");
        }
        return parse_exponent(alpha_text);
    };
    try {
        if (name == "m1") return zag::DerivedIndex::first_zagreb();
        if (name == "m2") return zag::DerivedIndex::second_zagreb();
        if (name == "f") return zag::DerivedIndex::forgotten();
        if (name == "rezm") return zag::DerivedIndex::redefined_zagreb();
        if (name == "sdd") return zag::DerivedIndex::symmetric_division();
        if (name == "m_alpha") return zag::DerivedIndex::general_first_zagreb(need_alpha());
        if (name == "randic") return zag::DerivedIndex::general_randic(need_alpha());
    } catch (const std::invalid_argument& e) {
        throw CliError(kExitExponent, e.what());
    }
    throw CliError(kExitUsage, "unknown derived index '" + name +
                                   "', expected m1|m2|f|rezm|m_alpha|randic|sdd");
}

int run_index(const IndexOptions& opt) {
    const bool has_ab = !opt.a.empty() || !opt.b.empty();
    const bool has_derived = !opt.derived.empty();
    if (has_ab == has_derived) {
        throw CliError(kExitUsage, "need either both --a and --b, or --derived");
    }
    if (has_ab && (opt.a.empty() || opt.b.empty())) {
        throw CliError(kExitUsage, "--a and --b must be given together");
    }

    // Spec strings always contain ':'; anything else is an edge-list path.
    std::optional<zag::LatticeSpec> spec;
    std::optional<zag::Graph> graph;
    if (opt.source.find(':') != std::string::npos) {
        spec = parse_spec_arg(opt.source);
    } else {
        std::ifstream in(opt.source, std::ios::binary);
        if (!in) {
            throw CliError(kExitIo, "cannot open '" + opt.source + "'");
        }
        try {
            graph = zag::read_edge_list(in);
        } catch (const zag::EdgeListParseError& e) {
            throw CliError(kExitUsage, e.what());
        }
    }

    zag::IndexValue value;
    if (has_ab) {
        const zag::Exponents e{parse_exponent(opt.a), parse_exponent(opt.b)};
        value = spec ? zag::closed_form(*spec, e) : zag::general_zagreb(*graph, e);
    } else {
        const zag::DerivedIndex index = parse_derived(opt.derived, opt.alpha);
        value = spec ? zag::derived_index(*spec, index) : zag::derived_index(*graph, index);
    }
    std::cout << value.str() << '\n';
    return 0;
}

struct VerifyOptions {
    std::string spec;
    int int_box = 3;
    double tol = 1e-9;
    std::string errata;
};

int run_verify(const VerifyOptions& opt) {
    if (opt.tol <= 0.0) {
        throw CliError(kExitUsage, "--tol must be > 0");
    }
    const zag::LatticeSpec spec = parse_spec_arg(opt.spec);
    const std::set<std::string> allowed =
        opt.errata.empty() ? zag::default_errata() : load_errata(opt.errata);

    const auto records = zag::verify_lattice(spec, opt.int_box, opt.tol);
    std::int64_t unexpected = 0;
    std::int64_t expected = 0;
    std::int64_t matches = 0;
    for (const auto& record : records) {
        if (record.match) {
            ++matches;
            continue;
        }
        const bool allowlisted = allowed.count(zag::subject_base(record.subject)) > 0;
        if (allowlisted) {
            ++expected;
        } else {
            ++unexpected;
        }
        std::cout << (allowlisted ? "[expected-erratum] " : "[MISMATCH] ") << record.subject
                  << ": formula=" << record.lhs_str() << " oracle=" << record.rhs_str() << '\n';
        if (record.kind == zag::CheckKind::partition) {
            const auto diff = zag::partition_diff(std::get<zag::EdgePartition>(record.lhs),
                                                  std::get<zag::EdgePartition>(record.rhs));
            for (const auto& [key, lhs, rhs] : diff) {
                std::cout << "    (" << key.first << ',' << key.second << "): generated " << lhs
                          << ", table " << rhs << '\n';
            }
        }
    }
    std::cout << zag::to_string(spec) << ": " << records.size() << " checks, " << matches
              << " match, " << expected << " expected mismatch, " << unexpected
              << " unexpected mismatch\n";
    return unexpected == 0 ? 0 : kExitMismatch;
}

struct SweepOptions {
    std::string families;
    std::string m_range = "3..8";
    std::string n_range = "3..8";
    int int_box = 3;
    std::string real_pairs;
    double tol = 1e-9;
    std::string report = "-";
    std::string format = "csv";
    std::string errata;
};

int run_sweep_cmd(const SweepOptions& opt) {
    zag::SweepConfig cfg;
    if (!opt.families.empty()) {
        cfg.families = parse_families(opt.families);
    }
    std::tie(cfg.m_lo, cfg.m_hi) = parse_range(opt.m_range);
    std::tie(cfg.n_lo, cfg.n_hi) = parse_range(opt.n_range);
    cfg.integer_exponent_bound = opt.int_box;
    if (!opt.real_pairs.empty()) {
        cfg.real_exponent_samples = parse_real_pairs(opt.real_pairs);
    }
    cfg.tolerance = opt.tol;
    if (!opt.errata.empty()) {
        cfg.allowed_mismatch_subjects = load_errata(opt.errata);
    }
    try {
        cfg.check();
    } catch (const std::invalid_argument& e) {
        throw CliError(kExitUsage, e.what());
    }

    const zag::SweepReport report = zag::run_sweep(cfg);

    OutputTarget target(opt.report);
    if (opt.format == "csv") {
        zag::write_csv(report, target.stream());
    } else {
        zag::write_json(report, target.stream());
    }
    target.finish();

    std::cerr << "sweep: " << report.records.size() << " checks, " << report.total_matches
              << " matches, " << report.total_mismatches << " mismatches ("
              << report.total_mismatches - report.unexpected_mismatches
              << " expected errata), " << report.unexpected_mismatches << " unexpected\n";
    return report.clean() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice-network generator and (a,b)-Zagreb index calculator"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a lattice and write it out");
    gen_cmd->add_option("spec", gen.spec, "Lattice spec, e.g. hex:torus:4x5")->required();
    gen_cmd->add_option("-o,--output", gen.output, "Output path ('-' = stdout)");
    gen_cmd->add_option("--format", gen.format, "edgelist or json")
        ->check(CLI::IsMember({"edgelist", "json"}));

    PartitionOptions partition;
    auto* partition_cmd =
        app.add_subcommand("partition", "Print the degree-pair edge partition");
    partition_cmd->add_option("spec", partition.spec, "Lattice spec")->required();
    partition_cmd->add_flag("--expected", partition.expected,
                            "Also print the table value and a match column");

    IndexOptions index;
    auto* index_cmd = app.add_subcommand("index", "Evaluate an index");
    index_cmd->add_option("source", index.source, "Lattice spec or edge-list file")->required();
    index_cmd->add_option("--a", index.a, "First exponent");
    index_cmd->add_option("--b", index.b, "Second exponent");
    index_cmd->add_option("--derived", index.derived, "m1|m2|f|rezm|m_alpha|randic|sdd");
    index_cmd->add_option("--alpha", index.alpha, "Exponent for m_alpha/randic");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check one lattice against its formulas");
    verify_cmd->add_option("spec", verify.spec, "Lattice spec")->required();
    verify_cmd->add_option("--int-box", verify.int_box, "Integer exponent bound");
    verify_cmd->add_option("--tol", verify.tol, "Relative tolerance for real exponents");
    verify_cmd->add_option("--errata", verify.errata, "Erratum allowlist JSON file");

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run verification over a parameter grid");
    sweep_cmd->add_option("--families", sweep.families, "Comma list: hex, tri or hex:free, ...");
    sweep_cmd->add_option("--m", sweep.m_range, "m range lo..hi (default 3..8)");
    sweep_cmd->add_option("--n", sweep.n_range, "n range lo..hi (default 3..8)");
    sweep_cmd->add_option("--int-box", sweep.int_box, "Integer exponent bound (default 3)");
    sweep_cmd->add_option("--real-pairs", sweep.real_pairs,
                          "Real exponent pairs 'a,b;a,b' or 'none'");
    sweep_cmd->add_option("--tol", sweep.tol, "Relative tolerance (default 1e-9)");
    sweep_cmd->add_option("--report", sweep.report, "Report path ('-' = stdout)");
    sweep_cmd->add_option("--format", sweep.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--errata", sweep.errata, "Erratum allowlist JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            return run_gen(gen);
        }
        if (partition_cmd->parsed()) {
            return run_partition(partition);
        }
        if (index_cmd->parsed()) {
            return run_index(index);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify);
        }
        return run_sweep_cmd(sweep);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code();
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
