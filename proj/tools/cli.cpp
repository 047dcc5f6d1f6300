#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "votelace/domains.hpp"
#include "votelace/election.hpp"
#include "votelace/enumeration.hpp"
#include "votelace/guard.hpp"
#include "votelace/pair_pattern.hpp"
#include "votelace/permutation.hpp"
#include "votelace/verify.hpp"

namespace votelace::cli {

namespace {

/// Raised for input problems detected by the front end itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// An existing file is read as election text; anything else is parsed inline.
Election election_argument(const std::string& text) {
    std::error_code ec;
    if (text == "-" || std::filesystem::is_regular_file(text, ec)) return parse_election(read_source(text));
    return parse_inline_election(text);
}

template <typename T>
std::string brace_list(const std::vector<T>& items) {
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(items[i]);
    }
    return out + '}';
}

Domain domain_argument(const std::string& name) {
    if (auto d = parse_domain(name)) return *d;
    std::string known;
    for (auto d : all_domains()) known += (known.empty() ? "" : ", ") + std::string(domain_name(d));
    throw UsageError("unknown domain '" + name + "' (expected one of " + known + ")");
}

// Integers below 2^53 survive the long double evaluation with room to spare.
constexpr long double kExactFloatCeiling = 9007199254740992.0L;

CountReport formula_count(std::size_t m, std::size_t n) {
    const std::string label(domain_name(Domain::enriched));
    if (m >= 3 && m <= 5) {
        const auto which = m == 3 ? CorollaryFormula::f3 : m == 4 ? CorollaryFormula::f4 : CorollaryFormula::f5;
        return CountReport{m, n, label, corollary_value(which, n), CountMethod::formula};
    }
    if (n == 2) {
        if (corollary_fm2_unrounded(m) >= kExactFloatCeiling) {
            throw UsageError("fm2 is not exact at m = " + std::to_string(m) + "; use --method recurrence");
        }
        return CountReport{m, n, label, corollary_value(CorollaryFormula::fm2, m), CountMethod::formula};
    }
    const long double value = f_r_closed(m, n);
    if (value >= kExactFloatCeiling) {
        throw UsageError("closed form is not exact at (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
                         "); use --method recurrence");
    }
    const BigInt rounded(static_cast<unsigned long long>(std::llround(value)));
    return CountReport{m, n, label, factorial(m) * rounded, CountMethod::closed_form};
}

struct Options {
    unsigned jobs = 1;
    std::uint64_t seed = kDefaultSeed;
    bool allow_m7 = false;
    std::optional<std::uint64_t> guard;

    std::string check_file;
    std::string check_domain;

    std::size_t m = 0;
    std::size_t n = 0;
    std::string count_domain;
    std::string count_method = "brute";

    std::string kind;
    std::string small;
    std::string big;
    bool witness = false;

    std::string suite;

    std::string pi = "single-crossing";
};

ExhaustionLimits make_limits(const Options& o) {
    ExhaustionLimits limits = limits_from_environment();
    if (o.guard) limits.max_elections = *o.guard;
    limits.allow_pair_length_7 = o.allow_m7;
    limits.jobs = std::max(1u, o.jobs);
    return limits;
}

int do_check(const Options& o, std::ostream& out) {
    const auto domain = domain_argument(o.check_domain);
    const auto election = parse_election(read_source(o.check_file));
    const auto verdict = check_domain(domain, election, make_limits(o));
    out << format_verdict(domain, verdict);
    return verdict.holds ? kExitOk : kExitFails;
}

int do_count(const Options& o, std::ostream& out) {
    const auto domain = domain_argument(o.count_domain);
    const auto limits = make_limits(o);
    if (o.count_method == "brute") {
        out << brute_force_count(o.m, o.n, domain, limits).to_json() << '\n';
        return kExitOk;
    }
    if (domain != Domain::enriched) {
        throw UsageError("--method " + o.count_method + " is only available for --domain enriched");
    }
    if (o.count_method == "recurrence") {
        const CountReport report{o.m, o.n, std::string(domain_name(domain)), f_count(o.m, o.n),
                                 CountMethod::recurrence};
        out << report.to_json() << '\n';
        return kExitOk;
    }
    out << formula_count(o.m, o.n).to_json() << '\n';
    return kExitOk;
}

int report_bool(bool found, std::ostream& out) {
    out << (found ? "true" : "false") << '\n';
    return found ? kExitOk : kExitFails;
}

int do_contains(const Options& o, std::ostream& out) {
    if (o.kind == "pattern") {
        const auto pattern = Permutation::parse(o.small);
        const auto host = Permutation::parse(o.big);
        std::optional<std::vector<std::size_t>> hit;
        for_each_occurrence(pattern, host, [&](std::span<const std::size_t> positions) {
            hit.emplace(positions.begin(), positions.end());
            return false;
        });
        const int code = report_bool(hit.has_value(), out);
        if (o.witness && hit) out << "witness positions: " << brace_list(*hit) << '\n';
        return code;
    }
    if (o.kind == "pair") {
        const auto small = PairPattern::parse(o.small);
        const auto big = PairPattern::parse(o.big);
        std::optional<std::vector<int>> hit;
        for_each_strong_occurrence(small, big, [&](std::span<const int> values) {
            hit.emplace(values.begin(), values.end());
            return false;
        });
        const int code = report_bool(hit.has_value(), out);
        if (o.witness && hit) out << "witness values: " << brace_list(*hit) << '\n';
        return code;
    }
    if (o.kind == "config") {
        const Configuration cfg(election_argument(o.small));
        const auto election = election_argument(o.big);
        const auto embedding = find_embedding(election, cfg);
        const int code = report_bool(embedding.has_value(), out);
        if (o.witness && embedding) {
            std::vector<std::size_t> voters;
            for (auto v : embedding->voters) voters.push_back(v + 1);
            out << "witness voters: " << brace_list(voters) << '\n';
            out << "witness candidates: " << brace_list(embedding->candidates) << '\n';
        }
        return code;
    }
    if (o.kind == "three-voter") {
        const auto config = PairPattern::parse(o.small);
        const auto election = PairPattern::parse(o.big);
        const auto set = theorem41_pattern_set(config.first(), config.second());
        if (config.size() > election.size()) {
            throw UsageError("the configuration pair is longer than the election pair");
        }
        const auto* matched = first_contained(set, election);
        const int code = report_bool(matched != nullptr, out);
        if (o.witness && matched) {
            const auto values = strong_occurrences(*matched, election);
            out << "witness pattern: " << matched->to_string() << '\n';
            out << "witness values: " << brace_list(values.front()) << '\n';
        }
        return code;
    }
    throw UsageError("unknown --kind '" + o.kind + "'");
}

int do_verify(const Options& o, std::ostream& out) {
    VerifyOptions options;
    options.seed = o.seed;
    options.limits = make_limits(o);
    std::vector<std::string> suites;
    if (o.suite == "all") {
        for (auto s : suite_names()) suites.emplace_back(s);
    } else {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
            throw UsageError("unknown suite '" + o.suite + "'");
        }
        suites.push_back(o.suite);
    }
    bool all_passed = true;
    for (const auto& name : suites) {
        const auto result = run_suite(name, options);
        for (const auto& line : result.lines) out << line << '\n';
        all_passed = all_passed && result.passed;
    }
    return all_passed ? kExitOk : kExitFails;
}

int do_bound(const Options& o, std::ostream& out) {
    PairPatternSet pi;
    std::string label = "bound3:";
    if (o.pi == "single-crossing") {
        pi = single_crossing_pi();
        label += o.pi;
    } else {
        pi = PairPatternSet::parse(read_source(o.pi));
        label += std::filesystem::path(o.pi).filename().string();
    }
    const CountReport report{o.m, o.n, label, upper_bound_3config(o.m, o.n, pi, make_limits(o)),
                             CountMethod::formula};
    out << report.to_json() << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pattern avoidance in permutations and structured elections"};
    app.name("votelace");
    app.require_subcommand(1, 1);
    app.fallthrough();

    Options o;
    app.add_option("--jobs", o.jobs, "Worker threads for partitioned enumeration")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "Seed for randomized verification cases");
    app.add_option("--guard", o.guard, "Cap on elections enumerated by brute force (overrides VOTELACE_GUARD)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--allow-m7", o.allow_m7, "Allow pair enumeration at length 7");

    auto* check = app.add_subcommand("check", "Test an election file against a domain");
    check->add_option("file", o.check_file, "Election file, or - for standard input")->required();
    check->add_option("--domain", o.check_domain, "Domain name")->required();

    auto* count = app.add_subcommand("count", "Count (m,n)-elections in a domain");
    count->add_option("--m", o.m, "Candidates")->required()->check(CLI::PositiveNumber);
    count->add_option("--n", o.n, "Voters")->required()->check(CLI::PositiveNumber);
    count->add_option("--domain", o.count_domain, "Domain name")->required();
    count->add_option("--method", o.count_method, "brute, recurrence or formula")
        ->check(CLI::IsMember({"brute", "recurrence", "formula"}));

    auto* contains = app.add_subcommand("contains", "Pattern and configuration containment");
    contains->add_option("--kind", o.kind, "pattern, pair, config or three-voter")
        ->required()
        ->check(CLI::IsMember({"pattern", "pair", "config", "three-voter"}));
    contains->add_option("small", o.small, "Pattern, pair, configuration or (tau | sigma)")->required();
    contains->add_option("big", o.big, "Host permutation, pair, election or (pi | rho)")->required();
    contains->add_flag("--witness", o.witness, "Print one occurrence");

    auto* verify = app.add_subcommand("verify", "Run a cross-formulation verification suite");
    verify->add_option("--suite", o.suite, "Suite name, or all")->required();

    auto* bound = app.add_subcommand("bound", "Upper bound on elections avoiding a three-voter configuration");
    bound->add_option("--m", o.m, "Candidates")->required()->check(CLI::PositiveNumber);
    bound->add_option("--n", o.n, "Voters")->required()->check(CLI::PositiveNumber);
    bound->add_option("--pi", o.pi, "single-crossing, or a file with one pair per line");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "votelace: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (check->parsed()) return do_check(o, out);
        if (count->parsed()) return do_count(o, out);
        if (contains->parsed()) return do_contains(o, out);
        if (verify->parsed()) return do_verify(o, out);
        return do_bound(o, out);
    } catch (const GuardExceeded& e) {
        err << "votelace: guard exceeded: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "votelace: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "votelace: " << e.what() << '\n';
    } catch (const std::runtime_error& e) {
        err << "votelace: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace votelace::cli
