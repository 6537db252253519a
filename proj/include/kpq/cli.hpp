#pragma once

// Batch command-line front end:
//
//   construct --q Q [--family F] [--partition a,b,c,d] [-o FILE]
//   verify FILE
//   analyze FILE [--suite s=S] [--cover t1,t2,...]...
//   bound --p P --q Q
//   search --p P --q Q (--n N | --max) [--budget B] [--jobs J] [--deterministic] [-o FILE]
//
// Every command accepts --format text|json. Exit codes: 0 success / member /
// SAT, 1 verification failure / UNSAT, 2 argument or input error, 3 search
// budget exhausted.

#include "kpq/analytics.hpp"
#include "kpq/bounds.hpp"
#include "kpq/constructions.hpp"
#include "kpq/report.hpp"
#include "kpq/solver.hpp"
#include "kpq/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace kpq::cli {

enum ExitCode { ok = 0, failure = 1, usage = 2, budget = 3 };

struct CliConfig {
    std::string format = "text";
    // construct
    int q = 0;
    std::string family;
    std::string partition;
    std::string output;
    // verify / analyze
    std::string input;
    std::string suite;
    std::vector<std::string> cover;
    // bound / search
    long long p = 0;
    long long bound_q = 0;
    long long n = 0;
    bool max = false;
    long long budget = -1;
    unsigned jobs = 1;
    bool deterministic = false;
};

namespace detail {

inline ColourMatrix load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw structural_error("cannot open '" + path + "'");
    return read_matrix(in);
}

inline void save(const std::string& path, const ColourMatrix& m)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write '" + path + "'");
    write_matrix(out, m);
}

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    return out;
}

inline int parse_int(const std::string& s, const char* what)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

inline int run_construct(const CliConfig& cfg, std::ostream& out)
{
    ColourMatrix m = [&] {
        if (cfg.family.empty()) {
            if (!cfg.partition.empty())
                throw std::invalid_argument("--partition needs --family block_16_40");
            return construct_best(cfg.q);
        }
        auto fam = parse_family(cfg.family);
        if (!fam)
            throw std::invalid_argument("unknown family '" + cfg.family + "'");
        ConstructionSpec spec{*fam, cfg.q, std::nullopt};
        if (!cfg.partition.empty()) {
            auto parts = split(cfg.partition, ',');
            if (parts.size() != 4)
                throw std::invalid_argument("--partition needs four comma-separated integers");
            Partition pt{};
            for (std::size_t l = 0; l < 4; ++l)
                pt[l] = parse_int(parts[l], "partition entry");
            spec.partition = pt;
        }
        return construct(spec);
    }();
    if (cfg.output.empty())
        write_matrix(out, m);
    else
        save(cfg.output, m);
    return ok;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out)
{
    const auto m = load(cfg.input);
    const auto r = verify_membership(m);
    if (cfg.format == "json")
        out << verification_json(m, r).dump(2) << '\n';
    else
        print_verification(out, m, r);
    return r.member() ? ok : failure;
}

inline int run_analyze(const CliConfig& cfg, std::ostream& out)
{
    const auto m = load(cfg.input);
    std::optional<int> s;
    if (!cfg.suite.empty()) {
        std::string v = cfg.suite;
        if (v.rfind("s=", 0) == 0)
            v = v.substr(2);
        s = parse_int(v, "suite parameter");
    }
    std::vector<std::vector<ColourId>> sets;
    for (const auto& c : cfg.cover) {
        std::vector<ColourId> ids;
        for (const auto& t : split(c, ','))
            ids.push_back(m.palette().id(t));
        sets.push_back(std::move(ids));
    }
    const auto r = compute_stats(m, std::move(sets), s);
    if (cfg.format == "json")
        out << stats_json(m, r).dump(2) << '\n';
    else
        print_stats(out, m, r);
    return ok;
}

inline int run_bound(const CliConfig& cfg, std::ostream& out)
{
    const auto b = bound(cfg.p, cfg.bound_q);
    if (cfg.format == "json")
        out << bound_json(b).dump(2) << '\n';
    else
        print_bound(out, b);
    return ok;
}

inline int run_search(const CliConfig& cfg, std::ostream& out)
{
    if (cfg.p < 1 || cfg.bound_q < 1)
        throw std::invalid_argument("--p and --q must be positive");
    if (cfg.max == (cfg.n != 0))
        throw std::invalid_argument("search needs exactly one of --n N or --max");
    const auto p = static_cast<std::size_t>(cfg.p);
    const auto q = static_cast<std::size_t>(cfg.bound_q);
    std::optional<std::uint64_t> node_budget;
    if (cfg.budget >= 0)
        node_budget = static_cast<std::uint64_t>(cfg.budget);
    const bool deterministic = cfg.deterministic || cfg.jobs <= 1;

    if (cfg.max) {
        auto r = achromatic_exact(p, q, node_budget, deterministic, cfg.jobs);
        if (cfg.format == "json") {
            out << json{{"p", p},
                        {"q", q},
                        {"value", r.value},
                        {"upper_certified", r.upper_certified},
                        {"status", status_name(r.last_status)},
                        {"nodes", r.nodes_explored},
                        {"witness", r.witness ? json(to_text(*r.witness)) : json(nullptr)}}
                       .dump(2)
                << '\n';
        } else {
            out << "achr(K_" << p << " x K_" << q << ") "
                << (r.upper_certified ? "= " : ">= ") << r.value << '\n';
            out << "search: " << status_name(r.last_status) << " at n=" << r.value + 1 << ", " << r.nodes_explored
                << " nodes\n";
            if (r.witness) {
                out << "witness:\n";
                write_matrix(out, *r.witness);
            }
        }
        if (r.witness && !cfg.output.empty())
            save(cfg.output, *r.witness);
        return r.last_status == SearchStatus::budget_exhausted ? budget : ok;
    }

    if (cfg.n < 1)
        throw std::invalid_argument("--n must be positive");
    SearchProblem prob{p, q, static_cast<std::size_t>(cfg.n), node_budget, deterministic, cfg.jobs};
    const auto o = exists_matrix(prob);
    if (cfg.format == "json") {
        out << search_json(prob, o).dump(2) << '\n';
    } else {
        out << status_name(o.status) << " (" << o.nodes_explored << " nodes)\n";
        if (o.witness)
            write_matrix(out, *o.witness);
    }
    if (o.witness && !cfg.output.empty())
        save(cfg.output, *o.witness);
    switch (o.status) {
    case SearchStatus::sat: return ok;
    case SearchStatus::unsat: return failure;
    case SearchStatus::budget_exhausted: return budget;
    }
    return failure;
}

} // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CliConfig cfg;
    CLI::App app{"Complete colourings of K_p x K_q: construct, verify, analyze, bound, search"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* construct_cmd = app.add_subcommand("construct", "Write an optimal colouring matrix for K_6 x K_q");
    construct_cmd->add_option("--q", cfg.q, "Column count")->required();
    construct_cmd->add_option("--family", cfg.family,
                              "base4|base6|base8|block_9_15|even_16plus|block_16_40 (default: best for q)");
    construct_cmd->add_option("--partition", cfg.partition, "r0,r1,r2,r3 for block_16_40");
    construct_cmd->add_option("-o,--output", cfg.output, "Output file (default: stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Certify membership in M(p,q,C)");
    verify_cmd->add_option("file", cfg.input, "Matrix file")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "Frequency, excess and structural statistics");
    analyze_cmd->add_option("file", cfg.input, "Matrix file")->required();
    analyze_cmd->add_option("--suite", cfg.suite, "Run the nine-part frequency suite with |C| = 2q+s (s=S)");
    analyze_cmd->add_option("--cover", cfg.cover, "Comma-separated colour tokens; repeatable");

    auto* bound_cmd = app.add_subcommand("bound", "Achromatic number bounds");
    bound_cmd->add_option("--p", cfg.p, "Row count")->required();
    bound_cmd->add_option("--q", cfg.bound_q, "Column count")->required();

    auto* search_cmd = app.add_subcommand("search", "Exhaustive search at desk scale");
    search_cmd->add_option("--p", cfg.p, "Row count")->required();
    search_cmd->add_option("--q", cfg.bound_q, "Column count")->required();
    auto* n_opt = search_cmd->add_option("--n", cfg.n, "Palette size");
    auto* max_opt = search_cmd->add_flag("--max", cfg.max, "Find the achromatic number");
    n_opt->excludes(max_opt);
    search_cmd->add_option("--budget", cfg.budget, "Node budget");
    search_cmd->add_option("--jobs", cfg.jobs, "Threads for top-level branches");
    search_cmd->add_flag("--deterministic", cfg.deterministic, "Force sequential fixed-order search");
    search_cmd->add_option("-o,--output", cfg.output, "Write the witness here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (*construct_cmd)
            return detail::run_construct(cfg, out);
        if (*verify_cmd)
            return detail::run_verify(cfg, out);
        if (*analyze_cmd)
            return detail::run_analyze(cfg, out);
        if (*bound_cmd)
            return detail::run_bound(cfg, out);
        if (*search_cmd)
            return detail::run_search(cfg, out);
    } catch (const structural_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace kpq::cli
