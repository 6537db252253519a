#pragma once

// JSON and plain-text renderings of verification, statistics and bound
// reports. JSON keys keep insertion order; rows, columns and matrix
// positions are 1-based there, colours appear as their tokens.

#include "kpq/analytics.hpp"
#include "kpq/bounds.hpp"
#include "kpq/solver.hpp"
#include "kpq/verify.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace kpq {

using json = nlohmann::ordered_json;

namespace detail {

inline json tokens_of(const ColourMatrix& m, const std::vector<ColourId>& ids)
{
    json a = json::array();
    for (auto c : ids)
        a.push_back(m.palette().token(c));
    return a;
}

inline json one_based(const std::vector<std::size_t>& v)
{
    json a = json::array();
    for (auto x : v)
        a.push_back(x + 1);
    return a;
}

inline json violations_json(const ColourMatrix& m, const std::vector<LineViolation>& vs, const char* line_key)
{
    json a = json::array();
    for (const auto& v : vs)
        a.push_back({{line_key, v.line + 1}, {"colour", m.palette().token(v.colour)}, {"positions", one_based(v.positions)}});
    return a;
}

} // namespace detail

inline json verification_json(const ColourMatrix& m, const VerificationReport& r)
{
    json missing = json::array();
    for (auto [a, b] : r.missing_pairs)
        missing.push_back({m.palette().token(a), m.palette().token(b)});
    return json{{"p", m.rows()},
                {"q", m.cols()},
                {"colours", m.colour_count()},
                {"member", r.member()},
                {"proper", r.proper},
                {"complete", r.complete},
                {"row_violations", detail::violations_json(m, r.row_violations, "row")},
                {"col_violations", detail::violations_json(m, r.col_violations, "column")},
                {"missing_pairs", missing},
                {"good_pair_count", r.good_pair_count}};
}

inline void print_verification(std::ostream& os, const ColourMatrix& m, const VerificationReport& r)
{
    os << "matrix " << m.rows() << "x" << m.cols() << " over " << m.colour_count() << " colours\n";
    os << "proper:   " << (r.proper ? "yes" : "no") << '\n';
    for (const auto& v : r.row_violations) {
        os << "  row " << v.line + 1 << ": colour " << m.palette().token(v.colour) << " at columns";
        for (auto x : v.positions)
            os << ' ' << x + 1;
        os << '\n';
    }
    for (const auto& v : r.col_violations) {
        os << "  column " << v.line + 1 << ": colour " << m.palette().token(v.colour) << " at rows";
        for (auto x : v.positions)
            os << ' ' << x + 1;
        os << '\n';
    }
    const std::size_t n = m.colour_count();
    os << "complete: " << (r.complete ? "yes" : "no") << " (" << r.good_pair_count << " of " << n * (n - 1) / 2
       << " pairs good)\n";
    for (auto [a, b] : r.missing_pairs)
        os << "  missing {" << m.palette().token(a) << ", " << m.palette().token(b) << "}\n";
    os << (r.member() ? "MEMBER" : "NOT A MEMBER") << '\n';
}

/// Everything `analyze` reports about one matrix.
struct StatsReport {
    FrequencyProfile frequency;
    ExcessProfile excess;
    std::vector<CoverageMap> coverage_queries;
    std::vector<XConfiguration> x_configurations;
    AuxGraph aux;
    std::optional<std::vector<SuiteItem>> lemma_plus_m;
};

/// Coverage queries default to one singleton per colour.
inline StatsReport compute_stats(const ColourMatrix& m, std::vector<std::vector<ColourId>> coverage_sets = {},
                                 std::optional<int> suite_s = std::nullopt)
{
    StatsReport r;
    r.frequency = frequency_profile(m);
    r.excess = excess_profile(m, r.frequency);
    if (coverage_sets.empty())
        for (ColourId c = 0; c < m.colour_count(); ++c)
            coverage_sets.push_back({c});
    for (auto& a : coverage_sets)
        r.coverage_queries.push_back(coverage(m, std::move(a)));
    r.x_configurations = x_configurations(m);
    r.aux = aux_graph(m);
    if (suite_s)
        r.lemma_plus_m = lemma_plus_m_suite(m, *suite_s);
    return r;
}

inline json stats_json(const ColourMatrix& m, const StatsReport& r)
{
    const auto& pal = m.palette();
    const LineStats ls(m);

    json per_colour = json::object();
    for (ColourId c = 0; c < m.colour_count(); ++c)
        per_colour[pal.token(c)] = r.frequency.freq[c];
    json classes = json::object();
    for (const auto& [level, ids] : r.frequency.classes)
        classes[std::to_string(level)] = detail::tokens_of(m, ids);
    json c_l = json::object(), c_lplus = json::object();
    for (std::size_t l = 1; l < r.frequency.c.size(); ++l) {
        if (r.frequency.c[l])
            c_l[std::to_string(l)] = r.frequency.c[l];
        if (r.frequency.c_plus[l])
            c_lplus[std::to_string(l)] = r.frequency.c_plus[l];
    }

    json exc = json::object();
    for (ColourId c = 0; c < m.colour_count(); ++c)
        exc[pal.token(c)] = r.excess.exc[c];

    json rows = json::array(), cols = json::array(), r2 = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows.push_back(detail::tokens_of(m, ls.row_colours(i)));
        r2.push_back(ls.row_level_count(i, 2));
    }
    for (std::size_t j = 0; j < m.cols(); ++j)
        cols.push_back(detail::tokens_of(m, ls.col_colours(j)));
    json pairs = json::array(), triples = json::array(), col_pairs = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = i + 1; k < m.rows(); ++k) {
            if (auto v = ls.row_pair_count(i, k))
                pairs.push_back({{"rows", {i + 1, k + 1}}, {"value", v}});
            for (std::size_t l = k + 1; l < m.rows(); ++l)
                if (auto v = ls.row_triple_count(i, k, l))
                    triples.push_back({{"rows", {i + 1, k + 1, l + 1}}, {"value", v}});
        }
    for (std::size_t a = 0; a < m.cols(); ++a)
        for (std::size_t b = a + 1; b < m.cols(); ++b)
            if (auto v = ls.col_pair_count(a, b))
                col_pairs.push_back({{"columns", {a + 1, b + 1}}, {"value", v}});

    json cov = json::array();
    for (const auto& c : r.coverage_queries)
        cov.push_back({{"colours", detail::tokens_of(m, c.colours)},
                       {"columns", detail::one_based(c.columns)},
                       {"cov", c.size()}});

    json xs = json::array();
    for (const auto& x : r.x_configurations)
        xs.push_back({{"alpha", pal.token(x.alpha)},
                      {"beta", pal.token(x.beta)},
                      {"rows", {x.rows[0] + 1, x.rows[1] + 1}},
                      {"columns", {x.cols[0] + 1, x.cols[1] + 1}}});

    json edges = json::array();
    for (const auto& e : r.aux.edges)
        edges.push_back({{"rows", {e.i + 1, e.k + 1}}, {"label", e.label}});
    json aux{{"edges", edges}, {"degrees", r.aux.degree}, {"bipartition", nullptr}, {"matchings", nullptr},
             {"disjoint_matching_weights", nullptr}};
    if (r.aux.k33) {
        const auto& k = *r.aux.k33;
        aux["bipartition"] = {{k.part_i[0] + 1, k.part_i[1] + 1, k.part_i[2] + 1},
                              {k.part_k[0] + 1, k.part_k[1] + 1, k.part_k[2] + 1}};
        json ms = json::array();
        for (const auto& pm : k.matchings) {
            json es = json::array();
            for (auto [a, b] : pm.edges)
                es.push_back({a + 1, b + 1});
            ms.push_back({{"edges", es}, {"weight", pm.weight}});
        }
        aux["matchings"] = ms;
        aux["disjoint_matching_weights"] = k.disjoint_weights;
    }

    json suite = nullptr;
    if (r.lemma_plus_m) {
        suite = json::array();
        for (const auto& it : *r.lemma_plus_m)
            suite.push_back({{"name", it.name}, {"statement", it.statement}, {"holds", it.holds}, {"observed", it.observed}});
    }

    return json{{"p", m.rows()},
                {"q", m.cols()},
                {"colours", m.colour_count()},
                {"frequency",
                 {{"per_colour", per_colour},
                  {"classes", classes},
                  {"c_l", c_l},
                  {"c_lplus", c_lplus},
                  {"min_frequency", r.frequency.min_frequency}}},
                {"excess", {{"per_colour", exc}, {"min_excess", r.excess.min_excess}, {"negative", detail::tokens_of(m, r.excess.negative)}}},
                {"line_stats",
                 {{"rows", rows},
                  {"columns", cols},
                  {"r_2", r2},
                  {"row_pairs", pairs},
                  {"row_triples", triples},
                  {"column_pairs", col_pairs}}},
                {"coverage_queries", cov},
                {"x_configurations", xs},
                {"aux_graph", aux},
                {"lemma_plus_m", suite}};
}

inline void print_stats(std::ostream& os, const ColourMatrix& m, const StatsReport& r)
{
    const auto& pal = m.palette();
    os << "matrix " << m.rows() << "x" << m.cols() << " over " << m.colour_count() << " colours\n";
    os << "frequency classes:";
    for (const auto& [level, ids] : r.frequency.classes)
        os << " c_" << level << "=" << ids.size();
    os << "\nfrq(M) = " << r.frequency.min_frequency << ", exc(M) = " << r.excess.min_excess << '\n';
    if (!r.excess.negative.empty()) {
        os << "negative excess (not a member):";
        for (auto c : r.excess.negative)
            os << ' ' << pal.token(c);
        os << '\n';
    }
    os << "auxiliary graph edges:";
    if (r.aux.edges.empty())
        os << " none";
    for (const auto& e : r.aux.edges)
        os << " {" << e.i + 1 << "," << e.k + 1 << "}:" << e.label;
    os << '\n';
    if (r.aux.k33) {
        const auto& k = *r.aux.k33;
        os << "K33 bipartition {" << k.part_i[0] + 1 << "," << k.part_i[1] + 1 << "," << k.part_i[2] + 1 << "} | {"
           << k.part_k[0] + 1 << "," << k.part_k[1] + 1 << "," << k.part_k[2] + 1 << "}, disjoint matching weights "
           << k.disjoint_weights[0] << " " << k.disjoint_weights[1] << " " << k.disjoint_weights[2] << '\n';
    }
    os << "x-configurations: " << r.x_configurations.size() << '\n';
    for (const auto& x : r.x_configurations)
        os << "  {" << pal.token(x.alpha) << ", " << pal.token(x.beta) << "} rows " << x.rows[0] + 1 << "," << x.rows[1] + 1
           << " columns " << x.cols[0] + 1 << "," << x.cols[1] + 1 << '\n';
    os << "coverage:\n";
    for (const auto& c : r.coverage_queries) {
        os << "  Cov{";
        for (std::size_t k = 0; k < c.colours.size(); ++k)
            os << (k ? "," : "") << pal.token(c.colours[k]);
        os << "} =";
        for (auto j : c.columns)
            os << ' ' << j + 1;
        os << " (" << c.size() << ")\n";
    }
    if (r.lemma_plus_m) {
        os << "frequency suite:\n";
        for (const auto& it : *r.lemma_plus_m)
            os << "  [" << (it.holds ? "ok" : "FAIL") << "] " << it.statement << "  (" << it.observed << ")\n";
    }
}

inline json bound_json(const BoundResult& b)
{
    return json{{"p", b.p},
                {"q", b.q},
                {"lower", b.lower.value},
                {"upper", b.upper.value},
                {"exact", b.exact ? json(*b.exact) : json(nullptr)},
                {"provenance", {{"lower", b.lower.provenance}, {"upper", b.upper.provenance}}}};
}

inline void print_bound(std::ostream& os, const BoundResult& b)
{
    os << "achr(K_" << b.p << " x K_" << b.q << ")\n";
    os << "lower: " << b.lower.value << "  [" << b.lower.provenance << "]\n";
    os << "upper: " << b.upper.value << "  [" << b.upper.provenance << "]\n";
    if (b.exact)
        os << "exact: " << *b.exact << '\n';
}

inline json search_json(const SearchProblem& prob, const SearchOutcome& o)
{
    return json{{"p", prob.p},
                {"q", prob.q},
                {"n", prob.n},
                {"status", status_name(o.status)},
                {"nodes", o.nodes_explored},
                {"branch_nodes", o.branch_nodes},
                {"witness", o.witness ? json(to_text(*o.witness)) : json(nullptr)}};
}

} // namespace kpq
