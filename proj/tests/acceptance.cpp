// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "kpq/analytics.hpp"
#include "kpq/bounds.hpp"
#include "kpq/cli.hpp"
#include "kpq/constructions.hpp"
#include "kpq/solver.hpp"
#include "kpq/verify.hpp"
#include "test_support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace kpq;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string cli_out(std::vector<std::string> args, int* code = nullptr)
{
    std::ostringstream out, err;
    const int c = cli::run(args, out, err);
    if (code)
        *code = c;
    return out.str();
}

Check ac1_constructions()
{
    Check r;
    const auto t0 = Clock::now();
    std::size_t cases = 0;
    auto expect = [&](const ColourMatrix& m, std::size_t colours, const std::string& what) {
        ++cases;
        if (!is_member(m))
            r.fail(what + " is not a member");
        if (m.colour_count() != colours)
            r.fail(what + " has " + std::to_string(m.colour_count()) + " colours");
    };
    expect(base_matrix(4), 12, "q=4");
    expect(base_matrix(6), 18, "q=6");
    expect(base_matrix(8), 21, "q=8");
    for (int q = 9; q <= 15; ++q)
        expect(construct_9_15(q), 2 * q + 6, "block_9_15 q=" + std::to_string(q));
    for (int q = 16; q <= 40; ++q)
        expect(construct_16_40(q), 2 * q + 4, "block_16_40 q=" + std::to_string(q));
    for (int q = 16; q <= 100; q += 2)
        expect(construct_even_16plus(q), 2 * q + 4, "even_16plus q=" + std::to_string(q));
    const double dt = seconds_since(t0);
    if (dt >= 5.0)
        r.fail("took " + std::to_string(dt) + " s");
    if (r.ok)
        r.detail = std::to_string(cases) + " cases in " + std::to_string(dt) + " s";
    return r;
}

Check ac2_exact_table()
{
    Check r;
    std::vector<long long> qs;
    for (long long q = 1; q <= 50; ++q)
        qs.push_back(q);
    for (long long q : {85, 100, 101})
        qs.push_back(q);
    std::map<long long, long long> got;
    for (long long q : qs) {
        int code = 0;
        auto out = cli_out({"--format", "json", "bound", "--p", "6", "--q", std::to_string(q)}, &code);
        if (code != 0) {
            r.fail("bound exited " + std::to_string(code) + " at q=" + std::to_string(q));
            continue;
        }
        auto j = json::parse(out);
        if (j["exact"].is_null()) {
            r.fail("no exact value at q=" + std::to_string(q));
            continue;
        }
        got[q] = j["exact"].get<long long>();
        if (got[q] != 2 * q + j_class(q))
            r.fail("q=" + std::to_string(q) + " gave " + std::to_string(got[q]));
    }
    for (auto [q, v] : std::map<long long, long long>{{8, 21}, {7, 18}, {12, 30}, {41, 85}, {44, 92}})
        if (got[q] != v)
            r.fail("spot check q=" + std::to_string(q) + " gave " + std::to_string(got[q]));
    for (long long q = 1; q <= 10000; ++q) {
        const auto v = exact_value(q).value;
        if (v < 2 * q + 3 || v > 2 * q + 6) {
            r.fail("band violated at q=" + std::to_string(q));
            break;
        }
    }
    if (r.ok)
        r.detail = std::to_string(qs.size()) + " table queries, band to 10^4";
    return r;
}

Check ac3_suite()
{
    Check r;
    std::size_t checked = 0;
    auto run_suite = [&](const ColourMatrix& m, int s) {
        ++checked;
        const std::string what = "q=" + std::to_string(m.cols()) + " s=" + std::to_string(s);
        auto suite = lemma_plus_m_suite(m, s);
        for (const auto& item : suite)
            if (!item.holds)
                r.fail(what + ": " + item.name + " (" + item.observed + ")");
        const auto f = frequency_profile(m);
        if (f.min_frequency != 2)
            r.fail(what + ": frq " + std::to_string(f.min_frequency));
        if (excess_profile(m, f).min_excess != 7 - s)
            r.fail(what + ": exc " + std::to_string(excess_profile(m, f).min_excess));
    };
    run_suite(base_matrix(8), 5);
    for (int q = 9; q <= 15; ++q)
        run_suite(construct_9_15(q), 6);
    for (int q = 16; q <= 40; ++q)
        run_suite(construct_16_40(q), 4);
    for (int q = 16; q <= 100; q += 2)
        run_suite(construct_even_16plus(q), 4);

    std::vector<ColourMatrix> members;
    for (const auto& m : test::all_constructions())
        if (m.cols() >= 7)
            members.push_back(m);
    std::mt19937 rng(20240601);
    std::size_t caught = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto& m = members[rng() % members.size()];
        const auto bad = test::corrupt_one_entry(m, rng);
        const auto v = verify_membership(bad);
        const int s = static_cast<int>(m.colour_count()) - 2 * static_cast<int>(m.cols());
        const bool suite_ok = all_hold(lemma_plus_m_suite(bad, s));
        if (!v.proper || !v.complete || !suite_ok)
            ++caught;
        else
            r.fail("mutation of q=" + std::to_string(m.cols()) + " passed every check");
    }
    if (r.ok)
        r.detail = std::to_string(checked) + " members, " + std::to_string(caught) + "/100 mutations caught";
    return r;
}

Check ac4_oracle()
{
    Check r;
    const auto t0 = Clock::now();
    std::size_t instances = 0;
    for (std::size_t p = 1; p <= 12; ++p)
        for (std::size_t q = 1; p * q <= 12; ++q) {
            std::vector<bool> sat;
            for (std::size_t n = std::max(p, q); n <= p * q; ++n) {
                ++instances;
                auto o = exists_matrix({p, q, n});
                const bool fast = o.status == SearchStatus::sat;
                if (o.status == SearchStatus::budget_exhausted)
                    r.fail("budget hit without a budget");
                if (fast != naive_oracle(p, q, n))
                    r.fail("disagreement at " + std::to_string(p) + "x" + std::to_string(q) + " n=" + std::to_string(n));
                if (o.witness && !is_member(*o.witness))
                    r.fail("bad witness at n=" + std::to_string(n));
                sat.push_back(fast);
            }
            // no gaps: SAT values form a prefix starting at max(p,q)
            auto first_unsat = std::find(sat.begin(), sat.end(), false);
            if (sat.empty() || !sat.front() || std::find(first_unsat, sat.end(), true) != sat.end())
                r.fail("feasible sizes not an interval at " + std::to_string(p) + "x" + std::to_string(q));
        }
    for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t q = 1; q <= 3; ++q) {
            auto a = achromatic_exact(p, q);
            std::size_t best = 0;
            for (std::size_t n = 1; n <= p * q; ++n)
                if (naive_oracle(p, q, n))
                    best = n;
            if (!a.upper_certified || a.value != best)
                r.fail("achr mismatch at " + std::to_string(p) + "x" + std::to_string(q));
        }
    const double dt = seconds_since(t0);
    if (dt >= 60.0)
        r.fail("took " + std::to_string(dt) + " s");
    if (r.ok)
        r.detail = std::to_string(instances) + " instances in " + std::to_string(dt) + " s";
    return r;
}

Check ac5_graph_cross_check()
{
    Check r;
    std::size_t members = 0;
    for (const auto& m : test::all_constructions()) {
        ++members;
        const auto v = verify_membership(m);
        const auto g = validate_on_graph(to_graph_colouring(m));
        if (v.proper != g.proper || v.complete != g.complete || !v.member())
            r.fail("disagreement on member q=" + std::to_string(m.cols()));
    }
    std::mt19937 rng(555);
    std::size_t non_members = 0;
    while (non_members < 50) {
        const std::size_t p = 2 + rng() % 5, q = 2 + rng() % 6;
        const std::size_t n = std::max(p, q) + rng() % (p * q - std::max(p, q) + 1);
        auto m = test::random_matrix(p, q, n, rng);
        const auto v = verify_membership(m);
        if (v.member())
            continue;
        ++non_members;
        const auto g = validate_on_graph(to_graph_colouring(m));
        if (v.proper != g.proper || v.complete != g.complete)
            r.fail("disagreement on a random " + std::to_string(p) + "x" + std::to_string(q));
    }
    if (r.ok)
        r.detail = std::to_string(members) + " members, " + std::to_string(non_members) + " non-members";
    return r;
}

Check ac6_transforms()
{
    Check r;
    const auto members = test::all_constructions();
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& m = members[rng() % members.size()];
        auto out = permute(m, test::random_permutation(m.rows(), rng), test::random_permutation(m.cols(), rng),
                           test::random_permutation(m.colour_count(), rng));
        if (!is_member(out))
            r.fail("transform " + std::to_string(trial) + " left M(p,q,C)");
    }
    if (r.ok)
        r.detail = "200 transforms";
    return r;
}

Check ac7_determinism()
{
    Check r;
    for (int q : {4, 6, 8, 9, 12, 15, 16, 22, 40, 42, 100}) {
        auto a = cli_out({"construct", "--q", std::to_string(q)});
        auto b = cli_out({"construct", "--q", std::to_string(q)});
        if (a != b || a.empty())
            r.fail("construct differs at q=" + std::to_string(q));
    }
    for (auto args : std::vector<std::vector<std::string>>{
             {"search", "--p", "4", "--q", "5", "--n", "9", "--deterministic"},
             {"search", "--p", "6", "--q", "4", "--n", "12", "--deterministic"},
             {"--format", "json", "search", "--p", "3", "--q", "4", "--max", "--deterministic"}}) {
        if (cli_out(args) != cli_out(args))
            r.fail("search output differs");
    }
    if (r.ok)
        r.detail = "11 constructions, 3 searches";
    return r;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"AC1 construction certification", ac1_constructions},
        {"AC2 exact table", ac2_exact_table},
        {"AC3 frequency suite and mutations", ac3_suite},
        {"AC4 oracle equivalence", ac4_oracle},
        {"AC5 graph-side cross-check", ac5_graph_cross_check},
        {"AC6 transform closure", ac6_transforms},
        {"AC7 determinism", ac7_determinism},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        std::cout << (c.ok ? "PASS " : "FAIL ") << name << ": " << c.detail << '\n';
        failures += !c.ok;
    }
    return failures == 0 ? 0 : 1;
}
