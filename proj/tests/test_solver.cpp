#include "kpq/solver.hpp"
#include "kpq/verify.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace kpq;

namespace {

// Feasible palette sizes for p <= q, pq <= 12, from the brute-force script
// tests/oracles/small_achromatic.py.
const std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>& frozen_feasible()
{
    static const std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> table = [] {
        std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> t;
        for (std::size_t q = 1; q <= 12; ++q)
            t[{1, q}] = {q};
        t[{2, 2}] = {2};
        t[{2, 3}] = {3, 4};
        t[{2, 4}] = {4, 5};
        t[{2, 5}] = {5, 6};
        t[{2, 6}] = {6, 7};
        t[{3, 3}] = {3, 4, 5};
        t[{3, 4}] = {4, 5, 6};
        return t;
    }();
    return table;
}

bool frozen_sat(std::size_t p, std::size_t q, std::size_t n)
{
    const auto& v = frozen_feasible().at({std::min(p, q), std::max(p, q)});
    return std::find(v.begin(), v.end(), n) != v.end();
}

} // namespace

TEST(NaiveOracle, MatchesFrozenTable)
{
    for (const auto& [pq, feasible] : frozen_feasible()) {
        const auto [p, q] = pq;
        for (std::size_t n = 1; n <= p * q; ++n)
            EXPECT_EQ(naive_oracle(p, q, n), frozen_sat(p, q, n)) << p << "x" << q << " n=" << n;
    }
    EXPECT_THROW(naive_oracle(3, 5, 5), std::invalid_argument);
}

TEST(ExistsMatrix, AgreesWithOracleOnEveryTinyGrid)
{
    for (std::size_t p = 1; p <= 12; ++p)
        for (std::size_t q = 1; p * q <= 12; ++q)
            for (std::size_t n = std::max(p, q); n <= p * q; ++n) {
                SearchProblem prob{p, q, n};
                auto o = exists_matrix(prob);
                ASSERT_NE(o.status, SearchStatus::budget_exhausted);
                EXPECT_EQ(o.status == SearchStatus::sat, naive_oracle(p, q, n)) << p << "x" << q << " n=" << n;
                EXPECT_EQ(o.status == SearchStatus::sat, frozen_sat(p, q, n)) << p << "x" << q << " n=" << n;
            }
}

TEST(ExistsMatrix, WitnessesAreMembers)
{
    for (auto [p, q, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{3, 4, 6}, {4, 4, 8}, {6, 4, 12},
                           {3, 5, 7}, {2, 7, 8}, {5, 5, 10}}) {
        auto o = exists_matrix({p, q, n});
        ASSERT_EQ(o.status, SearchStatus::sat) << p << "x" << q << " n=" << n;
        ASSERT_TRUE(o.witness.has_value());
        EXPECT_EQ(o.witness->rows(), p);
        EXPECT_EQ(o.witness->cols(), q);
        EXPECT_EQ(o.witness->colour_count(), n);
        EXPECT_TRUE(is_member(*o.witness));
    }
}

TEST(ExistsMatrix, TrivialUnsat)
{
    auto o = exists_matrix({2, 2, 4});
    EXPECT_EQ(o.status, SearchStatus::unsat);
    EXPECT_EQ(o.nodes_explored, 0u);
    EXPECT_EQ(exists_matrix({2, 2, 5}).status, SearchStatus::unsat);
}

TEST(ExistsMatrix, RejectsBadProblems)
{
    EXPECT_THROW(exists_matrix({0, 3, 3}), std::invalid_argument);
    EXPECT_THROW(exists_matrix({3, 4, 3}), std::invalid_argument);
}

TEST(ExistsMatrix, Deterministic)
{
    auto a = exists_matrix({4, 5, 9});
    auto b = exists_matrix({4, 5, 9});
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.nodes_explored, b.nodes_explored);
    ASSERT_TRUE(a.witness && b.witness);
    EXPECT_EQ(to_text(*a.witness), to_text(*b.witness));
}

TEST(ExistsMatrix, ParallelMatchesSequential)
{
    for (auto [p, q, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{4, 4, 8}, {4, 4, 9}, {6, 4, 12},
                           {3, 5, 8}}) {
        auto seq = exists_matrix({p, q, n});
        SearchProblem par{p, q, n, std::nullopt, false, 4};
        auto o = exists_matrix(par);
        EXPECT_EQ(o.status, seq.status);
        if (seq.witness) {
            ASSERT_TRUE(o.witness.has_value());
            EXPECT_EQ(to_text(*o.witness), to_text(*seq.witness));
        }
    }
}

TEST(ExistsMatrix, BudgetExhaustion)
{
    SearchProblem prob{4, 5, 9, std::uint64_t{10}};
    auto o = exists_matrix(prob);
    EXPECT_EQ(o.status, SearchStatus::budget_exhausted);
    EXPECT_FALSE(o.witness.has_value());
    EXPECT_LE(o.nodes_explored, 10u);
}

TEST(Achromatic, SmallValues)
{
    for (const auto& [pq, feasible] : frozen_feasible()) {
        auto r = achromatic_exact(pq.first, pq.second);
        EXPECT_TRUE(r.upper_certified);
        EXPECT_EQ(r.value, feasible.back()) << pq.first << "x" << pq.second;
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_TRUE(is_member(*r.witness));
    }
    EXPECT_EQ(achromatic_exact(4, 4).value, 8u);
}

TEST(Achromatic, FeasibleSizesFormAnInterval)
{
    // every n between chi and the maximum is attainable
    for (std::size_t p = 2; p <= 4; ++p)
        for (std::size_t q = p; q <= 5; ++q) {
            auto r = achromatic_exact(p, q);
            ASSERT_TRUE(r.upper_certified);
            for (std::size_t n = std::max(p, q); n <= r.value; ++n)
                EXPECT_EQ(exists_matrix({p, q, n}).status, SearchStatus::sat) << p << "x" << q << " n=" << n;
            for (std::size_t n = r.value + 1; n <= std::min<std::size_t>(p * q, r.value + 3); ++n)
                EXPECT_EQ(exists_matrix({p, q, n}).status, SearchStatus::unsat) << p << "x" << q << " n=" << n;
        }
}

TEST(Achromatic, SixByFourMatchesTable)
{
    auto r = achromatic_exact(6, 4);
    EXPECT_TRUE(r.upper_certified);
    EXPECT_EQ(r.value, 12u);
}

TEST(Achromatic, BudgetStopsTheScan)
{
    auto r = achromatic_exact(5, 5, std::uint64_t{50});
    EXPECT_EQ(r.last_status, SearchStatus::budget_exhausted);
    EXPECT_FALSE(r.upper_certified);
}
