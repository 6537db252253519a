#pragma once

// Seeded generators shared by the property tests.

#include "kpq/constructions.hpp"
#include "kpq/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace kpq::test {

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937& rng)
{
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

/// Random p x q matrix over exactly n colours (all used); n <= p*q.
inline ColourMatrix random_matrix(std::size_t p, std::size_t q, std::size_t n, std::mt19937& rng)
{
    std::vector<ColourId> entries(p * q);
    // each colour once, then random fill, then shuffle
    for (std::size_t k = 0; k < entries.size(); ++k)
        entries[k] = k < n ? static_cast<ColourId>(k)
                           : static_cast<ColourId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    std::shuffle(entries.begin(), entries.end(), rng);
    return ColourMatrix(p, q, std::move(entries), Palette::numbered(n, 0));
}

/// Every construction the library offers for K_6 x K_q, q up to 100.
inline std::vector<ColourMatrix> all_constructions()
{
    std::vector<ColourMatrix> out;
    for (int q : {4, 6, 8})
        out.push_back(base_matrix(q));
    for (int q = 9; q <= 15; ++q)
        out.push_back(construct_9_15(q));
    for (int q = 16; q <= 40; ++q)
        out.push_back(construct_16_40(q));
    for (int q = 16; q <= 100; q += 2)
        out.push_back(construct_even_16plus(q));
    return out;
}

/// Same matrix with one entry replaced by a different palette colour.
/// Every colour of m must occur at least twice.
inline ColourMatrix corrupt_one_entry(const ColourMatrix& m, std::mt19937& rng)
{
    auto entries = m.entries();
    std::uniform_int_distribution<std::size_t> cell(0, entries.size() - 1);
    std::uniform_int_distribution<ColourId> colour(0, static_cast<ColourId>(m.colour_count() - 1));
    const std::size_t k = cell(rng);
    ColourId c;
    do {
        c = colour(rng);
    } while (c == entries[k]);
    entries[k] = c;
    return ColourMatrix(m.rows(), m.cols(), std::move(entries), m.palette());
}

} // namespace kpq::test
