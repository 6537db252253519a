#pragma once

// Explicit members of M(6,q,C) attaining the best known palette sizes:
//   base4/6/8      fixed 6x4, 6x6, 6x8 matrices with 12, 18, 21 colours
//   block_9_15     (M_6 | N_{q-6})                       2q+6 colours
//   even_16plus    M_4 block plus cyclic x,y,z,t blocks  2q+4 colours
//   block_16_40    (M_4 | N^0 | N~^1 | N~^2 | N~^3)      2q+4 colours
//
// Base colours keep their printed integer tokens "1".."21". Family colours
// are appended in a fixed order so palettes are reproducible.

#include "kpq/matrix.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpq {

enum class Family { base4, base6, base8, block_9_15, even_16plus, block_16_40 };

using Partition = std::array<int, 4>;

struct ConstructionSpec {
    Family family;
    int q;
    std::optional<Partition> partition; // block_16_40 only
};

/// Requested q has no construction here; the value lives in the bounds table.
class out_of_scope_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const char* family_name(Family f)
{
    switch (f) {
    case Family::base4: return "base4";
    case Family::base6: return "base6";
    case Family::base8: return "base8";
    case Family::block_9_15: return "block_9_15";
    case Family::even_16plus: return "even_16plus";
    case Family::block_16_40: return "block_16_40";
    }
    return "?";
}

inline std::optional<Family> parse_family(const std::string& s)
{
    for (auto f : {Family::base4, Family::base6, Family::base8, Family::block_9_15, Family::even_16plus,
                   Family::block_16_40})
        if (s == family_name(f))
            return f;
    return std::nullopt;
}

inline bool family_admits(Family f, int q)
{
    switch (f) {
    case Family::base4: return q == 4;
    case Family::base6: return q == 6;
    case Family::base8: return q == 8;
    case Family::block_9_15: return q >= 9 && q <= 15;
    case Family::even_16plus: return q >= 16 && q % 2 == 0;
    case Family::block_16_40: return q >= 16 && q <= 40;
    }
    return false;
}

namespace detail {

inline ColourMatrix numbered_matrix(const std::vector<std::vector<int>>& rows)
{
    int max_token = 0;
    std::vector<ColourId> entries;
    for (const auto& r : rows)
        for (int v : r) {
            max_token = std::max(max_token, v);
            entries.push_back(static_cast<ColourId>(v - 1));
        }
    return ColourMatrix(rows.size(), rows.front().size(), std::move(entries),
                        Palette::numbered(static_cast<std::size_t>(max_token), 1));
}

// representative of k modulo r in [1, r]
inline int mod1(int k, int r) { return ((k - 1) % r + r) % r + 1; }

inline void require(bool ok, const std::string& msg)
{
    if (!ok)
        throw std::invalid_argument(msg);
}

} // namespace detail

/// The fixed matrices M_4, M_6, M_8 (bar n = 10+n, double bar n = 20+n decoded).
inline ColourMatrix base_matrix(int q)
{
    switch (q) {
    case 4:
        return detail::numbered_matrix({{1, 2, 3, 4},
                                        {5, 6, 7, 8},
                                        {9, 10, 11, 12},
                                        {2, 1, 4, 3},
                                        {7, 8, 5, 6},
                                        {12, 11, 10, 9}});
    case 6:
        return detail::numbered_matrix({{1, 2, 3, 4, 5, 6},
                                        {7, 8, 9, 10, 11, 12},
                                        {13, 14, 15, 16, 17, 18},
                                        {2, 1, 17, 12, 15, 10},
                                        {11, 18, 4, 3, 7, 14},
                                        {16, 9, 8, 13, 6, 5}});
    case 8:
        return detail::numbered_matrix({{1, 2, 3, 4, 5, 16, 17, 18},
                                        {6, 7, 8, 9, 10, 18, 16, 17},
                                        {11, 12, 13, 14, 15, 17, 18, 16},
                                        {4, 8, 7, 1, 19, 15, 20, 21},
                                        {13, 5, 11, 21, 2, 9, 19, 20},
                                        {10, 14, 20, 12, 6, 3, 21, 19}});
    default:
        throw std::invalid_argument("base_matrix: q must be 4, 6 or 8 (got " + std::to_string(q) + ")");
    }
}

/// ceil((r-1)/3): the row shift used by the w-rows of N_r.
inline int n_r_shift(int r) { return (r - 1 + 2) / 3; }

/// The 6 x r block N_r over fresh colours v(1..r), w(1..r):
///   rows 1-3: v(i+j-1),  rows 4-6: w((i-4)*shift + j),  indices mod r in [1,r].
/// `tag` is the copy index l of block_16_40; with tagged_tokens the tokens
/// read "v5^l(2)" instead of "v5(2)". With swap, rows l and l+3 (1-based)
/// are interchanged.
inline ColourMatrix n_r(int r, int tag = 0, bool swap = false, bool tagged_tokens = false)
{
    detail::require(r >= 3 && r <= 9, "n_r: r must lie in [3,9] (got " + std::to_string(r) + ")");
    detail::require(tag >= 0 && tag <= 3, "n_r: tag must lie in [0,3]");
    detail::require(!swap || tag >= 1, "n_r: row swap needs tag in [1,3]");

    const std::string suffix = tagged_tokens ? "^" + std::to_string(tag) : std::string();
    std::vector<std::string> tokens;
    for (const char* u : {"v", "w"})
        for (int k = 1; k <= r; ++k)
            tokens.push_back(u + std::to_string(r) + suffix + "(" + std::to_string(k) + ")");

    const int shift = n_r_shift(r);
    std::vector<std::vector<ColourId>> rows(6, std::vector<ColourId>(r));
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= r; ++j) {
            const bool upper = i <= 3;
            const int k = upper ? detail::mod1(i + j - 1, r) : detail::mod1((i - 4) * shift + j, r);
            rows[i - 1][j - 1] = static_cast<ColourId>((upper ? 0 : r) + k - 1);
        }
    if (swap)
        std::swap(rows[tag - 1], rows[tag + 2]);

    std::vector<ColourId> entries;
    for (const auto& row : rows)
        entries.insert(entries.end(), row.begin(), row.end());
    return ColourMatrix(6, static_cast<std::size_t>(r), std::move(entries), Palette(std::move(tokens)));
}

inline ColourMatrix construct_9_15(int q)
{
    detail::require(q >= 9 && q <= 15, "construct_9_15: q must lie in [9,15] (got " + std::to_string(q) + ")");
    return hconcat(base_matrix(6), n_r(q - 6));
}

/// Columns 1-4 hold the M_4 block; columns 5..s+4 and s+5..2s+4 hold the
/// cyclic x, y, z, t blocks with s = (q-4)/2.
inline ColourMatrix construct_even_16plus(int q)
{
    detail::require(q >= 16 && q % 2 == 0,
                    "construct_even_16plus: q must be even and at least 16 (got " + std::to_string(q) + ")");
    const int s = (q - 4) / 2;

    std::vector<std::string> tokens;
    for (int k = 1; k <= 12; ++k)
        tokens.push_back(std::to_string(k));
    for (const char* u : {"x", "y", "z", "t"})
        for (int k = 1; k <= s; ++k)
            tokens.push_back(u + std::to_string(k));

    // id of symbol u_k, k taken mod s in [1,s]
    auto sym = [s](int family, int k) { return static_cast<ColourId>(12 + family * s + detail::mod1(k, s) - 1); };
    enum { X, Y, Z, T };

    const int head[6][4] = {{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {2, 1, 4, 3}, {7, 8, 5, 6}, {12, 11, 10, 9}};
    std::vector<ColourId> entries;
    entries.reserve(static_cast<std::size_t>(6 * q));
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 4; ++j)
            entries.push_back(static_cast<ColourId>(head[i][j] - 1));
        for (int j = 1; j <= s; ++j) {
            switch (i) {
            case 0: entries.push_back(sym(X, j)); break;
            case 1: entries.push_back(sym(X, j - 1)); break;
            case 2: entries.push_back(sym(T, j)); break;
            case 3: entries.push_back(sym(Z, j)); break;
            case 4: entries.push_back(sym(T, j - 1)); break;
            case 5: entries.push_back(sym(Y, j)); break;
            }
        }
        for (int j = 1; j <= s; ++j) {
            switch (i) {
            case 0: entries.push_back(sym(Y, j)); break;
            case 1: entries.push_back(sym(Z, j)); break;
            case 2: entries.push_back(sym(X, j)); break;
            case 3: entries.push_back(sym(T, j)); break;
            case 4: entries.push_back(sym(Y, j - 1)); break;
            case 5: entries.push_back(sym(Z, j - 1)); break;
            }
        }
    }
    return ColourMatrix(6, static_cast<std::size_t>(q), std::move(entries), Palette(std::move(tokens)));
}

/// Balanced split of q-4 into four parts, largest first (19 -> 5,5,5,4).
inline Partition default_partition(int q)
{
    const int total = q - 4;
    Partition part{};
    for (int l = 0; l < 4; ++l)
        part[l] = total / 4 + (l < total % 4 ? 1 : 0);
    return part;
}

inline void validate_partition(int q, const Partition& part)
{
    int sum = 0;
    for (int r : part) {
        detail::require(r >= 3 && r <= 9, "partition entries must lie in [3,9]");
        sum += r;
    }
    detail::require(sum == q - 4, "partition must sum to q-4 = " + std::to_string(q - 4));
}

inline ColourMatrix construct_16_40(int q, std::optional<Partition> partition = std::nullopt)
{
    detail::require(q >= 16 && q <= 40, "construct_16_40: q must lie in [16,40] (got " + std::to_string(q) + ")");
    const Partition part = partition.value_or(default_partition(q));
    validate_partition(q, part);
    ColourMatrix m = hconcat(base_matrix(4), n_r(part[0], 0, false, true));
    for (int l = 1; l <= 3; ++l)
        m = hconcat(m, n_r(part[l], l, true, true));
    return m;
}

inline ColourMatrix construct(const ConstructionSpec& spec)
{
    if (!family_admits(spec.family, spec.q))
        throw std::invalid_argument(std::string("family ") + family_name(spec.family) + " does not admit q=" +
                                    std::to_string(spec.q));
    if (spec.partition && spec.family != Family::block_16_40)
        throw std::invalid_argument("a partition is only meaningful for block_16_40");
    switch (spec.family) {
    case Family::base4: return base_matrix(4);
    case Family::base6: return base_matrix(6);
    case Family::base8: return base_matrix(8);
    case Family::block_9_15: return construct_9_15(spec.q);
    case Family::even_16plus: return construct_even_16plus(spec.q);
    case Family::block_16_40: return construct_16_40(spec.q, spec.partition);
    }
    throw std::logic_error("unreachable");
}

/// Family attaining achr(K_6 x K_q) for q, if this library constructs one.
inline std::optional<Family> best_family(int q)
{
    if (q == 4)
        return Family::base4;
    if (q == 6)
        return Family::base6;
    if (q == 8)
        return Family::base8;
    if (q >= 9 && q <= 15)
        return Family::block_9_15;
    if (q >= 16 && q <= 40)
        return Family::block_16_40;
    if (q >= 42 && q % 2 == 0)
        return Family::even_16plus;
    return std::nullopt;
}

inline ColourMatrix construct_best(int q)
{
    if (q < 1)
        throw std::invalid_argument("construct_best: q must be positive");
    auto f = best_family(q);
    if (!f) {
        std::string source;
        if (q <= 3)
            source = "HoPu, ChiF";
        else if (q == 5)
            source = "HoPc";
        else if (q == 7)
            source = "Ho2";
        else
            source = "Ho1";
        throw out_of_scope_error("construction out of scope for q=" + std::to_string(q) +
                                 "; see the bounds table for the value (external: " + source + ")");
    }
    return construct({*f, q, std::nullopt});
}

} // namespace kpq
