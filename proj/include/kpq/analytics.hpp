#pragma once

// Statistics and structural diagnostics of colour matrices: frequencies,
// excesses, line intersection counts, coverage, x-configurations, set
// types, the auxiliary row graph, and the nine-part frequency suite for
// members of M(6,q,C) with |C| = 2q+s.
//
// Everything is computable on non-members as well; theorem-backed facts
// are reported as flags, never thrown.
//
// Indices are 0-based throughout.

#include "kpq/matrix.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kpq {

/// Matching analytics asked of a graph that is not inside K_{3,3}.
class unsupported_shape : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FrequencyProfile {
    std::vector<std::size_t> freq;                        // per colour id
    std::map<std::size_t, std::vector<ColourId>> classes; // level l -> C_l
    std::vector<std::size_t> c;                           // c[l] = |C_l|, l = 0..max(p,q)
    std::vector<std::size_t> c_plus;                      // c_plus[l] = sum_{m>=l} c[m]
    std::size_t min_frequency = 0;

    std::size_t count(std::size_t level) const { return level < c.size() ? c[level] : 0; }
    std::size_t count_at_least(std::size_t level) const { return level < c_plus.size() ? c_plus[level] : 0; }
};

inline FrequencyProfile frequency_profile(const ColourMatrix& m)
{
    FrequencyProfile f;
    f.freq.assign(m.colour_count(), 0);
    for (ColourId c : m.entries())
        ++f.freq[c];
    const std::size_t top = std::max(m.rows(), m.cols());
    f.c.assign(top + 2, 0);
    for (ColourId c = 0; c < m.colour_count(); ++c) {
        f.classes[f.freq[c]].push_back(c);
        if (f.freq[c] >= f.c.size())
            f.c.resize(f.freq[c] + 2, 0); // only reachable on non-proper matrices
        ++f.c[f.freq[c]];
    }
    f.c_plus.assign(f.c.size() + 1, 0);
    for (std::size_t l = f.c.size(); l-- > 0;)
        f.c_plus[l] = f.c_plus[l + 1] + f.c[l];
    f.min_frequency = *std::min_element(f.freq.begin(), f.freq.end());
    return f;
}

/// exc = l(p+q-l-1) - (|C|-1) for a colour of frequency l.
inline long long excess_for_frequency(std::size_t p, std::size_t q, std::size_t colours, std::size_t l)
{
    const auto L = static_cast<long long>(l);
    return L * (static_cast<long long>(p + q) - L - 1) - (static_cast<long long>(colours) - 1);
}

struct ExcessProfile {
    std::vector<long long> exc; // per colour id
    long long min_excess = 0;
    // A negative excess certifies non-membership.
    std::vector<ColourId> negative;
};

inline ExcessProfile excess_profile(const ColourMatrix& m, const FrequencyProfile& f)
{
    ExcessProfile e;
    e.exc.reserve(m.colour_count());
    for (ColourId c = 0; c < m.colour_count(); ++c) {
        e.exc.push_back(excess_for_frequency(m.rows(), m.cols(), m.colour_count(), f.freq[c]));
        if (e.exc.back() < 0)
            e.negative.push_back(c);
    }
    e.min_excess = *std::min_element(e.exc.begin(), e.exc.end());
    return e;
}

inline ExcessProfile excess_profile(const ColourMatrix& m) { return excess_profile(m, frequency_profile(m)); }

/// Per-line colour sets and their level-restricted intersections.
class LineStats {
public:
    explicit LineStats(const ColourMatrix& m)
        : p_(m.rows()), q_(m.cols()), n_(m.colour_count()), freq_(frequency_profile(m).freq),
          in_row_(p_ * n_, 0), in_col_(q_ * n_, 0)
    {
        for (std::size_t i = 0; i < p_; ++i)
            for (std::size_t j = 0; j < q_; ++j) {
                in_row_[i * n_ + m.at(i, j)] = 1;
                in_col_[j * n_ + m.at(i, j)] = 1;
            }
    }

    std::size_t rows() const noexcept { return p_; }
    std::size_t cols() const noexcept { return q_; }

    /// ro(i)
    std::vector<ColourId> row_colours(std::size_t i) const { return members(in_row_, check_row(i)); }
    /// co(j)
    std::vector<ColourId> col_colours(std::size_t j) const { return members(in_col_, check_col(j)); }

    bool row_has(std::size_t i, ColourId c) const { return in_row_[check_row(i) * n_ + c] != 0; }
    bool col_has(std::size_t j, ColourId c) const { return in_col_[check_col(j) * n_ + c] != 0; }

    /// r_l(i) = |C_l ∩ ro(i)|
    std::size_t row_level_count(std::size_t i, std::size_t level) const
    {
        std::size_t k = 0;
        for (ColourId c = 0; c < n_; ++c)
            k += freq_[c] == level && row_has(i, c);
        return k;
    }

    /// c_l(j) = |C_l ∩ co(j)|
    std::size_t col_level_count(std::size_t j, std::size_t level) const
    {
        std::size_t k = 0;
        for (ColourId c = 0; c < n_; ++c)
            k += freq_[c] == level && col_has(j, c);
        return k;
    }

    /// ro(i,k) = C_2 ∩ ro(i) ∩ ro(k)
    std::vector<ColourId> row_pair_colours(std::size_t i, std::size_t k) const
    {
        distinct({i, k});
        std::vector<ColourId> out;
        for (ColourId c = 0; c < n_; ++c)
            if (freq_[c] == 2 && row_has(i, c) && row_has(k, c))
                out.push_back(c);
        return out;
    }
    std::size_t row_pair_count(std::size_t i, std::size_t k) const { return row_pair_colours(i, k).size(); }

    /// ro(i,j,k) = C_3 ∩ ro(i) ∩ ro(j) ∩ ro(k)
    std::vector<ColourId> row_triple_colours(std::size_t i, std::size_t j, std::size_t k) const
    {
        distinct({i, j, k});
        std::vector<ColourId> out;
        for (ColourId c = 0; c < n_; ++c)
            if (freq_[c] == 3 && row_has(i, c) && row_has(j, c) && row_has(k, c))
                out.push_back(c);
        return out;
    }
    std::size_t row_triple_count(std::size_t i, std::size_t j, std::size_t k) const
    {
        return row_triple_colours(i, j, k).size();
    }

    /// co(m,n) = C_2 ∩ co(m) ∩ co(n)
    std::vector<ColourId> col_pair_colours(std::size_t a, std::size_t b) const
    {
        if (a == b)
            throw std::invalid_argument("column indices must be distinct");
        std::vector<ColourId> out;
        for (ColourId c = 0; c < n_; ++c)
            if (freq_[c] == 2 && col_has(a, c) && col_has(b, c))
                out.push_back(c);
        return out;
    }
    std::size_t col_pair_count(std::size_t a, std::size_t b) const { return col_pair_colours(a, b).size(); }

    /// R(γ): rows containing γ.
    std::vector<std::size_t> rows_of(ColourId c) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < p_; ++i)
            if (in_row_[i * n_ + c])
                out.push_back(i);
        return out;
    }

private:
    std::size_t check_row(std::size_t i) const
    {
        if (i >= p_)
            throw std::out_of_range("row index out of range");
        return i;
    }
    std::size_t check_col(std::size_t j) const
    {
        if (j >= q_)
            throw std::out_of_range("column index out of range");
        return j;
    }
    void distinct(std::initializer_list<std::size_t> idx) const
    {
        std::vector<std::size_t> v(idx);
        for (auto i : v)
            check_row(i);
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw std::invalid_argument("row indices must be distinct");
    }
    std::vector<ColourId> members(const std::vector<char>& table, std::size_t line) const
    {
        std::vector<ColourId> out;
        for (ColourId c = 0; c < n_; ++c)
            if (table[line * n_ + c])
                out.push_back(c);
        return out;
    }

    std::size_t p_, q_, n_;
    std::vector<std::size_t> freq_;
    std::vector<char> in_row_;
    std::vector<char> in_col_;
};

inline LineStats line_stats(const ColourMatrix& m) { return LineStats(m); }

struct CoverageMap {
    std::vector<ColourId> colours;
    std::vector<std::size_t> columns; // Cov(A), ascending
    std::size_t size() const noexcept { return columns.size(); }
};

/// Cov(A): columns meeting A.
inline CoverageMap coverage(const ColourMatrix& m, std::vector<ColourId> colours)
{
    if (colours.empty())
        throw std::invalid_argument("coverage: colour set must be nonempty");
    for (ColourId c : colours)
        if (c >= m.colour_count())
            throw std::invalid_argument("coverage: colour id outside palette");
    std::sort(colours.begin(), colours.end());
    colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
    CoverageMap cov;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (std::binary_search(colours.begin(), colours.end(), m.at(i, j))) {
                cov.columns.push_back(j);
                break;
            }
    cov.colours = std::move(colours);
    return cov;
}

/// Two 2-colours on the corners of a rectangle, one per diagonal:
/// alpha at (rows[0],cols[0]) and (rows[1],cols[1]); beta on the other two.
struct XConfiguration {
    ColourId alpha; // alpha < beta
    ColourId beta;
    std::array<std::size_t, 2> rows;
    std::array<std::size_t, 2> cols;
};

inline std::vector<XConfiguration> x_configurations(const ColourMatrix& m)
{
    const std::size_t n = m.colour_count();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pos(n);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            pos[m.at(i, j)].emplace_back(i, j);

    std::vector<XConfiguration> out;
    for (ColourId a = 0; a < n; ++a) {
        if (pos[a].size() != 2)
            continue;
        auto [i1, j1] = pos[a][0];
        auto [i2, j2] = pos[a][1];
        if (i1 == i2 || j1 == j2)
            continue;
        const ColourId b = m.at(i1, j2);
        if (b <= a || pos[b].size() != 2 || m.at(i2, j1) != b)
            continue;
        out.push_back({a, b, {i1, i2}, {j1, j2}});
    }
    return out;
}

/// Signature n_1^{a_1} ... n_k^{a_k}: per-column intersection sizes with A
/// (zeros dropped), as (size, multiplicity) pairs in decreasing size.
struct SetType {
    std::vector<std::pair<std::size_t, std::size_t>> signature;

    std::size_t weight() const
    {
        std::size_t w = 0;
        for (auto [size, mult] : signature)
            w += size * mult;
        return w;
    }

    std::string to_string() const
    {
        std::string s;
        for (auto [size, mult] : signature) {
            if (!s.empty())
                s += ' ';
            s += std::to_string(size) + "^" + std::to_string(mult);
        }
        return s;
    }

    friend bool operator==(const SetType&, const SetType&) = default;
};

inline SetType set_type(const ColourMatrix& m, std::vector<ColourId> colours)
{
    if (colours.empty())
        throw std::invalid_argument("set_type: colour set must be nonempty");
    std::sort(colours.begin(), colours.end());
    colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
    std::map<std::size_t, std::size_t, std::greater<>> hist;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            k += std::binary_search(colours.begin(), colours.end(), m.at(i, j));
        if (k)
            ++hist[k];
    }
    SetType t;
    t.signature.assign(hist.begin(), hist.end());
    return t;
}

struct LabeledEdge {
    std::size_t i;
    std::size_t k; // i < k
    std::size_t label; // r(i,k) >= 1
};

struct PerfectMatching {
    std::array<std::pair<std::size_t, std::size_t>, 3> edges; // (I-side row, K-side row)
    std::size_t weight = 0;
};

/// Perfect matchings of K_{3,3} on a bipartition {I, K} of the six rows.
struct BipartiteMatchings {
    std::array<std::size_t, 3> part_i;
    std::array<std::size_t, 3> part_k;
    std::vector<PerfectMatching> matchings; // all 6
    // The three cyclic-shift matchings partition E(K_{3,3}); their weights.
    std::array<std::size_t, 3> disjoint_weights{};
};

/// Rows as vertices; {i,k} is an edge labeled r(i,k) when r(i,k) >= 1.
struct AuxGraph {
    std::size_t vertices = 0;
    std::vector<LabeledEdge> edges;
    std::vector<std::size_t> degree;
    std::optional<BipartiteMatchings> k33; // p = 6 and G inside some K_{3,3}

    std::size_t label(std::size_t i, std::size_t k) const
    {
        if (i > k)
            std::swap(i, k);
        for (const auto& e : edges)
            if (e.i == i && e.k == k)
                return e.label;
        return 0;
    }
};

inline AuxGraph aux_graph(const ColourMatrix& m)
{
    const LineStats ls(m);
    AuxGraph g;
    g.vertices = m.rows();
    g.degree.assign(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = i + 1; k < m.rows(); ++k)
            if (auto r = ls.row_pair_count(i, k)) {
                g.edges.push_back({i, k, r});
                ++g.degree[i];
                ++g.degree[k];
            }
    if (m.rows() != 6)
        return g;

    // Lexicographically first split {I, K} with 0 in I and every edge crossing.
    for (std::size_t a = 1; a < 6 && !g.k33; ++a)
        for (std::size_t b = a + 1; b < 6 && !g.k33; ++b) {
            std::array<std::size_t, 3> in{0, a, b};
            std::array<std::size_t, 3> out{};
            std::size_t o = 0;
            for (std::size_t v = 0; v < 6; ++v)
                if (v != 0 && v != a && v != b)
                    out[o++] = v;
            auto side = [&](std::size_t v) { return v == 0 || v == a || v == b; };
            bool crossing = std::all_of(g.edges.begin(), g.edges.end(),
                                        [&](const LabeledEdge& e) { return side(e.i) != side(e.k); });
            if (!crossing)
                continue;

            BipartiteMatchings bm;
            bm.part_i = in;
            bm.part_k = out;
            std::array<std::size_t, 3> perm{0, 1, 2};
            do {
                PerfectMatching pm;
                for (std::size_t x = 0; x < 3; ++x) {
                    pm.edges[x] = {in[x], out[perm[x]]};
                    pm.weight += g.label(in[x], out[perm[x]]);
                }
                bm.matchings.push_back(pm);
            } while (std::next_permutation(perm.begin(), perm.end()));
            for (std::size_t shift = 0; shift < 3; ++shift)
                for (std::size_t x = 0; x < 3; ++x)
                    bm.disjoint_weights[shift] += g.label(in[x], out[(x + shift) % 3]);
            g.k33 = bm;
        }
    return g;
}

/// The K_{3,3} matchings, or unsupported_shape when G has none.
inline const BipartiteMatchings& k33_matchings(const AuxGraph& g)
{
    if (g.vertices != 6)
        throw unsupported_shape("matching analytics need exactly 6 rows (got " + std::to_string(g.vertices) + ")");
    if (!g.k33)
        throw unsupported_shape("auxiliary graph is not a subgraph of K_{3,3}");
    return *g.k33;
}

struct SuiteItem {
    std::string name;
    std::string statement;
    bool holds = false;
    std::string observed;
};

/// The nine frequency facts every member of M(6,q,C), q >= 7, |C| = 2q+s,
/// s in [0,7], satisfies. A failing item on a claimed member is a bug or a
/// non-member.
inline std::vector<SuiteItem> lemma_plus_m_suite(const ColourMatrix& m, int s)
{
    if (s < 0 || s > 7)
        throw std::invalid_argument("suite: s must lie in [0,7] (got " + std::to_string(s) + ")");
    if (m.rows() != 6)
        throw std::invalid_argument("suite: matrix must have 6 rows");
    const auto q = static_cast<long long>(m.cols());
    if (q < 7)
        throw std::invalid_argument("suite: q must be at least 7");
    if (static_cast<long long>(m.colour_count()) != 2 * q + s)
        throw std::invalid_argument("suite: palette size " + std::to_string(m.colour_count()) + " is not 2q+s = " +
                                    std::to_string(2 * q + s));

    const auto f = frequency_profile(m);
    const auto e = excess_profile(m, f);
    const LineStats ls(m);
    auto c = [&](std::size_t l) { return static_cast<long long>(f.count(l)); };
    auto c_plus = [&](std::size_t l) { return static_cast<long long>(f.count_at_least(l)); };
    auto num = [](long long v) { return std::to_string(v); };

    std::vector<SuiteItem> out;
    out.push_back({"c1_zero", "c_1 = 0", c(1) == 0, num(c(1))});
    out.push_back({"c7plus_zero", "c_l = 0 for l >= 7", c_plus(7) == 0, num(c_plus(7))});
    out.push_back({"c2_lower", "c_2 >= 3s", c(2) >= 3 * s, num(c(2)) + " >= " + num(3 * s)});
    out.push_back({"c3plus_upper", "c_{3+} <= 2q-2s", c_plus(3) <= 2 * q - 2 * s,
                   num(c_plus(3)) + " <= " + num(2 * q - 2 * s)});
    long long weighted = 0;
    for (std::size_t l = 3; l <= 6; ++l)
        weighted += static_cast<long long>(l) * c(l);
    out.push_back({"weighted_upper", "sum_{i=3}^{6} i*c_i <= 6q-6s", weighted <= 6 * q - 6 * s,
                   num(weighted) + " <= " + num(6 * q - 6 * s)});
    const auto frq = static_cast<long long>(f.min_frequency);
    out.push_back({"frequency_two", "frq(M) = 2", frq == 2, num(frq)});
    out.push_back({"excess_value", "exc(M) = 7-s", e.min_excess == 7 - s, num(e.min_excess) + " vs " + num(7 - s)});
    out.push_back({"c4plus_upper", "c_{4+} <= c_2-3s", c_plus(4) <= c(2) - 3 * s,
                   num(c_plus(4)) + " <= " + num(c(2) - 3 * s)});
    std::size_t max_r = 0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t k = i + 1; k < 6; ++k)
            max_r = std::max(max_r, ls.row_pair_count(i, k));
    out.push_back({"row_pair_upper", "r(i,k) <= 8-s", static_cast<long long>(max_r) <= 8 - s,
                   "max " + num(static_cast<long long>(max_r)) + " <= " + num(8 - s)});
    return out;
}

inline bool all_hold(const std::vector<SuiteItem>& suite)
{
    return std::all_of(suite.begin(), suite.end(), [](const SuiteItem& x) { return x.holds; });
}

} // namespace kpq
