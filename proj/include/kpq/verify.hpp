#pragma once

// Membership in M(p,q,C): every line has distinct entries and every pair of
// colours shares some line. Also the explicit graph-side check used as an
// independent oracle, and the row/column/colour relabelings that preserve
// membership.

#include "kpq/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kpq {

enum class LineKind { row, column };

/// A colour repeated inside one line, with all of its positions in that line.
struct LineViolation {
    std::size_t line;               // row or column index, 0-based
    ColourId colour;
    std::vector<std::size_t> positions; // indices along the line, 0-based
};

struct ProperCheck {
    bool proper = true;
    std::vector<LineViolation> row_violations;
    std::vector<LineViolation> col_violations;
};

struct GoodPair {
    ColourId a; // a < b
    ColourId b;
    bool by_row = false;
    bool by_column = false;

    bool both() const noexcept { return by_row && by_column; }
};

struct VerificationReport {
    bool proper = false;
    bool complete = false;
    std::vector<LineViolation> row_violations;
    std::vector<LineViolation> col_violations;
    std::vector<std::pair<ColourId, ColourId>> missing_pairs;
    std::size_t good_pair_count = 0;

    bool member() const noexcept { return proper && complete; }
};

namespace detail {

// Repeated colours in one line, given as (position, colour) cells.
inline void collect_repeats(std::size_t line, const std::vector<ColourId>& cells, std::size_t palette_size,
                            std::vector<LineViolation>& out)
{
    std::vector<std::vector<std::size_t>> where(palette_size);
    for (std::size_t k = 0; k < cells.size(); ++k)
        where[cells[k]].push_back(k);
    for (std::size_t c = 0; c < palette_size; ++c)
        if (where[c].size() > 1)
            out.push_back({line, static_cast<ColourId>(c), std::move(where[c])});
}

inline std::vector<ColourId> row_of(const ColourMatrix& m, std::size_t i)
{
    std::vector<ColourId> r(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        r[j] = m.at(i, j);
    return r;
}

inline std::vector<ColourId> col_of(const ColourMatrix& m, std::size_t j)
{
    std::vector<ColourId> c(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        c[i] = m.at(i, j);
    return c;
}

inline void check_bijection(const std::vector<std::size_t>& f, std::size_t n, const char* what)
{
    if (f.size() != n)
        throw std::invalid_argument(std::string(what) + ": expected a permutation of size " + std::to_string(n));
    std::vector<char> hit(n, 0);
    for (auto x : f) {
        if (x >= n || hit[x])
            throw std::invalid_argument(std::string(what) + " is not a bijection");
        hit[x] = 1;
    }
}

} // namespace detail

/// Lists every repeated colour in every row and column.
inline ProperCheck check_proper(const ColourMatrix& m)
{
    ProperCheck out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        detail::collect_repeats(i, detail::row_of(m, i), m.colour_count(), out.row_violations);
    for (std::size_t j = 0; j < m.cols(); ++j)
        detail::collect_repeats(j, detail::col_of(m, j), m.colour_count(), out.col_violations);
    out.proper = out.row_violations.empty() && out.col_violations.empty();
    return out;
}

/// Pairs of distinct colours sharing at least one line, sorted by (a, b).
inline std::vector<GoodPair> good_pairs(const ColourMatrix& m)
{
    const std::size_t n = m.colour_count();
    // bit 1: row witness, bit 2: column witness
    std::vector<unsigned char> seen(n * n, 0);
    auto mark = [&](const std::vector<ColourId>& line, unsigned char bit) {
        for (std::size_t x = 0; x < line.size(); ++x)
            for (std::size_t y = x + 1; y < line.size(); ++y) {
                auto a = std::min(line[x], line[y]);
                auto b = std::max(line[x], line[y]);
                if (a != b)
                    seen[a * n + b] |= bit;
            }
    };
    for (std::size_t i = 0; i < m.rows(); ++i)
        mark(detail::row_of(m, i), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        mark(detail::col_of(m, j), 2);

    std::vector<GoodPair> out;
    for (ColourId a = 0; a < n; ++a)
        for (ColourId b = a + 1; b < n; ++b)
            if (auto s = seen[a * n + b])
                out.push_back({a, b, (s & 1) != 0, (s & 2) != 0});
    return out;
}

inline VerificationReport verify_membership(const ColourMatrix& m)
{
    VerificationReport r;
    auto pc = check_proper(m);
    r.proper = pc.proper;
    r.row_violations = std::move(pc.row_violations);
    r.col_violations = std::move(pc.col_violations);

    const std::size_t n = m.colour_count();
    std::vector<char> good(n * n, 0);
    for (const auto& gp : good_pairs(m))
        good[gp.a * n + gp.b] = 1;
    for (ColourId a = 0; a < n; ++a)
        for (ColourId b = a + 1; b < n; ++b) {
            if (good[a * n + b])
                ++r.good_pair_count;
            else
                r.missing_pairs.emplace_back(a, b);
        }
    r.complete = r.missing_pairs.empty();
    return r;
}

inline bool is_member(const ColourMatrix& m) { return verify_membership(m).member(); }

/// out(i, j) = colour_map[m(row_map[i], col_map[j])]. All maps are 0-based
/// bijections; colour_map recolours within the same palette.
inline ColourMatrix permute(const ColourMatrix& m, const std::vector<std::size_t>& row_map,
                            const std::vector<std::size_t>& col_map, const std::vector<std::size_t>& colour_map)
{
    detail::check_bijection(row_map, m.rows(), "row permutation");
    detail::check_bijection(col_map, m.cols(), "column permutation");
    detail::check_bijection(colour_map, m.colour_count(), "colour map");
    std::vector<ColourId> entries;
    entries.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            entries.push_back(static_cast<ColourId>(colour_map[m.at(row_map[i], col_map[j])]));
    return ColourMatrix(m.rows(), m.cols(), std::move(entries), m.palette());
}

inline std::vector<std::size_t> identity_permutation(std::size_t n)
{
    std::vector<std::size_t> v(n);
    for (std::size_t k = 0; k < n; ++k)
        v[k] = k;
    return v;
}

// ---------------------------------------------------------------------------
// Graph side: K_p x K_q as an explicit vertex and edge list.

struct Vertex {
    std::size_t row;
    std::size_t col;
};

struct ProductGraph {
    std::size_t p = 0;
    std::size_t q = 0;
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // vertex indices
};

/// Vertices [0,p) x [0,q); (i1,j1)(i2,j2) is an edge iff exactly one
/// coordinate agrees.
inline ProductGraph complete_grid_product(std::size_t p, std::size_t q)
{
    ProductGraph g;
    g.p = p;
    g.q = q;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j)
            g.vertices.push_back({i, j});
    for (std::size_t u = 0; u < g.vertices.size(); ++u)
        for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
            const auto& a = g.vertices[u];
            const auto& b = g.vertices[v];
            if ((a.row == b.row) != (a.col == b.col))
                g.edges.emplace_back(u, v);
        }
    return g;
}

struct VertexColouring {
    ProductGraph graph;
    std::vector<ColourId> colour; // per vertex
    std::size_t colour_count = 0;
};

struct GraphCheck {
    bool proper = false;
    bool complete = false;
};

inline VertexColouring to_graph_colouring(const ColourMatrix& m)
{
    VertexColouring f;
    f.graph = complete_grid_product(m.rows(), m.cols());
    f.colour_count = m.colour_count();
    for (const auto& v : f.graph.vertices)
        f.colour.push_back(m.at(v.row, v.col));
    return f;
}

/// Edge-by-edge properness and completeness.
inline GraphCheck validate_on_graph(const VertexColouring& f)
{
    GraphCheck r;
    r.proper = true;
    std::set<std::pair<ColourId, ColourId>> met;
    for (const auto& [u, v] : f.graph.edges) {
        auto a = f.colour[u];
        auto b = f.colour[v];
        if (a == b) {
            r.proper = false;
            continue;
        }
        met.emplace(std::min(a, b), std::max(a, b));
    }
    const std::size_t n = f.colour_count;
    r.complete = met.size() == n * (n - 1) / 2;
    return r;
}

} // namespace kpq
