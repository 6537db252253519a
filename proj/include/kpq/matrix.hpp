#pragma once

// Colour matrices over a palette: the certificate object for complete
// colourings of K_p x K_q. Row i / column j of the matrix is vertex (i, j).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kpq {

using ColourId = std::uint32_t;

/// Malformed matrix or input file. Distinct from a failed verification.
class structural_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Colour {
    ColourId id;
    std::string token;
};

/// Ordered set of colours with dense ids 0..size()-1 and distinct tokens.
class Palette {
public:
    Palette() = default;

    explicit Palette(std::vector<std::string> tokens) : tokens_(std::move(tokens))
    {
        if (tokens_.empty())
            throw structural_error("palette must not be empty");
        index_.reserve(tokens_.size());
        for (std::size_t i = 0; i < tokens_.size(); ++i) {
            const auto& t = tokens_[i];
            if (t.empty())
                throw structural_error("empty colour token");
            for (char ch : t)
                if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
                    throw structural_error("colour token contains whitespace: '" + t + "'");
            if (!index_.emplace(t, static_cast<ColourId>(i)).second)
                throw structural_error("duplicate colour token '" + t + "'");
        }
    }

    /// Tokens "first", "first+1", ... for n colours.
    static Palette numbered(std::size_t n, int first = 1)
    {
        std::vector<std::string> tokens;
        tokens.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            tokens.push_back(std::to_string(first + static_cast<int>(i)));
        return Palette(std::move(tokens));
    }

    std::size_t size() const noexcept { return tokens_.size(); }
    const std::string& token(ColourId id) const { return tokens_.at(id); }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }
    Colour colour(ColourId id) const { return {id, token(id)}; }

    bool contains(const std::string& token) const { return index_.count(token) != 0; }

    ColourId id(const std::string& token) const
    {
        auto it = index_.find(token);
        if (it == index_.end())
            throw std::invalid_argument("unknown colour token '" + token + "'");
        return it->second;
    }

    friend bool operator==(const Palette& a, const Palette& b) { return a.tokens_ == b.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, ColourId> index_;
};

/// p x q matrix of colour ids. Every palette colour occurs at least once;
/// the matrix is immutable after construction.
class ColourMatrix {
public:
    ColourMatrix(std::size_t p, std::size_t q, std::vector<ColourId> entries, Palette palette)
        : p_(p), q_(q), entries_(std::move(entries)), palette_(std::move(palette))
    {
        if (p_ == 0 || q_ == 0)
            throw structural_error("matrix dimensions must be positive");
        if (entries_.size() != p_ * q_)
            throw structural_error("expected " + std::to_string(p_ * q_) + " entries, got " +
                                   std::to_string(entries_.size()));
        std::vector<char> used(palette_.size(), 0);
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            if (entries_[k] >= palette_.size())
                throw structural_error("entry (" + std::to_string(k / q_ + 1) + "," +
                                       std::to_string(k % q_ + 1) + ") has colour id " +
                                       std::to_string(entries_[k]) + " outside palette of size " +
                                       std::to_string(palette_.size()));
            used[entries_[k]] = 1;
        }
        for (std::size_t c = 0; c < used.size(); ++c)
            if (!used[c])
                throw structural_error("palette colour '" + palette_.token(static_cast<ColourId>(c)) +
                                       "' does not occur in the matrix");
    }

    /// Palette is the distinct tokens in row-major order of first appearance.
    static ColourMatrix from_tokens(std::size_t p, std::size_t q, const std::vector<std::string>& cells)
    {
        if (cells.size() != p * q)
            throw structural_error("expected " + std::to_string(p * q) + " tokens, got " +
                                   std::to_string(cells.size()));
        std::vector<std::string> tokens;
        std::unordered_map<std::string, ColourId> seen;
        std::vector<ColourId> entries;
        entries.reserve(cells.size());
        for (const auto& t : cells) {
            auto [it, fresh] = seen.emplace(t, static_cast<ColourId>(tokens.size()));
            if (fresh)
                tokens.push_back(t);
            entries.push_back(it->second);
        }
        return ColourMatrix(p, q, std::move(entries), Palette(std::move(tokens)));
    }

    /// Rows of integer ids; palette tokens are the ids in decimal.
    static ColourMatrix from_ids(const std::vector<std::vector<ColourId>>& rows)
    {
        if (rows.empty() || rows.front().empty())
            throw structural_error("matrix dimensions must be positive");
        const std::size_t q = rows.front().size();
        std::vector<ColourId> entries;
        ColourId max_id = 0;
        for (const auto& r : rows) {
            if (r.size() != q)
                throw structural_error("ragged rows");
            for (ColourId c : r) {
                entries.push_back(c);
                max_id = std::max(max_id, c);
            }
        }
        return ColourMatrix(rows.size(), q, std::move(entries), Palette::numbered(max_id + 1, 0));
    }

    std::size_t rows() const noexcept { return p_; }
    std::size_t cols() const noexcept { return q_; }
    std::size_t colour_count() const noexcept { return palette_.size(); }
    const Palette& palette() const noexcept { return palette_; }
    const std::vector<ColourId>& entries() const noexcept { return entries_; }

    /// 0-based (row, column).
    ColourId at(std::size_t i, std::size_t j) const { return entries_[i * q_ + j]; }
    const std::string& token_at(std::size_t i, std::size_t j) const { return palette_.token(at(i, j)); }

    friend bool operator==(const ColourMatrix& a, const ColourMatrix& b)
    {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.entries_ == b.entries_ && a.palette_ == b.palette_;
    }

private:
    std::size_t p_;
    std::size_t q_;
    std::vector<ColourId> entries_;
    Palette palette_;
};

/// Horizontal block concatenation (A B). Colours are identified by token.
inline ColourMatrix hconcat(const ColourMatrix& a, const ColourMatrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("hconcat: row counts differ");
    const std::size_t p = a.rows();
    const std::size_t q = a.cols() + b.cols();
    std::vector<std::string> tokens = a.palette().tokens();
    std::unordered_map<std::string, ColourId> index;
    for (std::size_t i = 0; i < tokens.size(); ++i)
        index.emplace(tokens[i], static_cast<ColourId>(i));
    std::vector<ColourId> b_map(b.colour_count());
    for (ColourId c = 0; c < b.colour_count(); ++c) {
        const auto& t = b.palette().token(c);
        auto [it, fresh] = index.emplace(t, static_cast<ColourId>(tokens.size()));
        if (fresh)
            tokens.push_back(t);
        b_map[c] = it->second;
    }
    std::vector<ColourId> entries;
    entries.reserve(p * q);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            entries.push_back(a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j)
            entries.push_back(b_map[b.at(i, j)]);
    }
    return ColourMatrix(p, q, std::move(entries), Palette(std::move(tokens)));
}

// Text format: "p q\n" then p lines of q tokens separated by single spaces.

inline void write_matrix(std::ostream& os, const ColourMatrix& m)
{
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                os << ' ';
            os << m.token_at(i, j);
        }
        os << '\n';
    }
}

inline std::string to_text(const ColourMatrix& m)
{
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

inline ColourMatrix read_matrix(std::istream& is)
{
    long long p = 0, q = 0;
    if (!(is >> p >> q))
        throw structural_error("missing 'p q' header");
    if (p <= 0 || q <= 0)
        throw structural_error("matrix dimensions must be positive");
    std::string rest;
    std::getline(is, rest);
    if (rest.find_first_not_of(" \t\r") != std::string::npos)
        throw structural_error("trailing data after 'p q' header");

    std::vector<std::string> cells;
    cells.reserve(static_cast<std::size_t>(p * q));
    std::string line;
    for (long long i = 0; i < p; ++i) {
        if (!std::getline(is, line))
            throw structural_error("expected " + std::to_string(p) + " rows, got " + std::to_string(i));
        std::istringstream ls(line);
        std::string tok;
        long long count = 0;
        while (ls >> tok) {
            cells.push_back(tok);
            ++count;
        }
        if (count != q)
            throw structural_error("row " + std::to_string(i + 1) + " has " + std::to_string(count) +
                                   " tokens, expected " + std::to_string(q));
    }
    while (std::getline(is, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw structural_error("unexpected data after row " + std::to_string(p));
    return ColourMatrix::from_tokens(static_cast<std::size_t>(p), static_cast<std::size_t>(q), cells);
}

inline ColourMatrix parse_matrix(const std::string& text)
{
    std::istringstream is(text);
    return read_matrix(is);
}

} // namespace kpq
