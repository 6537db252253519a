#pragma once

// Achromatic number bounds for K_p x K_q: the generic frequency bound, the
// 2q+6 ceiling for p = 6, and the exact table for K_6 x K_q.

#include "kpq/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace kpq {

/// min(pq, 1 + max_{l in [1, min(p,q)]} l(p+q-l-1)).
inline long long generic_upper(long long p, long long q)
{
    if (p < 1 || q < 1)
        throw std::invalid_argument("generic_upper: p and q must be positive");
    long long best = 0;
    for (long long l = 1; l <= std::min(p, q); ++l)
        best = std::max(best, l * (p + q - l - 1));
    return std::min(best + 1, p * q);
}

/// 2q+6 for q >= 7; generic bound below that.
inline long long k6_upper(long long q)
{
    if (q >= 7)
        return 2 * q + 6;
    return generic_upper(6, q);
}

struct ExactValue {
    long long value;  // achr(K_6 x K_q) = 2q + a
    int a;            // class J_a
    std::string citation;
    bool external;    // established elsewhere, consumed as a table entry
};

/// The J_3..J_6 classification; total over q >= 1.
inline int j_class(long long q)
{
    if (q < 1)
        throw std::invalid_argument("q must be positive");
    if (q == 2 || q == 3 || (q >= 41 && q % 2 == 1))
        return 3;
    if (q == 1 || q == 4 || q == 7 || (q >= 16 && q <= 40) || (q >= 42 && q % 2 == 0))
        return 4;
    if (q == 5 || q == 8)
        return 5;
    if (q == 6 || (q >= 9 && q <= 15))
        return 6;
    throw std::logic_error("J classes do not cover q=" + std::to_string(q));
}

inline ExactValue exact_value(long long q)
{
    const int a = j_class(q);
    ExactValue v{2 * q + a, a, {}, true};
    if (q <= 3)
        v.citation = "HoPu; ChiF";
    else if (q == 4)
        v.citation = "HoPu";
    else if (q == 5)
        v.citation = "HoPc";
    else if (q == 6)
        v.citation = "B";
    else if (q == 7)
        v.citation = "Ho2";
    else if (q % 2 == 1 && q >= 41)
        v.citation = "Ho1";
    else {
        v.external = false;
        if (q == 8)
            v.citation = "this work: achr(K6xK8)=21";
        else if (q <= 15)
            v.citation = "this work: 2q+6 for q in [9,15]";
        else
            v.citation = "this work: 2q+4 for q in [16,40] and even q >= 42";
    }
    return v;
}

/// (2q+3, 2q+6): the band every K_6 x K_q value lies in.
inline std::pair<long long, long long> corollary_band(long long q)
{
    if (q < 1)
        throw std::invalid_argument("q must be positive");
    return {2 * q + 3, 2 * q + 6};
}

struct Bound {
    long long value = 0;
    std::string provenance;
};

struct BoundResult {
    long long p = 0;
    long long q = 0;
    Bound lower;
    Bound upper;
    std::optional<long long> exact;
};

/// Best bounds known to the library for achr(K_p x K_q).
inline BoundResult bound(long long p, long long q)
{
    if (p < 1 || q < 1)
        throw std::invalid_argument("bound: p and q must be positive");
    BoundResult r{p, q, {}, {}, std::nullopt};

    if (p == 1 || q == 1) {
        // K_1 x K_n = K_n
        const long long n = std::max(p, q);
        r.lower = {n, "complete graph K_" + std::to_string(n)};
        r.upper = {n, "complete graph K_" + std::to_string(n)};
    } else if (p == 6 || q == 6) {
        const long long other = p == 6 ? q : p;
        const auto ev = exact_value(other);
        std::string lower_src = ev.external ? "table (external: " + ev.citation + ")" : "table (" + ev.citation + ")";
        if (auto f = best_family(static_cast<int>(std::min<long long>(other, 1 << 30))))
            lower_src = std::string("construction ") + family_name(*f);
        r.lower = {ev.value, lower_src};
        r.upper = {ev.value, ev.external ? "table (external: " + ev.citation + ")" : "table (" + ev.citation + ")"};
    } else {
        // A chi-colouring is complete, so chi = max(p,q) is always attained.
        r.lower = {std::max(p, q), "chromatic number"};
        r.upper = {generic_upper(p, q), "formula: frequency excess bound"};
    }
    if (r.lower.value > r.upper.value)
        throw std::logic_error("inconsistent bounds");
    if (r.lower.value == r.upper.value)
        r.exact = r.lower.value;
    return r;
}

} // namespace kpq
