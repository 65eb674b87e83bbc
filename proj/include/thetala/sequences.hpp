#ifndef THETALA_SEQUENCES_HPP
#define THETALA_SEQUENCES_HPP

#include <thetala/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace thetala {

// Terms may fall outside [1, q] mid-construction; only assembled labelings
// are range-checked (by verify).
using IntSeq = std::vector<std::int64_t>;

// first, first + diff, ..., len terms.
struct ArithSeq {
    std::int64_t first {};
    std::int64_t diff {};
    std::int64_t len {};

    std::int64_t term(std::int64_t t) const { return first + (t - 1) * diff; }

    IntSeq terms() const
    {
        IntSeq out;
        out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(len, 0)));
        for (std::int64_t t = 1; t <= len; ++t)
            out.push_back(term(t));
        return out;
    }

    operator IntSeq() const { return terms(); }
};

inline IntSeq arith(std::int64_t first, std::int64_t diff, std::int64_t len)
{
    return ArithSeq { first, diff, len }.terms();
}

// Interleave: odd positions from a1, even positions from a2.
// |a1| must equal |a2| or |a2| + 1.
inline IntSeq diamond(std::span<const std::int64_t> a1, std::span<const std::int64_t> a2)
{
    if (a1.size() != a2.size() && a1.size() != a2.size() + 1)
        throw LengthMismatch("diamond needs |A1| = |A2| or |A2| + 1, got " + std::to_string(a1.size()) + " and "
            + std::to_string(a2.size()));
    IntSeq out;
    out.reserve(a1.size() + a2.size());
    for (std::size_t i = 0; i < a1.size(); ++i) {
        out.push_back(a1[i]);
        if (i < a2.size())
            out.push_back(a2[i]);
    }
    return out;
}

inline IntSeq diamond(const ArithSeq& a1, const ArithSeq& a2) { return diamond(a1.terms(), a2.terms()); }

namespace detail {
    inline void require_positive(std::int64_t m)
    {
        if (m < 1)
            throw std::invalid_argument("sequence parameter m must be >= 1, got " + std::to_string(m));
    }
} // namespace detail

// Length 2m; consecutive sums alternate q, q + 2.
inline IntSeq make_I(std::int64_t m, std::int64_t q, std::int64_t a)
{
    detail::require_positive(m);
    return diamond(ArithSeq { a, 2, m }, ArithSeq { q - a, -2, m });
}

// Length 2m; consecutive sums alternate q + 2, q.
inline IntSeq make_D(std::int64_t m, std::int64_t q, std::int64_t b)
{
    detail::require_positive(m);
    return diamond(ArithSeq { b, -2, m }, ArithSeq { q - b + 2, 2, m });
}

// Length 2m + 1, first a, last a + 2m.
inline IntSeq make_I_star(std::int64_t m, std::int64_t q, std::int64_t a)
{
    detail::require_positive(m);
    return diamond(ArithSeq { a, 2, m + 1 }, ArithSeq { q - a, -2, m });
}

// Length 2m + 1, first b, last b - 2m.
inline IntSeq make_D_star(std::int64_t m, std::int64_t q, std::int64_t b)
{
    detail::require_positive(m);
    return diamond(ArithSeq { b, -2, m + 1 }, ArithSeq { q - b + 2, 2, m });
}

inline std::vector<IntSeq> split(std::span<const std::int64_t> seq, std::span<const int> piece_lengths)
{
    std::int64_t total = 0;
    for (int len : piece_lengths) {
        if (len < 0)
            throw LengthMismatch("negative piece length");
        total += len;
    }
    if (total != static_cast<std::int64_t>(seq.size()))
        throw LengthMismatch("piece lengths sum to " + std::to_string(total) + ", sequence has "
            + std::to_string(seq.size()) + " terms");
    std::vector<IntSeq> out;
    std::size_t at = 0;
    for (int len : piece_lengths) {
        out.emplace_back(seq.begin() + at, seq.begin() + at + len);
        at += len;
    }
    return out;
}

inline IntSeq reverse(std::span<const std::int64_t> seq) { return IntSeq(seq.rbegin(), seq.rend()); }

inline IntSeq concat(std::span<const IntSeq> pieces)
{
    IntSeq out;
    for (const auto& p : pieces)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace thetala

#endif
