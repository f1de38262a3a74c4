#pragma once

// Exact counts of mesosome-free binary words of length n, three ways:
//
//   count_closed_form   cubic polynomials in floor(n/4), one per n mod 4,
//                       with hard-coded table values below n = 5
//   count_by_runs       per-run-count breakdown summed from first principles
//   count_by_enumeration  exhaustive scan with the linear classifier
//
// All arithmetic is exact 64-bit integer; every polynomial division is
// checked and throws on a nonzero remainder rather than rounding.

#include <array>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include "meso/classifier.hpp"
#include "meso/word.hpp"

namespace meso {

namespace detail {

// Intermediate polynomial values are kept in 128 bits; anything that does
// not fit the public 64-bit result type is an error, never a wraparound.
inline long long to_count(__int128 value) {
    if (value > std::numeric_limits<long long>::max() ||
        value < std::numeric_limits<long long>::min())
        throw std::overflow_error("count exceeds 64-bit range");
    return static_cast<long long>(value);
}

inline long long exact_div(__int128 numerator, long long divisor) {
    if (numerator % divisor != 0)
        throw std::logic_error("closed form is not integral (divisor " +
                               std::to_string(divisor) + ")");
    return to_count(numerator / divisor);
}

}  // namespace detail

/// Number of ways to write r = i + k with i, k >= 1, i < k, and k odd.
/// Equals floor(r/4); the pair enumeration is kept as a test oracle.
inline long long split_count(long long r) {
    assert(r >= 0);
    return r / 4;
}

/// Convolution sum_{0 <= r <= n} split_count(r) * split_count(n - r): the
/// number of strict four-run mesosome-free words of length n starting with
/// 0 (classifier shape E), counted by splitting n into the 0-run and 1-run
/// totals independently.
inline long long split_convolution(long long n) {
    assert(n >= 0);
    __int128 total = 0;
    for (long long r = 0; r <= n; ++r)
        total += static_cast<__int128>(split_count(r)) * split_count(n - r);
    return detail::to_count(total);
}

/// Closed form of split_convolution, cubic in q = floor(n/4) per residue.
/// Cross-check only; the convolution is authoritative.
inline long long split_convolution_closed(long long n) {
    assert(n >= 0);
    const __int128 q = n / 4;
    if (q > 2'000'000) throw std::overflow_error("count exceeds 64-bit range");
    switch (n % 4) {
        case 0: return detail::exact_div(4 * q * q * q - 9 * q * q + 5 * q, 6);
        case 1: return detail::exact_div(2 * q * q * q - 3 * q * q + q, 3);
        case 2: return detail::exact_div(4 * q * q * q - 3 * q * q - q, 6);
        default: return detail::exact_div(2 * q * q * q - 2 * q, 3);
    }
}

/// Counts of mesosome-free words of length n that start with 0, split by
/// run structure; `total` covers both starting symbols (and equals 1 for
/// n = 0, the empty word, which has no run decomposition).
struct CountBreakdown {
    std::size_t n = 0;
    long long one_run = 0;
    long long two_runs = 0;
    long long three_runs = 0;
    long long four_runs_case_a = 0;   // 0^i 1 0 1^j
    long long four_runs_case_b = 0;   // strict shape-E words
    long long five_plus_runs = 0;     // the alternating word, once n >= 5
    long long total = 0;

    bool operator==(const CountBreakdown&) const = default;
};

/// Per-run-count breakdown of the mesosome-free words of length n.
inline CountBreakdown count_by_runs(std::size_t n) {
    CountBreakdown b;
    b.n = n;
    if (n == 0) {
        b.total = 1;
        return b;
    }
    const __int128 ln = static_cast<long long>(n);
    b.one_run = 1;
    b.two_runs = n >= 2 ? static_cast<long long>(n) - 1 : 0;
    if (n >= 3)
        b.three_runs = n % 2 == 0 ? detail::exact_div(ln * (ln - 2), 4)
                                  : detail::exact_div((ln - 1) * (ln - 1), 4);
    b.four_runs_case_a = n >= 4 ? static_cast<long long>(n) - 3 : 0;
    b.four_runs_case_b = split_convolution(static_cast<long long>(n));
    b.five_plus_runs = n >= 5 ? 1 : 0;
    b.total = detail::to_count(
        2 * (static_cast<__int128>(b.one_run) + b.two_runs + b.three_runs +
             b.four_runs_case_a + b.four_runs_case_b + b.five_plus_runs));
    return b;
}

/// m(n), the number of mesosome-free binary words of length n. Closed
/// cubic in k = floor(n/4) for n >= 5; table values below that (the cubic
/// would give 16 at n = 4, but the true count is 14).
inline long long count_closed_form(std::size_t n) {
    static constexpr std::array<long long, 5> small = {1, 2, 4, 8, 14};
    if (n <= 4) return small[n];
    const __int128 k = static_cast<long long>(n / 4);
    if (k > 2'000'000) throw std::overflow_error("count exceeds 64-bit range");
    switch (n % 4) {
        case 0: return detail::exact_div(4 * k * k * k + 15 * k * k + 41 * k - 12, 3);
        case 1: return detail::exact_div(4 * k * k * k + 18 * k * k + 50 * k, 3);
        case 2: return detail::exact_div(4 * k * k * k + 21 * k * k + 59 * k + 12, 3);
        default: return detail::exact_div(4 * k * k * k + 24 * k * k + 68 * k + 30, 3);
    }
}

/// m(n) by exhaustive enumeration over all 2^n words. Throws
/// BoundExceededError when n exceeds the cap.
inline long long count_by_enumeration(std::size_t n,
                                      std::size_t cap = kDefaultEnumerationCap) {
    if (n > cap)
        throw BoundExceededError("enumeration of length " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
    long long total = 0;
    for (const BinaryWord& w : enumerate_words(n))
        if (is_mesosome_free(w)) ++total;
    return total;
}

}  // namespace meso
