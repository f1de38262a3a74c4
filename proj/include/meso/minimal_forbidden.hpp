#pragma once

// Minimal forbidden words: mesosomes none of whose proper factors is a
// mesosome. The definitional test scans factors; the generator produces
// the complete set of a given length from three explicit four-run/three-run
// families (plus hard-coded lists at lengths 4 and 6, where extra small
// words exist that the families miss).

#include <algorithm>
#include <cstddef>
#include <vector>

#include "meso/detector.hpp"
#include "meso/word.hpp"

namespace meso {

/// True iff w is a mesosome and no proper (strictly shorter) factor of w
/// is a mesosome.
inline bool is_minimal_forbidden(const BinaryWord& w) {
    if (!is_mesosome(w)) return false;
    for (std::size_t half = 1; 2 * half < w.size(); ++half)
        for (std::size_t start = 0; start + 2 * half <= w.size(); ++start)
            if (is_mesosome(factor(w, start, 2 * half))) return false;
    return true;
}

/// Count of minimal forbidden words of length n:
/// 0 for odd n and n < 4; 2 at n = 4; 10 at n = 6; then n-2 when
/// n = 0 (mod 4) and n when n = 2 (mod 4).
inline long long count_minimal_forbidden(std::size_t n) {
    if (n < 4 || n % 2 != 0) return 0;
    if (n == 4) return 2;
    if (n == 6) return 10;
    return n % 4 == 0 ? static_cast<long long>(n) - 2 : static_cast<long long>(n);
}

/// The complete set of minimal forbidden words of length n, sorted
/// lexicographically.
inline std::vector<BinaryWord> generate_minimal_forbidden(std::size_t n) {
    std::vector<BinaryWord> out;
    if (n < 4 || n % 2 != 0) return out;

    if (n == 4) {
        out.push_back(BinaryWord::from_text("0110"));
    } else if (n == 6) {
        for (const char* text : {"001010", "010001", "010100", "011101", "011110"})
            out.push_back(BinaryWord::from_text(text));
    } else {
        // Family ranges per residue class; both stop before the middle run
        // degenerates.
        const std::size_t i_max = n % 4 == 0 ? n / 4 - 1 : (n - 2) / 4;
        for (std::size_t i = 1; i <= i_max; ++i) {
            // 0^(2i-1) 1^(n-4i+1) 0^(2i-1) 1
            out.push_back(from_runs({0, {2 * i - 1, n - 4 * i + 1, 2 * i - 1, 1}}));
            // 0 1^(2i-1) 0^(n-4i+1) 1^(2i-1)
            out.push_back(from_runs({0, {1, 2 * i - 1, n - 4 * i + 1, 2 * i - 1}}));
        }
        // 0 1^(n-2) 0
        out.push_back(from_runs({0, {1, n - 2, 1}}));
    }

    const std::size_t zero_leading = out.size();
    for (std::size_t idx = 0; idx < zero_leading; ++idx)
        out.push_back(complement(out[idx]));

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace meso
