#pragma once

// Ground-truth mesosome detection straight from the definition: a mesosome
// is a word x·x' where x' is a conjugate of x and x' != x. Everything here
// is a deliberately naive scan; the classifier is the fast path and is
// tested against this module.

#include <cstddef>
#include <vector>

#include "meso/word.hpp"

namespace meso {

/// A mesosome factor found inside a host word: the factor is
/// w[start .. start + 2*half_length), split at its midpoint.
struct MesosomeOccurrence {
    std::size_t start = 0;
    std::size_t half_length = 0;

    bool operator==(const MesosomeOccurrence&) const = default;
    auto operator<=>(const MesosomeOccurrence&) const = default;
};

/// True iff w itself is a mesosome: even positive length, and the midpoint
/// split (x, x') has x' conjugate to x with x' != x.
inline bool is_mesosome(const BinaryWord& w) {
    if (w.empty() || w.size() % 2 != 0) return false;
    const std::size_t half = w.size() / 2;
    const BinaryWord x = factor(w, 0, half);
    const BinaryWord xp = factor(w, half, half);
    return x != xp && are_conjugate(x, xp);
}

/// True iff some factor of w is a mesosome. Scans every even-length factor.
inline bool contains_mesosome(const BinaryWord& w) {
    for (std::size_t half = 1; 2 * half <= w.size(); ++half)
        for (std::size_t start = 0; start + 2 * half <= w.size(); ++start)
            if (is_mesosome(factor(w, start, 2 * half))) return true;
    return false;
}

/// Every mesosome occurrence in w, sorted by (start, half_length).
inline std::vector<MesosomeOccurrence> find_mesosomes(const BinaryWord& w) {
    std::vector<MesosomeOccurrence> found;
    for (std::size_t start = 0; start + 2 <= w.size(); ++start)
        for (std::size_t half = 1; start + 2 * half <= w.size(); ++half)
            if (is_mesosome(factor(w, start, 2 * half)))
                found.push_back(MesosomeOccurrence{start, half});
    return found;
}

}  // namespace meso
