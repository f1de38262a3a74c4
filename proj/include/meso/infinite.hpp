#pragma once

// The five eventually-periodic families of infinite mesosome-free words,
// and the decision of whether a finite word extends to one of them.
//
//   AllZero            0^w
//   ZerosThenOnes      0^i 1^w
//   ZerosOnesZeros     0^i 1^(2j-1) 0^w
//   ZeroBlockTenOnes   0^i 1 0 1^w
//   Alternating        (01)^w
//
// plus the binary complement of each. Every finite prefix of these is
// mesosome-free; conversely a mesosome-free word extends infinitely unless
// it is a strict four-run word (shape E), which admits only finitely many
// further symbols.

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

#include "meso/classifier.hpp"
#include "meso/word.hpp"

namespace meso {

enum class InfiniteVariant {
    AllZero,
    ZerosThenOnes,
    ZerosOnesZeros,
    ZeroBlockTenOnes,
    Alternating,
};

/// One eventually-periodic mesosome-free family. `i` is the leading-block
/// exponent where the variant uses one; ZerosOnesZeros additionally carries
/// `j`, its middle 1-block having odd length 2j-1 by construction.
struct InfiniteForm {
    InfiniteVariant variant = InfiniteVariant::AllZero;
    std::size_t i = 0;
    std::size_t j = 0;
    bool complemented = false;

    bool operator==(const InfiniteForm&) const = default;
};

/// The length-n prefix of the infinite word a form describes.
inline BinaryWord prefix(const InfiniteForm& form, std::size_t n) {
    std::vector<Symbol> out;
    out.reserve(n);
    auto emit_run = [&](Symbol s, std::size_t len) {
        while (len > 0 && out.size() < n) {
            out.push_back(s);
            --len;
        }
    };
    switch (form.variant) {
        case InfiniteVariant::AllZero:
            emit_run(0, n);
            break;
        case InfiniteVariant::ZerosThenOnes:
            assert(form.i >= 1);
            emit_run(0, form.i);
            emit_run(1, n);
            break;
        case InfiniteVariant::ZerosOnesZeros:
            assert(form.i >= 1 && form.j >= 1);
            emit_run(0, form.i);
            emit_run(1, 2 * form.j - 1);
            emit_run(0, n);
            break;
        case InfiniteVariant::ZeroBlockTenOnes:
            assert(form.i >= 1);
            emit_run(0, form.i);
            emit_run(1, 1);
            emit_run(0, 1);
            emit_run(1, n);
            break;
        case InfiniteVariant::Alternating:
            while (out.size() < n) out.push_back(static_cast<Symbol>(out.size() % 2));
            break;
    }
    BinaryWord word(std::move(out));
    return form.complemented ? complement(word) : word;
}

/// Every form with parameters in [1, i_max] x [1, j_max], both complement
/// flags, in a fixed deterministic order.
inline std::vector<InfiniteForm> canonical_forms(std::size_t i_max, std::size_t j_max) {
    assert(i_max >= 1 && j_max >= 1);
    std::vector<InfiniteForm> forms;
    auto both_flags = [&](InfiniteForm f) {
        forms.push_back(f);
        f.complemented = true;
        forms.push_back(f);
    };
    both_flags({InfiniteVariant::AllZero, 0, 0, false});
    for (std::size_t i = 1; i <= i_max; ++i)
        both_flags({InfiniteVariant::ZerosThenOnes, i, 0, false});
    for (std::size_t i = 1; i <= i_max; ++i)
        for (std::size_t j = 1; j <= j_max; ++j)
            both_flags({InfiniteVariant::ZerosOnesZeros, i, j, false});
    for (std::size_t i = 1; i <= i_max; ++i)
        both_flags({InfiniteVariant::ZeroBlockTenOnes, i, 0, false});
    both_flags({InfiniteVariant::Alternating, 0, 0, false});
    return forms;
}

/// Serialization such as "0^2 1^3 0^w", "(01)^w", "~0^3 1^w" (complement).
inline std::string to_string(const InfiniteForm& form) {
    auto block = [](char symbol, std::size_t len) {
        std::string s(1, symbol);
        if (len != 1) s += "^" + std::to_string(len);
        return s;
    };
    std::string body;
    switch (form.variant) {
        case InfiniteVariant::AllZero:
            body = "0^w";
            break;
        case InfiniteVariant::ZerosThenOnes:
            body = block('0', form.i) + " 1^w";
            break;
        case InfiniteVariant::ZerosOnesZeros:
            body = block('0', form.i) + " " + block('1', 2 * form.j - 1) + " 0^w";
            break;
        case InfiniteVariant::ZeroBlockTenOnes:
            body = block('0', form.i) + " 1 0 1^w";
            break;
        case InfiniteVariant::Alternating:
            body = "(01)^w";
            break;
    }
    return form.complemented ? "~" + body : body;
}

/// True iff w is a prefix of some infinite mesosome-free word: w must be
/// mesosome-free and not a strict four-run (shape E) word. Shape-E words
/// accept only 1s, and only while the trailing run stays shorter than the
/// first 1-run, so they never extend past a bounded length.
inline bool is_infinitely_extendable(const BinaryWord& w) {
    if (w.empty()) return true;
    const auto form = classify(w);
    return form.has_value() && form->variant != Form::E;
}

namespace detail {

inline bool extendable_search(std::vector<Symbol>& current, std::size_t target) {
    if (current.size() == target) return true;
    for (Symbol s : {Symbol{0}, Symbol{1}}) {
        current.push_back(s);
        const bool viable = is_mesosome_free(BinaryWord(current));
        if (viable && extendable_search(current, target)) return true;
        current.pop_back();
    }
    return false;
}

}  // namespace detail

/// Brute-force extendability: depth-first search for a mesosome-free word
/// of length 2|w| + 2 with w as a prefix, pruning as soon as a branch stops
/// being free. That depth is decisive: a shape-E word of length |w| admits
/// fewer than |w| further symbols, while every other free word reaches any
/// length. Throws BoundExceededError when |w| > cap / 2.
inline bool extendable_oracle(const BinaryWord& w,
                              std::size_t cap = kDefaultEnumerationCap) {
    if (w.size() > cap / 2)
        throw BoundExceededError("extension search from length " +
                                 std::to_string(w.size()) + " exceeds cap " +
                                 std::to_string(cap));
    if (!is_mesosome_free(w)) return false;
    std::vector<Symbol> current(w.begin(), w.end());
    return detail::extendable_search(current, 2 * w.size() + 2);
}

}  // namespace meso
