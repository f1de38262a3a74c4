#pragma once

// Binary words over {0,1}: construction, complement/reversal, run-length
// encoding, factor extraction, conjugacy, and exhaustive enumeration.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace meso {

/// A single symbol, always 0 or 1.
using Symbol = std::uint8_t;

class InvalidSymbolError : public std::invalid_argument {
public:
    explicit InvalidSymbolError(std::size_t position)
        : std::invalid_argument("invalid symbol at position " +
                                std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class EmptyWordError : public std::invalid_argument {
public:
    EmptyWordError() : std::invalid_argument("operation requires a nonempty word") {}
};

class ZeroRunError : public std::invalid_argument {
public:
    ZeroRunError() : std::invalid_argument("run lengths must be >= 1") {}
};

class OutOfRangeError : public std::out_of_range {
public:
    OutOfRangeError() : std::out_of_range("factor exceeds word boundary") {}
};

class BoundExceededError : public std::length_error {
public:
    explicit BoundExceededError(const std::string& what) : std::length_error(what) {}
};

/// A finite word over {0,1}. Immutable value type; comparisons are
/// lexicographic with 0 < 1.
class BinaryWord {
public:
    BinaryWord() = default;

    /// Wraps a symbol vector. Every entry must already be 0 or 1.
    explicit BinaryWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
#ifndef NDEBUG
        for (Symbol s : symbols_) assert(s <= 1);
#endif
    }

    /// Parses a string of '0'/'1' characters. Throws InvalidSymbolError
    /// with the offending position for anything else.
    static BinaryWord from_text(std::string_view text) {
        std::vector<Symbol> symbols;
        symbols.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1') throw InvalidSymbolError(i);
            symbols.push_back(static_cast<Symbol>(text[i] - '0'));
        }
        return BinaryWord(std::move(symbols));
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    Symbol operator[](std::size_t i) const {
        assert(i < symbols_.size());
        return symbols_[i];
    }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    std::string to_string() const {
        std::string out(symbols_.size(), '0');
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            out[i] = static_cast<char>('0' + symbols_[i]);
        return out;
    }

    bool operator==(const BinaryWord&) const = default;
    auto operator<=>(const BinaryWord&) const = default;

private:
    std::vector<Symbol> symbols_;
};

/// Maximal-block decomposition of a nonempty word: the first symbol plus
/// the length of each run. Runs alternate symbols by construction.
struct RunLengthEncoding {
    Symbol first_symbol = 0;
    std::vector<std::size_t> run_lengths;

    std::size_t run_count() const noexcept { return run_lengths.size(); }

    std::size_t total_length() const noexcept {
        return std::accumulate(run_lengths.begin(), run_lengths.end(), std::size_t{0});
    }

    bool operator==(const RunLengthEncoding&) const = default;
};

/// Flips every symbol.
inline BinaryWord complement(const BinaryWord& w) {
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(static_cast<Symbol>(s ^ 1));
    return BinaryWord(std::move(out));
}

inline BinaryWord reverse(const BinaryWord& w) {
    std::vector<Symbol> out(w.begin(), w.end());
    std::reverse(out.begin(), out.end());
    return BinaryWord(std::move(out));
}

/// Run-length encoding of a nonempty word. Throws EmptyWordError on the
/// empty word, whose decomposition is undefined here.
inline RunLengthEncoding runs(const BinaryWord& w) {
    if (w.empty()) throw EmptyWordError();
    RunLengthEncoding rle;
    rle.first_symbol = w[0];
    std::size_t run = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == w[i - 1]) {
            ++run;
        } else {
            rle.run_lengths.push_back(run);
            run = 1;
        }
    }
    rle.run_lengths.push_back(run);
    return rle;
}

/// Inverse of runs(). Throws ZeroRunError if any run length is zero.
inline BinaryWord from_runs(const RunLengthEncoding& rle) {
    for (std::size_t len : rle.run_lengths)
        if (len == 0) throw ZeroRunError();
    std::vector<Symbol> out;
    out.reserve(rle.total_length());
    Symbol symbol = rle.first_symbol;
    for (std::size_t len : rle.run_lengths) {
        out.insert(out.end(), len, symbol);
        symbol ^= 1;
    }
    return BinaryWord(std::move(out));
}

/// The contiguous block w[start .. start+len). Throws OutOfRangeError when
/// the block would run past the end.
inline BinaryWord factor(const BinaryWord& w, std::size_t start, std::size_t len) {
    if (start > w.size() || len > w.size() - start) throw OutOfRangeError();
    return BinaryWord(std::vector<Symbol>(w.begin() + static_cast<std::ptrdiff_t>(start),
                                          w.begin() + static_cast<std::ptrdiff_t>(start + len)));
}

/// True iff y is a cyclic rotation of x. Uses the classical criterion:
/// |x| = |y| and y occurs inside x·x. Equal words are conjugate.
inline bool are_conjugate(const BinaryWord& x, const BinaryWord& y) {
    if (x.size() != y.size()) return false;
    if (x.empty()) return true;
    std::vector<Symbol> doubled;
    doubled.reserve(2 * x.size());
    doubled.insert(doubled.end(), x.begin(), x.end());
    doubled.insert(doubled.end(), x.begin(), x.end());
    return std::search(doubled.begin(), doubled.end(), y.begin(), y.end()) != doubled.end();
}

/// Lazy lexicographic stream of all 2^n words of a fixed length. Words are
/// materialized on dereference; iteration order is 00..0 up to 11..1.
class WordEnumeration {
public:
    explicit WordEnumeration(std::size_t length) : length_(length) {
        if (length >= 64)
            throw BoundExceededError("cannot enumerate words of length " +
                                     std::to_string(length));
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = BinaryWord;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = BinaryWord;

        iterator(std::size_t length, std::uint64_t index) noexcept
            : length_(length), index_(index) {}

        BinaryWord operator*() const {
            std::vector<Symbol> symbols(length_);
            for (std::size_t i = 0; i < length_; ++i)
                symbols[i] = static_cast<Symbol>((index_ >> (length_ - 1 - i)) & 1u);
            return BinaryWord(std::move(symbols));
        }

        iterator& operator++() noexcept {
            ++index_;
            return *this;
        }

        iterator operator++(int) noexcept {
            iterator old = *this;
            ++index_;
            return old;
        }

        bool operator==(const iterator& other) const noexcept {
            return index_ == other.index_;
        }

    private:
        std::size_t length_;
        std::uint64_t index_;
    };

    iterator begin() const noexcept { return iterator(length_, 0); }
    iterator end() const noexcept { return iterator(length_, count()); }

    /// Number of words in the stream (2^length).
    std::uint64_t count() const noexcept { return std::uint64_t{1} << length_; }

private:
    std::size_t length_;
};

/// All binary words of length n in lexicographic order, 2^n of them.
inline WordEnumeration enumerate_words(std::size_t n) { return WordEnumeration(n); }

/// Default ceiling for exhaustive-enumeration entry points; callers may
/// raise it explicitly (the CLI reads MESOLIB_ENUM_CAP).
inline constexpr std::size_t kDefaultEnumerationCap = 24;

}  // namespace meso
