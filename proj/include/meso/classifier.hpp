#pragma once

// Linear-time decision of mesosome-freeness via run-length structure.
//
// A word is mesosome-free exactly when it (or its complement, for words
// starting with 1) is one of:
//
//   A:  0^i                         i >= 1
//   B:  0^i 1^j                     i, j >= 1
//   C:  0^i 1^j 0^k                 i, j, k >= 1, j odd
//   D:  0^i 1 0 1^j                 i, j >= 1
//   E:  0^i 1^j 0^k 1^l             i, j, k, l >= 1, j and k odd, i < k, j > l
//   F:  (01)^i  or  (01)^i 0        i >= 1
//
// The forms overlap on tiny words (01 is both B and F); the classifier
// resolves overlaps by fewest-runs-first precedence A > B > C > D > E > F,
// which makes the returned label canonical. Freeness itself is unaffected.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "meso/word.hpp"

namespace meso {

enum class Form { A, B, C, D, E, FEven, FOdd };

/// Short serialization label; FEven and FOdd both render as "F".
inline std::string_view form_label(Form f) {
    switch (f) {
        case Form::A: return "A";
        case Form::B: return "B";
        case Form::C: return "C";
        case Form::D: return "D";
        case Form::E: return "E";
        case Form::FEven:
        case Form::FOdd: return "F";
    }
    return "?";
}

/// The structural form of a mesosome-free word: which shape from the table
/// above it matches, the run exponents (i; i,j; i,j,k; i,j; i,j,k,l; i; i
/// for A..E, FEven, FOdd respectively), and whether the shape describes the
/// complement of the input (true exactly when the input begins with 1).
struct StructureForm {
    Form variant = Form::A;
    std::vector<std::size_t> parameters;
    bool complemented = false;

    bool operator==(const StructureForm&) const = default;
};

namespace detail {

// Case analysis over the run-length vector of a 0-leading word. Run lengths
// are complement-invariant, so this serves 1-leading words unchanged.
inline std::optional<StructureForm> classify_run_lengths(const std::vector<std::size_t>& r) {
    switch (r.size()) {
        case 1:
            return StructureForm{Form::A, {r[0]}, false};
        case 2:
            return StructureForm{Form::B, {r[0], r[1]}, false};
        case 3:
            if (r[1] % 2 == 1) return StructureForm{Form::C, {r[0], r[1], r[2]}, false};
            return std::nullopt;
        case 4:
            if (r[1] == 1 && r[2] == 1)
                return StructureForm{Form::D, {r[0], r[3]}, false};
            if (r[1] % 2 == 1 && r[2] % 2 == 1 && r[0] < r[2] && r[1] > r[3])
                return StructureForm{Form::E, {r[0], r[1], r[2], r[3]}, false};
            return std::nullopt;
        default: {
            // Five runs or more survive only as strict alternation.
            for (std::size_t len : r)
                if (len != 1) return std::nullopt;
            if (r.size() % 2 == 0)
                return StructureForm{Form::FEven, {r.size() / 2}, false};
            return StructureForm{Form::FOdd, {(r.size() - 1) / 2}, false};
        }
    }
}

}  // namespace detail

/// Classifies a nonempty word: its StructureForm when mesosome-free,
/// std::nullopt otherwise. Throws EmptyWordError on the empty word (which
/// is mesosome-free but has no form).
inline std::optional<StructureForm> classify(const BinaryWord& w) {
    if (w.empty()) throw EmptyWordError();
    const RunLengthEncoding rle = runs(w);
    auto form = detail::classify_run_lengths(rle.run_lengths);
    if (form) form->complemented = (rle.first_symbol == 1);
    return form;
}

/// Linear-time freeness test. The empty word is free by vacuity.
inline bool is_mesosome_free(const BinaryWord& w) {
    if (w.empty()) return true;
    return classify(w).has_value();
}

/// Rebuilds the unique word a StructureForm describes.
inline BinaryWord reconstruct(const StructureForm& form) {
    const auto& p = form.parameters;
    RunLengthEncoding rle;
    rle.first_symbol = form.complemented ? Symbol{1} : Symbol{0};
    switch (form.variant) {
        case Form::A:
            assert(p.size() == 1);
            rle.run_lengths = {p[0]};
            break;
        case Form::B:
            assert(p.size() == 2);
            rle.run_lengths = {p[0], p[1]};
            break;
        case Form::C:
            assert(p.size() == 3);
            rle.run_lengths = {p[0], p[1], p[2]};
            break;
        case Form::D:
            assert(p.size() == 2);
            rle.run_lengths = {p[0], 1, 1, p[1]};
            break;
        case Form::E:
            assert(p.size() == 4);
            rle.run_lengths = {p[0], p[1], p[2], p[3]};
            break;
        case Form::FEven:
            assert(p.size() == 1);
            rle.run_lengths.assign(2 * p[0], 1);
            break;
        case Form::FOdd:
            assert(p.size() == 1);
            rle.run_lengths.assign(2 * p[0] + 1, 1);
            break;
    }
    return from_runs(rle);
}

}  // namespace meso
