#include "doctest.h"

#include <set>

#include "meso/classifier.hpp"
#include "meso/infinite.hpp"
#include "meso/word.hpp"

using meso::BinaryWord;
using meso::InfiniteForm;
using meso::InfiniteVariant;

namespace {

BinaryWord word(const char* text) { return BinaryWord::from_text(text); }

}  // namespace

TEST_CASE("prefix construction") {
    CHECK(meso::prefix({InfiniteVariant::Alternating, 0, 0, false}, 5).to_string() ==
          "01010");
    CHECK(meso::prefix({InfiniteVariant::ZerosOnesZeros, 2, 2, false}, 8).to_string() ==
          "00111000");
    CHECK(meso::prefix({InfiniteVariant::AllZero, 0, 0, true}, 3).to_string() == "111");
    CHECK(meso::prefix({InfiniteVariant::ZeroBlockTenOnes, 2, 0, false}, 7).to_string() ==
          "0010111");
    CHECK(meso::prefix({InfiniteVariant::ZerosThenOnes, 3, 0, false}, 2).to_string() ==
          "00");
    CHECK(meso::prefix({InfiniteVariant::AllZero, 0, 0, false}, 0).empty());
}

TEST_CASE("canonical_forms covers variants and flags") {
    const auto minimal = meso::canonical_forms(1, 1);
    CHECK(minimal.size() == 10);  // 5 variants, both complement flags

    const auto larger = meso::canonical_forms(2, 2);
    const InfiniteForm target{InfiniteVariant::ZerosOnesZeros, 2, 2, false};
    CHECK(std::count(larger.begin(), larger.end(), target) == 1);
    // 2 + 2i + 2ij + 2i + 2 with i = j = 2.
    CHECK(larger.size() == 20);
}

TEST_CASE("every canonical prefix is mesosome-free") {
    for (const auto& form : meso::canonical_forms(3, 3))
        for (std::size_t n = 0; n <= 200; ++n)
            CHECK(meso::is_mesosome_free(meso::prefix(form, n)));
}

TEST_CASE("serialization") {
    CHECK(meso::to_string({InfiniteVariant::ZerosOnesZeros, 2, 2, false}) ==
          "0^2 1^3 0^w");
    CHECK(meso::to_string({InfiniteVariant::Alternating, 0, 0, false}) == "(01)^w");
    CHECK(meso::to_string({InfiniteVariant::AllZero, 0, 0, true}) == "~0^w");
    CHECK(meso::to_string({InfiniteVariant::ZerosThenOnes, 1, 0, false}) == "0 1^w");
    CHECK(meso::to_string({InfiniteVariant::ZeroBlockTenOnes, 3, 0, true}) ==
          "~0^3 1 0 1^w");
}

TEST_CASE("is_infinitely_extendable spot checks") {
    CHECK(meso::is_infinitely_extendable(word("0001")));
    CHECK_FALSE(meso::is_infinitely_extendable(word("01110001")));
    CHECK(meso::is_infinitely_extendable(BinaryWord()));
    CHECK_FALSE(meso::is_infinitely_extendable(word("0110")));
    CHECK(meso::is_infinitely_extendable(word("01010")));
}

TEST_CASE("extendable_oracle spot checks") {
    CHECK(meso::extendable_oracle(word("01010")));
    CHECK_FALSE(meso::extendable_oracle(word("0110")));
    CHECK_FALSE(meso::extendable_oracle(word("01110001")));
    CHECK(meso::extendable_oracle(BinaryWord()));
    CHECK_THROWS_AS((void)meso::extendable_oracle(word("0101010101010")),
                    meso::BoundExceededError);
}

TEST_CASE("structural decision matches the search oracle up to length 10") {
    for (std::size_t n = 0; n <= 10; ++n)
        for (const BinaryWord& w : meso::enumerate_words(n))
            CHECK(meso::is_infinitely_extendable(w) == meso::extendable_oracle(w, 24));
}

TEST_CASE("free words that do not extend are exactly the strict four-run ones") {
    for (std::size_t n = 1; n <= 12; ++n)
        for (const BinaryWord& w : meso::enumerate_words(n)) {
            const auto form = meso::classify(w);
            if (!form) {
                CHECK_FALSE(meso::is_infinitely_extendable(w));
                continue;
            }
            CHECK(meso::is_infinitely_extendable(w) == (form->variant != meso::Form::E));
        }
}

TEST_CASE("extendability is closed under taking prefixes") {
    for (std::size_t n = 1; n <= 12; ++n)
        for (const BinaryWord& w : meso::enumerate_words(n))
            if (meso::is_infinitely_extendable(w))
                CHECK(meso::is_infinitely_extendable(meso::factor(w, 0, w.size() - 1)));
}
