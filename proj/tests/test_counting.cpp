#include "doctest.h"

#include <array>
#include <vector>

#include "meso/classifier.hpp"
#include "meso/counting.hpp"
#include "meso/word.hpp"

using meso::BinaryWord;
using meso::CountBreakdown;

namespace {

// Pair-enumeration oracle for split_count: r = i + k, i,k >= 1, i < k, k odd.
long long split_pairs_by_enumeration(long long r) {
    long long count = 0;
    for (long long i = 1; i < r; ++i) {
        const long long k = r - i;
        if (i < k && k % 2 == 1) ++count;
    }
    return count;
}

// Breakdown oracle: filter the exhaustive enumeration by run structure.
CountBreakdown breakdown_by_enumeration(std::size_t n) {
    CountBreakdown b;
    b.n = n;
    for (const BinaryWord& w : meso::enumerate_words(n)) {
        if (!meso::is_mesosome_free(w)) continue;
        ++b.total;
        if (w[0] != 0) continue;
        const auto r = meso::runs(w).run_lengths;
        switch (r.size()) {
            case 1: ++b.one_run; break;
            case 2: ++b.two_runs; break;
            case 3: ++b.three_runs; break;
            case 4:
                if (r[1] == 1 && r[2] == 1)
                    ++b.four_runs_case_a;
                else
                    ++b.four_runs_case_b;
                break;
            default: ++b.five_plus_runs; break;
        }
    }
    return b;
}

constexpr std::array<long long, 18> kCountTable = {1, 2, 4, 8, 14, 24, 32, 42, 54,
                                                   68, 82, 98, 118, 140, 162, 186,
                                                   216, 248};

}  // namespace

TEST_CASE("split_count examples and oracle") {
    CHECK(meso::split_count(3) == 0);
    CHECK(meso::split_count(4) == 1);   // (1,3)
    CHECK(meso::split_count(8) == 2);   // (1,7), (3,5)
    for (long long r = 0; r <= 200; ++r)
        CHECK(meso::split_count(r) == split_pairs_by_enumeration(r));
}

TEST_CASE("split_convolution examples") {
    CHECK(meso::split_convolution(0) == 0);
    CHECK(meso::split_convolution(4) == 0);
    CHECK(meso::split_convolution(8) == 1);  // exponents (1,3,3,1)
}

TEST_CASE("split_convolution matches its closed form") {
    for (long long n = 0; n <= 300; ++n)
        CHECK(meso::split_convolution(n) == meso::split_convolution_closed(n));
}

TEST_CASE("count_by_runs fixed rows") {
    CountBreakdown b = meso::count_by_runs(6);
    CHECK(b.one_run == 1);
    CHECK(b.two_runs == 5);
    CHECK(b.three_runs == 6);
    CHECK(b.four_runs_case_a == 3);
    CHECK(b.four_runs_case_b == 0);
    CHECK(b.five_plus_runs == 1);
    CHECK(b.total == 32);

    b = meso::count_by_runs(1);
    CHECK(b == CountBreakdown{1, 1, 0, 0, 0, 0, 0, 2});

    b = meso::count_by_runs(8);
    CHECK(b == CountBreakdown{8, 1, 7, 12, 5, 1, 1, 54});
}

TEST_CASE("count_by_runs matches filtered enumeration") {
    for (std::size_t n = 1; n <= 12; ++n) {
        const CountBreakdown expected = breakdown_by_enumeration(n);
        const CountBreakdown actual = meso::count_by_runs(n);
        CHECK(actual == expected);
    }
}

TEST_CASE("closed form values") {
    CHECK(meso::count_closed_form(5) == 24);
    CHECK(meso::count_closed_form(8) == 54);
    CHECK(meso::count_closed_form(4) == 14);  // table value, not the cubic
    for (std::size_t n = 0; n < kCountTable.size(); ++n)
        CHECK(meso::count_closed_form(n) == kCountTable[n]);
}

TEST_CASE("enumeration counts") {
    CHECK(meso::count_by_enumeration(0) == 1);
    CHECK(meso::count_by_enumeration(10) == 82);
    CHECK(meso::count_by_enumeration(17) == 248);
    CHECK_THROWS_AS((void)meso::count_by_enumeration(11, 10), meso::BoundExceededError);
}

TEST_CASE("closed form agrees with enumeration up to length 14") {
    for (std::size_t n = 0; n <= 14; ++n)
        CHECK(meso::count_closed_form(n) == meso::count_by_enumeration(n));
}

TEST_CASE("counts overflow loudly instead of wrapping") {
    CHECK(meso::count_closed_form(1'000'000) == 20833645836749996LL);
    CHECK_THROWS_AS((void)meso::count_closed_form(100'000'000), std::overflow_error);
    CHECK_THROWS_AS((void)meso::split_convolution_closed(100'000'000),
                    std::overflow_error);
}

TEST_CASE("count_by_runs n = 0 covers just the empty word") {
    const CountBreakdown b = meso::count_by_runs(0);
    CHECK(b.total == 1);
    CHECK(b.one_run + b.two_runs + b.three_runs + b.four_runs_case_a +
              b.four_runs_case_b + b.five_plus_runs ==
          0);
}
