// Fast verifiers against definitional ones, and the implication lattice
// between the three properties, on exhaustive and random small codes.

#include <sscodes/verify.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace sscodes;

namespace
{
    auto check_fast_paths(const Code & code) -> void
    {
        const bool sc3 = is_sc(code, 3).verdict;
        ASSERT_EQ(is_sc3_fast(code).verdict, sc3) << serialize_code(code);
        ASSERT_EQ(is_fpc2_fast(code).verdict, is_fpc(code, 2).verdict) << serialize_code(code);
        if (code.alphabet() >= 3) {
            ASSERT_EQ(is_ssc(code, 3).verdict, sc3) << serialize_code(code);
            ASSERT_EQ(is_ssc3_fast(code).verdict, sc3) << serialize_code(code);
        }
        ASSERT_EQ(find_forbidden_config(code).has_value(), oracle::has_forbidden_config(code)) << serialize_code(code);
    }
}

TEST(Equivalence, LibraryVerifiersMatchOracles)
{
    std::mt19937_64 rng{2024};
    for (int trial = 0; trial < 400; ++trial) {
        const auto code = oracle::random_code(rng, 3, 3 + trial % 6, 2 + trial % 3);
        for (std::size_t t : {1, 2, 3}) {
            ASSERT_EQ(is_sc(code, t).verdict, oracle::is_sc(code, t));
            ASSERT_EQ(is_fpc(code, t).verdict, oracle::is_fpc(code, t));
            ASSERT_EQ(is_ssc(code, t).verdict, oracle::is_ssc(code, t));
        }
    }
}

TEST(Equivalence, FastPathsOnAllSmallTernaryCodes)
{
    const auto words = oracle::all_words(3, 3);
    const int w = static_cast<int>(words.size());
    for (int a = 0; a < w; ++a)
        for (int b = a + 1; b < w; ++b)
            for (int c = b + 1; c < w; ++c) {
                check_fast_paths(Code{3, 3, {words[a], words[b], words[c]}});
                if (a == 0) // the zero word is representative; keeps this test quick
                    for (int d = c + 1; d < w; ++d)
                        check_fast_paths(Code{3, 3, {words[a], words[b], words[c], words[d]}});
            }
}

TEST(Equivalence, FastPathsOnRandomCodes)
{
    std::mt19937_64 rng{99};
    for (int trial = 0; trial < 2000; ++trial)
        check_fast_paths(oracle::random_code(rng, 3, 2 + trial % 6, 3 + trial % 2));
}

TEST(Equivalence, ImplicationLattice)
{
    std::mt19937_64 rng{17};
    for (int trial = 0; trial < 1500; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const std::size_t q = 2 + (trial / 3) % 3;
        const std::size_t m = std::min<std::size_t>(2 + trial % 6, n == 2 ? q * q : 8);
        const auto code = oracle::random_code(rng, n, m, q);
        for (std::size_t t = 1; t <= 3; ++t) {
            const bool fpc = is_fpc(code, t).verdict;
            const bool sc = is_sc(code, t).verdict;
            const bool ssc = is_ssc(code, t).verdict;
            if (fpc) {
                EXPECT_TRUE(sc);
                EXPECT_TRUE(ssc);
            }
            if (ssc)
                EXPECT_TRUE(sc);
            if (t >= 2) {
                if (sc)
                    EXPECT_TRUE(is_fpc(code, t - 1).verdict);
                if (ssc)
                    EXPECT_TRUE(is_fpc(code, t - 1).verdict);
            }
        }
    }
}

TEST(Equivalence, LengthTwoSeparableIffStronglySeparable)
{
    for (std::size_t q : {2, 3}) {
        const auto words = oracle::all_words(2, q);
        const int w = static_cast<int>(words.size());
        for (std::uint32_t mask = 1; mask < (1u << w); ++mask) {
            if (__builtin_popcount(mask) > 5)
                continue;
            std::vector<Word> chosen;
            for (int b = 0; b < w; ++b)
                if ((mask >> b) & 1)
                    chosen.push_back(words[b]);
            const Code code{2, q, chosen};
            ASSERT_EQ(is_ssc(code, 2).verdict, is_sc(code, 2).verdict) << serialize_code(code);
        }
    }
}
