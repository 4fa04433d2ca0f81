#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace plb;

TEST_CASE("defining relations") {
    CHECK(words_equal_in_group(BraidWord{3, {1, 2, 1}}, BraidWord{3, {2, 1, 2}}));
    CHECK(words_equal_in_group(BraidWord{4, {1, 3}}, BraidWord{4, {3, 1}}));
    CHECK(!words_equal_in_group(BraidWord{2, {1}}, BraidWord{2, {-1}}));
}

TEST_CASE("relations at every admissible index") {
    for (int n = 3; n <= 6; ++n) {
        for (int i = 1; i + 1 <= n - 1; ++i) {
            BraidWord a{n, {i, i + 1, i}};
            BraidWord b{n, {i + 1, i, i + 1}};
            CHECK(words_equal_in_group(a, b));
        }
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j)
                CHECK(words_equal_in_group(BraidWord{n, {i, j}}, BraidWord{n, {j, i}}));
    }
}

TEST_CASE("equality is reflexive and respects conjugation-free rewriting") {
    Corpus corpus(17);
    for (int i = 0; i < 30; ++i) {
        BraidWord w = corpus.word(5, 10);
        CHECK(words_equal_in_group(w, w));
        // w and its free reduction are the same element
        CHECK(words_equal_in_group(w, free_reduce(w)));
        // insert a cancelling pair mid-word
        if (w.n >= 2) {
            BraidWord padded = w;
            size_t at = corpus.uniform(0, static_cast<int>(w.letters.size()));
            int g = corpus.uniform(1, w.n - 1);
            padded.letters.insert(padded.letters.begin() + at, {g, -g});
            CHECK(words_equal_in_group(w, padded));
        }
    }
}

TEST_CASE("words differing in exponent sum are distinguished") {
    Corpus corpus(19);
    for (int i = 0; i < 50; ++i) {
        BraidWord a = corpus.word(6, 10);
        BraidWord b = a;
        if (b.n < 2) continue;
        b.letters.push_back(corpus.uniform(1, b.n - 1)); // exponent sum +1
        CHECK(!words_equal_in_group(a, b));
    }
}

TEST_CASE("nontrivial pure braids are not the identity") {
    CHECK(!words_equal_in_group(BraidWord{2, {1, 1}}, BraidWord{2, {}}));
    CHECK(!words_equal_in_group(BraidWord{3, {1, 1, 2, 2}}, BraidWord{3, {}}));
    // sigma_1 sigma_2^{-1} is famously nontrivial with zero exponent sum
    CHECK(!words_equal_in_group(BraidWord{3, {1, -2}}, BraidWord{3, {}}));
    CHECK(!words_equal_in_group(BraidWord{3, {1, -2, 1, -2}}, BraidWord{3, {}}));
}

TEST_CASE("budget exhaustion raises instead of guessing") {
    BraidWord a{4, {1, 2, 3, 1, 2, 3, 1, 2, 3, -1, -2, -3}};
    CHECK_THROWS_AS(words_equal_in_group(a, BraidWord{4, {}}, 3), EffortExceeded);
}
