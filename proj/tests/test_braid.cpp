#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace plb;

TEST_CASE("compose and identities") {
    BraidWord a{2, {1}}, b{2, {-1}};
    BraidWord ab = compose(a, b);
    CHECK(ab.letters == std::vector<int>{1, -1});
    CHECK(free_reduce(ab).letters.empty());
    BraidWord id2{2, {}};
    CHECK(compose(id2, a) == a);
    CHECK(compose(a, id2) == a);
    CHECK_THROWS_AS(compose(a, BraidWord{3, {}}), StrandMismatch);

    BraidWord c = compose(BraidWord{3, {1}}, BraidWord{3, {2}});
    CHECK(permutation(c).cycle_count() == 1); // a 3-cycle
}

TEST_CASE("free reduction") {
    CHECK(free_reduce(BraidWord{3, {1, -1, 2}}).letters == std::vector<int>{2});
    CHECK(free_reduce(BraidWord{3, {1, 2, -2, -1}}).letters.empty());
    CHECK(free_reduce(BraidWord{3, {1, 2, 1}}).letters == std::vector<int>{1, 2, 1});
}

TEST_CASE("permutations") {
    CHECK(permutation(BraidWord{4, {}}).is_identity());
    CHECK(permutation(BraidWord{2, {1, 1, 1}}).images == std::vector<int>{2, 1});
    // [1,2] on 3 strands is a 3-cycle
    Permutation p = permutation(BraidWord{3, {1, 2}});
    CHECK(p.cycle_count() == 1);
    CHECK(p.images[p.images[p.images[0] - 1] - 1] == 1);
    // homomorphism property on random pairs
    Corpus corpus(7);
    for (int i = 0; i < 50; ++i) {
        BraidWord a = corpus.word(5, 8);
        BraidWord b = corpus.word(5, 8);
        b.n = a.n = std::max(a.n, b.n);
        a.validate();
        b.validate();
        CHECK(permutation(compose(a, b)).images ==
              compose(permutation(a), permutation(b)).images);
    }
}

TEST_CASE("shift_up") {
    BraidWord w{3, {1, -2}};
    CHECK(shift_up(w, 1).letters == std::vector<int>{2, -3});
    CHECK(shift_up(w, 1).n == 4);
    CHECK(shift_up(w, 3).letters == std::vector<int>{1, -2});
    CHECK(shift_up(BraidWord{3, {1, 2}}, 2).letters == std::vector<int>{1, 3});
    CHECK_THROWS_AS(shift_up(w, 0), IndexOutOfRange);
    CHECK_THROWS_AS(shift_up(w, 4), IndexOutOfRange);
}

TEST_CASE("markov stabilization") {
    CHECK(markov_stabilize(BraidWord{1, {}}, +1).letters == std::vector<int>{1});
    CHECK(markov_stabilize(BraidWord{2, {1}}, +1).letters == std::vector<int>{1, 2});
    BraidWord neg = markov_stabilize(BraidWord{2, {1}}, -1);
    CHECK(neg.letters == std::vector<int>{1, -2});
    CHECK(neg.n == 3);
}

TEST_CASE("conjugation") {
    BraidWord w{3, {1}};
    CHECK(conjugate(w, BraidWord{3, {}}) == w);
    CHECK(conjugate(w, BraidWord{3, {2}}).letters == std::vector<int>{-2, 1, 2});
    CHECK_THROWS_AS(conjugate(w, BraidWord{2, {1}}), StrandMismatch);
}

TEST_CASE("l_move degenerate and boundary cases") {
    // empty word on one strand: both kinds coincide with stabilization
    for (LKind kind : {LKind::over, LKind::under}) {
        for (int s : {+1, -1}) {
            BraidWord out = l_move(BraidWord{1, {}}, 0, 1, kind, s);
            CHECK(out.n == 2);
            CHECK(free_reduce(out).letters == std::vector<int>{s});
        }
    }
    // boundary L-move at the end with position n+1 is exactly an M-move
    Corpus corpus(11);
    for (int i = 0; i < 40; ++i) {
        BraidWord w = corpus.word(5, 10);
        for (int s : {+1, -1}) {
            BraidWord lm = l_move(w, w.letters.size(), w.n + 1, LKind::over, s);
            CHECK(free_reduce(lm) == free_reduce(markov_stabilize(w, s)));
        }
    }
}

TEST_CASE("l_move strand count and exponent sum") {
    Corpus corpus(13);
    for (int i = 0; i < 60; ++i) {
        BraidWord w = corpus.word(5, 10);
        size_t split = corpus.uniform(0, static_cast<int>(w.letters.size()));
        int pos = corpus.uniform(1, w.n + 1);
        LKind kind = corpus.uniform(0, 1) ? LKind::over : LKind::under;
        int sign = corpus.uniform(0, 1) ? 1 : -1;
        BraidWord out = l_move(w, split, pos, kind, sign);
        CHECK(out.n == w.n + 1);
        CHECK(out.exponent_sum() == w.exponent_sum() + sign);
    }
}

TEST_CASE("l_move worked example") {
    // w = [1] on 2 strands, split after the letter, new strand at position 2
    BraidWord out = l_move(BraidWord{2, {1}}, 1, 2, LKind::over, +1);
    CHECK(out.n == 3);
    // closure is still a single unknotted component
    CHECK(permutation(out).cycle_count() == 1);
    CHECK(normalized_bracket_from_braid(out) == LaurentPoly::one());
}
