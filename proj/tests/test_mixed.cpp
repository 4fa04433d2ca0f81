#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace plb;

namespace {

// solid-torus setup: one fixed strand, one moving strand winding once
MixedBraid solid_torus_example(long long framing = 0) {
    BraidWord B{1, {}};
    BraidWord full{2, {1, 1}};
    return make_mixed(B, {framing}, full, {1}, {{1}});
}

// linking number of the moving component with the surgery component,
// measured on the mixed closure diagram
long long moving_surgery_linking(const MixedBraid& mb) {
    auto [d, tags] = mixed_closure(mb);
    auto lk = linking_matrix(d);
    long long total = 0;
    for (size_t i = 0; i < tags.size(); ++i)
        for (size_t j = 0; j < tags.size(); ++j)
            if (tags[i] && !tags[j]) total += lk[i][j];
    return total;
}

} // namespace

TEST_CASE("mixed braid construction and extraction") {
    MixedBraid mb = solid_torus_example();
    CHECK(mb.moving_count() == 1);
    CHECK(extract_fixed(mb.word, mb.fixed_strands).letters.empty());

    // moving part empty: the mixed braid is the surgery braid itself
    BraidWord B{2, {1, 1}};
    MixedBraid pure = make_mixed(B, {0}, B, {1, 2}, {{1, 2}});
    CHECK(pure.moving_count() == 0);
    CHECK(extract_fixed(pure.word, pure.fixed_strands).letters == B.letters);

    // a braid whose permutation sends a fixed strand into the moving set
    BraidWord bad{2, {1}};
    CHECK_THROWS_AS(make_mixed(BraidWord{1, {}}, {0}, bad, {1}, {{1}}),
                    FixedPartCorrupted);
}

TEST_CASE("fixed extraction tracks positions through interleaved words") {
    // B = sigma_1 on two fixed strands; a moving strand wanders across
    BraidWord B{2, {1, 1}};
    BraidWord full{3, {2, 2, 1, -2, -2, 1, 2, 2}};
    // full: the moving strand (top 3) winds, B's letters happen at 1
    MixedBraid mb = make_mixed(B, {0}, full, {1, 2}, {{1, 2}});
    CHECK(extract_fixed(full, {1, 2}).letters == B.letters);
    CHECK(mb.moving_count() == 1);
}

TEST_CASE("l_move_moving preserves the fixed extraction and certificates") {
    Corpus corpus(79);
    for (int i = 0; i < 25; ++i) {
        MixedBraid mb = corpus.mixed(3, 4);
        BraidWord before = extract_fixed(mb.word, mb.fixed_strands);
        auto certs_before = plbtest::certificates(mb.word);
        size_t split = corpus.uniform(0, static_cast<int>(mb.word.letters.size()));
        int pos = corpus.uniform(1, mb.word.n + 1);
        LKind kind = corpus.uniform(0, 1) ? LKind::over : LKind::under;
        int sign = corpus.uniform(0, 1) ? 1 : -1;
        MixedBraid out;
        try {
            out = l_move_moving(mb, split, pos, kind, sign);
        } catch (const TouchesFixedSubbraid&) {
            continue; // the cut fell on a fixed strand: correctly refused
        }
        BraidWord after = extract_fixed(out.word, out.fixed_strands);
        CHECK(after.letters == before.letters);
        CHECK(out.moving_count() == mb.moving_count() + 1);
        auto certs_after = plbtest::certificates(out.word);
        CHECK(certs_after.normalized == certs_before.normalized);
        CHECK(certs_after.components == certs_before.components);
        CHECK(plbtest::linking_equal_upto_perm(certs_after.linking, certs_before.linking));
    }
}

TEST_CASE("degenerate l_move on the moving part acts as a stabilization") {
    MixedBraid mb = solid_torus_example();
    MixedBraid out = l_move_moving(mb, mb.word.letters.size(), mb.word.n + 1,
                                   LKind::under, +1);
    CHECK(free_reduce(out.word) == free_reduce(markov_stabilize(mb.word, +1)));
    CHECK(out.fixed_strands == mb.fixed_strands);
}

TEST_CASE("band move on the solid torus example") {
    for (int sign : {+1, -1}) {
        MixedBraid mb = solid_torus_example(0);
        long long lk0 = moving_surgery_linking(mb);
        auto res = braid_band_move(mb, 0, sign);
        CHECK(res.parallel_strands == 1);
        CHECK(res.braid.moving_count() == mb.moving_count() + 1);
        CHECK(extract_fixed(res.braid.word, res.braid.fixed_strands).letters ==
              extract_fixed(mb.word, mb.fixed_strands).letters);
        long long lk1 = moving_surgery_linking(res.braid);
        CHECK(std::llabs(lk1 - lk0) == 1); // frame 0: only the parallel pass
    }
}

TEST_CASE("band move realizes the framing against the designated string") {
    // framing p: the new parallel strand contributes p full twists
    for (long long p : {-2LL, -1LL, 0LL, 1LL, 2LL}) {
        MixedBraid mb = solid_torus_example(p);
        long long lk0 = moving_surgery_linking(mb);
        auto res = braid_band_move(mb, 0, +1);
        long long delta = moving_surgery_linking(res.braid) - lk0;
        CHECK(delta == p + 1);
    }
}

TEST_CASE("band move on a two-string component") {
    // pure 2-strand surgery braid, one moving strand
    BraidWord B{2, {1, 1}};
    BraidWord full{3, {2, 2}};
    MixedBraid mb = make_mixed(B, {0}, full, {1, 2}, {{1, 2}});
    auto res = braid_band_move(mb, 0, +1);
    CHECK(res.parallel_strands == 2);
    CHECK(res.braid.moving_count() == mb.moving_count() + 2);
    CHECK(extract_fixed(res.braid.word, res.braid.fixed_strands).letters == B.letters);
    // the parallel strands follow the component strings' permutation
    Permutation perm = permutation(res.braid.word);
    std::set<int> fixed = res.braid.fixed_strands;
    for (int p : fixed) CHECK(fixed.count(perm.images[p - 1]));
}

TEST_CASE("two successive band moves") {
    MixedBraid mb = solid_torus_example(1);
    auto r1 = braid_band_move(mb, 0, +1);
    auto r2 = braid_band_move(r1.braid, 0, -1);
    CHECK(extract_fixed(r2.braid.word, r2.braid.fixed_strands).letters ==
          extract_fixed(mb.word, mb.fixed_strands).letters);
    CHECK(r2.braid.moving_count() == mb.moving_count() + 2);
}

TEST_CASE("band move errors") {
    MixedBraid mb = solid_torus_example();
    CHECK_THROWS_AS(braid_band_move(mb, 5, +1), UnknownComponent);
    BraidWord B{1, {}};
    MixedBraid no_moving = make_mixed(B, {0}, B, {1}, {{1}});
    CHECK_THROWS_AS(braid_band_move(no_moving, 0, +1), NoAdjacentString);
}

TEST_CASE("mixed closure tags the surgery components") {
    MixedBraid mb = solid_torus_example();
    auto [d, tags] = mixed_closure(mb);
    CHECK(component_count(d) == 2);
    REQUIRE(tags.size() == 2);
    CHECK((tags[0] ^ tags[1]));
    CHECK(static_cast<int>(tags.size()) == permutation(mb.word).cycle_count());

    // moving part empty: everything is fixed
    BraidWord B{2, {1, 1}};
    MixedBraid pure = make_mixed(B, {0}, B, {1, 2}, {{1, 2}});
    auto [pd, ptags] = mixed_closure(pure);
    for (bool t : ptags) CHECK(t);
}

TEST_CASE("mixed braid serialization round trip") {
    MixedBraid mb = solid_torus_example(2);
    std::ostringstream os;
    write_mixed(os, mb);
    std::istringstream is(os.str());
    MixedBraid back = read_mixed(is);
    CHECK(back.word == mb.word);
    CHECK(back.fixed_strands == mb.fixed_strands);
    CHECK(back.surgery_components == mb.surgery_components);
    CHECK(back.framings == mb.framings);
}
