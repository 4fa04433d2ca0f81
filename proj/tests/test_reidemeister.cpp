#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace plb;
using plbtest::diagram_of;
using plbtest::tilted_quad;

TEST_CASE("r1 insert on the round unknot, all variants") {
    LinkDiagram unknot = diagram_of({tilted_quad(Rat(0), Rat(0), Rat(8))});
    for (auto v : {R1Variant::left_positive, R1Variant::left_negative,
                   R1Variant::right_positive, R1Variant::right_negative}) {
        LinkDiagram k = reidemeister_r1_insert(unknot, {0, 1}, Rat(1, 2), v);
        REQUIRE(k.crossings.size() == 1);
        bool positive = v == R1Variant::left_positive || v == R1Variant::right_positive;
        CHECK(k.crossings[0].sign == (positive ? 1 : -1));
        CHECK(kauffman_bracket(k) == plbtest::mono(positive ? 3 : -3, -1));
        CHECK(normalized_bracket(k) == LaurentPoly::one());
        CHECK(component_count(k) == 1);
        // delete restores a one-component crossingless diagram
        LinkDiagram back = reidemeister_r1_delete(k, 0);
        CHECK(back.crossings.empty());
        CHECK(normalized_bracket(back) == LaurentPoly::one());
    }
}

TEST_CASE("r2 insert then delete at the same spot is bit-exact") {
    LinkDiagram unlink = diagram_of({tilted_quad(Rat(0), Rat(0), Rat(6)),
                                     tilted_quad(Rat(9), Rat(0), Rat(6))});
    for (auto v : {R2Variant::over_near, R2Variant::under_near}) {
        LinkDiagram poked = reidemeister_r2_insert(unlink, {0, 0}, {1, 2}, Rat(1, 2), v);
        REQUIRE(poked.crossings.size() == 2);
        CHECK(normalized_bracket(poked) == normalized_bracket(unlink));
        CHECK(linking_matrix(poked) == linking_matrix(unlink));
        LinkDiagram back = reidemeister_r2_delete(poked, 0, 1);
        CHECK(back.components == unlink.components);
        CHECK(back.crossings.empty());
    }
}

TEST_CASE("r2 moves preserve bracket and linking on closures") {
    BraidWord w{2, {1, 1, 1}};
    LinkDiagram d = closure(w);
    LaurentPoly f = normalized_bracket(d);
    // poke a crossing-free segment over some other segment
    bool applied = false;
    for (const auto& a : d.all_segments()) {
        if (applied) break;
        if (detail::crossings_on(d, a) > 0) continue;
        for (const auto& b : d.all_segments()) {
            if (a == b || d.segments_adjacent(a, b)) continue;
            try {
                LinkDiagram poked = reidemeister_r2_insert(d, a, b, Rat(1, 2),
                                                           R2Variant::over_near);
                CHECK(normalized_bracket(poked) == f);
                CHECK(component_count(poked) == component_count(d));
                applied = true;
                break;
            } catch (const Error&) {
            }
        }
    }
    CHECK(applied);
}

namespace {

// a 6-crossing diagram with an accessible triple point: closure of
// sigma patterns known to contain an r3 triangle after preparation
LinkDiagram r3_test_diagram() {
    return closure(BraidWord{3, {1, 2, 1, -2, 1, 2}});
}

} // namespace

TEST_CASE("r3 slide preserves everything it should") {
    LinkDiagram d = r3_test_diagram();
    LaurentPoly f = normalized_bracket(d, 24);
    auto lk = linking_matrix(d);
    int comps = component_count(d);

    bool applied = false;
    int n = static_cast<int>(d.crossings.size());
    for (int i = 0; i < n && !applied; ++i)
        for (int j = 0; j < n && !applied; ++j)
            for (int k = 0; k < n && !applied; ++k) {
                if (i == j || j == k || i == k) continue;
                try {
                    LinkDiagram slid = reidemeister_r3(d, i, j, k);
                    applied = true;
                    CHECK(slid.crossings.size() == d.crossings.size());
                    CHECK(normalized_bracket(slid, 24) == f);
                    CHECK(component_count(slid) == comps);
                    CHECK(linking_matrix(slid) == lk);
                } catch (const Error&) {
                }
            }
    CHECK(applied);
}

TEST_CASE("mutation helper keeps certificates") {
    Corpus corpus(47);
    for (int i = 0; i < 8; ++i) {
        LinkDiagram d = corpus.diagram(3, 4, 0);
        LaurentPoly f = normalized_bracket(d, 22);
        int comps = component_count(d);
        LinkDiagram m = d;
        corpus.mutate(m);
        corpus.mutate(m);
        CHECK(normalized_bracket(m, 26) == f);
        CHECK(component_count(m) == comps);
    }
}

TEST_CASE("pattern mismatches are reported") {
    LinkDiagram unknot = diagram_of({tilted_quad(Rat(0), Rat(0), Rat(8))});
    CHECK_THROWS_AS(reidemeister_r1_delete(unknot, 0), PatternMismatch);
    LinkDiagram k =
        reidemeister_r1_insert(unknot, {0, 1}, Rat(1, 2), R1Variant::left_positive);
    CHECK_THROWS_AS(reidemeister_r2_delete(k, 0, 0), PatternMismatch);
    CHECK_THROWS_AS(reidemeister_r3(k, 0, 0, 0), PatternMismatch);
}
