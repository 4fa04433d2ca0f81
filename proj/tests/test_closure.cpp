#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace plb;

TEST_CASE("closure of the identity braid is a crossingless unlink") {
    LinkDiagram d = closure(BraidWord{3, {}});
    CHECK(component_count(d) == 3);
    CHECK(d.crossings.empty());
}

TEST_CASE("closure of the trefoil word") {
    LinkDiagram d = closure(BraidWord{2, {1, 1, 1}});
    CHECK(d.crossings.size() == 3);
    CHECK(component_count(d) == 1);
}

TEST_CASE("component count equals permutation cycles") {
    BraidWord w{3, {1, -2, 1, -2}};
    CHECK(component_count(closure(w)) == permutation(w).cycle_count());
    CHECK(component_count(closure(w)) == 1);
    Corpus corpus(37);
    for (int i = 0; i < 60; ++i) {
        BraidWord v = corpus.word(6, 12);
        CHECK(component_count(closure(v)) == permutation(v).cycle_count());
    }
}

TEST_CASE("the only up-arcs of a closure are the return rises") {
    Corpus corpus(41);
    for (int i = 0; i < 25; ++i) {
        BraidWord w = corpus.word(5, 8);
        LinkDiagram d = closure(w);
        auto ups = find_up_arcs(d);
        CHECK(static_cast<int>(ups.size()) == w.n);
        for (const auto& r : ups) {
            Seg s = d.segment(r);
            CHECK(s.dir().x == 0); // rises are vertical
        }
    }
}

TEST_CASE("closure diagrams are generic as built") {
    Corpus corpus(43);
    for (int i = 0; i < 25; ++i) {
        BraidWord w = corpus.word(6, 10);
        auto rep = validate_generic(closure(w));
        CHECK(rep.is_generic);
    }
}

TEST_CASE("box crossings carry the letter signs at integer heights") {
    BraidWord w{3, {2, -1, 2}};
    LinkDiagram d = closure(w);
    REQUIRE(d.crossings.size() == 3);
    std::map<long long, int> sign_at_height;
    for (const auto& c : d.crossings) {
        REQUIRE(rat_den(c.point.y) == 1);
        sign_at_height[rat_num(c.point.y).convert_to<long long>()] = c.sign;
    }
    CHECK(sign_at_height[-1] == 1);
    CHECK(sign_at_height[-2] == -1);
    CHECK(sign_at_height[-3] == 1);
}

TEST_CASE("closure serialization round-trips") {
    BraidWord w{4, {1, -2, 3, 3, -1}};
    LinkDiagram d = closure(w);
    std::ostringstream os;
    write_diagram(os, d);
    std::istringstream is(os.str());
    LinkDiagram back = read_diagram(is);
    std::ostringstream os2;
    write_diagram(os2, back);
    CHECK(os.str() == os2.str());
}
