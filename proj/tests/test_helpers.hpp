#pragma once

#include "plbraid/braiding.hpp"
#include "plbraid/closure.hpp"
#include "plbraid/corpus.hpp"
#include "plbraid/diagram_io.hpp"
#include "plbraid/mixed.hpp"
#include "plbraid/oracles.hpp"
#include "plbraid/prepare.hpp"
#include "plbraid/reidemeister.hpp"
#include "plbraid/word_problem.hpp"

#include <sstream>

namespace plbtest {

using namespace plb;

inline Pt pt(long long x, long long y) { return {Rat(x), Rat(y)}; }
inline Pt pt(const char* x, const char* y) { return {parse_rat(x), parse_rat(y)}; }

// tilted quadrilateral around (cx, cy); no horizontal or vertical edges
inline std::vector<Pt> tilted_quad(const Rat& cx, const Rat& cy, const Rat& r) {
    return {
        {cx + r, cy + r / 3},
        {cx - r / 3, cy + r},
        {cx - r, cy - r / 3},
        {cx + r / 3, cy - r},
    };
}

inline LinkDiagram diagram_of(std::vector<std::vector<Pt>> polys,
                              std::map<std::pair<SegRef, SegRef>, SegRef> over = {}) {
    LinkDiagram d;
    d.components = std::move(polys);
    return recompute_crossings(d, over);
}

inline LaurentPoly mono(long long e, long long c) { return LaurentPoly::monomial(e, Int(c)); }

// full pipeline: diagram -> braid word
inline BraidWord braid_of(const LinkDiagram& d) { return braid_diagram(prepare(d)); }

// closure certificates of a braid word through the word-side pipelines
struct Certificates {
    LaurentPoly normalized;
    int components = 0;
    std::vector<std::vector<long long>> linking;
};

inline Certificates certificates(const BraidWord& w, int max_strands = 14) {
    Certificates c;
    c.normalized = normalized_bracket_from_braid(w, max_strands);
    c.components = permutation(w).cycle_count();
    c.linking = linking_matrix(closure(w));
    return c;
}

// linking matrices compared up to simultaneous component reindexing
inline bool linking_equal_upto_perm(std::vector<std::vector<long long>> a,
                                    std::vector<std::vector<long long>> b) {
    if (a.size() != b.size()) return false;
    std::vector<int> perm(a.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i)
            for (size_t j = 0; j < a.size() && ok; ++j)
                if (a[i][j] != b[perm[i]][perm[j]]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace plbtest
