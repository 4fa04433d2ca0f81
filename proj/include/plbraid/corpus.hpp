#pragma once

#include "plbraid/closure.hpp"
#include "plbraid/generic.hpp"
#include "plbraid/mixed.hpp"
#include "plbraid/reidemeister.hpp"

#include <random>

namespace plb {

// Seeded deterministic generators for test corpora.
struct Corpus {
    explicit Corpus(uint64_t seed) : rng(seed) {}

    std::mt19937_64 rng;

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    BraidWord word(int max_n = 6, int max_len = 12) {
        BraidWord w;
        w.n = uniform(1, max_n);
        if (w.n == 1) return w;
        int len = uniform(0, max_len);
        for (int i = 0; i < len; ++i) {
            int k = uniform(1, w.n - 1);
            w.letters.push_back(uniform(0, 1) ? k : -k);
        }
        return w;
    }

    // closure of a small word, optionally roughened by random moves
    LinkDiagram diagram(int max_n = 3, int max_len = 5, int moves = 0) {
        LinkDiagram d = closure(word(max_n, max_len));
        for (int i = 0; i < moves; ++i) {
            if (!mutate(d)) break;
        }
        return d;
    }

    // one random Reidemeister insertion (or occasional deletion); returns
    // false when no applicable spot was found
    bool mutate(LinkDiagram& d) {
        for (int attempt = 0; attempt < 12; ++attempt) {
            int pick = uniform(0, 5);
            try {
                if (pick <= 2) { // r1 kink on a random crossing-free segment
                    auto segs = d.all_segments();
                    SegRef r = segs[uniform(0, static_cast<int>(segs.size()) - 1)];
                    if (detail::crossings_on(d, r) > 0) continue;
                    auto variant = static_cast<R1Variant>(uniform(0, 3));
                    d = reidemeister_r1_insert(d, r, Rat(uniform(2, 6), 8), variant);
                    return true;
                }
                if (pick <= 4) { // r2 finger between two nearby segments
                    auto segs = d.all_segments();
                    SegRef a = segs[uniform(0, static_cast<int>(segs.size()) - 1)];
                    SegRef b = segs[uniform(0, static_cast<int>(segs.size()) - 1)];
                    if (a == b || d.segments_adjacent(a, b)) continue;
                    if (detail::crossings_on(d, a) > 0) continue;
                    auto variant = static_cast<R2Variant>(uniform(0, 3));
                    d = reidemeister_r2_insert(d, a, b, Rat(uniform(2, 6), 8), variant);
                    return true;
                }
                // r1 deletion of some kink, when one exists
                for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
                    if (d.crossings[c].over.comp != d.crossings[c].under.comp) continue;
                    try {
                        d = reidemeister_r1_delete(d, c);
                        return true;
                    } catch (const Error&) {
                    }
                }
            } catch (const Error&) {
            }
        }
        return false;
    }

    // a small mixed braid: fixed part B on f strands, one or two moving
    // strands winding around it by even crossings
    MixedBraid mixed(int max_fixed = 3, int max_fixed_len = 6) {
        int f = uniform(1, max_fixed);
        BraidWord B;
        B.n = f;
        int blen = f >= 2 ? uniform(0, max_fixed_len) : 0;
        for (int i = 0; i < blen; ++i) {
            int k = uniform(1, f - 1);
            B.letters.push_back(uniform(0, 1) ? k : -k);
        }
        int moving = uniform(1, 2);
        int n = f + moving;
        // interleave B's letters with even winds of the moving strands
        BraidWord full;
        full.n = n;
        size_t bpos = 0;
        int winds = uniform(1, 3);
        for (int t = 0; t < winds; ++t) {
            while (bpos < B.letters.size() && uniform(0, 1)) {
                full.letters.push_back(B.letters[bpos++]);
            }
            int m = f + uniform(1, moving); // a moving strand position
            int depth = uniform(1, f);      // wind around this many strings
            int sgn_pick = uniform(0, 1) ? 1 : -1;
            for (int k = m - 1; k >= depth; --k) full.letters.push_back(sgn_pick * k);
            for (int k = depth; k <= m - 1; ++k) full.letters.push_back(sgn_pick * k);
        }
        while (bpos < B.letters.size()) full.letters.push_back(B.letters[bpos++]);

        std::set<int> fixed;
        for (int p = 1; p <= f; ++p) fixed.insert(p);
        // components = cycles of B's permutation
        Permutation pb = permutation(B);
        std::vector<std::vector<int>> comps = pb.cycles();
        std::vector<long long> framings;
        for (size_t i = 0; i < comps.size(); ++i) framings.push_back(uniform(-2, 2));
        return make_mixed(B, framings, full, fixed, comps);
    }
};

} // namespace plb
