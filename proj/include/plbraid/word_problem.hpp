#pragma once

#include "plbraid/braid.hpp"

#include <cstdlib>
#include <list>

namespace plb {

namespace detail {

// One pass of handle reduction on a letter list. A sigma_i handle is a factor
// sigma_i^e u sigma_i^{-e} whose interior u uses only generators of index > i.
// Reducing it deletes the pair and rewrites each sigma_{i+1}^d in u as
// sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^{e}. Returns false when no handle
// exists (the word is reduced).
inline bool reduce_one_handle(std::list<int>& ls, long long& budget) {
    // find the handle with the innermost closing position: scan left to right,
    // remembering the last unmatched occurrence per generator index
    for (auto it = ls.begin(); it != ls.end(); ++it) {
        int i = std::abs(*it);
        // candidate opener at `it`: find matching closer with clean interior
        auto jt = std::next(it);
        bool clean = true;
        for (; jt != ls.end(); ++jt) {
            int j = std::abs(*jt);
            if (j < i) {
                clean = false;
                break;
            }
            if (j == i) break;
        }
        if (!clean || jt == ls.end()) continue;
        if (*jt != -*it) continue; // same sign: not a handle
        int e = *it > 0 ? 1 : -1;
        // rewrite interior
        std::list<int> inner;
        for (auto kt = std::next(it); kt != ls.end() && kt != jt; ++kt) {
            int k = *kt;
            if (--budget < 0) throw EffortExceeded("handle reduction budget");
            if (std::abs(k) == i + 1) {
                inner.push_back(-e * (i + 1));
                inner.push_back(k > 0 ? i : -i);
                inner.push_back(e * (i + 1));
            } else {
                inner.push_back(k);
            }
        }
        auto after = std::next(jt);
        ls.erase(it, after);
        ls.splice(after, inner);
        return true;
    }
    return false;
}

} // namespace detail

// Fully handle-reduce a word; the result is empty iff the word is trivial.
inline BraidWord handle_reduce(const BraidWord& w, long long budget = 1000000) {
    std::list<int> ls;
    for (int k : free_reduce(w).letters) ls.push_back(k);
    while (true) {
        if (--budget < 0) throw EffortExceeded("handle reduction budget");
        // free reduction interleaved keeps words short
        bool cancelled = true;
        while (cancelled) {
            cancelled = false;
            for (auto it = ls.begin(); it != ls.end();) {
                auto nx = std::next(it);
                if (nx != ls.end() && *it == -*nx) {
                    nx = ls.erase(it, std::next(nx));
                    it = nx == ls.begin() ? nx : std::prev(nx);
                    cancelled = true;
                } else {
                    it = nx;
                }
            }
        }
        if (!detail::reduce_one_handle(ls, budget)) break;
    }
    BraidWord r;
    r.n = w.n;
    r.letters.assign(ls.begin(), ls.end());
    return r;
}

// Decides a = b in the braid group on a.n strands. Deterministic; throws
// EffortExceeded when the step budget runs out rather than guessing.
inline bool words_equal_in_group(const BraidWord& a, const BraidWord& b,
                                 long long budget = 1000000) {
    if (a.n != b.n) throw StrandMismatch("words_equal_in_group");
    if (permutation(a).images != permutation(b).images) return false;
    if (a.exponent_sum() != b.exponent_sum()) return false;
    BraidWord diff = compose(a, inverse(b));
    return handle_reduce(diff, budget).letters.empty();
}

} // namespace plb
