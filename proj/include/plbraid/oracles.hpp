#pragma once

#include "plbraid/braid.hpp"
#include "plbraid/diagram.hpp"
#include "plbraid/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace plb {

inline int writhe(const LinkDiagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

inline int component_count(const LinkDiagram& d) { return d.component_count(); }

// lk(i,j) for i != j is the half-sum of crossing signs between components i
// and j; the diagonal carries the writhe of each component.
inline std::vector<std::vector<long long>> linking_matrix(const LinkDiagram& d) {
    int n = d.component_count();
    std::vector<std::vector<long long>> sum(n, std::vector<long long>(n, 0));
    for (const auto& c : d.crossings) {
        int i = c.over.comp, j = c.under.comp;
        sum[i][j] += c.sign;
        if (i != j) sum[j][i] += c.sign;
    }
    std::vector<std::vector<long long>> lk(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                lk[i][i] = sum[i][i];
            } else {
                if (sum[i][j] % 2 != 0)
                    throw InvariantViolation("odd inter-component crossing sum");
                lk[i][j] = sum[i][j] / 2;
            }
        }
    }
    return lk;
}

inline LinkDiagram mirror_diagram(const LinkDiagram& d) {
    LinkDiagram out = d;
    for (auto& c : out.crossings) {
        std::swap(c.over, c.under);
        c.sign = -c.sign;
    }
    return out;
}

namespace detail {

struct PortGraph {
    int crossings = 0;
    int free_circles = 0;
    std::vector<int> arc_mate;       // involution pairing ports along strands
    std::vector<int> pair_plus[2];   // smoothing pairings for sign>0 crossings
    std::vector<int> pair_minus[2];  // and for sign<0 crossings
    std::vector<int> sign_positive;  // per crossing
};

// Ports per crossing: 0 over-in, 1 over-out, 2 under-in, 3 under-out.
inline PortGraph build_port_graph(const LinkDiagram& d) {
    PortGraph g;
    g.crossings = static_cast<int>(d.crossings.size());
    int P = 4 * g.crossings;
    g.arc_mate.assign(P, -1);
    g.sign_positive.resize(g.crossings);
    for (int c = 0; c < g.crossings; ++c) g.sign_positive[c] = d.crossings[c].sign > 0;

    // passages per segment: (crossing, role over?) sorted along the segment
    std::map<SegRef, std::vector<std::pair<Rat, std::pair<int, bool>>>> on_seg;
    for (int c = 0; c < g.crossings; ++c) {
        const auto& rec = d.crossings[c];
        for (bool over : {true, false}) {
            SegRef r = over ? rec.over : rec.under;
            Seg s = d.segment(r);
            Rat t = dot(rec.point - s.a, s.dir());
            on_seg[r].push_back({t, {c, over}});
        }
    }
    for (auto& [r, v] : on_seg)
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

    for (int comp = 0; comp < d.component_count(); ++comp) {
        std::vector<std::pair<int, bool>> walk; // passages in curve order
        for (int s = 0; s < d.segment_count(comp); ++s) {
            auto it = on_seg.find({comp, s});
            if (it == on_seg.end()) continue;
            for (auto& [t, pr] : it->second) walk.push_back(pr);
        }
        if (walk.empty()) {
            ++g.free_circles;
            continue;
        }
        auto port = [](const std::pair<int, bool>& pr, bool in) {
            return 4 * pr.first + (pr.second ? 0 : 2) + (in ? 0 : 1);
        };
        int m = static_cast<int>(walk.size());
        for (int i = 0; i < m; ++i) {
            int out = port(walk[i], false);
            int in = port(walk[(i + 1) % m], true);
            g.arc_mate[out] = in;
            g.arc_mate[in] = out;
        }
    }
    for (int p = 0; p < P; ++p)
        if (g.arc_mate[p] < 0) throw InvariantViolation("dangling crossing port");

    // smoothing pairings within a crossing, as local port permutations.
    // For a positive crossing the A-smoothing joins over-in/under-out and
    // over-out/under-in (the orientation-respecting reconnection); for a
    // negative crossing it joins over-in/under-in and over-out/under-out.
    // The B-smoothing is the other matching. Pinned by the positive-kink
    // value -A^3 and the agreement with the Temperley-Lieb pipeline.
    g.pair_plus[0] = {3, 2, 1, 0};  // A on positive
    g.pair_plus[1] = {2, 3, 0, 1};  // B on positive
    g.pair_minus[0] = {2, 3, 0, 1}; // A on negative
    g.pair_minus[1] = {3, 2, 1, 0}; // B on negative
    return g;
}

} // namespace detail

namespace detail {

// Union-find with union by size and an undo stack (no path compression, so
// merges roll back exactly). Sized for the 4c crossing ports.
struct RollbackDsu {
    std::vector<int> parent, size;
    std::vector<int> undo;

    explicit RollbackDsu(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    // returns true if a merge happened (false: already connected)
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        undo.push_back(b);
        return true;
    }
    size_t mark() const { return undo.size(); }
    void rollback(size_t m) {
        while (undo.size() > m) {
            int b = undo.back();
            undo.pop_back();
            size[parent[b]] -= size[b];
            parent[b] = b;
        }
    }
};

} // namespace detail

// Exact bracket polynomial by the 2^c state sum, evaluated as a recursion
// over smoothing choices with shared prefixes. Throws TooManyCrossings above
// the bound (the caller can raise it; runtime grows as 2^c).
inline LaurentPoly kauffman_bracket(const LinkDiagram& d, int max_crossings = 20) {
    int c = static_cast<int>(d.crossings.size());
    if (c > max_crossings)
        throw TooManyCrossings(std::to_string(c) + " crossings exceeds bound " +
                               std::to_string(max_crossings));
    auto g = detail::build_port_graph(d);
    int P = 4 * c;

    // histogram over (number of A smoothings, loop count)
    const int max_loops = c + d.component_count() + 2;
    std::vector<std::vector<long long>> hist(c + 1, std::vector<long long>(max_loops, 0));

    detail::RollbackDsu dsu(std::max(P, 1));
    for (int p = 0; p < P; ++p) dsu.unite(p, g.arc_mate[p]);

    struct Walker {
        const detail::PortGraph& g;
        detail::RollbackDsu& dsu;
        std::vector<std::vector<long long>>& hist;
        int c;
        int loops;
        int a_count = 0;

        void recurse(int cr) {
            if (cr == c) {
                ++hist[a_count][loops];
                return;
            }
            for (int variant = 0; variant < 2; ++variant) {
                const auto& tab =
                    g.sign_positive[cr] ? g.pair_plus[variant] : g.pair_minus[variant];
                size_t m = dsu.mark();
                int closed = 0;
                if (!dsu.unite(4 * cr + 0, 4 * cr + tab[0])) ++closed;
                if (!dsu.unite(4 * cr + 1, 4 * cr + tab[1])) ++closed;
                loops += closed;
                if (variant == 0) ++a_count;
                recurse(cr + 1);
                if (variant == 0) --a_count;
                loops -= closed;
                dsu.rollback(m);
            }
        }
    };
    Walker walker{g, dsu, hist, c, g.free_circles, 0};
    walker.recurse(0);

    LaurentPoly delta = LaurentPoly::loop_value();
    LaurentPoly result;
    std::vector<LaurentPoly> delta_pow(max_loops + 1);
    delta_pow[0] = LaurentPoly::one();
    for (size_t i = 1; i < delta_pow.size(); ++i) delta_pow[i] = delta_pow[i - 1] * delta;
    for (int a = 0; a <= c; ++a) {
        for (int loops_n = 1; loops_n < max_loops; ++loops_n) {
            long long count = hist[a][loops_n];
            if (!count) continue;
            long long exp = 2LL * a - c; // a - b
            result += delta_pow[loops_n - 1].shifted(exp) * LaurentPoly::monomial(0, count);
        }
    }
    return result;
}

// Writhe-normalized bracket: invariant under all Reidemeister moves.
inline LaurentPoly normalized_bracket(const LinkDiagram& d, int max_crossings = 20) {
    return kauffman_bracket(d, max_crossings) * LaurentPoly::writhe_factor(-writhe(d));
}

// --- Temperley-Lieb evaluation of the bracket of a braid closure ---------

namespace detail {

// planar pairing of 2n points (0..n-1 top, n..2n-1 bottom) as a mate vector
using TLDiagram = std::vector<int>;

struct TLElement {
    std::map<TLDiagram, LaurentPoly> terms;

    void add(const TLDiagram& d, const LaurentPoly& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms.find(d);
        if (it == terms.end()) {
            terms[d] = coeff;
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

// Composes D with the cup-cap generator at bottom slots (a, a+1).
// Returns the new diagram and how many closed loops were produced (0 or 1).
inline std::pair<TLDiagram, int> tl_apply_e(const TLDiagram& d, int n, int a) {
    TLDiagram r = d;
    int p = n + a, q = n + a + 1;
    if (d[p] == q) {
        // cup closes against the existing cap: one loop, pairing unchanged
        return {r, 1};
    }
    int x = d[p], y = d[q];
    r[x] = y;
    r[y] = x;
    r[p] = q;
    r[q] = p;
    return {r, 0};
}

} // namespace detail

// Bracket polynomial of the closure of w, evaluated through the
// Temperley-Lieb expansion of each letter; agrees with kauffman_bracket on
// closure(w) and shares none of its code path.
inline LaurentPoly bracket_from_braid(const BraidWord& w, int max_strands = 10) {
    if (w.n > max_strands)
        throw TooManyStrands(std::to_string(w.n) + " strands exceeds bound " +
                             std::to_string(max_strands));
    const int n = w.n;
    LaurentPoly delta = LaurentPoly::loop_value();
    LaurentPoly A = LaurentPoly::monomial(1, 1);
    LaurentPoly Ainv = LaurentPoly::monomial(-1, 1);

    detail::TLElement cur;
    detail::TLDiagram ident(2 * n);
    for (int i = 0; i < n; ++i) {
        ident[i] = n + i;
        ident[n + i] = i;
    }
    cur.add(ident, LaurentPoly::one());

    for (int k : w.letters) {
        int a = std::abs(k) - 1;
        bool positive = k > 0;
        detail::TLElement next;
        for (auto& [dgm, coeff] : cur.terms) {
            next.add(dgm, coeff * (positive ? A : Ainv));
            auto [capped, loops] = detail::tl_apply_e(dgm, n, a);
            LaurentPoly f = coeff * (positive ? Ainv : A);
            if (loops) f *= delta;
            next.add(capped, f);
        }
        cur = std::move(next);
    }

    // close up: join top i to bottom n+i and count loops
    LaurentPoly result;
    for (auto& [dgm, coeff] : cur.terms) {
        std::vector<char> seen(2 * n, 0);
        int loops = 0;
        for (int p0 = 0; p0 < 2 * n; ++p0) {
            if (seen[p0]) continue;
            ++loops;
            int p = p0;
            do {
                seen[p] = 1;
                int q = dgm[p]; // through the tangle
                seen[q] = 1;
                p = q < n ? q + n : q - n; // through the closure arcs
            } while (p != p0);
        }
        LaurentPoly f = coeff;
        for (int i = 1; i < loops; ++i) f *= delta;
        result += f;
    }
    return result;
}

inline LaurentPoly normalized_bracket_from_braid(const BraidWord& w, int max_strands = 10) {
    return bracket_from_braid(w, max_strands) *
           LaurentPoly::writhe_factor(-w.exponent_sum());
}

} // namespace plb
