#pragma once

#include "plbraid/braid.hpp"
#include "plbraid/diagram.hpp"

#include <numeric>
#include <vector>

namespace plb {

// Closure geometry. The braid box occupies x in [1, n] with top endpoints at
// (k, 0), bottom endpoints at (k, -(L+1)) and the j-th letter's crossing at
// (i+1/2, -j): one crossing per letter at strictly decreasing integer
// heights. The closure arc for column k leaves the bottom endpoint, and rises
// in a single almost-vertical ascending segment at x = k - 1/3 or x = k + 1/3
// (the channel with the fewer letters to duck under), then hooks back into
// the top endpoint. These rises are the diagram's only up-arcs; every rise
// passes under whatever it meets, so braiding the closure regenerates the
// word letter for letter.
inline LinkDiagram closure(const BraidWord& w) {
    const int n = w.n;
    const int L = static_cast<int>(w.letters.size());
    const Rat half(1, 2), third(1, 3);
    const Rat y_bot = Rat(-(L + 1));

    // letter counts per index, for the side choice
    std::vector<int> cnt(n + 1, 0);
    for (int k : w.letters) ++cnt[std::abs(k)];
    std::vector<Rat> rise_x(n + 1);
    for (int k = 1; k <= n; ++k) {
        int costL = cnt[k - 1], costR = cnt[k];
        rise_x[k] = costL <= costR ? Rat(k) - third : Rat(k) + third;
    }

    // trace strand paths through the box; strand identity = top column
    std::vector<std::vector<Pt>> path(n + 1);
    std::vector<int> strand_at(n + 1); // position -> strand
    for (int p = 1; p <= n; ++p) {
        strand_at[p] = p;
        path[p].push_back({Rat(p), Rat(0)});
    }
    auto append = [&](int s, Pt p) {
        if (path[s].empty() || !(path[s].back() == p)) path[s].push_back(p);
    };
    for (int j = 1; j <= L; ++j) {
        int i = std::abs(w.letters[j - 1]);
        int sa = strand_at[i], sb = strand_at[i + 1];
        Rat y_in = Rat(-j) + half, y_out = Rat(-j) - half;
        append(sa, {Rat(i), y_in});
        append(sa, {Rat(i + 1), y_out});
        append(sb, {Rat(i + 1), y_in});
        append(sb, {Rat(i), y_out});
        std::swap(strand_at[i], strand_at[i + 1]);
    }
    std::vector<int> ends_at(n + 1); // strand -> bottom position
    for (int p = 1; p <= n; ++p) {
        append(strand_at[p], {Rat(p), y_bot});
        ends_at[strand_at[p]] = p;
    }

    // assemble closed components: after bottom position m, the return arc for
    // column m climbs back to top endpoint m
    LinkDiagram d;
    std::vector<char> used(n + 1, 0);
    for (int start = 1; start <= n; ++start) {
        if (used[start]) continue;
        std::vector<Pt> poly;
        int s = start;
        do {
            used[s] = 1;
            for (const auto& p : path[s])
                if (poly.empty() || !(poly.back() == p)) poly.push_back(p);
            int m = ends_at[s];
            poly.push_back({rise_x[m], y_bot - half});
            poly.push_back({rise_x[m], half});
            s = m;
        } while (s != start);
        // closing edge returns to the start vertex; drop a duplicate if any
        if (poly.back() == poly.front()) poly.pop_back();
        d.components.push_back(std::move(poly));
    }

    // over/under: box letters by sign (positive: the left-moving diagonal is
    // over); rises pass under everything
    auto hits = scan_intersections(d);
    std::map<std::pair<SegRef, SegRef>, SegRef> assign;
    for (auto& [a, b] : hits) {
        Seg sa = d.segment(a), sb = d.segment(b);
        bool va = sa.dir().x == 0, vb = sb.dir().x == 0;
        if (va != vb) {
            assign[{a, b}] = va ? b : a; // rise is under
            continue;
        }
        if (va && vb) throw InvariantViolation("closure: two vertical arcs crossing");
        Pt p = *proper_intersection(sa, sb);
        if (rat_den(p.y) != 1) throw InvariantViolation("closure: stray crossing");
        long long j = -static_cast<long long>(rat_num(p.y).convert_to<long long>());
        if (j < 1 || j > L) throw InvariantViolation("closure: crossing outside box");
        bool positive = w.letters[j - 1] > 0;
        bool a_moves_left = sa.dir().x < 0;
        assign[{a, b}] = (positive == a_moves_left) ? a : b;
    }
    return recompute_crossings(d, assign);
}

} // namespace plb
