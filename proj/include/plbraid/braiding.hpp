#pragma once

#include "plbraid/braid.hpp"
#include "plbraid/prepare.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace plb {

namespace detail {

enum class PieceKind { down, slid, upper_pillar, lower_pillar };

struct Piece {
    PieceKind kind;
    Seg geom;     // directed along the strand (strictly decreasing y except pillars vertical)
    int up_arc;   // owning up-arc for new pieces, -1 for down pieces
    SegRef orig;  // original segment for down pieces
    int strand = -1;
};

struct SweepEvent {
    Rat y, x;
    int strand_a, strand_b; // a carries the over role
    int sign;
};

} // namespace detail

struct BraidingResult {
    BraidWord word;
    // top position (1-based) of the strand created for each up-arc index
    std::vector<int> position_of_up_arc;
    // strands whose descending chain contains at least one of the requested
    // fixed segments (used by braid_relative)
    std::vector<int> fixed_positions;
};

namespace detail {

// Elimination geometry for one labelled diagram: replaces every up-arc by a
// pair of vertical strands through its top vertex plus a slightly dropped
// copy of the triangle base, then reads the all-descending result as a word.
inline BraidingResult braid_core(const LabeledDiagram& ld, const std::set<SegRef>& fixed) {
    const LinkDiagram& d = ld.diagram;
    const auto& ups = ld.up_arcs;
    if (ups.empty()) throw InvariantViolation("no up-arcs: not a closed diagram");
    for (const auto& u : ups)
        if (u.label == ArcLabel::unlabelled)
            throw InvariantViolation("unlabelled up-arc");
    {
        auto rep = validate_generic(d, ups);
        if (!rep.is_generic) throw InvariantViolation("diagram is not generic");
    }

    const int N = static_cast<int>(ups.size());
    std::vector<Seg> seg_of(N);
    std::vector<bool> vertical(N);
    std::set<SegRef> up_set;
    for (int i = 0; i < N; ++i) {
        seg_of[i] = d.segment(ups[i].seg);
        vertical[i] = seg_of[i].dir().x == 0;
        up_set.insert(ups[i].seg);
    }

    Rat y_top, y_bot;
    {
        bool first = true;
        for (const auto& poly : d.components)
            for (const auto& p : poly) {
                if (first || p.y > y_top) y_top = p.y;
                if (first || p.y < y_bot) y_bot = p.y;
                first = false;
            }
        y_top += 1;
        y_bot -= 1;
    }

    // drop distances for the slid copies of the triangle bases
    std::vector<Rat> eta(N, Rat(0));
    {
        std::vector<Seg> base(N);
        for (int i = 0; i < N; ++i)
            base[i] = Seg{seg_of[i].a, Pt{seg_of[i].b.x, seg_of[i].a.y}};
        auto others = d.all_segments();
        Rat scale(1, 4);
        for (int rounds = 0; rounds < 80; ++rounds) {
            bool all_ok = true;
            for (int i = 0; i < N && all_ok; ++i) {
                if (vertical[i]) continue;
                Rat h = scale * rat_sqrt_lower(dist2(base[i].a, base[i].b)) / 4;
                if (h == 0) h = scale;
                Pt qp{base[i].b.x, base[i].a.y - h};
                Seg slid{base[i].a, qp};
                Tri sliver{base[i].a, base[i].b, qp};
                for (const auto& r : others) {
                    if (r == ups[i].seg || d.segments_adjacent(r, ups[i].seg)) continue;
                    Seg s = d.segment(r);
                    Seg probe = up_set.count(r)
                                    ? Seg{s.a, Pt{s.b.x, s.a.y}} // proxy base of that up-arc
                                    : s;
                    bool hits_base = proper_intersection(base[i], probe).has_value();
                    bool hits_slid = proper_intersection(slid, probe).has_value();
                    if (hits_base != hits_slid) {
                        all_ok = false;
                        break;
                    }
                    if (collinear_point_on_closed(probe, qp)) {
                        all_ok = false;
                        break;
                    }
                }
                if (!all_ok) break;
                for (int c = 0; c < d.component_count() && all_ok; ++c)
                    for (int v = 0; v < d.segment_count(c); ++v) {
                        const Pt& p = d.components[c][v];
                        if (p == base[i].a) continue;
                        if (point_in_closed_triangle(sliver, p) && !sliver.degenerate()) {
                            all_ok = false;
                            break;
                        }
                    }
                if (all_ok) eta[i] = h;
            }
            if (all_ok) break;
            scale = scale / 2;
            if (rounds == 79) throw InvariantViolation("no admissible slide clearance");
        }
    }

    // assemble the final pieces
    std::vector<Piece> pieces;
    std::vector<int> upper_of(N), lower_of(N), slid_of(N, -1);
    for (int i = 0; i < N; ++i) {
        Rat x = seg_of[i].b.x;
        Pt lower_start = vertical[i] ? seg_of[i].a : Pt{x, seg_of[i].a.y - eta[i]};
        upper_of[i] = static_cast<int>(pieces.size());
        pieces.push_back({PieceKind::upper_pillar, Seg{Pt{x, y_top}, seg_of[i].b}, i, {}, -1});
        if (!vertical[i]) {
            slid_of[i] = static_cast<int>(pieces.size());
            pieces.push_back({PieceKind::slid, Seg{seg_of[i].a, lower_start}, i, {}, -1});
        }
        lower_of[i] = static_cast<int>(pieces.size());
        pieces.push_back({PieceKind::lower_pillar, Seg{lower_start, Pt{x, y_bot}}, i, {}, -1});
    }
    std::map<SegRef, int> piece_of_down;
    for (const auto& r : d.all_segments()) {
        if (up_set.count(r)) continue;
        piece_of_down[r] = static_cast<int>(pieces.size());
        pieces.push_back({PieceKind::down, d.segment(r), -1, r, -1});
    }

    // strand chains: each up-arc's top pillar feeds the following descending
    // run, which ends at the next up-arc along the component
    std::map<SegRef, int> up_index;
    for (int i = 0; i < N; ++i) up_index[ups[i].seg] = i;
    std::vector<std::vector<int>> chain(N);
    std::vector<int> terminal_up(N);
    for (int i = 0; i < N; ++i) {
        chain[i].push_back(upper_of[i]);
        SegRef cur = ups[i].seg;
        int guard = 0;
        while (true) {
            int m = d.segment_count(cur.comp);
            cur = {cur.comp, (cur.seg + 1) % m};
            if (up_set.count(cur)) break;
            chain[i].push_back(piece_of_down[cur]);
            if (++guard > 100000) throw InvariantViolation("runaway strand chain");
        }
        int j = up_index[cur];
        if (slid_of[j] >= 0) chain[i].push_back(slid_of[j]);
        chain[i].push_back(lower_of[j]);
        terminal_up[i] = j;
    }
    for (int i = 0; i < N; ++i)
        for (int p : chain[i]) pieces[p].strand = i;

    // top positions: strands sorted by pillar x
    std::vector<int> order(N);
    for (int i = 0; i < N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return seg_of[a].b.x < seg_of[b].b.x; });
    std::vector<int> pos_of(N);
    for (int p = 0; p < N; ++p) pos_of[order[p]] = p + 1;

    // original record lookup for surviving crossings
    std::map<std::pair<SegRef, SegRef>, const CrossingRecord*> orig;
    for (const auto& c : d.crossings) {
        orig[{c.over, c.under}] = &c;
        orig[{c.under, c.over}] = &c;
    }

    auto label_of = [&](int i) { return ups[i].label; };
    std::vector<SweepEvent> events;
    for (size_t a = 0; a < pieces.size(); ++a) {
        for (size_t b = a + 1; b < pieces.size(); ++b) {
            const Piece& pa = pieces[a];
            const Piece& pb = pieces[b];
            auto hit = proper_intersection(pa.geom, pb.geom);
            if (!hit) {
                if (segments_overlap_collinear(pa.geom, pb.geom))
                    throw InvariantViolation("collinear overlap in braided diagram");
                continue;
            }
            bool a_pillar = pa.kind == PieceKind::upper_pillar || pa.kind == PieceKind::lower_pillar;
            bool b_pillar = pb.kind == PieceKind::upper_pillar || pb.kind == PieceKind::lower_pillar;
            const Piece* over = nullptr;
            const Piece* under = nullptr;
            if (a_pillar && b_pillar) throw InvariantViolation("pillar pair crossing");
            if (a_pillar || b_pillar) {
                // a new vertical strand runs over or under everything else
                const Piece& pillar = a_pillar ? pa : pb;
                const Piece& other = a_pillar ? pb : pa;
                bool pillar_over = label_of(pillar.up_arc) == ArcLabel::over;
                over = pillar_over ? &pillar : &other;
                under = pillar_over ? &other : &pillar;
            } else if (pa.kind == PieceKind::slid && pb.kind == PieceKind::slid) {
                if (label_of(pa.up_arc) == label_of(pb.up_arc))
                    throw InvariantViolation("same-type slid arcs crossing");
                bool a_over = label_of(pa.up_arc) == ArcLabel::over;
                over = a_over ? &pa : &pb;
                under = a_over ? &pb : &pa;
            } else if (pa.kind == PieceKind::slid || pb.kind == PieceKind::slid) {
                const Piece& slid_piece = pa.kind == PieceKind::slid ? pa : pb;
                const Piece& other = pa.kind == PieceKind::slid ? pb : pa;
                bool slid_over = label_of(slid_piece.up_arc) == ArcLabel::over;
                over = slid_over ? &slid_piece : &other;
                under = slid_over ? &other : &slid_piece;
            } else {
                auto it = orig.find({pa.orig, pb.orig});
                if (it == orig.end())
                    throw InvariantViolation("unrecorded crossing between kept arcs");
                bool a_over = it->second->over == pa.orig;
                over = a_over ? &pa : &pb;
                under = a_over ? &pb : &pa;
            }
            SweepEvent e;
            e.y = hit->y;
            e.x = hit->x;
            e.strand_a = over->strand;
            e.strand_b = under->strand;
            e.sign = crossing_sign(over->geom.dir(), under->geom.dir());
            if (e.strand_a < 0 || e.strand_b < 0)
                throw InvariantViolation("piece without a strand");
            events.push_back(e);
        }
    }
    std::sort(events.begin(), events.end(), [](const SweepEvent& u, const SweepEvent& v) {
        if (u.y != v.y) return u.y > v.y;
        return u.x < v.x;
    });

    // read the word off the sweep
    std::vector<int> at(N); // position (0-based) -> strand
    for (int p = 0; p < N; ++p) at[p] = order[p];
    BraidWord w;
    w.n = N;
    for (const auto& e : events) {
        int pa = -1, pb = -1;
        for (int p = 0; p < N; ++p) {
            if (at[p] == e.strand_a) pa = p;
            if (at[p] == e.strand_b) pb = p;
        }
        if (pa < 0 || pb < 0 || std::abs(pa - pb) != 1)
            throw InvariantViolation("sweep event between non-adjacent strands");
        int k = std::min(pa, pb) + 1;
        w.letters.push_back(e.sign > 0 ? k : -k);
        std::swap(at[pa], at[pb]);
    }

    BraidingResult res;
    res.word = std::move(w);
    res.position_of_up_arc = pos_of;
    if (!fixed.empty()) {
        std::set<int> fixed_strands;
        for (int i = 0; i < N; ++i)
            for (int p : chain[i])
                if (pieces[p].kind == PieceKind::down && fixed.count(pieces[p].orig))
                    fixed_strands.insert(i);
        for (int s : fixed_strands) res.fixed_positions.push_back(pos_of[s]);
        std::sort(res.fixed_positions.begin(), res.fixed_positions.end());
    }
    return res;
}

} // namespace detail

// The braiding algorithm: eliminates every up-arc of a prepared diagram and
// reads the resulting all-descending diagram left-to-right, top-to-bottom.
inline BraidWord braid_diagram(const LabeledDiagram& ld) {
    return detail::braid_core(ld, {}).word;
}

// Braiding relative to a braided portion: the fixed segments must all be
// descending; the returned positions identify the strands carrying them.
inline BraidingResult braid_relative(const LabeledDiagram& ld, const std::set<SegRef>& fixed) {
    for (const auto& r : fixed)
        if (ld.diagram.segment(r).dir().y >= 0)
            throw FixedPortionNotBraided("fixed segment does not descend");
    return detail::braid_core(ld, fixed);
}

} // namespace plb
