#pragma once

#include "plbraid/diagram.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace plb {

enum class ArcLabel { over, under, unlabelled };

struct UpArc {
    SegRef seg;
    ArcLabel label = ArcLabel::unlabelled;
    bool free = true; // contains no crossings
};

struct SlidingTriangle {
    int up_arc = -1;    // index into the up-arc list
    Pt right_angle;     // (P.x, Q.y); degenerate when the up-arc is vertical
    ArcLabel type = ArcLabel::unlabelled;
};

// Ascending segments of the diagram, in (comp, seg) order.
inline std::vector<SegRef> find_up_arc_segments(const LinkDiagram& d) {
    std::vector<SegRef> out;
    for (const auto& r : d.all_segments()) {
        Rat dy = d.segment(r).dir().y;
        if (dy == 0) throw NotGeneric("horizontal arc");
        if (dy > 0) out.push_back(r);
    }
    return out;
}

inline Tri sliding_triangle(const LinkDiagram& d, const SegRef& r) {
    Seg s = d.segment(r); // oriented upward: s.a = Q (bottom), s.b = P (top)
    return Tri{s.a, Pt{s.b.x, s.a.y}, s.b};
}

// Two up-arcs are adjacent when their segments share a vertex.
inline bool up_arcs_adjacent(const LinkDiagram& d, const SegRef& a, const SegRef& b) {
    return d.segments_adjacent(a, b);
}

struct GenericityReport {
    std::vector<SegRef> horizontal_arcs;
    std::vector<std::pair<Pt, Pt>> vertical_alignments;
    std::vector<std::pair<SegRef, SegRef>> triangle_violations;
    bool is_generic = true;
};

namespace detail {

struct VertexRef {
    int comp, v;
};

// vertices that bound some up-arc (the subdividing points of the braiding)
inline std::vector<VertexRef> subdividing_points(const LinkDiagram& d,
                                                 const std::vector<SegRef>& ups) {
    std::set<std::pair<int, int>> seen;
    std::vector<VertexRef> out;
    for (const auto& r : ups) {
        int m = d.segment_count(r.comp);
        for (int v : {r.seg, (r.seg + 1) % m}) {
            if (seen.insert({r.comp, v}).second) out.push_back({r.comp, v});
        }
    }
    return out;
}

inline bool vertices_share_edge(const LinkDiagram& d, const VertexRef& a, const VertexRef& b) {
    if (a.comp != b.comp) return false;
    int m = d.segment_count(a.comp);
    int diff = ((a.v - b.v) % m + m) % m;
    return diff == 0 || diff == 1 || diff == m - 1;
}

} // namespace detail

// Checks a label assignment against the triangle condition: non-adjacent
// sliding triangles may meet only if of opposite types, and such contact must
// have interior (not a single point). Unlabelled arcs are tested against both
// possibilities and flagged only if every labelling fails.
inline std::vector<std::pair<SegRef, SegRef>>
triangle_condition_violations(const LinkDiagram& d, const std::vector<UpArc>& ups) {
    std::vector<std::pair<SegRef, SegRef>> bad;
    for (size_t i = 0; i < ups.size(); ++i) {
        for (size_t j = i + 1; j < ups.size(); ++j) {
            if (up_arcs_adjacent(d, ups[i].seg, ups[j].seg)) continue;
            Tri ti = sliding_triangle(d, ups[i].seg);
            Tri tj = sliding_triangle(d, ups[j].seg);
            int dim = triangles_contact_dimension(ti, tj);
            if (dim < 0) continue;
            bool li_known = ups[i].label != ArcLabel::unlabelled;
            bool lj_known = ups[j].label != ArcLabel::unlabelled;
            bool opposite_possible =
                !(li_known && lj_known && ups[i].label == ups[j].label);
            if (!opposite_possible || dim == 0)
                bad.push_back({ups[i].seg, ups[j].seg});
        }
    }
    return bad;
}

// Definition-of-genericity validator. Reports, never throws.
//
// vertical_alignments collects, as point pairs: disjoint subdividing points
// sharing an x-coordinate; a distinct pair of up-arc top vertices sharing an
// x-coordinate; an up-arc top sharing its vertical line with any other vertex,
// any crossing not on that up-arc, or the corner point of another sliding
// triangle. These are exactly the degeneracies that obstruct strand creation.
inline GenericityReport validate_generic(const LinkDiagram& d,
                                         const std::vector<UpArc>& labelled = {}) {
    GenericityReport rep;
    std::vector<SegRef> ups;
    for (const auto& r : d.all_segments()) {
        Rat dy = d.segment(r).dir().y;
        if (dy == 0) {
            rep.horizontal_arcs.push_back(r);
        } else if (dy > 0) {
            ups.push_back(r);
        }
    }

    auto pts = detail::subdividing_points(d, ups);
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            const Pt& a = d.components[pts[i].comp][pts[i].v];
            const Pt& b = d.components[pts[j].comp][pts[j].v];
            if (a.x != b.x || a == b) continue;
            if (detail::vertices_share_edge(d, pts[i], pts[j])) continue;
            rep.vertical_alignments.push_back({a, b});
        }
    }

    // strand-creation lines: the vertical through each up-arc top
    for (size_t i = 0; i < ups.size(); ++i) {
        Seg si = d.segment(ups[i]);
        const Pt top = si.b;
        for (size_t j = 0; j < ups.size(); ++j) {
            if (i == j) continue;
            const Pt other_top = d.segment(ups[j]).b;
            if (other_top.x == top.x && !(other_top == top))
                if (i < j) rep.vertical_alignments.push_back({top, other_top});
        }
        for (int c = 0; c < d.component_count(); ++c) {
            for (int v = 0; v < d.segment_count(c); ++v) {
                const Pt& p = d.components[c][v];
                if (p == top || p == si.a) continue;
                if (p.x == top.x) rep.vertical_alignments.push_back({top, p});
            }
        }
        for (const auto& cr : d.crossings) {
            if (cr.involves(ups[i])) continue;
            if (cr.point.x == top.x) rep.vertical_alignments.push_back({top, cr.point});
        }
        // foot of the sliding triangle must be clear of foreign arcs
        Pt foot{top.x, si.a.y};
        if (!(foot == si.a)) {
            for (const auto& r : d.all_segments()) {
                if (r == ups[i] || d.segments_adjacent(r, ups[i])) continue;
                if (collinear_point_on_closed(d.segment(r), foot))
                    rep.vertical_alignments.push_back({top, foot});
            }
        }
        // a vertical continuation after the top may not dive past the foot
        {
            int m = d.segment_count(ups[i].comp);
            SegRef post{ups[i].comp, (ups[i].seg + 1) % m};
            Seg sp = d.segment(post);
            if (sp.dir().x == 0 && sp.b.y < si.a.y)
                rep.vertical_alignments.push_back({top, sp.b});
        }
    }

    std::vector<UpArc> arcs;
    if (!labelled.empty()) {
        arcs = labelled;
    } else {
        for (const auto& r : ups) arcs.push_back({r, ArcLabel::unlabelled, true});
    }
    rep.triangle_violations = triangle_condition_violations(d, arcs);

    rep.is_generic = rep.horizontal_arcs.empty() && rep.vertical_alignments.empty() &&
                     rep.triangle_violations.empty();
    return rep;
}

// Moves vertices by less than the clearance bound until validate_generic
// passes; the crossing set and over/under choices are preserved
// combinatorially. Throws PerturbationFailed when shifts cannot resolve the
// degeneracies (the caller should subdivide first).
inline LinkDiagram perturb_to_generic(const LinkDiagram& d);

namespace detail {

inline Rat clearance_bound(const LinkDiagram& d) {
    // half the minimal feature separation: vertex-vertex and
    // vertex-to-non-incident-segment distances
    std::optional<Rat> min2;
    auto segs = d.all_segments();
    for (int c = 0; c < d.component_count(); ++c) {
        for (int v = 0; v < d.segment_count(c); ++v) {
            const Pt& p = d.components[c][v];
            for (int c2 = c; c2 < d.component_count(); ++c2) {
                for (int v2 = (c2 == c ? v + 1 : 0); v2 < d.segment_count(c2); ++v2) {
                    Rat q = dist2(p, d.components[c2][v2]);
                    if (q > 0 && (!min2 || q < *min2)) min2 = q;
                }
            }
            for (const auto& r : segs) {
                int m = d.segment_count(r.comp);
                if (r.comp == c && (r.seg == v || (r.seg + 1) % m == v)) continue;
                Rat q = point_segment_dist2(p, d.segment(r));
                if (q > 0 && (!min2 || q < *min2)) min2 = q;
            }
        }
    }
    if (!min2) return Rat(1, 16);
    return rat_sqrt_lower(*min2) / 2;
}

inline bool same_crossing_combinatorics(const LinkDiagram& a, const LinkDiagram& b) {
    if (a.crossings.size() != b.crossings.size()) return false;
    for (size_t i = 0; i < a.crossings.size(); ++i) {
        if (a.crossings[i].over != b.crossings[i].over) return false;
        if (a.crossings[i].under != b.crossings[i].under) return false;
        if (a.crossings[i].sign != b.crossings[i].sign) return false;
    }
    return true;
}

} // namespace detail

inline LinkDiagram perturb_to_generic(const LinkDiagram& d) {
    LinkDiagram cur = d;
    Rat delta = detail::clearance_bound(d);
    const int max_rounds = 256;

    for (int round = 0; round < max_rounds; ++round) {
        GenericityReport rep = validate_generic(cur);
        if (rep.horizontal_arcs.empty() && rep.vertical_alignments.empty()) {
            // triangle-condition trouble is prepare's to fix by subdivision;
            // only isolated point contacts are shift-fixable here
            bool point_contacts = false;
            for (auto& [a, b] : rep.triangle_violations) {
                Tri ta = sliding_triangle(cur, a), tb = sliding_triangle(cur, b);
                if (triangles_contact_dimension(ta, tb) == 0) point_contacts = true;
            }
            if (!point_contacts) return cur;
        }

        // target vertex: second endpoint of the first horizontal arc, or the
        // first vertex of the first aligned pair / point contact
        int tc = -1, tv = -1;
        if (!rep.horizontal_arcs.empty()) {
            tc = rep.horizontal_arcs[0].comp;
            tv = (rep.horizontal_arcs[0].seg + 1) % cur.segment_count(tc);
        } else if (!rep.vertical_alignments.empty()) {
            const Pt& target = rep.vertical_alignments[0].first;
            for (int c = 0; c < cur.component_count() && tc < 0; ++c)
                for (int v = 0; v < cur.segment_count(c); ++v)
                    if (cur.components[c][v] == target) {
                        tc = c;
                        tv = v;
                        break;
                    }
        } else {
            const SegRef a = rep.triangle_violations[0].first;
            tc = a.comp;
            tv = (a.seg + 1) % cur.segment_count(tc); // move the top vertex
        }
        if (tc < 0) throw PerturbationFailed("degenerate feature has no movable vertex");

        bool fixed = false;
        Rat step = delta / 4;
        for (int attempt = 0; attempt < 24 && !fixed; ++attempt, step = step / 2) {
            static const int dirs[8][2] = {{1, 1},  {1, -1}, {-1, 1}, {-1, -1},
                                           {1, 2},  {2, 1},  {-1, 2}, {-2, 1}};
            for (auto& dv : dirs) {
                LinkDiagram trial = cur;
                trial.components[tc][tv].x += step * dv[0];
                trial.components[tc][tv].y += step * dv[1] / 2;
                LinkDiagram rebuilt;
                try {
                    rebuilt = recompute_preserving(trial);
                } catch (const Error&) {
                    continue;
                }
                if (!detail::same_crossing_combinatorics(rebuilt, cur)) continue;
                auto rep2 = validate_generic(rebuilt);
                size_t before = rep.horizontal_arcs.size() + rep.vertical_alignments.size() +
                                rep.triangle_violations.size();
                size_t after = rep2.horizontal_arcs.size() + rep2.vertical_alignments.size() +
                               rep2.triangle_violations.size();
                if (after < before) {
                    cur = rebuilt;
                    fixed = true;
                    break;
                }
            }
        }
        if (!fixed) throw PerturbationFailed("no admissible shift found");
    }
    throw PerturbationFailed("round budget exhausted");
}

} // namespace plb
