#pragma once

#include "plbraid/generic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace plb {

struct LabeledDiagram {
    LinkDiagram diagram;
    std::vector<UpArc> up_arcs;
    std::vector<SlidingTriangle> triangles;
};

inline std::vector<SlidingTriangle> build_triangles(const LinkDiagram& d,
                                                    const std::vector<UpArc>& ups) {
    std::vector<SlidingTriangle> out;
    for (size_t i = 0; i < ups.size(); ++i) {
        Seg s = d.segment(ups[i].seg);
        out.push_back({static_cast<int>(i), Pt{s.b.x, s.a.y}, ups[i].label});
    }
    return out;
}

inline std::pair<bool, std::vector<std::pair<SegRef, SegRef>>>
check_triangle_condition(const LabeledDiagram& ld) {
    auto bad = triangle_condition_violations(ld.diagram, ld.up_arcs);
    return {bad.empty(), bad};
}

// epsilon from the subdivision recipe: with d the least distance between two
// crossings, r = d/4 (shrunk if a stray arc comes closer to a crossing than
// that), and s the least separation of the diagram outside the crossing
// neighbourhoods, return half of min(s, r). Crossingless diagrams fall back
// to half the shortest segment length.
inline Rat subdivision_epsilon(const LinkDiagram& d) {
    auto segs = d.all_segments();
    if (d.crossings.empty()) {
        std::optional<Rat> min_len2;
        for (const auto& r : segs) {
            Seg s = d.segment(r);
            Rat q = dist2(s.a, s.b);
            if (!min_len2 || q < *min_len2) min_len2 = q;
        }
        return rat_sqrt_lower(*min_len2) / 2;
    }

    std::optional<Rat> r2; // squared radius of the clear crossing discs
    for (size_t i = 0; i < d.crossings.size(); ++i)
        for (size_t j = i + 1; j < d.crossings.size(); ++j) {
            Rat q = dist2(d.crossings[i].point, d.crossings[j].point) / 16;
            if (!r2 || q < *r2) r2 = q;
        }
    for (const auto& cr : d.crossings) {
        for (const auto& r : segs) {
            if (cr.involves(r)) continue;
            Rat q = point_segment_dist2(cr.point, d.segment(r)) / 4;
            if (q > 0 && (!r2 || q < *r2)) r2 = q;
        }
    }
    if (!r2) r2 = Rat(1, 4); // single crossing, nothing else nearby

    std::optional<Rat> s2;
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            if (d.segments_adjacent(segs[i], segs[j])) continue;
            Seg a = d.segment(segs[i]), b = d.segment(segs[j]);
            Rat q;
            if (proper_intersection(a, b)) {
                // separation outside the crossing disc is at least r sin(theta)
                Rat c = cross(a.dir(), b.dir());
                q = *r2 * (c * c) / (dot(a.dir(), a.dir()) * dot(b.dir(), b.dir()));
            } else {
                q = segment_segment_dist2(a, b);
            }
            if (q > 0 && (!s2 || q < *s2)) s2 = q;
        }
    }
    Rat bound2 = s2 ? rat_min(*s2, *r2) : *r2;
    return rat_sqrt_lower(bound2) / 2;
}

namespace detail {

// role of an up-arc at its crossings: over / under / none / mixed(conflict)
inline std::pair<ArcLabel, bool> forced_label(const LinkDiagram& d, const SegRef& r) {
    bool over = false, under = false;
    for (const auto& c : d.crossings) {
        if (c.over == r) over = true;
        if (c.under == r) under = true;
    }
    if (over && under) return {ArcLabel::unlabelled, true};
    if (over) return {ArcLabel::over, false};
    if (under) return {ArcLabel::under, false};
    return {ArcLabel::unlabelled, false};
}

// Subdivision point that keeps the diagram generic: walks candidate
// parameters around `t0` until the new vertex is clear of alignments.
inline Pt pick_subdivision_point(const LinkDiagram& d, const SegRef& r, const Rat& t0,
                                 const Rat& window) {
    Seg s = d.segment(r);
    auto admissible = [&](const Rat& t) -> std::optional<Pt> {
        if (t <= 0 || t >= 1) return std::nullopt;
        Pt p{s.a.x + t * s.dir().x, s.a.y + t * s.dir().y};
        for (const auto& cr : d.crossings) {
            if (cr.point == p) return std::nullopt;
            if (s.dir().x != 0 && cr.point.x == p.x) return std::nullopt;
        }
        if (s.dir().x != 0) {
            for (int c = 0; c < d.component_count(); ++c)
                for (int v = 0; v < d.segment_count(c); ++v)
                    if (d.components[c][v].x == p.x) return std::nullopt;
        }
        return p;
    };
    if (auto p = admissible(t0)) return *p;
    Rat step = window;
    for (int k = 0; k < 64; ++k, step = step / 2) {
        if (auto p = admissible(t0 + step)) return *p;
        if (auto p = admissible(t0 - step)) return *p;
    }
    throw PerturbationFailed("no admissible subdivision point");
}

// params (along the segment) of the crossings sitting on r, sorted
inline std::vector<std::pair<Rat, bool>> crossing_params(const LinkDiagram& d, const SegRef& r) {
    Seg s = d.segment(r);
    Rat len2 = dot(s.dir(), s.dir());
    std::vector<std::pair<Rat, bool>> out; // (param, role is over)
    for (const auto& c : d.crossings) {
        if (c.over == r) out.push_back({dot(c.point - s.a, s.dir()) / len2, true});
        if (c.under == r) out.push_back({dot(c.point - s.a, s.dir()) / len2, false});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace detail

// Subdivides and labels until every up-arc carries crossings of one role
// only and the triangle condition holds. Free up-arcs default to 'over',
// switching to 'under' (or being split) where a nearby labelled triangle
// forces the choice. The input must already be generic.
inline LabeledDiagram prepare(const LinkDiagram& input) {
    LinkDiagram d = input;
    {
        auto rep = validate_generic(d);
        if (!rep.horizontal_arcs.empty() || !rep.vertical_alignments.empty())
            throw NotGeneric("prepare requires a generic diagram");
    }

    const int max_rounds = 40;
    for (int round = 0; round < max_rounds; ++round) {
        // 1. split up-arcs that carry both roles
        bool split_something = false;
        for (const auto& r : find_up_arc_segments(d)) {
            auto params = detail::crossing_params(d, r);
            for (size_t i = 0; i + 1 < params.size(); ++i) {
                if (params[i].second != params[i + 1].second) {
                    Rat t0 = (params[i].first + params[i + 1].first) / 2;
                    Rat window = (params[i + 1].first - params[i].first) / 4;
                    Pt p = detail::pick_subdivision_point(d, r, t0, window);
                    d = subdivide_arc(d, r, p);
                    split_something = true;
                    break;
                }
            }
            if (split_something) break;
        }
        if (split_something) continue;

        // 2. labels: forced by crossings, then the forcing rule for free arcs
        std::vector<UpArc> ups;
        for (const auto& r : find_up_arc_segments(d)) {
            auto [label, conflict] = detail::forced_label(d, r);
            if (conflict) throw LabelConflict("up-arc carries both roles after subdivision");
            ups.push_back({r, label, label == ArcLabel::unlabelled});
        }
        for (auto& u : ups)
            if (u.free) u.label = ArcLabel::over;
        // forcing passes: a free arc whose triangle meets a non-adjacent
        // fixed triangle of equal type flips; both-sides pressure means the
        // arc must be split instead
        std::optional<SegRef> must_split;
        for (int pass = 0; pass < 8 && !must_split; ++pass) {
            bool changed = false;
            for (size_t i = 0; i < ups.size() && !must_split; ++i) {
                if (!ups[i].free) continue;
                bool meets_over = false, meets_under = false;
                Tri ti = sliding_triangle(d, ups[i].seg);
                for (size_t j = 0; j < ups.size(); ++j) {
                    if (i == j || up_arcs_adjacent(d, ups[i].seg, ups[j].seg)) continue;
                    if (ups[j].free && j > i) continue; // settled in order
                    Tri tj = sliding_triangle(d, ups[j].seg);
                    if (!triangles_meet(ti, tj)) continue;
                    (ups[j].label == ArcLabel::over ? meets_over : meets_under) = true;
                }
                if (meets_over && meets_under) {
                    must_split = ups[i].seg;
                } else if (meets_over && ups[i].label == ArcLabel::over) {
                    ups[i].label = ArcLabel::under;
                    changed = true;
                } else if (meets_under && ups[i].label == ArcLabel::under) {
                    ups[i].label = ArcLabel::over;
                    changed = true;
                }
            }
            if (!changed) break;
        }
        if (must_split) {
            Pt p = detail::pick_subdivision_point(d, *must_split, Rat(1, 2), Rat(1, 4));
            d = subdivide_arc(d, *must_split, p);
            continue;
        }

        // 3. the triangle condition proper
        auto bad = triangle_condition_violations(d, ups);
        if (bad.empty()) {
            LabeledDiagram ld;
            ld.diagram = d;
            ld.up_arcs = ups;
            ld.triangles = build_triangles(d, ups);
            return ld;
        }
        // split the longer member of the first violating pair
        SegRef a = bad[0].first, b = bad[0].second;
        Rat la = dist2(d.segment(a).a, d.segment(a).b);
        Rat lb = dist2(d.segment(b).a, d.segment(b).b);
        SegRef tgt = la >= lb ? a : b;
        Pt p = detail::pick_subdivision_point(d, tgt, Rat(1, 2), Rat(1, 4));
        d = subdivide_arc(d, tgt, p);
    }
    throw LabelConflict("triangle condition not achieved within the subdivision budget");
}

inline std::vector<SegRef> find_up_arcs(const LinkDiagram& d) { return find_up_arc_segments(d); }

} // namespace plb
