#pragma once

#include "plbraid/errors.hpp"
#include "plbraid/geometry.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace plb {

// (component index, segment index); segment s joins vertex s to s+1 (cyclic).
struct SegRef {
    int comp = 0;
    int seg = 0;
    bool operator==(const SegRef& o) const { return comp == o.comp && seg == o.seg; }
    bool operator!=(const SegRef& o) const { return !(*this == o); }
    bool operator<(const SegRef& o) const {
        return std::tie(comp, seg) < std::tie(o.comp, o.seg);
    }
};

struct CrossingRecord {
    SegRef over;
    SegRef under;
    Pt point;
    int sign = 0; // +1 when (over direction, under direction) is a positive frame

    bool involves(const SegRef& s) const { return over == s || under == s; }
};

// Oriented closed PL link diagram with exact rational vertices. Orientation of
// each component is the cyclic order of its vertex list. Immutable by
// convention: operations return new values.
struct LinkDiagram {
    std::vector<std::vector<Pt>> components;
    std::vector<CrossingRecord> crossings;

    int component_count() const { return static_cast<int>(components.size()); }

    int segment_count(int comp) const { return static_cast<int>(components[comp].size()); }

    Seg segment(const SegRef& r) const {
        const auto& poly = components[r.comp];
        int m = static_cast<int>(poly.size());
        return {poly[r.seg], poly[(r.seg + 1) % m]};
    }

    std::vector<SegRef> all_segments() const {
        std::vector<SegRef> out;
        for (int c = 0; c < component_count(); ++c)
            for (int s = 0; s < segment_count(c); ++s) out.push_back({c, s});
        return out;
    }

    bool segments_adjacent(const SegRef& a, const SegRef& b) const {
        if (a.comp != b.comp) return false;
        if (a.seg == b.seg) return true;
        int m = segment_count(a.comp);
        return (a.seg + 1) % m == b.seg || (b.seg + 1) % m == a.seg;
    }
};

inline int crossing_sign(const Pt& over_dir, const Pt& under_dir) {
    int s = sgn(cross(over_dir, under_dir));
    if (s == 0) throw NonRegularProjection("tangential crossing");
    return s;
}

// Validates basic shape: polygons with >= 3 vertices, consecutive vertices
// distinct, and a regular projection (pairwise transversal interior
// intersections, no vertex on a foreign segment, no triple points).
// Returns the full sorted list of intersections found.
inline std::vector<std::pair<SegRef, SegRef>> scan_intersections(const LinkDiagram& d) {
    for (const auto& poly : d.components) {
        if (poly.size() < 3) throw NonRegularProjection("polygon with fewer than 3 vertices");
        for (size_t i = 0; i < poly.size(); ++i)
            if (poly[i] == poly[(i + 1) % poly.size()])
                throw NonRegularProjection("repeated consecutive vertex");
    }
    auto segs = d.all_segments();
    // vertex-on-segment checks
    for (const auto& r : segs) {
        Seg s = d.segment(r);
        for (int c = 0; c < d.component_count(); ++c) {
            for (int v = 0; v < d.segment_count(c); ++v) {
                const Pt& p = d.components[c][v];
                if (r.comp == c) {
                    int m = d.segment_count(c);
                    if (v == r.seg || v == (r.seg + 1) % m) continue;
                }
                if (collinear_point_on_closed(s, p))
                    throw NonRegularProjection("vertex lies on another segment");
            }
        }
    }
    std::vector<std::pair<SegRef, SegRef>> hits;
    std::map<std::pair<std::string, std::string>, int> point_multiplicity;
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            Seg s = d.segment(segs[i]), t = d.segment(segs[j]);
            if (segments_overlap_collinear(s, t))
                throw NonRegularProjection("collinear overlapping segments");
            if (d.segments_adjacent(segs[i], segs[j])) continue;
            auto p = proper_intersection(s, t);
            if (!p) continue;
            hits.push_back({segs[i], segs[j]});
            auto key = std::make_pair(rat_str(p->x), rat_str(p->y));
            if (++point_multiplicity[key] > 1)
                throw NonRegularProjection("three segments through one point");
        }
    }
    return hits;
}

// Rebuilds the crossing list from geometry. over_assignments maps an
// unordered segment pair (given in either order) to the segment that passes
// over. Deterministic: crossings sorted by (over.comp, over.seg, under.comp,
// under.seg).
inline LinkDiagram recompute_crossings(const LinkDiagram& d,
                                       const std::map<std::pair<SegRef, SegRef>, SegRef>& over_assignments) {
    LinkDiagram out;
    out.components = d.components;
    auto hits = scan_intersections(out);
    for (auto& [a, b] : hits) {
        auto it = over_assignments.find({a, b});
        if (it == over_assignments.end()) it = over_assignments.find({b, a});
        if (it == over_assignments.end())
            throw MissingAssignment("no over-choice for a crossing pair");
        SegRef over = it->second;
        SegRef under = over == a ? b : a;
        if (over != a && over != b)
            throw MissingAssignment("assignment names a foreign segment");
        CrossingRecord rec;
        rec.over = over;
        rec.under = under;
        rec.point = *proper_intersection(out.segment(a), out.segment(b));
        rec.sign = crossing_sign(out.segment(over).dir(), out.segment(under).dir());
        out.crossings.push_back(rec);
    }
    std::sort(out.crossings.begin(), out.crossings.end(), [](const auto& x, const auto& y) {
        return std::tie(x.over.comp, x.over.seg, x.under.comp, x.under.seg) <
               std::tie(y.over.comp, y.over.seg, y.under.comp, y.under.seg);
    });
    return out;
}

// Carries existing over/under choices through recomputation (after a vertex
// edit that preserves the crossing set combinatorially).
inline LinkDiagram recompute_preserving(const LinkDiagram& d) {
    std::map<std::pair<SegRef, SegRef>, SegRef> assign;
    for (const auto& c : d.crossings) assign[{c.over, c.under}] = c.over;
    return recompute_crossings(d, assign);
}

// Inserts vertex p in the open interior of the given segment. The curve is
// unchanged as a point set; crossing records are re-indexed.
inline LinkDiagram subdivide_arc(const LinkDiagram& d, const SegRef& r, const Pt& p) {
    Seg s = d.segment(r);
    if (!point_in_open_segment(s, p)) throw PointNotOnSegment("subdivide_arc");
    for (const auto& c : d.crossings)
        if (c.point == p) throw PointOnCrossing("subdivide_arc");
    LinkDiagram out;
    out.components = d.components;
    auto& poly = out.components[r.comp];
    poly.insert(poly.begin() + r.seg + 1, p);
    auto fix = [&](SegRef g) {
        if (g.comp != r.comp) return g;
        if (g.seg > r.seg) return SegRef{g.comp, g.seg + 1};
        return g;
    };
    out.crossings = d.crossings;
    for (auto& c : out.crossings) {
        // a crossing on the split segment lands on the piece containing it
        auto place = [&](SegRef g) {
            if (g.comp == r.comp && g.seg == r.seg) {
                Seg first{s.a, p};
                return point_in_open_segment(first, c.point) ? g : SegRef{g.comp, g.seg + 1};
            }
            return fix(g);
        };
        c.over = place(c.over);
        c.under = place(c.under);
    }
    std::sort(out.crossings.begin(), out.crossings.end(), [](const auto& x, const auto& y) {
        return std::tie(x.over.comp, x.over.seg, x.under.comp, x.under.seg) <
               std::tie(y.over.comp, y.over.seg, y.under.comp, y.under.seg);
    });
    return out;
}

// Inverse of subdivide_arc: removes vertex v when its two incident segments
// are collinear and no crossing sits at the vertex.
inline LinkDiagram remove_vertex(const LinkDiagram& d, int comp, int v) {
    const auto& poly = d.components[comp];
    int m = static_cast<int>(poly.size());
    if (m <= 3) throw PointNotOnSegment("remove_vertex: polygon too small");
    const Pt& prev = poly[(v + m - 1) % m];
    const Pt& cur = poly[v];
    const Pt& next = poly[(v + 1) % m];
    if (orient(prev, next, cur) != 0 || !point_in_open_segment({prev, next}, cur))
        throw PointNotOnSegment("remove_vertex: vertex is a genuine corner");
    LinkDiagram out;
    out.components = d.components;
    out.components[comp].erase(out.components[comp].begin() + v);
    int prev_seg = (v + m - 1) % m;
    auto fix = [&](SegRef g) {
        if (g.comp != comp) return g;
        if (g.seg == v) return SegRef{comp, prev_seg < v ? prev_seg : prev_seg - 1};
        int s = g.seg > v ? g.seg - 1 : g.seg;
        return SegRef{comp, s};
    };
    out.crossings = d.crossings;
    for (auto& c : out.crossings) {
        c.over = fix(c.over);
        c.under = fix(c.under);
    }
    std::sort(out.crossings.begin(), out.crossings.end(), [](const auto& x, const auto& y) {
        return std::tie(x.over.comp, x.over.seg, x.under.comp, x.under.seg) <
               std::tie(y.over.comp, y.over.seg, y.under.comp, y.under.seg);
    });
    return out;
}

// --- serialization -------------------------------------------------------
// {"components": [[{"x":"p/q","y":"p/q"}, ...], ...],
//  "crossings": [{"over":[ci,si],"under":[cj,sj]}, ...]}
// Writer emits crossings sorted lexicographically; reader accepts any order.

inline void write_diagram(std::ostream& os, const LinkDiagram& d) {
    os << "{\"components\": [";
    for (size_t c = 0; c < d.components.size(); ++c) {
        if (c) os << ", ";
        os << "[";
        for (size_t v = 0; v < d.components[c].size(); ++v) {
            if (v) os << ", ";
            os << "{\"x\": \"" << rat_str(d.components[c][v].x) << "\", \"y\": \""
               << rat_str(d.components[c][v].y) << "\"}";
        }
        os << "]";
    }
    os << "], \"crossings\": [";
    auto sorted = d.crossings;
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        return std::tie(x.over.comp, x.over.seg, x.under.comp, x.under.seg) <
               std::tie(y.over.comp, y.over.seg, y.under.comp, y.under.seg);
    });
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) os << ", ";
        os << "{\"over\": [" << sorted[i].over.comp << ", " << sorted[i].over.seg
           << "], \"under\": [" << sorted[i].under.comp << ", " << sorted[i].under.seg << "]}";
    }
    os << "]}\n";
}

LinkDiagram read_diagram(std::istream& is);

} // namespace plb
