#pragma once

#include "plbraid/rational.hpp"

#include <optional>
#include <utility>

namespace plb {

struct Pt {
    Rat x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
};

inline Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator*(const Rat& s, const Pt& a) { return {s * a.x, s * a.y}; }

inline Rat cross(const Pt& u, const Pt& v) { return u.x * v.y - u.y * v.x; }
inline Rat dot(const Pt& u, const Pt& v) { return u.x * v.x + u.y * v.y; }

// Orientation of c relative to the directed line a->b: sign of the area.
inline int orient(const Pt& a, const Pt& b, const Pt& c) {
    return sgn(cross(b - a, c - a));
}

struct Seg {
    Pt a, b;
    Pt dir() const { return b - a; }
};

inline Rat dist2(const Pt& p, const Pt& q) {
    Rat dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

inline bool collinear_point_on_closed(const Seg& s, const Pt& p) {
    if (orient(s.a, s.b, p) != 0) return false;
    return dot(p - s.a, s.b - s.a) >= 0 && dot(p - s.b, s.a - s.b) >= 0;
}

inline bool point_in_open_segment(const Seg& s, const Pt& p) {
    if (orient(s.a, s.b, p) != 0) return false;
    return dot(p - s.a, s.b - s.a) > 0 && dot(p - s.b, s.a - s.b) > 0;
}

// Intersection point of two segments that cross transversally in their open
// interiors; nullopt when they do not. Collinear overlap reports nullopt;
// callers that must reject overlaps test segments_overlap_collinear first.
inline std::optional<Pt> proper_intersection(const Seg& s, const Seg& t) {
    Rat d = cross(s.dir(), t.dir());
    if (d == 0) return std::nullopt;
    Rat u = cross(t.a - s.a, t.dir()) / d;
    Rat v = cross(t.a - s.a, s.dir()) / d;
    if (u <= 0 || u >= 1 || v <= 0 || v >= 1) return std::nullopt;
    return Pt{s.a.x + u * s.dir().x, s.a.y + u * s.dir().y};
}

inline bool segments_overlap_collinear(const Seg& s, const Seg& t) {
    if (cross(s.dir(), t.dir()) != 0) return false;
    if (orient(s.a, s.b, t.a) != 0) return false;
    // same line; check 1-d interval overlap with positive length
    auto lo1 = dot(s.a, s.dir()), hi1 = dot(s.b, s.dir());
    auto lo2 = dot(t.a, s.dir()), hi2 = dot(t.b, s.dir());
    if (lo1 > hi1) std::swap(lo1, hi1);
    if (lo2 > hi2) std::swap(lo2, hi2);
    return rat_max(lo1, lo2) < rat_min(hi1, hi2);
}

// Any contact between closed segments (shared endpoint counts).
inline bool segments_touch(const Seg& s, const Seg& t) {
    if (proper_intersection(s, t)) return true;
    if (segments_overlap_collinear(s, t)) return true;
    return collinear_point_on_closed(s, t.a) || collinear_point_on_closed(s, t.b) ||
           collinear_point_on_closed(t, s.a) || collinear_point_on_closed(t, s.b);
}

inline Rat point_segment_dist2(const Pt& p, const Seg& s) {
    Pt d = s.dir();
    Rat len2 = dot(d, d);
    if (len2 == 0) return dist2(p, s.a);
    Rat t = dot(p - s.a, d) / len2;
    if (t <= 0) return dist2(p, s.a);
    if (t >= 1) return dist2(p, s.b);
    Pt proj{s.a.x + t * d.x, s.a.y + t * d.y};
    return dist2(p, proj);
}

inline Rat segment_segment_dist2(const Seg& s, const Seg& t) {
    if (proper_intersection(s, t) || segments_overlap_collinear(s, t)) return 0;
    Rat m = point_segment_dist2(s.a, t);
    m = rat_min(m, point_segment_dist2(s.b, t));
    m = rat_min(m, point_segment_dist2(t.a, s));
    m = rat_min(m, point_segment_dist2(t.b, s));
    return m;
}

// --- triangle utilities (sliding triangles may degenerate to segments) ---

struct Tri {
    Pt p0, p1, p2;
    bool degenerate() const { return orient(p0, p1, p2) == 0; }
};

inline bool point_in_closed_triangle(const Tri& t, const Pt& p) {
    int o0 = orient(t.p0, t.p1, p);
    int o1 = orient(t.p1, t.p2, p);
    int o2 = orient(t.p2, t.p0, p);
    bool has_pos = o0 > 0 || o1 > 0 || o2 > 0;
    bool has_neg = o0 < 0 || o1 < 0 || o2 < 0;
    return !(has_pos && has_neg);
}

inline bool point_in_open_triangle(const Tri& t, const Pt& p) {
    int o = orient(t.p0, t.p1, t.p2);
    if (o == 0) return false;
    return orient(t.p0, t.p1, p) == o && orient(t.p1, t.p2, p) == o &&
           orient(t.p2, t.p0, p) == o;
}

namespace detail {
inline void tri_edges(const Tri& t, Seg out[3]) {
    out[0] = {t.p0, t.p1};
    out[1] = {t.p1, t.p2};
    out[2] = {t.p2, t.p0};
}

// Supporting segment of a degenerate triangle: extreme points along the line.
inline Seg tri_support_seg(const Tri& t) {
    const Pt* lo = &t.p0;
    const Pt* hi = &t.p0;
    for (const Pt* p : {&t.p1, &t.p2}) {
        if (p->x < lo->x || (p->x == lo->x && p->y < lo->y)) lo = p;
        if (p->x > hi->x || (p->x == hi->x && p->y > hi->y)) hi = p;
    }
    return {*lo, *hi};
}

inline bool seg_tri_meet(const Seg& s, const Tri& t) {
    Seg e[3];
    tri_edges(t, e);
    for (auto& g : e)
        if (segments_touch(s, g)) return true;
    return point_in_closed_triangle(t, s.a);
}
} // namespace detail

// Whether the closed point sets meet at all; handles degenerate triangles.
inline bool triangles_meet(const Tri& a, const Tri& b) {
    bool da = a.degenerate(), db = b.degenerate();
    if (da && db)
        return segments_touch(detail::tri_support_seg(a), detail::tri_support_seg(b));
    if (da) return detail::seg_tri_meet(detail::tri_support_seg(a), b);
    if (db) return detail::seg_tri_meet(detail::tri_support_seg(b), a);
    Seg ea[3], eb[3];
    detail::tri_edges(a, ea);
    detail::tri_edges(b, eb);
    for (auto& s : ea)
        for (auto& t : eb)
            if (segments_touch(s, t)) return true;
    return point_in_closed_triangle(a, b.p0) || point_in_closed_triangle(b, a.p0);
}

// Dimension of the contact between two closed triangles:
// -1 disjoint, 0 isolated point(s), 1 positive-length 1-d contact, 2 area.
inline int triangles_contact_dimension(const Tri& a, const Tri& b);

// Whether the interiors overlap in a 2-d region (both non-degenerate and
// open interiors intersect).
inline bool triangles_overlap_2d(const Tri& a, const Tri& b) {
    if (a.degenerate() || b.degenerate()) return false;
    Seg ea[3], eb[3];
    detail::tri_edges(a, ea);
    detail::tri_edges(b, eb);
    for (auto& s : ea)
        for (auto& t : eb)
            if (proper_intersection(s, t)) return true;
    if (point_in_open_triangle(a, b.p0) || point_in_open_triangle(a, b.p1) ||
        point_in_open_triangle(a, b.p2))
        return true;
    if (point_in_open_triangle(b, a.p0) || point_in_open_triangle(b, a.p1) ||
        point_in_open_triangle(b, a.p2))
        return true;
    return false;
}

inline int triangles_contact_dimension(const Tri& a, const Tri& b) {
    if (!triangles_meet(a, b)) return -1;
    if (triangles_overlap_2d(a, b)) return 2;
    Seg sa[4], sb[4];
    int na = 0, nb = 0;
    if (a.degenerate()) {
        sa[na++] = detail::tri_support_seg(a);
    } else {
        Seg e[3];
        detail::tri_edges(a, e);
        for (auto& s : e) sa[na++] = s;
    }
    if (b.degenerate()) {
        sb[nb++] = detail::tri_support_seg(b);
    } else {
        Seg e[3];
        detail::tri_edges(b, e);
        for (auto& s : e) sb[nb++] = s;
    }
    // a degenerate triangle crossing the other's interior is 1-d contact
    if (a.degenerate() && !b.degenerate()) {
        if (point_in_open_triangle(b, sa[0].a) || point_in_open_triangle(b, sa[0].b))
            return 1;
        for (int j = 0; j < nb; ++j)
            if (proper_intersection(sa[0], sb[j])) return 1;
    }
    if (b.degenerate() && !a.degenerate()) {
        if (point_in_open_triangle(a, sb[0].a) || point_in_open_triangle(a, sb[0].b))
            return 1;
        for (int j = 0; j < na; ++j)
            if (proper_intersection(sb[0], sa[j])) return 1;
    }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            if (segments_overlap_collinear(sa[i], sb[j])) return 1;
    return 0;
}

} // namespace plb
