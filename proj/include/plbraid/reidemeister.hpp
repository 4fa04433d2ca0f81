#pragma once

#include "plbraid/diagram.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace plb {

enum class RKind { r1_insert, r1_delete, r2_insert, r2_delete, r3 };

// Orientation variants are explicit: R1 kinks pick a side of the strand and a
// crossing sign; R2 fingers pick the layer (finger over or under the crossed
// strand) and the approach side.
enum class R1Variant { left_positive, left_negative, right_positive, right_negative };
enum class R2Variant { over_near, over_far, under_near, under_far };

struct RMoveSpec {
    RKind kind;
    SegRef seg_a;      // r1/r2 insert: host segment
    SegRef seg_b;      // r2 insert: crossed segment
    Rat t{1, 2};       // r1 insert: kink position parameter
    Rat tb{1, 2};      // r2 insert: target parameter on seg_b
    R1Variant r1 = R1Variant::left_positive;
    R2Variant r2 = R2Variant::under_near;
    int c1 = -1, c2 = -1, c3 = -1; // crossing indices for deletions and r3
};

namespace detail {

// Re-index for vertex insertion: `count` vertices added in component `comp`
// before segment position `pos` shifts later segments up.
struct SegShift {
    int comp = -1;
    int pos = 0;
    int count = 0;
    SegRef operator()(SegRef r) const {
        if (r.comp == comp && r.seg >= pos) r.seg += count;
        return r;
    }
};

inline LinkDiagram rebuild_with(const LinkDiagram& d,
                                std::map<std::pair<SegRef, SegRef>, SegRef> extra,
                                const std::vector<std::vector<Pt>>& comps,
                                const SegShift& shift) {
    LinkDiagram trial;
    trial.components = comps;
    for (const auto& c : d.crossings)
        extra.insert({{shift(c.over), shift(c.under)}, shift(c.over)});
    return recompute_crossings(trial, extra);
}

// crossings sitting on a segment
inline int crossings_on(const LinkDiagram& d, const SegRef& r) {
    int k = 0;
    for (const auto& c : d.crossings)
        if (c.involves(r)) ++k;
    return k;
}

} // namespace detail

// Inserts a one-crossing kink at parameter t of a crossing-free segment.
inline LinkDiagram reidemeister_r1_insert(const LinkDiagram& d, const SegRef& r, const Rat& t,
                                          R1Variant variant) {
    if (detail::crossings_on(d, r) > 0)
        throw PatternMismatch("r1 insert: host segment carries crossings");
    Seg s = d.segment(r);
    bool left = variant == R1Variant::left_positive || variant == R1Variant::left_negative;
    bool positive = variant == R1Variant::left_positive || variant == R1Variant::right_positive;
    Pt u = s.dir();
    Pt m{-u.y, u.x};
    if (!left) m = Pt{u.y, -u.x};

    Rat w(1, 8);
    for (int attempt = 0; attempt < 40; ++attempt, w = w / 2) {
        Rat t1 = t - w, t2 = t + w;
        if (t1 <= 0 || t2 >= 1) continue;
        Pt A{s.a.x + t1 * u.x, s.a.y + t1 * u.y};
        Pt B{s.a.x + t2 * u.x, s.a.y + t2 * u.y};
        Pt e1 = Rat(1, 3) * (B - A);
        Pt e2 = Rat(1, 2) * Pt{left ? -e1.y : e1.y, left ? e1.x : -e1.x};
        // local kink shape (0,0)-(2,1)-(1/2,3/2)-(3,0): one self-crossing
        Pt V1 = A + Rat(2) * e1 + e2;
        Pt V2 = A + Rat(1, 2) * e1 + Rat(3, 2) * e2;

        std::vector<std::vector<Pt>> comps = d.components;
        auto& poly = comps[r.comp];
        poly.insert(poly.begin() + r.seg + 1, {A, V1, V2, B});
        // A->V1 and V2->B cross; pick over to realize the requested sign
        SegRef first{r.comp, r.seg + 1};
        SegRef third{r.comp, r.seg + 3};
        Pt d1 = V1 - A, d2 = B - V2;
        int first_over_sign = sgn(cross(d1, d2));
        SegRef over = (first_over_sign == (positive ? 1 : -1)) ? first : third;
        detail::SegShift shift{r.comp, r.seg + 1, 4};
        try {
            LinkDiagram out = detail::rebuild_with(d, {{{first, third}, over}}, comps, shift);
            if (out.crossings.size() != d.crossings.size() + 1) continue;
            bool clean = true;
            int want[5] = {0, 1, 0, 1, 0};
            for (int k = 0; k < 5 && clean; ++k) {
                SegRef cur{r.comp, r.seg + k};
                if (detail::crossings_on(out, cur) != want[k]) clean = false;
                if (out.segment(cur).dir().y == 0) clean = false;
            }
            if (!clean) continue;
            return out;
        } catch (const Error&) {
            continue;
        }
    }
    throw ObstructedDisc("r1 insert: no clear room for the kink");
}

// Removes an empty kink at the given crossing: both strands of the crossing
// belong to one component and the loop between them contains no other
// crossing or foreign material.
inline LinkDiagram reidemeister_r1_delete(const LinkDiagram& d, int crossing) {
    if (crossing < 0 || crossing >= static_cast<int>(d.crossings.size()))
        throw PatternMismatch("r1 delete: bad crossing index");
    const auto& cr = d.crossings[crossing];
    if (cr.over.comp != cr.under.comp) throw PatternMismatch("r1 delete: not a kink");
    int comp = cr.over.comp;
    int m = d.segment_count(comp);
    int i = std::min(cr.over.seg, cr.under.seg);
    int j = std::max(cr.over.seg, cr.under.seg);
    // loop vertices i+1 .. j inclusive sit strictly inside the kink
    for (const auto& c2 : d.crossings) {
        if (&c2 == &cr) continue;
        for (const SegRef* sr : {&c2.over, &c2.under})
            if (sr->comp == comp && sr->seg >= i && sr->seg <= j)
                throw PatternMismatch("r1 delete: loop is not empty");
    }
    std::vector<std::vector<Pt>> comps = d.components;
    auto& poly = comps[comp];
    // replace the loop by the crossing point itself
    std::vector<Pt> np;
    for (int v = 0; v < m; ++v) {
        if (v == i + 1) np.push_back(cr.point);
        if (v > i && v <= j) continue;
        np.push_back(poly[v]);
    }
    poly = np;
    detail::SegShift shift{comp, j + 1, -(j - i - 1)};
    LinkDiagram out = detail::rebuild_with(d, {}, comps, shift);
    if (out.crossings.size() != d.crossings.size() - 1)
        throw ObstructedDisc("r1 delete: removal changed distant crossings");
    return out;
}

// Pokes a crossing-free segment across seg_b, adding two crossings.
inline LinkDiagram reidemeister_r2_insert(const LinkDiagram& d, const SegRef& ra,
                                          const SegRef& rb, const Rat& tb, R2Variant variant) {
    if (d.segments_adjacent(ra, rb)) throw PatternMismatch("r2 insert: adjacent segments");
    if (detail::crossings_on(d, ra) > 0)
        throw PatternMismatch("r2 insert: host segment carries crossings");
    bool finger_over = variant == R2Variant::over_near || variant == R2Variant::over_far;
    bool near_side = variant == R2Variant::over_near || variant == R2Variant::under_near;

    Seg sa = d.segment(ra), sb = d.segment(rb);
    Pt T{sb.a.x + tb * sb.dir().x, sb.a.y + tb * sb.dir().y};
    Pt mid{(sa.a.x + sa.b.x) / 2, (sa.a.y + sa.b.y) / 2};
    // normal of seg_b pointing away from seg_a's midpoint (or toward, far side)
    Pt nb{-sb.dir().y, sb.dir().x};
    if (sgn(dot(nb, mid - T)) > 0) nb = Pt{-nb.x, -nb.y};
    if (!near_side) nb = Pt{-nb.x, -nb.y}; // poke from the other side: overshoot backwards

    Rat beta(1, 4), gamma(1, 8);
    for (int attempt = 0; attempt < 40; ++attempt, beta = beta / 2, gamma = gamma / 2) {
        Pt F1{T.x + beta * nb.x, T.y + beta * nb.y};
        Pt F2{F1.x + gamma * sb.dir().x, F1.y + gamma * sb.dir().y};

        std::vector<std::vector<Pt>> comps = d.components;
        auto& poly = comps[ra.comp];
        poly.insert(poly.begin() + ra.seg + 1, {F1, F2});
        detail::SegShift shift{ra.comp, ra.seg + 1, 2};
        SegRef leg1{ra.comp, ra.seg};
        SegRef leg2{ra.comp, ra.seg + 2};
        std::map<std::pair<SegRef, SegRef>, SegRef> extra;
        SegRef rb2 = shift(rb);
        extra[{leg1, rb2}] = finger_over ? leg1 : rb2;
        extra[{leg2, rb2}] = finger_over ? leg2 : rb2;
        try {
            LinkDiagram out = detail::rebuild_with(d, extra, comps, shift);
            if (out.crossings.size() != d.crossings.size() + 2) continue;
            bool clean = true;
            for (int sg = ra.seg; sg <= ra.seg + 2 && clean; ++sg) {
                SegRef cur{ra.comp, sg};
                int cnt = detail::crossings_on(out, cur);
                int want = sg == ra.seg + 1 ? 0 : 1;
                if (cnt != want) clean = false;
                if (out.segment(cur).dir().y == 0) clean = false;
            }
            if (!clean) continue;
            return out;
        } catch (const Error&) {
            continue;
        }
    }
    throw ObstructedDisc("r2 insert: no clear corridor");
}

// Removes an empty finger bigon: the two crossings share one strand and the
// other strand's detour between them consists of exactly two corner vertices.
inline LinkDiagram reidemeister_r2_delete(const LinkDiagram& d, int ci, int cj) {
    if (ci < 0 || cj < 0 || ci >= static_cast<int>(d.crossings.size()) ||
        cj >= static_cast<int>(d.crossings.size()) || ci == cj)
        throw PatternMismatch("r2 delete: bad crossing indices");
    const auto& c1 = d.crossings[ci];
    const auto& c2 = d.crossings[cj];
    // identify the shared strand and the finger strand
    auto match = [&](const SegRef& x, const SegRef& y) { return x == y; };
    SegRef shared, f1, f2;
    bool found = false;
    for (const SegRef* a : {&c1.over, &c1.under}) {
        for (const SegRef* b : {&c2.over, &c2.under}) {
            if (match(*a, *b)) {
                shared = *a;
                f1 = c1.over == *a ? c1.under : c1.over;
                f2 = c2.over == *a ? c2.under : c2.over;
                found = true;
            }
        }
    }
    if (!found) throw PatternMismatch("r2 delete: crossings do not share a strand");
    // layers must agree (both finger-over or both finger-under)
    bool over1 = (c1.over == f1);
    bool over2 = (c2.over == f2);
    if (over1 != over2) throw PatternMismatch("r2 delete: opposite layers");
    if (f1.comp != f2.comp) throw PatternMismatch("r2 delete: finger spans components");
    int comp = f1.comp;
    int m = d.segment_count(comp);
    int i = f1.seg, j = f2.seg;
    if (i + 2 == j) {
        // vertices i+1, i+2 are the finger corners
    } else if (j + 2 == i) {
        std::swap(i, j);
    } else {
        throw PatternMismatch("r2 delete: not a two-corner finger");
    }
    for (const auto& c3 : d.crossings) {
        if (&c3 == &c1 || &c3 == &c2) continue;
        for (const SegRef* sr : {&c3.over, &c3.under})
            if (sr->comp == comp && sr->seg >= i && sr->seg <= j)
                throw PatternMismatch("r2 delete: finger is not clean");
    }
    std::vector<std::vector<Pt>> comps = d.components;
    auto& poly = comps[comp];
    std::vector<Pt> np;
    for (int v = 0; v < m; ++v)
        if (v != i + 1 && v != i + 2) np.push_back(poly[v]);
    poly = np;
    detail::SegShift shift{comp, j + 1, -2};
    LinkDiagram out = detail::rebuild_with(d, {}, comps, shift);
    if (out.crossings.size() != d.crossings.size() - 2)
        throw ObstructedDisc("r2 delete: removal changed distant crossings");
    return out;
}

// Slides strand a across the crossing of b and c (the three crossings given
// as indices: a*b, a*c, b*c). Strand a must pass on one layer over or under
// both b and c, and the triangle between the three points must be empty.
inline LinkDiagram reidemeister_r3(const LinkDiagram& d, int cab, int cac, int cbc) {
    auto get = [&](int i) -> const CrossingRecord& {
        if (i < 0 || i >= static_cast<int>(d.crossings.size()))
            throw PatternMismatch("r3: bad crossing index");
        return d.crossings[i];
    };
    const auto& AB = get(cab);
    const auto& AC = get(cac);
    const auto& BC = get(cbc);
    // find the common segment a of AB and AC
    SegRef a, b, c;
    bool ok = false;
    for (const SegRef* x : {&AB.over, &AB.under})
        for (const SegRef* y : {&AC.over, &AC.under})
            if (*x == *y) {
                a = *x;
                b = AB.over == a ? AB.under : AB.over;
                c = AC.over == a ? AC.under : AC.over;
                ok = true;
            }
    if (!ok) throw PatternMismatch("r3: first two crossings share no strand");
    if (!(BC.involves(b) && BC.involves(c)))
        throw PatternMismatch("r3: third crossing is not b*c");
    bool a_over_b = AB.over == a, a_over_c = AC.over == a;
    if (a_over_b != a_over_c) throw PatternMismatch("r3: strand a changes layer");

    Tri face{AB.point, AC.point, BC.point};
    for (int cc = 0; cc < d.component_count(); ++cc)
        for (int v = 0; v < d.segment_count(cc); ++v)
            if (point_in_open_triangle(face, d.components[cc][v]))
                throw ObstructedDisc("r3: vertex inside the triangle");
    for (const auto& cr : d.crossings)
        if (&cr != &AB && &cr != &AC && &cr != &BC &&
            point_in_open_triangle(face, cr.point))
            throw ObstructedDisc("r3: crossing inside the triangle");

    // re-route a across BC: subdivide a on both sides of its passage and
    // replace the middle with a reflected corner beyond the b*c point
    Seg sa = d.segment(a);
    Rat la = dot(sa.dir(), sa.dir());
    Rat t_ab = dot(AB.point - sa.a, sa.dir()) / la;
    Rat t_ac = dot(AC.point - sa.a, sa.dir()) / la;
    if (t_ab > t_ac) std::swap(t_ab, t_ac);
    Pt X = BC.point;

    Rat lam(1, 2);
    for (int attempt = 0; attempt < 40; ++attempt, lam = lam / 2) {
        Rat t1 = t_ab - lam * (t_ac - t_ab);
        Rat t2 = t_ac + lam * (t_ac - t_ab);
        if (t1 <= 0 || t2 >= 1) continue;
        Pt W1{sa.a.x + t1 * sa.dir().x, sa.a.y + t1 * sa.dir().y};
        Pt W2{sa.a.x + t2 * sa.dir().x, sa.a.y + t2 * sa.dir().y};
        Pt midp{(AB.point.x + AC.point.x) / 2, (AB.point.y + AC.point.y) / 2};
        Pt M{X.x + lam * (X.x - midp.x), X.y + lam * (X.y - midp.y)};

        std::vector<std::vector<Pt>> comps = d.components;
        auto& poly = comps[a.comp];
        poly.insert(poly.begin() + a.seg + 1, {W1, M, W2});
        detail::SegShift shift{a.comp, a.seg + 1, 3};
        SegRef leg1{a.comp, a.seg + 1};
        SegRef leg2{a.comp, a.seg + 2};
        SegRef b2 = shift(b), c2 = shift(c);
        std::map<std::pair<SegRef, SegRef>, SegRef> extra;
        extra[{leg1, b2}] = a_over_b ? leg1 : b2;
        extra[{leg1, c2}] = a_over_b ? leg1 : c2;
        extra[{leg2, b2}] = a_over_b ? leg2 : b2;
        extra[{leg2, c2}] = a_over_b ? leg2 : c2;
        try {
            LinkDiagram out = detail::rebuild_with(d, extra, comps, shift);
            if (out.crossings.size() != d.crossings.size()) continue;
            // the passage must now be on the other side of X with one
            // crossing per leg
            if (detail::crossings_on(out, leg1) != 1) continue;
            if (detail::crossings_on(out, leg2) != 1) continue;
            bool horizontal = false;
            for (int sg = a.seg; sg <= a.seg + 3; ++sg)
                if (out.segment({a.comp, sg}).dir().y == 0) horizontal = true;
            if (horizontal) continue;
            return out;
        } catch (const Error&) {
            continue;
        }
    }
    throw ObstructedDisc("r3: no clear room to slide");
}

inline LinkDiagram apply_reidemeister(const LinkDiagram& d, const RMoveSpec& spec) {
    switch (spec.kind) {
        case RKind::r1_insert:
            return reidemeister_r1_insert(d, spec.seg_a, spec.t, spec.r1);
        case RKind::r1_delete:
            return reidemeister_r1_delete(d, spec.c1);
        case RKind::r2_insert:
            return reidemeister_r2_insert(d, spec.seg_a, spec.seg_b, spec.tb, spec.r2);
        case RKind::r2_delete:
            return reidemeister_r2_delete(d, spec.c1, spec.c2);
        case RKind::r3:
            return reidemeister_r3(d, spec.c1, spec.c2, spec.c3);
    }
    throw PatternMismatch("unknown move kind");
}

} // namespace plb
