#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "enclose/rational.hpp"

// cross-checks that roughly double the cost of some predicates
#if !defined(NDEBUG) && !defined(ENCLOSE_NO_PARANOID) && !defined(ENCLOSE_PARANOID)
#define ENCLOSE_PARANOID 1
#endif

namespace enclose {

struct Point {
    Rational x, y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // lexicographic, for ordered containers
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
};

inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Rational dist2(const Point& a, const Point& b) { return dot(a - b, a - b); }

// +1 if a->b->c turns left, -1 right, 0 collinear
inline int orient(const Point& a, const Point& b, const Point& c) {
    return cross(b - a, c - a).sign();
}

struct Segment {
    Point a, b;
};

struct UnitDisk {
    Point center;
};

struct Ray {
    Point origin;
    Point dir; // nonzero
};

// closed walk; vertices stored without repeating the first at the end,
// edges are (v[i], v[i+1]) and (v.back(), v[0]); at least 2 edges
struct ClosedWalk {
    std::vector<Point> v;

    size_t size() const { return v.size(); }
    const Point& at(size_t i) const { return v[i % v.size()]; }
};

// q within the closed segment ab
inline bool on_segment(const Point& q, const Point& a, const Point& b) {
    if (orient(a, b, q) != 0) return false;
    return dot(q - a, q - b).sign() <= 0;
}

inline bool on_segment(const Point& q, const Segment& s) { return on_segment(q, s.a, s.b); }

// q strictly inside the open segment ab
inline bool on_open_segment(const Point& q, const Point& a, const Point& b) {
    if (orient(a, b, q) != 0) return false;
    return dot(q - a, q - b).sign() < 0;
}

// squared distance from q to the closed segment
inline Rational dist2_point_segment(const Point& q, const Segment& s) {
    Point d = s.b - s.a;
    Rational len2 = dot(d, d);
    Rational t = dot(q - s.a, d);
    if (t.sign() <= 0) return dist2(q, s.a);
    if (t >= len2) return dist2(q, s.b);
    // foot of perpendicular at parameter t/len2
    Point foot = s.a + (t / len2) * d;
    return dist2(q, foot);
}

struct SegIntersection {
    enum Kind { None, At, Overlap } kind = None;
    Point p; // set when kind == At
};

// intersection of two closed segments; collinear overlap of positive length
// reports Overlap, a single shared point reports At
inline SegIntersection seg_intersect(const Segment& s, const Segment& t) {
    int d1 = orient(t.a, t.b, s.a);
    int d2 = orient(t.a, t.b, s.b);
    int d3 = orient(s.a, s.b, t.a);
    int d4 = orient(s.a, s.b, t.b);

    if (d1 == 0 && d2 == 0) {
        // collinear: intersection is empty, one point, or a sub-segment
        Point dir = s.b - s.a;
        auto param = [&](const Point& p) { return dot(p - s.a, dir); };
        Rational s0(0), s1 = dot(dir, dir);
        Rational t0 = param(t.a), t1 = param(t.b);
        if (t0 > t1) std::swap(t0, t1);
        Rational lo = t0 > s0 ? t0 : s0;
        Rational hi = t1 < s1 ? t1 : s1;
        if (lo > hi) return {SegIntersection::None, {}};
        if (lo == hi) {
            Point p = s.a + (lo / s1) * dir;
            return {SegIntersection::At, p};
        }
        return {SegIntersection::Overlap, {}};
    }

    if (d1 * d2 > 0 || d3 * d4 > 0) return {SegIntersection::None, {}};

    // touching cases: an endpoint on the other segment
    if (d1 == 0) return on_segment(s.a, t) ? SegIntersection{SegIntersection::At, s.a}
                                           : SegIntersection{SegIntersection::None, {}};
    if (d2 == 0) return on_segment(s.b, t) ? SegIntersection{SegIntersection::At, s.b}
                                           : SegIntersection{SegIntersection::None, {}};
    if (d3 == 0) return on_segment(t.a, s) ? SegIntersection{SegIntersection::At, t.a}
                                           : SegIntersection{SegIntersection::None, {}};
    if (d4 == 0) return on_segment(t.b, s) ? SegIntersection{SegIntersection::At, t.b}
                                           : SegIntersection{SegIntersection::None, {}};

    // proper crossing
    Rational ca = cross(t.b - t.a, s.a - t.a);
    Rational cb = cross(t.b - t.a, s.b - t.a);
    Rational lam = ca / (ca - cb);
    Point p = s.a + lam * (s.b - s.a);
    return {SegIntersection::At, p};
}

// closed unit disks intersect iff center distance <= 2; tangency counts
inline bool disks_intersect(const UnitDisk& a, const UnitDisk& b) {
    return dist2(a.center, b.center) <= Rational(4);
}

// signed crossing of the open ray with the directed edge u->v:
// +1 when the edge crosses counterclockwise (left-to-right seen along the ray),
// -1 clockwise, 0 for no crossing; throws DegenerateCrossing when the ray
// meets a vertex or runs along the edge
inline int ray_cross_sign(const Ray& r, const Point& u, const Point& v) {
    Rational cu = cross(r.dir, u - r.origin);
    Rational cv = cross(r.dir, v - r.origin);
    int su = cu.sign(), sv = cv.sign();

    if (su == 0 && sv == 0) throw DegenerateCrossing("ray collinear with edge");
    if (su == 0) {
        if (dot(r.dir, u - r.origin).sign() >= 0)
            throw DegenerateCrossing("ray through edge endpoint");
        return 0;
    }
    if (sv == 0) {
        if (dot(r.dir, v - r.origin).sign() >= 0)
            throw DegenerateCrossing("ray through edge endpoint");
        return 0;
    }
    if (su == sv) return 0;

    // the segment crosses the ray's supporting line; locate the point
    Rational lam = cu / (cu - cv);
    Point p = u + lam * (v - u);
    int along = dot(r.dir, p - r.origin).sign();
    if (along == 0) throw DegenerateCrossing("ray origin on edge");
    if (along < 0) return 0;
    return (cv - cu).sign(); // sign of cross(dir, v - u)
}

// k-th direction from the fixed ray-candidate sequence
// (1,0), (1,1), (1,2), (2,1), (1,3), (3,1), (1,4), (2,3), (3,2), (4,1), ...
inline Point ray_candidate(size_t k) {
    if (k == 0) return {Rational(1), Rational(0)};
    size_t seen = 0;
    for (long s = 2;; ++s) {
        for (long a = 1; a < s; ++a) {
            long b = s - a;
            if (std::gcd(a, b) != 1) continue;
            if (++seen == k) return {Rational(a), Rational(b)};
        }
    }
}

namespace detail {

// first candidate ray from q that avoids every walk vertex and is not
// collinear with any walk edge; not_parallel forces a distinct direction
inline Ray pick_walk_ray(const Point& q, const ClosedWalk& w, const Point* not_parallel = nullptr) {
    for (size_t k = 0;; ++k) {
        Point d = ray_candidate(k);
        if (not_parallel && cross(*not_parallel, d).sign() == 0) continue;
        bool ok = true;
        for (size_t i = 0; i < w.size() && ok; ++i) {
            const Point& a = w.at(i);
            const Point& b = w.at(i + 1);
            // vertex on the open ray
            if (cross(d, a - q).sign() == 0 && dot(d, a - q).sign() > 0) ok = false;
            // edge collinear with the ray line
            if (ok && cross(d, b - a).sign() == 0 && orient(q, q + d, a) == 0) ok = false;
        }
        if (ok) return {q, d};
    }
}

inline int winding_with_ray(const Point& q, const ClosedWalk& w, const Ray& r) {
    int total = 0;
    for (size_t i = 0; i < w.size(); ++i) total += ray_cross_sign(r, w.at(i), w.at(i + 1));
    return total;
}

} // namespace detail

// winding number of w around q; q must avoid the walk's edges
inline int winding(const Point& q, const ClosedWalk& w) {
    if (w.size() < 2) throw DegenerateInput("walk with fewer than 2 vertices");
    for (size_t i = 0; i < w.size(); ++i)
        if (on_segment(q, w.at(i), w.at(i + 1))) throw PointOnBoundary("winding query on walk");
    Ray r = detail::pick_walk_ray(q, w);
    int total = detail::winding_with_ray(q, w, r);
#ifdef ENCLOSE_PARANOID
    {
        // a second independent ray must agree
        Ray r2 = detail::pick_walk_ray(q, w, &r.dir);
        if (detail::winding_with_ray(q, w, r2) != total)
            throw NumericalFailure("winding disagrees between rays");
    }
#endif
    return total;
}

enum class Containment { Inside, Outside, Boundary };

// even-odd membership of q in the region bounded by the walk
inline Containment point_in_polygon(const Point& q, const ClosedWalk& w) {
    if (w.size() < 2) throw DegenerateInput("walk with fewer than 2 vertices");
    for (size_t i = 0; i < w.size(); ++i)
        if (on_segment(q, w.at(i), w.at(i + 1))) return Containment::Boundary;
    Ray r = detail::pick_walk_ray(q, w);
    long crossings = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (ray_cross_sign(r, w.at(i), w.at(i + 1)) != 0) ++crossings;
    return (crossings % 2 == 1) ? Containment::Inside : Containment::Outside;
}

// twice the signed area of the walk
inline Rational signed_area2(const ClosedWalk& w) {
    Rational s(0);
    for (size_t i = 0; i < w.size(); ++i) s += cross(w.at(i), w.at(i + 1));
    return s;
}

} // namespace enclose
