#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "enclose/arrangement.hpp"

namespace enclose {

enum class ObstacleKind { UnitDisks, Segments };

struct ObstacleSet {
    ObstacleKind kind = ObstacleKind::Segments;
    std::vector<UnitDisk> disks;
    std::vector<Segment> segments;

    size_t size() const { return kind == ObstacleKind::UnitDisks ? disks.size() : segments.size(); }
};

// all unordered disk pairs whose closed disks meet, i < j
inline std::vector<std::pair<int, int>> intersecting_pairs(const std::vector<UnitDisk>& disks) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < disks.size(); ++i)
        for (size_t j = i + 1; j < disks.size(); ++j)
            if (disks_intersect(disks[i], disks[j])) out.emplace_back(i, j);
    return out;
}

// one center-to-center segment per intersecting pair
inline std::vector<Segment> sigma_segments(const std::vector<UnitDisk>& disks) {
    std::vector<Segment> out;
    for (auto [i, j] : intersecting_pairs(disks)) out.push_back({disks[i].center, disks[j].center});
    return out;
}

// q lies in a bounded component of the segment complement
inline bool is_enclosed_segments(const Point& q, const std::vector<Segment>& segs) {
    for (const auto& s : segs)
        if (on_segment(q, s)) throw PointOnObstacle("query point on an obstacle segment");
    if (segs.size() < 2) return false;
    Arrangement arr = build_arrangement(segs);
    FaceSet fs = extract_faces(arr);
    return locate(fs, q) != fs.outer;
}

// q lies in a bounded component of the disk-union complement; decided on the
// center segments of intersecting pairs
inline bool is_enclosed_unit_disks(const Point& q, const std::vector<UnitDisk>& disks) {
    for (const auto& d : disks)
        if (dist2(q, d.center) <= Rational(1))
            throw PointCoveredByObstacle("query point inside a unit disk");
    auto sigma = sigma_segments(disks);
    if (sigma.size() < 2) return false;
    return is_enclosed_segments(q, sigma);
}

// indices into X of the points enclosed by the whole set
inline std::vector<size_t> enclosed_subset(const std::vector<Point>& X, const ObstacleSet& obs) {
    std::vector<size_t> out;
    if (X.empty()) return out;
    std::vector<Segment> segs;
    if (obs.kind == ObstacleKind::UnitDisks) {
        for (const auto& d : obs.disks)
            for (const auto& x : X)
                if (dist2(x, d.center) <= Rational(1))
                    throw PointCoveredByObstacle("point inside a unit disk");
        segs = sigma_segments(obs.disks);
    } else {
        for (const auto& s : obs.segments)
            for (const auto& x : X)
                if (on_segment(x, s)) throw PointOnObstacle("point on an obstacle segment");
        segs = obs.segments;
    }
    if (segs.size() < 2) return out;
    Arrangement arr = build_arrangement(segs);
    FaceSet fs = extract_faces(arr);
    for (size_t i = 0; i < X.size(); ++i)
        if (locate(fs, X[i]) != fs.outer) out.push_back(i);
    return out;
}

namespace detail {

// closed rational interval, enough for the distance bounds below
struct RInterval {
    Rational lo, hi;

    static RInterval exact(const Rational& r) { return {r, r}; }
    RInterval operator+(const RInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RInterval operator-(const RInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RInterval square() const {
        Rational a = lo * lo, b = hi * hi;
        Rational mx = a > b ? a : b;
        if (lo.sign() <= 0 && hi.sign() >= 0) return {Rational(0), mx};
        return {a < b ? a : b, mx};
    }
    RInterval scaled(const Rational& c) const {
        if (c.sign() >= 0) return {c * lo, c * hi};
        return {c * hi, c * lo};
    }
};

// interval for sqrt(r), r >= 0
inline RInterval sqrt_interval(const Rational& r) { return {sqrt_lower(r), sqrt_upper(r)}; }

// one corner of a lens formed by two intersecting unit circles:
// m + e * sqrt(rad) * u, with rad and the coordinates of m, u rational
struct LensCorner {
    Point m, u;
    Rational rad;
    int e; // +1 or -1

    RInterval x() const {
        RInterval s = sqrt_interval(rad).scaled(Rational(e));
        return RInterval::exact(m.x) + s.scaled(u.x);
    }
    RInterval y() const {
        RInterval s = sqrt_interval(rad).scaled(Rational(e));
        return RInterval::exact(m.y) + s.scaled(u.y);
    }
};

// p = m + e*sqrt(rad)*u lies exactly on the unit circle around ck
inline bool corner_on_circle(const LensCorner& c, const Point& ck) {
    Rational a = dist2(c.m, ck) + c.rad * dot(c.u, c.u);
    Rational b = Rational(2 * c.e) * dot(c.u, c.m - ck);
    // |p - ck|^2 = a + b*sqrt(rad); equality with 1 needs lhs == -b*sqrt(rad)
    Rational lhs = a - Rational(1);
    if (lhs * lhs != b * b * c.rad) return false;
    if (c.rad.sign() == 0) return lhs.sign() == 0;
    return lhs.sign() == -b.sign();
}

// lower bound on |sqrt(d2interval) - c| for a rational threshold c >= 0;
// zero when the interval cannot be separated from c
inline Rational dist_gap(const RInterval& d2, const Rational& c) {
    Rational c2 = c * c;
    if (d2.lo > c2) {
        Rational lo = sqrt_lower(d2.lo);
        return lo > c ? lo - c : Rational(0);
    }
    if (d2.hi < c2) {
        Rational hi = sqrt_upper(d2.hi);
        return hi < c ? c - hi : Rational(0);
    }
    return Rational(0);
}

inline void keep_min(std::optional<Rational>& acc, const Rational& v) {
    if (!acc || v < *acc) acc = v;
}

} // namespace detail

// Rational lower bound on the smallest positive feature separation of the
// instance: pairwise boundary clearances, lens-corner clearances, and the
// clearance of every query point. Returns 0 when some positive feature
// cannot be bounded away from zero.
inline Rational min_feature_separation(const ObstacleSet& obs,
                                       const std::vector<Point>& queries = {}) {
    std::optional<Rational> best;

    if (obs.kind == ObstacleKind::Segments) {
        const auto& segs = obs.segments;
        std::vector<Point> verts;
        for (const auto& s : segs) {
            if (s.a == s.b) throw DegenerateInput("degenerate segment");
            verts.push_back(s.a);
            verts.push_back(s.b);
        }
        for (size_t i = 0; i < segs.size(); ++i)
            for (size_t j = i + 1; j < segs.size(); ++j) {
                auto r = seg_intersect(segs[i], segs[j]);
                if (r.kind == SegIntersection::Overlap)
                    throw DegenerateInput("collinear overlapping segments");
                if (r.kind == SegIntersection::At) verts.push_back(r.p);
            }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                detail::keep_min(best, sqrt_lower(dist2(verts[i], verts[j])));
        for (const auto& v : verts)
            for (const auto& s : segs)
                if (!on_segment(v, s))
                    detail::keep_min(best, sqrt_lower(dist2_point_segment(v, s)));
        for (const auto& q : queries)
            for (const auto& s : segs)
                detail::keep_min(best, sqrt_lower(dist2_point_segment(q, s)));
    } else {
        const auto& disks = obs.disks;
        const Rational one(1), two(2);
        for (size_t i = 0; i < disks.size(); ++i)
            for (size_t j = i + 1; j < disks.size(); ++j) {
                Rational d2 = dist2(disks[i].center, disks[j].center);
                if (d2.sign() == 0) throw DegenerateInput("coincident disk centers");
                // overlapping or tangent boundaries leave no free gap between
                // them; their pinch features are the lens corners below
                if (d2 <= Rational(4)) continue;
                detail::keep_min(best, detail::dist_gap(detail::RInterval::exact(d2), two));
            }

        // lens corners: boundary vertices of the union
        std::vector<detail::LensCorner> corners;
        std::vector<std::pair<size_t, size_t>> corner_pair;
        for (size_t i = 0; i < disks.size(); ++i)
            for (size_t j = i + 1; j < disks.size(); ++j) {
                Rational d2 = dist2(disks[i].center, disks[j].center);
                if (d2 > Rational(4) || d2.sign() == 0) continue;
                Point a = disks[i].center, b = disks[j].center;
                Point m = Rational(1, 2) * (a + b);
                Point perp{a.y - b.y, b.x - a.x}; // length = center distance
                // corner = m +- sqrt(1/d2 - 1/4) * perp
                Rational rad = Rational(1) / d2 - Rational(1, 4);
                if (rad.sign() < 0) rad = Rational(0);
                for (int e : {+1, -1}) {
                    corners.push_back({m, perp, rad, e});
                    corner_pair.emplace_back(i, j);
                }
            }
        std::vector<detail::RInterval> cxs, cys;
        cxs.reserve(corners.size());
        cys.reserve(corners.size());
        for (const auto& c : corners) {
            cxs.push_back(c.x());
            cys.push_back(c.y());
        }
        auto interval_dist2 = [](const detail::RInterval& ax, const detail::RInterval& ay,
                                 const detail::RInterval& bx, const detail::RInterval& by) {
            return (ax - bx).square() + (ay - by).square();
        };
        for (size_t c = 0; c < corners.size(); ++c) {
            for (size_t k = 0; k < disks.size(); ++k) {
                if (k == corner_pair[c].first || k == corner_pair[c].second) continue;
                // a corner exactly on a third circle is a zero-width feature
                if (detail::corner_on_circle(corners[c], disks[k].center)) continue;
                auto d2 = interval_dist2(cxs[c], cys[c],
                                         detail::RInterval::exact(disks[k].center.x),
                                         detail::RInterval::exact(disks[k].center.y));
                detail::keep_min(best, detail::dist_gap(d2, one));
            }
            for (size_t c2 = c + 1; c2 < corners.size(); ++c2) {
                if (corner_pair[c] == corner_pair[c2]) continue;
                // coincident corners (one point on all four circles) are not a gap;
                // the two-way membership test pins exact equality
                if (detail::corner_on_circle(corners[c], disks[corner_pair[c2].first].center) &&
                    detail::corner_on_circle(corners[c], disks[corner_pair[c2].second].center) &&
                    detail::corner_on_circle(corners[c2], disks[corner_pair[c].first].center) &&
                    detail::corner_on_circle(corners[c2], disks[corner_pair[c].second].center))
                    continue;
                auto d2 = interval_dist2(cxs[c], cys[c], cxs[c2], cys[c2]);
                detail::keep_min(best, detail::dist_gap(d2, Rational(0)));
            }
        }
        for (const auto& q : queries)
            for (const auto& d : disks)
                detail::keep_min(best,
                                 detail::dist_gap(detail::RInterval::exact(dist2(q, d.center)), one));
    }

    if (!best) return Rational(1);
    return *best;
}

// Free space of the obstacle set sampled on a square grid of pitch h.
// A cell is covered when its center lies within h*sqrt(2)/2 of an obstacle,
// so any point of a free cell is strictly off the obstacles.
struct FloodGrid {
    Rational x0, y0, h;
    long W = 0, H = 0;
    std::vector<char> covered;
    std::vector<char> outside; // free and connected to the border

    size_t idx(long i, long j) const { return static_cast<size_t>(j) * W + i; }

    std::pair<long, long> cell_of(const Point& p) const {
        Int ci = ((p.x - x0) / h).floor();
        Int cj = ((p.y - y0) / h).floor();
        return {ci.get_si(), cj.get_si()};
    }

    bool in_range(long i, long j) const { return i >= 0 && i < W && j >= 0 && j < H; }

    Point cell_center(long i, long j) const {
        Rational half(1, 2);
        return {x0 + (Rational(i) + half) * h, y0 + (Rational(j) + half) * h};
    }
};

namespace detail {

// covered test for one cell center against one disk:
// dist <= 1 + h/sqrt(2), decided exactly on squares
inline bool disk_covers_cell(const Point& ctr, const UnitDisk& d, const Rational& h) {
    Rational a = dist2(ctr, d.center) - Rational(1) - h * h / Rational(2);
    if (a.sign() <= 0) return true;
    return a * a <= Rational(2) * h * h;
}

inline bool segment_covers_cell(const Point& ctr, const Segment& s, const Rational& h) {
    return dist2_point_segment(ctr, s) <= h * h / Rational(2);
}

inline long clamp_floor(const Rational& r, long lo, long hi) {
    Int f = r.floor();
    if (f < lo) return lo;
    if (f > hi) return hi;
    return f.get_si();
}

} // namespace detail

inline FloodGrid build_flood_grid(const ObstacleSet& obs, const Rational& h,
                                  const std::vector<Point>& extra = {}) {
    if (h.sign() <= 0) throw DegenerateInput("grid pitch must be positive");
    if (obs.size() == 0 && extra.empty()) throw DegenerateInput("empty grid extent");

    std::optional<Rational> xmin, xmax, ymin, ymax;
    auto feed = [&](const Point& p, const Rational& pad) {
        if (!xmin || p.x - pad < *xmin) xmin = p.x - pad;
        if (!xmax || p.x + pad > *xmax) xmax = p.x + pad;
        if (!ymin || p.y - pad < *ymin) ymin = p.y - pad;
        if (!ymax || p.y + pad > *ymax) ymax = p.y + pad;
    };
    if (obs.kind == ObstacleKind::UnitDisks)
        for (const auto& d : obs.disks) feed(d.center, Rational(1));
    else
        for (const auto& s : obs.segments) {
            feed(s.a, Rational(0));
            feed(s.b, Rational(0));
        }
    for (const auto& p : extra) feed(p, Rational(0));

    FloodGrid g;
    g.h = h;
    // snap the origin to integers; margin of 2 on every side
    g.x0 = Rational((*xmin - Rational(2)).floor());
    g.y0 = Rational((*ymin - Rational(2)).floor());
    g.W = ((*xmax + Rational(2) - g.x0) / h).floor().get_si() + 1;
    g.H = ((*ymax + Rational(2) - g.y0) / h).floor().get_si() + 1;
    g.covered.assign(static_cast<size_t>(g.W) * g.H, 0);

    auto mark_box = [&](const Rational& bx0, const Rational& bx1, const Rational& by0,
                        const Rational& by1, auto&& pred) {
        long i0 = detail::clamp_floor((bx0 - g.x0) / h - Rational(1), 0, g.W - 1);
        long i1 = detail::clamp_floor((bx1 - g.x0) / h + Rational(1), 0, g.W - 1);
        long j0 = detail::clamp_floor((by0 - g.y0) / h - Rational(1), 0, g.H - 1);
        long j1 = detail::clamp_floor((by1 - g.y0) / h + Rational(1), 0, g.H - 1);
        for (long j = j0; j <= j1; ++j)
            for (long i = i0; i <= i1; ++i) {
                size_t id = g.idx(i, j);
                if (!g.covered[id] && pred(i, j)) g.covered[id] = 1;
            }
    };

    // double prefilter for the cover tests; decisions within the margin of
    // the threshold fall through to the exact predicate, so verdicts match
    // the pure rational computation
    const double hd = h.to_double();
    const double x0d = g.x0.to_double(), y0d = g.y0.to_double();
    const double margin = 1e-9;
    auto center_d = [&](long i, long j, double& cx, double& cy) {
        cx = x0d + (double(i) + 0.5) * hd;
        cy = y0d + (double(j) + 0.5) * hd;
    };

    Rational pad = Rational(2) * h;
    if (obs.kind == ObstacleKind::UnitDisks) {
        for (const auto& d : obs.disks) {
            Rational r = Rational(1) + pad;
            const double cxd = d.center.x.to_double(), cyd = d.center.y.to_double();
            const double t = 1.0 + hd * 0.7071067811865476;
            const double thr2 = t * t;
            mark_box(d.center.x - r, d.center.x + r, d.center.y - r, d.center.y + r,
                     [&](long i, long j) {
                         double cx, cy;
                         center_d(i, j, cx, cy);
                         double diff = (cx - cxd) * (cx - cxd) + (cy - cyd) * (cy - cyd) - thr2;
                         if (diff > margin) return false;
                         if (diff < -margin) return true;
                         return detail::disk_covers_cell(g.cell_center(i, j), d, h);
                     });
        }
    } else {
        for (const auto& s : obs.segments) {
            // walk the columns the segment passes through
            Rational ax = s.a.x < s.b.x ? s.a.x : s.b.x;
            Rational bx = s.a.x > s.b.x ? s.a.x : s.b.x;
            long i0 = detail::clamp_floor((ax - pad - g.x0) / h, 0, g.W - 1);
            long i1 = detail::clamp_floor((bx + pad - g.x0) / h, 0, g.W - 1);
            const double axd = s.a.x.to_double(), ayd = s.a.y.to_double();
            const double dxd = s.b.x.to_double() - axd, dyd = s.b.y.to_double() - ayd;
            const double len2d = dxd * dxd + dyd * dyd;
            const double thr2 = 0.5 * hd * hd;
            auto near_segment = [&](long i, long j) {
                double cx, cy;
                center_d(i, j, cx, cy);
                double t = len2d > 0 ? ((cx - axd) * dxd + (cy - ayd) * dyd) / len2d : 0.0;
                t = std::min(1.0, std::max(0.0, t));
                double px = axd + t * dxd - cx, py = ayd + t * dyd - cy;
                double diff = px * px + py * py - thr2;
                if (diff > margin) return 0;
                if (diff < -margin) return 1;
                return 2;
            };
            Point d = s.b - s.a;
            for (long i = i0; i <= i1; ++i) {
                Rational wl = g.x0 + Rational(i) * h - pad;
                Rational wr = g.x0 + Rational(i + 1) * h + pad;
                Rational ylo, yhi;
                if (d.x.sign() == 0) {
                    ylo = s.a.y < s.b.y ? s.a.y : s.b.y;
                    yhi = s.a.y > s.b.y ? s.a.y : s.b.y;
                } else {
                    Rational t0 = (wl - s.a.x) / d.x, t1 = (wr - s.a.x) / d.x;
                    if (t0 > t1) std::swap(t0, t1);
                    if (t0 < Rational(0)) t0 = Rational(0);
                    if (t1 > Rational(1)) t1 = Rational(1);
                    if (t0 > t1) continue;
                    Rational y0v = s.a.y + t0 * d.y, y1v = s.a.y + t1 * d.y;
                    ylo = y0v < y1v ? y0v : y1v;
                    yhi = y0v > y1v ? y0v : y1v;
                }
                long j0 = detail::clamp_floor((ylo - pad - g.y0) / h, 0, g.H - 1);
                long j1 = detail::clamp_floor((yhi + pad - g.y0) / h, 0, g.H - 1);
                for (long j = j0; j <= j1; ++j) {
                    size_t id = g.idx(i, j);
                    if (g.covered[id]) continue;
                    int v = near_segment(i, j);
                    if (v == 2) v = detail::segment_covers_cell(g.cell_center(i, j), s, h);
                    if (v) g.covered[id] = 1;
                }
            }
        }
    }

    // flood from the border through free cells, 4-neighborhood
    g.outside.assign(g.covered.size(), 0);
    std::deque<std::pair<long, long>> queue;
    auto push = [&](long i, long j) {
        if (!g.in_range(i, j)) return;
        size_t id = g.idx(i, j);
        if (g.covered[id] || g.outside[id]) return;
        g.outside[id] = 1;
        queue.emplace_back(i, j);
    };
    for (long i = 0; i < g.W; ++i) {
        push(i, 0);
        push(i, g.H - 1);
    }
    for (long j = 0; j < g.H; ++j) {
        push(0, j);
        push(g.W - 1, j);
    }
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        push(i - 1, j);
        push(i + 1, j);
        push(i, j - 1);
        push(i, j + 1);
    }
    return g;
}

// enclosure decided by rasterization: q is enclosed when its cell cannot
// reach the border. Requires pitch at most a quarter of the instance's
// feature separation, with q counted as a feature.
inline bool grid_flood_oracle(const Point& q, const ObstacleSet& obs, const Rational& h,
                              const std::optional<Rational>& separation_hint = {}) {
    Rational delta = separation_hint ? *separation_hint : min_feature_separation(obs, {q});
    if (Rational(4) * h > delta)
        throw ResolutionTooCoarse("grid pitch exceeds a quarter of the feature separation");
    FloodGrid g = build_flood_grid(obs, h, {q});
    auto [i, j] = g.cell_of(q);
    if (!g.in_range(i, j)) return false;
    size_t id = g.idx(i, j);
    if (g.covered[id]) throw ResolutionTooCoarse("query cell touches an obstacle");
    return !g.outside[id];
}

// largest dyadic step of the form m/2^k not exceeding r; keeps later cell
// arithmetic on small denominators
inline Rational dyadic_floor(const Rational& r, unsigned k) {
    Int scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), k);
    Rational s = r * Rational(scale);
    return Rational(s.floor(), scale);
}

// grid pitch for an instance: delta/4 rounded down to a dyadic step
inline Rational oracle_pitch(const Rational& delta) {
    if (delta.sign() <= 0) throw ResolutionTooCoarse("feature separation is not positive");
    Rational target = delta / Rational(4);
    unsigned k = 2;
    while (dyadic_floor(target, k).sign() == 0 && k < 200) k += 2;
    Rational h = dyadic_floor(target, k);
    if (h.sign() <= 0) throw ResolutionTooCoarse("feature separation too small to rasterize");
    return h;
}

} // namespace enclose
