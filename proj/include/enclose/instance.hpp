#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "enclose/enclosure.hpp"

namespace enclose {

struct Instance {
    ObstacleSet obstacles;
    std::vector<Point> points;
};

// general-position defects of a set of center segments: collinear overlaps,
// a center interior to another segment, or three segments through one
// non-center point
inline std::optional<std::string> sigma_position_violation(const std::vector<Segment>& sigma,
                                                           const std::vector<Point>& centers) {
    std::map<Point, std::set<size_t>> interior_crossings;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j) {
            auto r = seg_intersect(sigma[i], sigma[j]);
            if (r.kind == SegIntersection::Overlap)
                return "collinear overlapping center segments";
            if (r.kind != SegIntersection::At) continue;
            bool end_i = r.p == sigma[i].a || r.p == sigma[i].b;
            bool end_j = r.p == sigma[j].a || r.p == sigma[j].b;
            if (end_i && end_j) continue; // shared center, a legitimate vertex
            if (!end_i && !end_j) {
                auto& s = interior_crossings[r.p];
                s.insert(i);
                s.insert(j);
            }
            // endpoint-on-interior is caught by the center scan below
        }
    for (const auto& c : centers)
        for (const auto& s : sigma)
            if (on_open_segment(c, s.a, s.b)) return "disk center interior to a center segment";
    for (const auto& [p, set] : interior_crossings)
        if (set.size() > 2) return "three center segments through one point";
    return std::nullopt;
}

inline void validate_instance(const Instance& inst) {
    const auto& obs = inst.obstacles;
    if (obs.kind == ObstacleKind::Segments) {
        if (!obs.disks.empty()) throw DegenerateInput("segment instance carrying disks");
        for (const auto& s : obs.segments)
            if (s.a == s.b) throw DegenerateInput("degenerate segment");
        for (size_t i = 0; i < obs.segments.size(); ++i)
            for (size_t j = i + 1; j < obs.segments.size(); ++j)
                if (seg_intersect(obs.segments[i], obs.segments[j]).kind == SegIntersection::Overlap)
                    throw DegenerateInput("collinear overlapping segments");
        for (const auto& x : inst.points)
            for (const auto& s : obs.segments)
                if (on_segment(x, s)) throw PointOnObstacle("point on an obstacle segment");
    } else {
        if (!obs.segments.empty()) throw DegenerateInput("disk instance carrying segments");
        for (size_t i = 0; i < obs.disks.size(); ++i)
            for (size_t j = i + 1; j < obs.disks.size(); ++j)
                if (obs.disks[i].center == obs.disks[j].center)
                    throw DegenerateInput("coincident disk centers");
        for (const auto& x : inst.points)
            for (const auto& d : obs.disks)
                if (dist2(x, d.center) <= Rational(1))
                    throw PointCoveredByObstacle("point inside a unit disk");
        // only intersecting pairs ever bound a halfplane split
        for (const auto& x : inst.points)
            for (auto [i, j] : intersecting_pairs(obs.disks))
                if (orient(x, obs.disks[i].center, obs.disks[j].center) == 0)
                    throw DegenerateInput("point collinear with two intersecting disk centers");
        std::vector<Point> centers;
        for (const auto& d : obs.disks) centers.push_back(d.center);
        if (auto why = sigma_position_violation(sigma_segments(obs.disks), centers))
            throw DegenerateInput(*why);
    }
}

} // namespace enclose
