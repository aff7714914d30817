#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "enclose/instance.hpp"

namespace enclose {

enum class GenStructure { Random, Ring, Nested };

namespace detail {

// deterministic rational snap of a real coordinate to the given denominator
inline Rational snap(double v, long den) { return {std::lround(v * double(den)), den}; }

inline Point snap_point(double x, double y, long den) { return {snap(x, den), snap(y, den)}; }

inline double unit(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

// disk ring around the origin: adjacent disks intersect, the hub stays clear
inline std::vector<UnitDisk> disk_ring(std::mt19937_64& rng, size_t n, double& radius) {
    double lo = std::max(1.08, 0.80 / std::sin(M_PI / double(n)));
    double hi = 0.97 / std::sin(M_PI / double(n));
    if (lo > hi) throw GenerationFailed("no workable ring radius");
    double r = lo + unit(rng) * (hi - lo);
    radius = r;
    std::vector<UnitDisk> disks;
    for (size_t k = 0; k < n; ++k) {
        double t = 2.0 * M_PI * (double(k) + 0.3 * (unit(rng) - 0.5)) / double(n);
        disks.push_back({snap_point(r * std::cos(t), r * std::sin(t), 100)});
    }
    return disks;
}

inline std::vector<Segment> polygon_ring(std::mt19937_64& rng, size_t n, double r,
                                         double& inradius) {
    std::vector<Point> v;
    for (size_t k = 0; k < n; ++k) {
        double t = 2.0 * M_PI * (double(k) + 0.3 * (unit(rng) - 0.5)) / double(n);
        v.push_back(snap_point(r * std::cos(t), r * std::sin(t), 100));
    }
    std::vector<Segment> segs;
    for (size_t k = 0; k < n; ++k) segs.push_back({v[k], v[(k + 1) % n]});
    inradius = r * std::cos(M_PI / double(n)) - 0.05;
    return segs;
}

inline Point random_point(std::mt19937_64& rng, double span, long den) {
    long lim = std::lround(span * double(den));
    std::uniform_int_distribution<long> d(-lim, lim);
    return {Rational(d(rng), den), Rational(d(rng), den)};
}

inline bool point_clear(const Point& p, const ObstacleSet& obs) {
    if (obs.kind == ObstacleKind::UnitDisks) {
        for (const auto& d : obs.disks)
            if (dist2(p, d.center) <= Rational(1)) return false;
    } else {
        for (const auto& s : obs.segments)
            if (on_segment(p, s)) return false;
    }
    return true;
}

inline bool instance_valid(const Instance& inst) {
    try {
        validate_instance(inst);
        return true;
    } catch (const Error&) {
        return false;
    }
}

inline bool enclosed_by_all(const Point& p, const ObstacleSet& obs) {
    try {
        if (obs.kind == ObstacleKind::UnitDisks) return is_enclosed_unit_disks(p, obs.disks);
        return is_enclosed_segments(p, obs.segments);
    } catch (const Error&) {
        return false;
    }
}

} // namespace detail

// deterministic per seed; ring and nested instances come with every point
// verified enclosed, random ones carry no feasibility promise
inline Instance generate_instance(ObstacleKind kind, size_t n_obstacles, size_t n_points,
                                  std::uint64_t seed, GenStructure structure) {
    std::mt19937_64 rng(seed);
    bool guaranteed = structure != GenStructure::Random;
    if (structure == GenStructure::Ring && n_obstacles < 3)
        throw GenerationFailed("a ring needs at least three obstacles");
    if (structure == GenStructure::Nested) {
        if (kind == ObstacleKind::Segments && n_obstacles < 6)
            throw GenerationFailed("nested polygons need at least six segments");
        if (kind == ObstacleKind::UnitDisks && n_obstacles < 14)
            throw GenerationFailed("nested disk rings need at least fourteen disks");
    }

    int rejections = 0;
    auto reject = [&rejections] {
        if (++rejections > 10000) throw GenerationFailed("rejection budget exhausted");
    };

    for (;;) {
        Instance inst;
        inst.obstacles.kind = kind;
        double hub = 0.0; // radius of the clear region points are drawn from
        double span = std::max(2.0, 0.9 * std::sqrt(double(n_obstacles)));

        if (structure == GenStructure::Ring) {
            if (kind == ObstacleKind::UnitDisks) {
                double r = 0.0;
                inst.obstacles.disks = detail::disk_ring(rng, n_obstacles, r);
                hub = r - 1.05;
            } else {
                double r = 0.35 * double(n_obstacles) + 1.2;
                inst.obstacles.segments = detail::polygon_ring(rng, n_obstacles, r, hub);
            }
        } else if (structure == GenStructure::Nested) {
            if (kind == ObstacleKind::UnitDisks) {
                size_t k1 = 3, k2 = n_obstacles - k1;
                double r1 = 0.0;
                inst.obstacles.disks = detail::disk_ring(rng, k1, r1);
                double lo = std::max(r1 + 2.05, 0.80 / std::sin(M_PI / double(k2)));
                double hi = 0.97 / std::sin(M_PI / double(k2));
                if (lo > hi) throw GenerationFailed("no workable outer ring radius");
                double r2 = lo + detail::unit(rng) * (hi - lo);
                for (size_t k = 0; k < k2; ++k) {
                    double t = 2.0 * M_PI * (double(k) + 0.3 * (detail::unit(rng) - 0.5)) / double(k2);
                    inst.obstacles.disks.push_back(
                        {detail::snap_point(r2 * std::cos(t), r2 * std::sin(t), 100)});
                }
                hub = r1 - 1.05;
            } else {
                size_t k1 = n_obstacles / 2, k2 = n_obstacles - k1;
                double r1 = 0.35 * double(k1) + 1.2;
                inst.obstacles.segments = detail::polygon_ring(rng, k1, r1, hub);
                double unused = 0.0;
                for (auto& s : detail::polygon_ring(rng, k2, 2.0 * r1 + 1.0, unused))
                    inst.obstacles.segments.push_back(s);
            }
        } else {
            if (kind == ObstacleKind::UnitDisks) {
                while (inst.obstacles.disks.size() < n_obstacles) {
                    Point c = detail::random_point(rng, span, 97);
                    bool dup = false;
                    for (const auto& d : inst.obstacles.disks) dup = dup || d.center == c;
                    if (dup) {
                        reject();
                        continue;
                    }
                    inst.obstacles.disks.push_back({c});
                }
            } else {
                while (inst.obstacles.segments.size() < n_obstacles) {
                    Point a = detail::random_point(rng, span, 97);
                    Point b = detail::random_point(rng, span, 97);
                    if (a == b) {
                        reject();
                        continue;
                    }
                    inst.obstacles.segments.push_back({a, b});
                }
            }
            hub = span;
        }

        bool ok = true;
        for (size_t i = 0; i < n_points && ok; ++i) {
            bool placed = false;
            for (int tries = 0; tries < 200 && !placed; ++tries) {
                Point p = detail::random_point(rng, std::max(hub, 0.05), 89);
                if (!detail::point_clear(p, inst.obstacles)) {
                    reject();
                    continue;
                }
                if (guaranteed && !detail::enclosed_by_all(p, inst.obstacles)) {
                    reject();
                    continue;
                }
                inst.points.push_back(p);
                placed = true;
            }
            ok = placed;
        }
        if (!ok) {
            reject();
            continue;
        }
        if (!detail::instance_valid(inst)) {
            reject();
            continue;
        }
        if (guaranteed) {
            bool all = true;
            for (const auto& p : inst.points)
                all = all && detail::enclosed_by_all(p, inst.obstacles);
            if (!all) {
                reject();
                continue;
            }
        }
        return inst;
    }
}

} // namespace enclose
