#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "enclose/enclosure.hpp"
#include "enclose/lp.hpp"
#include "enclose/solution.hpp"

namespace enclose {

// closed directed walk with one parent segment per edge; edge i runs from
// walk.v[i] to walk.v[(i+1) % size]
struct WeightedCycle {
    ClosedWalk walk;
    std::vector<int> segs;
    double weight = 0.0;
};

// peel cycles off the circulation: take the smallest strictly positive
// variable, close it with a positive-value path found depth-first, subtract
inline std::vector<WeightedCycle> decompose_circulation(const LPModel& m, const Circulation& circ) {
    std::vector<double> x = circ.x;
    for (double& v : x)
        if (v <= 1e-10) v = 0.0;

    std::vector<std::vector<int>> out(m.arr.vertices.size());
    for (int id = 0; id < m.lp.n; ++id) out[m.vars[id].u].push_back(id);

    std::vector<WeightedCycle> cycles;
    for (;;) {
        int start = -1;
        for (int id = 0; id < m.lp.n; ++id)
            if (x[id] > 0.0 && (start < 0 || x[id] < x[start])) start = id;
        if (start < 0) break;

        // path from the head back to the tail over positive variables
        std::vector<int> path, visited(m.arr.vertices.size(), 0);
        int target = m.vars[start].u;
        auto dfs = [&](auto&& self, int at) -> bool {
            if (at == target) return true;
            visited[at] = 1;
            for (int id : out[at]) {
                if (x[id] <= 0.0 || visited[m.vars[id].v]) continue;
                path.push_back(id);
                if (self(self, m.vars[id].v)) return true;
                path.pop_back();
            }
            return false;
        };
        if (!dfs(dfs, m.vars[start].v)) {
            double worst = 0.0;
            for (double v : x) worst = std::max(worst, v);
            if (worst <= 1e-7) break;
            throw ResidualTooLarge("no closing path for a positive variable");
        }

        WeightedCycle c;
        c.weight = x[start];
        for (int id : path) c.weight = std::min(c.weight, x[id]);
        c.walk.v.push_back(m.arr.vertices[m.vars[start].u]);
        c.walk.v.push_back(m.arr.vertices[m.vars[start].v]);
        c.segs.push_back(m.vars[start].seg);
        for (int id : path) {
            if (m.vars[id].v != target) c.walk.v.push_back(m.arr.vertices[m.vars[id].v]);
            c.segs.push_back(m.vars[id].seg);
        }
        x[start] -= c.weight;
        for (int id : path) x[id] -= c.weight;
        for (double& v : x)
            if (v <= 1e-10) v = 0.0;
        cycles.push_back(std::move(c));
    }
    return cycles;
}

namespace detail {

inline void split_at(const WeightedCycle& w, size_t i, size_t j, std::vector<WeightedCycle>& work) {
    WeightedCycle a, b;
    a.weight = b.weight = w.weight;
    for (size_t t = i; t < j; ++t) {
        a.walk.v.push_back(w.walk.v[t]);
        a.segs.push_back(w.segs[t]);
    }
    for (size_t t = j; t < w.walk.size(); ++t) {
        b.walk.v.push_back(w.walk.v[t]);
        b.segs.push_back(w.segs[t]);
    }
    for (size_t t = 0; t < i; ++t) {
        b.walk.v.push_back(w.walk.v[t]);
        b.segs.push_back(w.segs[t]);
    }
    work.push_back(std::move(a));
    work.push_back(std::move(b));
}

// true if p lies strictly inside edge i of the walk
inline bool interior_to(const Point& p, const WeightedCycle& w, size_t i) {
    const Point& a = w.walk.v[i];
    const Point& b = w.walk.at(i + 1);
    return p != a && p != b && on_segment(p, a, b);
}

inline void insert_vertex(WeightedCycle& w, size_t i, const Point& p) {
    w.walk.v.insert(w.walk.v.begin() + static_cast<long>(i) + 1, p);
    w.segs.insert(w.segs.begin() + static_cast<long>(i) + 1, w.segs[i]);
}

} // namespace detail

// split at repeated vertices first, then subdivide self-intersections so the
// next pass splits there; every output keeps the input weight
inline std::vector<WeightedCycle> unwind(const WeightedCycle& c) {
    std::vector<WeightedCycle> out, work{c};
    bool saw_overlap = false;
    while (!work.empty()) {
        WeightedCycle w = std::move(work.back());
        work.pop_back();
        size_t k = w.walk.size();
        if (k < 2) continue;

        bool split = false;
        for (size_t i = 0; i < k && !split; ++i)
            for (size_t j = i + 1; j < k && !split; ++j)
                if (w.walk.v[i] == w.walk.v[j]) {
                    detail::split_at(w, i, j, work);
                    split = true;
                }
        if (split) continue;
        if (k == 2) {
            // back-and-forth pair, zero area; kept for the area filter
            out.push_back(std::move(w));
            continue;
        }

        bool inserted = false;
        for (size_t i = 0; i < k && !inserted; ++i) {
            for (size_t j = i + 1; j < k && !inserted; ++j) {
                Segment ei{w.walk.v[i], w.walk.at(i + 1)};
                Segment ej{w.walk.v[j], w.walk.at(j + 1)};
                auto r = seg_intersect(ei, ej);
                if (r.kind == SegIntersection::None) continue;
                std::vector<Point> marks;
                if (r.kind == SegIntersection::At) {
                    marks.push_back(r.p);
                } else {
                    saw_overlap = true;
                    // collinear overlap: its endpoints, in edge-i coordinates
                    Point dir = ei.b - ei.a;
                    Rational len2 = dot(dir, dir);
                    Rational t0 = dot(ej.a - ei.a, dir), t1 = dot(ej.b - ei.a, dir);
                    if (t0 > t1) std::swap(t0, t1);
                    Rational lo = t0 > Rational(0) ? t0 : Rational(0);
                    Rational hi = t1 < len2 ? t1 : len2;
                    marks.push_back(ei.a + (lo / len2) * dir);
                    marks.push_back(ei.a + (hi / len2) * dir);
                }
                for (const Point& p : marks) {
                    // later edge first so the earlier index stays valid
                    if (detail::interior_to(p, w, j)) {
                        detail::insert_vertex(w, j, p);
                        inserted = true;
                    }
                    if (detail::interior_to(p, w, i)) {
                        detail::insert_vertex(w, i, p);
                        ++j;
                        inserted = true;
                    }
                }
            }
        }
        if (inserted) {
            work.push_back(std::move(w));
            continue;
        }
        out.push_back(std::move(w));
    }

#ifdef ENCLOSE_PARANOID
    // linear output bound; walks with positive-length edge overlaps can
    // exceed it (a flat collinear triangle unwinds into four edges)
    if (c.walk.size() >= 3 && !saw_overlap) {
        size_t total = 0;
        for (const auto& p : out) total += p.walk.size();
        assert(total <= 3 * c.walk.size() - 6);
    }
#else
    (void)saw_overlap;
#endif
    return out;
}

// keep the cycles that wind counterclockwise; degenerate area drops out
inline std::vector<WeightedCycle> filter_ccw(const std::vector<WeightedCycle>& cycles) {
    std::vector<WeightedCycle> kept;
    for (const auto& c : cycles)
        if (signed_area2(c.walk).sign() > 0) kept.push_back(c);
    return kept;
}

inline double selection_probability(double w, size_t n) {
    return std::min(10.0 * w * std::log(static_cast<double>(n)), 1.0);
}

// independent selection with probability min(10 w ln n, 1) per cycle, whole
// parent segments pulled in, exact verification, retry, select-all fallback
inline Solution round_and_select(const std::vector<WeightedCycle>& cycles, size_t n,
                                 const std::vector<Point>& X, const std::vector<Segment>& segments,
                                 std::uint64_t seed, int max_retries) {
    std::vector<std::vector<char>> encloses(cycles.size(), std::vector<char>(X.size(), 0));
    for (size_t ci = 0; ci < cycles.size(); ++ci)
        for (size_t xi = 0; xi < X.size(); ++xi)
            encloses[ci][xi] =
                point_in_polygon(X[xi], cycles[ci].walk) == Containment::Inside ? 1 : 0;
    for (size_t xi = 0; xi < X.size(); ++xi) {
        double total = 0.0;
        for (size_t ci = 0; ci < cycles.size(); ++ci)
            if (encloses[ci][xi]) total += cycles[ci].weight;
        assert(total >= 1.0 - 1e-6);
        (void)total;
    }

    std::vector<double> prob(cycles.size());
    for (size_t ci = 0; ci < cycles.size(); ++ci)
        prob[ci] = selection_probability(cycles[ci].weight, n);

    std::mt19937_64 rng(seed);
    auto finish = [&](const std::vector<char>& pick, int attempts) {
        std::set<int> segs;
        for (size_t ci = 0; ci < cycles.size(); ++ci)
            if (pick[ci])
                for (int s : cycles[ci].segs) segs.insert(s);
        std::vector<Segment> chosen;
        for (int s : segs) chosen.push_back(segments[static_cast<size_t>(s)]);
        for (const Point& q : X)
            if (!is_enclosed_segments(q, chosen)) return Solution{};
        Solution sol;
        sol.selected.assign(segs.begin(), segs.end());
        sol.method = "lp";
        sol.objective = static_cast<long>(segs.size());
        sol.attempts = attempts;
        sol.seed = seed;
        return sol;
    };

    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        std::vector<char> pick(cycles.size(), 0);
        for (size_t ci = 0; ci < cycles.size(); ++ci) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            pick[ci] = u < prob[ci] ? 1 : 0;
        }
        Solution sol = finish(pick, attempt);
        if (!sol.method.empty()) return sol;
    }

    Solution sol = finish(std::vector<char>(cycles.size(), 1), max_retries + 1);
    assert(!sol.method.empty());
    return sol;
}

// relaxation, cycle peeling, unwinding, area filter, randomized selection
inline Solution solve_segments(const std::vector<Point>& X, const std::vector<Segment>& segments,
                               const SolveOptions& opts = {}) {
    if (X.empty()) {
        Solution s;
        s.method = "lp";
        s.seed = opts.seed;
        return s;
    }
    ObstacleSet full;
    full.kind = ObstacleKind::Segments;
    full.segments = segments;
    if (enclosed_subset(X, full).size() != X.size())
        throw Infeasible("a point is not enclosed even by the full segment set");

    LPModel m = build_lp(X, segments);
    Circulation circ;
    try {
        circ = solve_lp(m);
    } catch (const Infeasible&) {
        throw NumericalFailure("relaxation infeasible for an enclosable instance");
    }

    std::vector<WeightedCycle> simple;
    for (const auto& c : decompose_circulation(m, circ))
        for (auto& piece : unwind(c)) simple.push_back(std::move(piece));
    return round_and_select(filter_ccw(simple), segments.size(), X, segments, opts.seed,
                            opts.max_retries);
}

} // namespace enclose
