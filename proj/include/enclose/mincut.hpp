#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <vector>

#include "enclose/instance.hpp"
#include "enclose/solution.hpp"
#include "enclose/sparsify.hpp"

namespace enclose {

// center segments of the intersecting pairs, subdivided at mutual crossings
struct PlanarDrawing {
    std::vector<Point> vertices;                // centers first, then crossing points
    size_t center_count = 0;
    std::vector<std::pair<int, int>> pieces;    // vertex id pairs
    std::vector<std::pair<int, int>> parents;   // intersecting disk pair per piece
};

namespace detail {

// subdivide the given center segments at their proper crossings
inline PlanarDrawing subdivide_sigma(const std::vector<Point>& centers,
                                     const std::vector<std::pair<int, int>>& pairs,
                                     const std::vector<Segment>& sigma) {
    PlanarDrawing h;
    h.vertices = centers;
    h.center_count = centers.size();
    std::map<Point, int> vid;
    for (size_t i = 0; i < centers.size(); ++i) vid.emplace(centers[i], static_cast<int>(i));
    auto vertex = [&](const Point& p) {
        auto it = vid.find(p);
        if (it == vid.end()) {
            it = vid.emplace(p, static_cast<int>(h.vertices.size())).first;
            h.vertices.push_back(p);
        }
        return it->second;
    };

    // proper crossings only: shared centers are already common endpoints
    std::vector<std::vector<Point>> cuts(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) {
        for (size_t j = i + 1; j < sigma.size(); ++j) {
            auto r = seg_intersect(sigma[i], sigma[j]);
            if (r.kind != SegIntersection::At) continue;
            if (r.p == sigma[i].a || r.p == sigma[i].b) continue;
            cuts[i].push_back(r.p);
            cuts[j].push_back(r.p);
        }
    }
    for (size_t i = 0; i < sigma.size(); ++i) {
        auto& v = cuts[i];
        v.push_back(sigma[i].a);
        v.push_back(sigma[i].b);
        Point d = sigma[i].b - sigma[i].a;
        std::sort(v.begin(), v.end(), [&](const Point& p, const Point& q) {
            return dot(p - sigma[i].a, d) < dot(q - sigma[i].a, d);
        });
        v.erase(std::unique(v.begin(), v.end()), v.end());
        for (size_t k = 0; k + 1 < v.size(); ++k) {
            h.pieces.emplace_back(vertex(v[k]), vertex(v[k + 1]));
            h.parents.push_back(pairs[i]);
        }
    }
    return h;
}

}  // namespace detail

inline PlanarDrawing planarize(const std::vector<UnitDisk>& disks) {
    auto pairs = intersecting_pairs(disks);
    std::vector<Point> centers;
    for (const auto& d : disks) centers.push_back(d.center);
    std::vector<Segment> sigma;
    for (auto [i, j] : pairs) sigma.push_back({centers[i], centers[j]});
    if (auto v = sigma_position_violation(sigma, centers)) throw DegenerateDrawing(*v);
    return detail::subdivide_sigma(centers, pairs, sigma);
}

struct DualGraph {
    int n_faces = 0;
    int outer = -1;
    std::vector<std::pair<int, int>> edge_faces;  // per piece, the two incident faces
    std::vector<char> nonempty;                   // per face, holds some x of X
    FaceSet faces;
};

inline DualGraph build_dual(const PlanarDrawing& h, const std::vector<Point>& X) {
    std::vector<Segment> segs;
    for (auto [u, v] : h.pieces) segs.push_back({h.vertices[u], h.vertices[v]});
    DualGraph dual;
    if (segs.empty()) {
        dual.n_faces = 1;
        dual.outer = 0;
        dual.nonempty.assign(1, X.empty() ? 0 : 1);
        return dual;
    }
    Arrangement arr = build_arrangement(segs);
    dual.faces = extract_faces(arr);
    dual.n_faces = static_cast<int>(dual.faces.faces.size());
    dual.outer = dual.faces.outer;

    // a piece whose endpoints both meet other pieces matches exactly one
    // halfedge pair; a dangling piece has no walk and loops inside its face
    std::vector<int> rep(segs.size(), -1);
    for (size_t e = 0; e < arr.halfedges.size(); e += 2) rep[arr.halfedges[e].parent] = static_cast<int>(e);
    dual.edge_faces.resize(segs.size());
    for (size_t k = 0; k < segs.size(); ++k) {
        if (rep[k] >= 0) {
            const auto& he = arr.halfedges[rep[k]];
            dual.edge_faces[k] = {dual.faces.halfedge_face[rep[k]],
                                  dual.faces.halfedge_face[he.twin]};
        } else {
            Point mid{(segs[k].a.x + segs[k].b.x) / Rational(2),
                      (segs[k].a.y + segs[k].b.y) / Rational(2)};
            int f = locate_off_boundary(dual.faces, mid);
            dual.edge_faces[k] = {f, f};
        }
    }

    dual.nonempty.assign(dual.n_faces, 0);
    for (const auto& x : X) dual.nonempty[locate(dual.faces, x)] = 1;
    return dual;
}

// minimum set of pieces separating the outer face from every nonempty face,
// by shortest-augmenting-path max-flow on the dual
inline std::vector<int> min_st_cut(const DualGraph& dual) {
    bool any = false;
    for (char f : dual.nonempty) any = any || f;
    if (!any) return {};
    if (dual.nonempty[dual.outer])
        throw NoFiniteCut("a point shares its face with the unbounded face");

    int n = dual.n_faces + 1;
    int s = dual.outer, t = dual.n_faces;
    long inf = static_cast<long>(dual.edge_faces.size()) + 1;

    struct Arc { int to; long cap; };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj(n);
    auto add = [&](int u, int v, long c1, long c2) {
        adj[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, c1});
        adj[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, c2});
    };
    for (auto [fa, fb] : dual.edge_faces)
        if (fa != fb) add(fa, fb, 1, 1);
    for (int f = 0; f < dual.n_faces; ++f)
        if (dual.nonempty[f]) add(f, t, inf, 0);

    long flow = 0;
    std::vector<int> via(n);
    for (;;) {
        std::fill(via.begin(), via.end(), -1);
        via[s] = static_cast<int>(arcs.size());  // sentinel
        std::deque<int> bfs{s};
        while (!bfs.empty() && via[t] == -1) {
            int u = bfs.front();
            bfs.pop_front();
            for (int a : adj[u]) {
                if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
                    via[arcs[a].to] = a;
                    bfs.push_back(arcs[a].to);
                }
            }
        }
        if (via[t] == -1) break;
        long push = inf;
        for (int v = t; v != s;) {
            int a = via[v];
            push = std::min(push, arcs[a].cap);
            v = arcs[a ^ 1].to;
        }
        for (int v = t; v != s;) {
            int a = via[v];
            arcs[a].cap -= push;
            arcs[a ^ 1].cap += push;
            v = arcs[a ^ 1].to;
        }
        flow += push;
    }
    if (flow >= inf) throw NoFiniteCut("no finite cut separates the marked faces");

    std::vector<char> reach(n, 0);
    reach[s] = 1;
    std::deque<int> bfs{s};
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop_front();
        for (int a : adj[u])
            if (arcs[a].cap > 0 && !reach[arcs[a].to]) {
                reach[arcs[a].to] = 1;
                bfs.push_back(arcs[a].to);
            }
    }
    std::vector<int> cut;
    for (size_t k = 0; k < dual.edge_faces.size(); ++k) {
        auto [fa, fb] = dual.edge_faces[k];
        if (fa != fb && reach[fa] != reach[fb]) cut.push_back(static_cast<int>(k));
    }
    assert(static_cast<long>(cut.size()) == flow);

#ifdef ENCLOSE_PARANOID
    // removing the cut must disconnect the outer face from every marked face
    std::vector<std::set<int>> rest(dual.n_faces);
    for (size_t k = 0; k < dual.edge_faces.size(); ++k) {
        if (std::binary_search(cut.begin(), cut.end(), static_cast<int>(k))) continue;
        auto [fa, fb] = dual.edge_faces[k];
        rest[fa].insert(fb);
        rest[fb].insert(fa);
    }
    std::vector<char> seen(dual.n_faces, 0);
    seen[s] = 1;
    std::deque<int> q2{s};
    while (!q2.empty()) {
        int u = q2.front();
        q2.pop_front();
        for (int v : rest[u])
            if (!seen[v]) {
                seen[v] = 1;
                q2.push_back(v);
            }
    }
    for (int f = 0; f < dual.n_faces; ++f) assert(!(dual.nonempty[f] && seen[f]));
#endif
    return cut;
}

// sparsify, draw, cut, and return the disks behind the cut pieces
inline Solution solve_unit_disks(const std::vector<Point>& X, const std::vector<UnitDisk>& disks,
                                 const SolveOptions& opts = {}) {
    Solution sol;
    sol.method = "mincut";
    sol.seed = opts.seed;
    if (X.empty()) return sol;
    for (const auto& x : X)
        if (!is_enclosed_unit_disks(x, disks))
            throw Infeasible("a point is not enclosed by the full disk set");

    auto sparse = sparsify(X, disks);
    std::vector<UnitDisk> sub;
    for (int d : sparse.selected) sub.push_back(disks[d]);
    auto h = planarize(sub);
    auto dual = build_dual(h, X);
    auto cut = min_st_cut(dual);

    std::set<int> chosen;
    for (int e : cut) {
        chosen.insert(sparse.selected[h.parents[e].first]);
        chosen.insert(sparse.selected[h.parents[e].second]);
    }
    sol.selected.assign(chosen.begin(), chosen.end());
    assert(sol.selected.size() <= 2 * cut.size());
    sol.objective = static_cast<long>(sol.selected.size());

    std::vector<UnitDisk> kept;
    for (int d : sol.selected) kept.push_back(disks[d]);
    for (const auto& x : X)
        if (!is_enclosed_unit_disks(x, kept))
            throw VerificationFailed("cut output fails the enclosure check");
    return sol;
}

}  // namespace enclose
