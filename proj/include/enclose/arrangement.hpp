#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <vector>

#include "enclose/geom.hpp"

namespace enclose {

// Planar subdivision induced by a set of segments. Vertices are pairwise
// intersection points only: a segment endpoint touching nothing is not a
// vertex, and a segment with fewer than two vertices contributes no edges.
struct HalfEdge {
    int origin = -1, target = -1;
    int parent = -1; // input segment index
    int twin = -1;
};

struct Arrangement {
    std::vector<Segment> segments;
    std::vector<Point> vertices;
    std::vector<HalfEdge> halfedges;
    std::vector<std::vector<int>> out;        // outgoing halfedges, ccw by exact angle
    std::vector<std::vector<int>> on_segment; // vertex ids ordered along each segment
    std::vector<int> comp;                    // vertex -> connected component
    int n_comps = 0;

    int vertex_id(const Point& p) const {
        auto it = vid_.find(p);
        return it == vid_.end() ? -1 : it->second;
    }

    std::map<Point, int> vid_;
};

namespace detail {

inline int angle_half(const Point& d) {
    if (d.y.sign() > 0) return 0;
    if (d.y.sign() == 0 && d.x.sign() > 0) return 0;
    return 1;
}

// strict ccw order starting at the positive x axis
inline bool angle_less(const Point& u, const Point& v) {
    int hu = angle_half(u), hv = angle_half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v).sign() > 0;
}

struct DSU {
    std::vector<int> p;
    explicit DSU(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace detail

inline Arrangement build_arrangement(const std::vector<Segment>& segs) {
    Arrangement arr;
    arr.segments = segs;
    size_t n = segs.size();
    for (const auto& s : segs)
        if (s.a == s.b) throw DegenerateInput("degenerate segment");

    std::vector<std::vector<Point>> pts(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            auto r = seg_intersect(segs[i], segs[j]);
            if (r.kind == SegIntersection::Overlap)
                throw DegenerateInput("collinear overlapping segments");
            if (r.kind == SegIntersection::At) {
                pts[i].push_back(r.p);
                pts[j].push_back(r.p);
            }
        }

    arr.on_segment.resize(n);
    for (size_t i = 0; i < n; ++i) {
        auto& v = pts[i];
        Point d = segs[i].b - segs[i].a;
        std::sort(v.begin(), v.end(), [&](const Point& p, const Point& q) {
            return dot(p - segs[i].a, d) < dot(q - segs[i].a, d);
        });
        v.erase(std::unique(v.begin(), v.end()), v.end());
        for (const auto& p : v) {
            auto it = arr.vid_.find(p);
            int id;
            if (it == arr.vid_.end()) {
                id = static_cast<int>(arr.vertices.size());
                arr.vertices.push_back(p);
                arr.vid_.emplace(p, id);
            } else {
                id = it->second;
            }
            arr.on_segment[i].push_back(id);
        }
    }

    arr.out.resize(arr.vertices.size());
    for (size_t i = 0; i < n; ++i) {
        const auto& ids = arr.on_segment[i];
        for (size_t k = 0; k + 1 < ids.size(); ++k) {
            int u = ids[k], v = ids[k + 1];
            int h = static_cast<int>(arr.halfedges.size());
            arr.halfedges.push_back({u, v, static_cast<int>(i), h + 1});
            arr.halfedges.push_back({v, u, static_cast<int>(i), h});
            arr.out[u].push_back(h);
            arr.out[v].push_back(h + 1);
        }
    }

    for (size_t v = 0; v < arr.out.size(); ++v) {
        auto& lst = arr.out[v];
        std::sort(lst.begin(), lst.end(), [&](int h1, int h2) {
            Point d1 = arr.vertices[arr.halfedges[h1].target] - arr.vertices[v];
            Point d2 = arr.vertices[arr.halfedges[h2].target] - arr.vertices[v];
            return detail::angle_less(d1, d2);
        });
        // overlapping directions would break the strict angular order
        for (size_t k = 0; k + 1 < lst.size(); ++k) {
            Point d1 = arr.vertices[arr.halfedges[lst[k]].target] - arr.vertices[v];
            Point d2 = arr.vertices[arr.halfedges[lst[k + 1]].target] - arr.vertices[v];
            if (cross(d1, d2).sign() == 0 && dot(d1, d2).sign() > 0)
                throw DegenerateInput("coincident edge directions at a vertex");
        }
    }

    detail::DSU dsu(arr.vertices.size());
    for (const auto& h : arr.halfedges) dsu.unite(h.origin, h.target);
    arr.comp.assign(arr.vertices.size(), -1);
    std::map<int, int> remap;
    for (size_t v = 0; v < arr.vertices.size(); ++v) {
        int r = dsu.find(static_cast<int>(v));
        auto it = remap.find(r);
        if (it == remap.end()) it = remap.emplace(r, arr.n_comps++).first;
        arr.comp[v] = it->second;
    }
    return arr;
}

namespace detail {

struct Traced {
    // walks as halfedge sequences; each halfedge lies in exactly one walk
    std::vector<std::vector<int>> walks;
    std::vector<int> walk_comp;
    std::vector<std::vector<int>> comp_walks; // per component: walk ids
    std::vector<Rational> area2;              // per walk, twice signed area
    std::vector<int> comp_outer;              // per component: its unbounded local face
};

// next halfedge along a face: the angular predecessor of the twin
inline int face_next(const Arrangement& arr, const std::vector<int>& pos, int h) {
    int tw = arr.halfedges[h].twin;
    int v = arr.halfedges[tw].origin;
    const auto& lst = arr.out[v];
    int idx = pos[tw];
    return lst[(idx + lst.size() - 1) % lst.size()];
}

inline Traced trace_faces(const Arrangement& arr) {
    Traced t;
    std::vector<int> pos(arr.halfedges.size(), -1);
    for (size_t v = 0; v < arr.out.size(); ++v)
        for (size_t i = 0; i < arr.out[v].size(); ++i) pos[arr.out[v][i]] = static_cast<int>(i);

    std::vector<char> seen(arr.halfedges.size(), 0);
    for (size_t h0 = 0; h0 < arr.halfedges.size(); ++h0) {
        if (seen[h0]) continue;
        std::vector<int> walk;
        int h = static_cast<int>(h0);
        do {
            assert(!seen[h]);
            seen[h] = 1;
            walk.push_back(h);
            h = face_next(arr, pos, h);
        } while (h != static_cast<int>(h0));
        t.walk_comp.push_back(arr.comp[arr.halfedges[h0].origin]);
        t.walks.push_back(std::move(walk));
    }

    t.comp_walks.resize(arr.n_comps);
    t.area2.resize(t.walks.size());
    t.comp_outer.assign(arr.n_comps, -1);
    for (size_t w = 0; w < t.walks.size(); ++w) {
        t.comp_walks[t.walk_comp[w]].push_back(static_cast<int>(w));
        Rational a(0);
        for (int h : t.walks[w])
            a += cross(arr.vertices[arr.halfedges[h].origin], arr.vertices[arr.halfedges[h].target]);
        t.area2[w] = a;
    }
    for (int c = 0; c < arr.n_comps; ++c) {
        for (int w : t.comp_walks[c]) {
            if (t.area2[w].sign() <= 0) {
                assert(t.comp_outer[c] == -1);
                t.comp_outer[c] = w;
            }
        }
        assert(t.comp_walks[c].empty() || t.comp_outer[c] != -1);
    }
    return t;
}

inline ClosedWalk walk_points(const Arrangement& arr, const std::vector<int>& hs) {
    ClosedWalk w;
    w.v.reserve(hs.size());
    for (int h : hs) w.v.push_back(arr.vertices[arr.halfedges[h].origin]);
    return w;
}

} // namespace detail

struct FaceSet {
    struct Face {
        std::vector<ClosedWalk> walks; // boundary; bounded faces lead with a ccw walk
        bool bounded = false;
    };
    std::vector<Face> faces;
    int outer = -1;

    // location support, grouped by connected component of the arrangement
    struct CompFace {
        ClosedWalk walk; // ccw
        int global = -1;
    };
    struct Comp {
        std::vector<CompFace> bounded;
        Rational hull_area2; // |area| of the component's unbounded-side walk
    };
    std::vector<Comp> comps;
    std::vector<Segment> segments;
    std::vector<int> halfedge_face; // global face left of each halfedge
};

inline FaceSet extract_faces(const Arrangement& arr) {
    auto t = detail::trace_faces(arr);

    FaceSet fs;
    fs.segments = arr.segments;

    // nodes: 0 = unbounded face, then one per traced walk
    size_t n_nodes = 1 + t.walks.size();
    detail::DSU dsu(n_nodes);
    auto walk_node = [&](int w) { return w + 1; };

    // components with edges, each represented by one of its vertices
    std::vector<int> comp_rep(arr.n_comps, -1);
    for (size_t v = 0; v < arr.vertices.size(); ++v) {
        int c = arr.comp[v];
        if (comp_rep[c] == -1) comp_rep[c] = static_cast<int>(v);
    }

    std::vector<ClosedWalk> walk_pts(t.walks.size());
    for (size_t w = 0; w < t.walks.size(); ++w) walk_pts[w] = detail::walk_points(arr, t.walks[w]);

    // absorb each component's unbounded side into the face that contains it
    for (int c = 0; c < arr.n_comps; ++c) {
        if (t.comp_walks[c].empty()) continue;
        Point rep = arr.vertices[comp_rep[c]];
        int best_walk = -1;
        Rational best_area;
        for (int d = 0; d < arr.n_comps; ++d) {
            if (d == c || t.comp_walks[d].empty()) continue;
            Rational hull = enclose::abs(t.area2[t.comp_outer[d]]);
            if (best_walk != -1 && hull >= best_area) continue;
            for (int w : t.comp_walks[d]) {
                if (w == t.comp_outer[d]) continue;
                if (winding(rep, walk_pts[w]) == 1) {
                    best_walk = w;
                    best_area = hull;
                    break;
                }
            }
        }
        int src = walk_node(t.comp_outer[c]);
        dsu.unite(src, best_walk == -1 ? 0 : walk_node(best_walk));
    }

    // groups become global faces; the group holding node 0 is unbounded
    std::map<int, int> face_of_root;
    auto face_for = [&](int node) {
        int r = dsu.find(node);
        auto it = face_of_root.find(r);
        if (it == face_of_root.end()) {
            it = face_of_root.emplace(r, static_cast<int>(fs.faces.size())).first;
            fs.faces.emplace_back();
        }
        return it->second;
    };

    fs.outer = face_for(0);
    fs.faces[fs.outer].bounded = false;

    std::vector<int> walk_face(t.walks.size(), -1);
    fs.halfedge_face.assign(arr.halfedges.size(), -1);
    for (size_t w = 0; w < t.walks.size(); ++w) {
        int f = face_for(walk_node(static_cast<int>(w)));
        walk_face[w] = f;
        for (int h : t.walks[w]) fs.halfedge_face[h] = f;
        if (t.area2[w].sign() > 0) {
            fs.faces[f].bounded = true;
            fs.faces[f].walks.insert(fs.faces[f].walks.begin(), walk_pts[w]);
        } else {
            fs.faces[f].walks.push_back(walk_pts[w]);
        }
    }

    fs.comps.resize(arr.n_comps);
    for (int c = 0; c < arr.n_comps; ++c) {
        if (t.comp_walks[c].empty()) continue;
        fs.comps[c].hull_area2 = enclose::abs(t.area2[t.comp_outer[c]]);
        for (int w : t.comp_walks[c]) {
            if (w == t.comp_outer[c]) continue;
            fs.comps[c].bounded.push_back({walk_pts[w], walk_face[w]});
        }
    }
    return fs;
}

// face containing q, assuming q avoids every boundary walk
inline int locate_off_boundary(const FaceSet& fs, const Point& q) {
    int best = -1;
    Rational best_area;
    for (const auto& comp : fs.comps) {
        for (const auto& cf : comp.bounded) {
            if (winding(q, cf.walk) == 1) {
                if (best == -1 || comp.hull_area2 < best_area) {
                    best = cf.global;
                    best_area = comp.hull_area2;
                }
                break; // local faces are disjoint
            }
        }
    }
    return best == -1 ? fs.outer : best;
}

// face containing q; q on an input segment raises PointOnObstacle
inline int locate(const FaceSet& fs, const Point& q) {
    for (const auto& s : fs.segments)
        if (on_segment(q, s)) throw PointOnObstacle("query point on an obstacle segment");
    return locate_off_boundary(fs, q);
}

struct BoundaryWalk {
    ClosedWalk walk;
    std::vector<int> parents; // input segment per edge
};

// outer boundary of each connected component, re-oriented so that every
// point enclosed by the component has winding +1
inline std::vector<BoundaryWalk> outer_boundary_walks(const std::vector<Segment>& segs) {
    Arrangement arr = build_arrangement(segs);
    auto t = detail::trace_faces(arr);
    std::vector<BoundaryWalk> out;
    for (int c = 0; c < arr.n_comps; ++c) {
        if (t.comp_walks[c].empty()) continue;
        const auto& hs = t.walks[t.comp_outer[c]];
        size_t k = hs.size();
        BoundaryWalk bw;
        bw.walk.v.resize(k);
        bw.parents.resize(k);
        for (size_t j = 0; j < k; ++j) {
            // edge j of the reversed walk retraces hs[k-1-j] backwards
            bw.walk.v[j] = arr.vertices[arr.halfedges[hs[k - 1 - j]].target];
            bw.parents[j] = arr.halfedges[hs[k - 1 - j]].parent;
        }
        out.push_back(std::move(bw));
    }
    return out;
}

} // namespace enclose
