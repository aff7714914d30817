#pragma once

#include <cmath>
#include <map>
#include <ostream>
#include <tuple>
#include <vector>

#include "enclose/arrangement.hpp"
#include "enclose/simplex.hpp"

namespace enclose {

// first coprime lattice direction whose closed forward ray from q avoids all
// arrangement vertices and is collinear with no input segment
inline Ray choose_ray(const Point& q, const Arrangement& arr, size_t skip = 0) {
    for (size_t k = 0;; ++k) {
        Point dir = ray_candidate(k);
        bool ok = true;
        for (const auto& p : arr.vertices) {
            Point d = p - q;
            if (cross(dir, d).sign() == 0 && dot(dir, d).sign() >= 0) { ok = false; break; }
        }
        for (size_t s = 0; ok && s < arr.segments.size(); ++s) {
            if (cross(dir, arr.segments[s].a - q).sign() == 0 &&
                cross(dir, arr.segments[s].b - q).sign() == 0)
                ok = false;
        }
        if (ok) {
            if (skip == 0) return {q, dir};
            --skip;
        }
    }
}

struct LPModel {
    struct Var {
        int seg, u, v;  // directed subsegment from u to v along segment seg
    };
    std::vector<Var> vars;
    LinearProgram lp;
    Arrangement arr;
    std::vector<Ray> rays;  // chosen ray per point
    std::map<std::tuple<int, int, int>, int> var_id;
};

// directed subsegment variables, flow conservation, and one winding row per
// point; a later skip value re-derives every ray, for cross-checks
inline LPModel build_lp(const std::vector<Point>& X, const std::vector<Segment>& segments,
                        size_t ray_skip = 0) {
    LPModel m;
    m.arr = build_arrangement(segments);

    for (size_t l = 0; l < segments.size(); ++l) {
        const auto& ids = m.arr.on_segment[l];
        for (size_t a = 0; a < ids.size(); ++a)
            for (size_t b = 0; b < ids.size(); ++b) {
                if (a == b) continue;
                int id = static_cast<int>(m.vars.size());
                m.vars.push_back({static_cast<int>(l), ids[a], ids[b]});
                m.var_id.emplace(std::make_tuple(static_cast<int>(l), ids[a], ids[b]), id);
            }
    }
    m.lp.n = static_cast<int>(m.vars.size());
    m.lp.c.assign(m.lp.n, 1.0);

    // inflow equals outflow at every vertex that sees a variable
    std::vector<LinearProgram::Row> flow(m.arr.vertices.size());
    for (int id = 0; id < m.lp.n; ++id) {
        flow[m.vars[id].u].terms.emplace_back(id, 1.0);   // leaves u
        flow[m.vars[id].v].terms.emplace_back(id, -1.0);  // enters v
    }
    for (auto& row : flow) {
        if (row.terms.empty()) continue;
        row.rel = '=';
        row.rhs = 0.0;
        m.lp.rows.push_back(std::move(row));
    }

    for (const auto& q : X) {
        Ray r = choose_ray(q, m.arr, ray_skip);
        m.rays.push_back(r);
        LinearProgram::Row row;
        row.rel = '>';
        row.rhs = 1.0;
        for (int id = 0; id < m.lp.n; ++id) {
            int s = ray_cross_sign(r, m.arr.vertices[m.vars[id].u], m.arr.vertices[m.vars[id].v]);
            if (s != 0) row.terms.emplace_back(id, double(s));
        }
        m.lp.rows.push_back(std::move(row));
    }

    for (int id = 0; id < m.lp.n; ++id) {
        LinearProgram::Row row;
        row.rel = '<';
        row.rhs = 1.0;
        row.terms.emplace_back(id, 1.0);
        m.lp.rows.push_back(std::move(row));
    }
    return m;
}

struct Circulation {
    std::vector<double> x;
    double objective = 0.0;
};

namespace detail {

// flow, winding, and bound residuals of an assignment against the model
inline void check_circulation(const LPModel& m, const std::vector<double>& x, double flow_tol,
                              double winding_tol) {
    std::vector<double> net(m.arr.vertices.size(), 0.0);
    for (int id = 0; id < m.lp.n; ++id) {
        net[m.vars[id].u] += x[id];
        net[m.vars[id].v] -= x[id];
        if (x[id] < -flow_tol || x[id] > 1.0 + flow_tol)
            throw NumericalFailure("variable out of bounds after solve");
    }
    for (double v : net)
        if (std::fabs(v) > flow_tol) throw NumericalFailure("flow residual too large");
    for (size_t qi = 0; qi < m.rays.size(); ++qi) {
        double w = 0.0;
        for (int id = 0; id < m.lp.n; ++id)
            w += x[id] * ray_cross_sign(m.rays[qi], m.arr.vertices[m.vars[id].u],
                                        m.arr.vertices[m.vars[id].v]);
        if (w < 1.0 - winding_tol) throw NumericalFailure("winding residual too large");
    }
}

}  // namespace detail

inline Circulation solve_lp(const LPModel& m) {
    auto res = simplex_solve(m.lp, 1e-9, 1e-7);
    if (res.unbounded) throw NumericalFailure("relaxation unbounded");
    if (!res.feasible) throw Infeasible("no circulation encloses every point");
    Circulation c;
    c.x = res.x;
    for (double& v : c.x)
        if (v < 1e-10) v = 0.0;
    c.objective = 0.0;
    for (double v : c.x) c.objective += v;
    detail::check_circulation(m, c.x, 1e-8, 1e-7);
    return c;
}

// indicator of the ccw outer boundaries of the subset's drawing, as a
// feasibility witness over the full model's variables
inline std::vector<double> boundary_indicator(const LPModel& m, const std::vector<int>& subset) {
    std::vector<double> x(m.lp.n, 0.0);
    std::vector<Segment> segs;
    for (int s : subset) segs.push_back(m.arr.segments[s]);
    for (const auto& bw : outer_boundary_walks(segs)) {
        size_t k = bw.walk.size();
        for (size_t j = 0; j < k; ++j) {
            int u = m.arr.vertex_id(bw.walk.at(j));
            int v = m.arr.vertex_id(bw.walk.at(j + 1));
            assert(u >= 0 && v >= 0);
            auto it = m.var_id.find(std::make_tuple(subset[bw.parents[j]], u, v));
            assert(it != m.var_id.end());
            x[it->second] = 1.0;
        }
    }
    return x;
}

// plain-text model dump, one line per constraint
inline void dump_lp(const LPModel& m, std::ostream& os) {
    auto name = [&](int id) {
        const auto& v = m.vars[id];
        return "x_" + std::to_string(v.seg) + "_" + std::to_string(v.u) + "_" +
               std::to_string(v.v);
    };
    os << "minimize:";
    for (int id = 0; id < m.lp.n; ++id) os << (id ? " + " : " ") << name(id);
    os << "\n";
    for (const auto& row : m.lp.rows) {
        bool first = true;
        for (auto [id, a] : row.terms) {
            if (a >= 0)
                os << (first ? "" : " + ");
            else
                os << (first ? "- " : " - ");
            if (std::fabs(a) != 1.0) os << std::fabs(a) << " ";
            os << name(id);
            first = false;
        }
        os << " " << (row.rel == '=' ? "=" : (row.rel == '>' ? ">=" : "<=")) << " " << row.rhs
           << "\n";
    }
}

}  // namespace enclose
