#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "enclose/instance.hpp"

namespace enclose {

namespace detail {

inline std::string fmt4(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

struct Canvas {
    double minx = -1, miny = -1, maxx = 1, maxy = 1;
    bool seen = false;
    // y is flipped so the picture keeps the usual math orientation
    void grow(const Point& p, double margin) {
        double x = p.x.to_double(), y = -p.y.to_double();
        if (!seen) {
            minx = x - margin, maxx = x + margin;
            miny = y - margin, maxy = y + margin;
            seen = true;
            return;
        }
        minx = std::min(minx, x - margin);
        maxx = std::max(maxx, x + margin);
        miny = std::min(miny, y - margin);
        maxy = std::max(maxy, y + margin);
    }
};

} // namespace detail

// static SVG picture of an instance; when a selection is given those
// obstacles are highlighted and points are judged against the selection,
// otherwise against the full set
inline std::string render_svg(const Instance& inst, const std::vector<int>* selected = nullptr) {
    using detail::fmt4;
    const auto& obs = inst.obstacles;

    detail::Canvas box;
    for (const auto& d : obs.disks) box.grow(d.center, 1.0);
    for (const auto& s : obs.segments) {
        box.grow(s.a, 0.0);
        box.grow(s.b, 0.0);
    }
    for (const auto& p : inst.points) box.grow(p, 0.0);

    double pad = 0.06 * std::max(box.maxx - box.minx, box.maxy - box.miny) + 0.4;
    double w = box.maxx - box.minx + 2 * pad, h = box.maxy - box.miny + 2 * pad;
    double extent = std::max(w, h);
    double sw = 0.008 * extent, dot = 0.015 * extent, font = 0.035 * extent;

    auto is_selected = [&](int i) {
        if (!selected) return false;
        return std::find(selected->begin(), selected->end(), i) != selected->end();
    };

    ObstacleSet judge;
    judge.kind = obs.kind;
    if (selected) {
        for (int i : *selected) {
            if (obs.kind == ObstacleKind::UnitDisks) {
                if (i >= 0 && size_t(i) < obs.disks.size()) judge.disks.push_back(obs.disks[i]);
            } else if (i >= 0 && size_t(i) < obs.segments.size()) {
                judge.segments.push_back(obs.segments[i]);
            }
        }
    } else {
        judge = obs;
    }

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
    svg += fmt4(box.minx - pad) + " " + fmt4(box.miny - pad) + " " + fmt4(w) + " " + fmt4(h);
    svg += "\">\n<style>\n";
    svg += ".obs{fill:none;stroke:#8a8a8a;stroke-width:" + fmt4(sw) + "}\n";
    svg += ".obs.sel{stroke:#c42828;stroke-width:" + fmt4(1.8 * sw) + "}\n";
    svg += ".pt{fill:#1d5fbf}.pt.out{fill:#c47c16}\n";
    svg += "text{font-family:sans-serif;font-size:" + fmt4(font) + "px;fill:#333}\n";
    svg += "</style>\n";

    if (obs.kind == ObstacleKind::UnitDisks) {
        for (size_t i = 0; i < obs.disks.size(); ++i) {
            const Point& c = obs.disks[i].center;
            svg += "<circle class=\"obs";
            if (is_selected(int(i))) svg += " sel";
            svg += "\" cx=\"" + fmt4(c.x.to_double()) + "\" cy=\"" + fmt4(-c.y.to_double());
            svg += "\" r=\"1.0000\"/>\n";
        }
    } else {
        for (size_t i = 0; i < obs.segments.size(); ++i) {
            const Segment& s = obs.segments[i];
            svg += "<line class=\"obs";
            if (is_selected(int(i))) svg += " sel";
            svg += "\" x1=\"" + fmt4(s.a.x.to_double()) + "\" y1=\"" + fmt4(-s.a.y.to_double());
            svg += "\" x2=\"" + fmt4(s.b.x.to_double()) + "\" y2=\"" + fmt4(-s.b.y.to_double());
            svg += "\"/>\n";
        }
    }

    for (const auto& p : inst.points) {
        std::string verdict;
        try {
            bool in = obs.kind == ObstacleKind::UnitDisks
                          ? is_enclosed_unit_disks(p, judge.disks)
                          : is_enclosed_segments(p, judge.segments);
            verdict = in ? "enclosed" : "not enclosed";
        } catch (const Error&) {
            verdict = "on obstacle";
        }
        double x = p.x.to_double(), y = -p.y.to_double();
        svg += "<circle class=\"pt";
        if (verdict != "enclosed") svg += " out";
        svg += "\" cx=\"" + fmt4(x) + "\" cy=\"" + fmt4(y) + "\" r=\"" + fmt4(dot) + "\"/>\n";
        svg += "<text x=\"" + fmt4(x + 2 * dot) + "\" y=\"" + fmt4(y - dot) + "\">" + verdict +
               "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace enclose
