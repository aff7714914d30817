#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "enclose/enclosure.hpp"

namespace enclose {

using CellIndex = std::pair<long, long>;
using CellPair = std::pair<CellIndex, CellIndex>;

// half-open 1/2 x 1/2 cells: center (x,y) buckets to (floor(2x), floor(2y))
inline CellIndex grid_cell(const Point& c) {
    Int i = (Rational(2) * c.x).floor();
    Int j = (Rational(2) * c.y).floor();
    if (!i.fits_slong_p() || !j.fits_slong_p())
        throw DegenerateInput("disk center too large for grid indexing");
    return {i.get_si(), j.get_si()};
}

struct Grid {
    std::map<CellIndex, std::vector<int>> cells;
};

inline Grid grid_assign(const std::vector<UnitDisk>& disks) {
    Grid g;
    for (size_t d = 0; d < disks.size(); ++d)
        g.cells[grid_cell(disks[d].center)].push_back(static_cast<int>(d));
    return g;
}

namespace detail {

// intersecting cross pairs (d in a, d' in b); for a self pair, unordered pairs within the cell
inline std::vector<std::pair<int, int>> cross_pairs(const std::vector<int>& a,
                                                    const std::vector<int>& b, bool self,
                                                    const std::vector<UnitDisk>& disks) {
    std::vector<std::pair<int, int>> out;
    if (self) {
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j)
                if (disks_intersect(disks[a[i]], disks[a[j]])) out.emplace_back(a[i], a[j]);
    } else {
        for (int i : a)
            for (int j : b)
                if (disks_intersect(disks[i], disks[j])) out.emplace_back(i, j);
    }
    return out;
}

}  // namespace detail

// unordered occupied-cell pairs (self pairs included) joined by at least one
// intersecting disk pair; centers within distance 2 keeps offsets at Chebyshev <= 4
inline std::vector<CellPair> relevant_pairs(const Grid& grid, const std::vector<UnitDisk>& disks) {
    std::vector<CellPair> out;
    for (const auto& [cell, list] : grid.cells) {
        for (long di = 0; di <= 4; ++di) {
            for (long dj = (di == 0 ? 0 : -4); dj <= 4; ++dj) {
                CellIndex other{cell.first + di, cell.second + dj};
                auto it = grid.cells.find(other);
                if (it == grid.cells.end()) continue;
                bool self = di == 0 && dj == 0;
                if (!detail::cross_pairs(list, it->second, self, disks).empty())
                    out.push_back({cell, other});
            }
        }
    }
    return out;
}

struct PairSelection {
    CellIndex box_a{}, box_b{};
    std::vector<size_t> Y;           // indices into X enclosed by the pair's disks alone
    std::pair<int, int> left{-1, -1};   // cross pair maximizing the strictly-left share of Y
    std::pair<int, int> right{-1, -1};  // cross pair maximizing the strictly-right share
    bool arbitrary = false;             // Y was empty; left holds some intersecting cross pair
    std::vector<int> chosen;            // deduped union of the selected pairs, at most 4 disks
};

namespace detail {

inline bool subset_of(const std::vector<size_t>& a, const std::vector<size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

#ifdef ENCLOSE_PARANOID
// ccw hull of the closed corners of the pair's cells
inline ClosedWalk cell_pair_hull(const CellIndex& a, const CellIndex& b) {
    std::vector<Point> pts;
    for (const CellIndex* c : {&a, &b}) {
        for (long dx : {0L, 1L})
            for (long dy : {0L, 1L})
                pts.push_back({Rational(Int(c->first + dx), Int(2)),
                               Rational(Int(c->second + dy), Int(2))});
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Point> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return ClosedWalk{h};
}
#endif

}  // namespace detail

// four-disk selection for one relevant pair
inline PairSelection select_for_pair(const CellPair& pair, const Grid& grid,
                                     const std::vector<UnitDisk>& disks,
                                     const std::vector<Point>& X) {
    PairSelection sel;
    sel.box_a = pair.first;
    sel.box_b = pair.second;
    bool self = pair.first == pair.second;
    const auto& la = grid.cells.at(pair.first);
    const auto& lb = grid.cells.at(pair.second);
    auto cross = detail::cross_pairs(la, lb, self, disks);
    if (cross.empty()) throw DegenerateInput("cell pair is not relevant");

    ObstacleSet sub;
    sub.kind = ObstacleKind::UnitDisks;
    std::vector<int> local = la;
    if (!self) local.insert(local.end(), lb.begin(), lb.end());
    std::sort(local.begin(), local.end());
    for (int d : local) sub.disks.push_back(disks[d]);
    sel.Y = enclosed_subset(X, sub);

    if (sel.Y.empty()) {
        sel.arbitrary = true;
        sel.left = cross.front();
        sel.chosen = {cross.front().first, cross.front().second};
        std::sort(sel.chosen.begin(), sel.chosen.end());
        return sel;
    }

    // split Y by the open halfplanes of each directed center line; validation
    // forbids collinear points so the split is total
    std::vector<std::vector<size_t>> YL(cross.size()), YR(cross.size());
    for (size_t k = 0; k < cross.size(); ++k) {
        const Point& u = disks[cross[k].first].center;
        const Point& v = disks[cross[k].second].center;
        for (size_t yi : sel.Y) {
            int s = orient(u, v, X[yi]);
            if (s == 0) throw ChainViolation("point collinear with two selected disk centers");
            (s > 0 ? YL[k] : YR[k]).push_back(yi);
        }
    }
    size_t bl = 0, br = 0;
    for (size_t k = 1; k < cross.size(); ++k) {
        if (YL[k].size() > YL[bl].size()) bl = k;
        if (YR[k].size() > YR[br].size()) br = k;
    }
    sel.left = cross[bl];
    sel.right = cross[br];
    std::set<int> ch{sel.left.first, sel.left.second, sel.right.first, sel.right.second};
    sel.chosen.assign(ch.begin(), ch.end());

#ifdef ENCLOSE_PARANOID
    // the left (right) shares form a chain under inclusion, so the largest is the union
    for (size_t k = 0; k < cross.size(); ++k) {
        if (!detail::subset_of(YL[k], YL[bl]) || !detail::subset_of(YR[k], YR[br]))
            throw ChainViolation("halfplane shares do not form a chain");
    }
    auto hull = detail::cell_pair_hull(pair.first, pair.second);
    for (size_t yi : sel.Y) {
        assert(point_in_polygon(X[yi], hull) != Containment::Outside);
        CellIndex c = grid_cell(X[yi]);
        assert(c != pair.first && c != pair.second);
    }
    ObstacleSet four;
    four.kind = ObstacleKind::UnitDisks;
    for (int d : sel.chosen) four.disks.push_back(disks[d]);
    std::vector<Point> ypts;
    for (size_t yi : sel.Y) ypts.push_back(X[yi]);
    assert(enclosed_subset(ypts, four).size() == ypts.size());
#endif
    return sel;
}

struct SparsifyResult {
    std::vector<int> selected;           // sparse subset as sorted disk indices
    int max_per_cell = 0;                // measured per-cell count c
    std::vector<PairSelection> pairs;    // one record per relevant pair
};

inline SparsifyResult sparsify(const std::vector<Point>& X, const std::vector<UnitDisk>& disks) {
    Grid g = grid_assign(disks);
    SparsifyResult res;
    std::set<int> chosen;
    for (const auto& pr : relevant_pairs(g, disks)) {
        res.pairs.push_back(select_for_pair(pr, g, disks, X));
        for (int d : res.pairs.back().chosen) chosen.insert(d);
    }
    res.selected.assign(chosen.begin(), chosen.end());
    std::map<CellIndex, int> cnt;
    for (int d : res.selected) ++cnt[grid_cell(disks[d].center)];
    for (const auto& [c, n] : cnt) res.max_per_cell = std::max(res.max_per_cell, n);
    return res;
}

}  // namespace enclose
