#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "enclose/geom.hpp"

namespace testutil {

using enclose::Point;
using enclose::Rational;

inline Rational rand_rational(std::mt19937_64& rng, long lo, long hi, long den_max = 8) {
    std::uniform_int_distribution<long> dd(1, den_max);
    long d = dd(rng);
    std::uniform_int_distribution<long> nd(lo * d, hi * d);
    return Rational(nd(rng), d);
}

inline Point rand_point(std::mt19937_64& rng, long lo, long hi, long den_max = 8) {
    return {rand_rational(rng, lo, hi, den_max), rand_rational(rng, lo, hi, den_max)};
}

// ccw convex hull, collinear points dropped
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && enclose::orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && enclose::orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

} // namespace testutil
