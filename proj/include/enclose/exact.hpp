#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "enclose/enclosure.hpp"

namespace enclose {

struct ExactResult {
    bool found = false;
    size_t size = 0;
    std::vector<int> witness; // sorted obstacle indices
    std::uint64_t explored = 0;
};

namespace detail {

inline std::vector<std::vector<char>> intersection_matrix(const ObstacleSet& obs) {
    size_t m = obs.size();
    std::vector<std::vector<char>> mat(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            bool hit = obs.kind == ObstacleKind::UnitDisks
                           ? disks_intersect(obs.disks[i], obs.disks[j])
                           : seg_intersect(obs.segments[i], obs.segments[j]).kind !=
                                 SegIntersection::None;
            mat[i][j] = mat[j][i] = hit ? 1 : 0;
        }
    return mat;
}

struct DisjointSet {
    std::vector<size_t> parent;
    explicit DisjointSet(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    bool unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace detail

// size-ordered exhaustive search; the first feasible subset size is optimal.
// Obstacles without an intersection partner never lie on an enclosing
// boundary and are dropped up front; subsets whose intersection graph is a
// forest have simply connected unions and skip the oracle.
inline ExactResult exact_solve(const std::vector<Point>& X, const ObstacleSet& obs,
                               std::uint64_t budget = std::uint64_t(1) << 20) {
    ExactResult r;
    auto mat = detail::intersection_matrix(obs);
    std::vector<int> cand;
    for (size_t i = 0; i < obs.size(); ++i)
        for (size_t j = 0; j < obs.size(); ++j)
            if (mat[i][j]) {
                cand.push_back(static_cast<int>(i));
                break;
            }

    auto encloses_all = [&](const std::vector<int>& pick) {
        ObstacleSet sub;
        sub.kind = obs.kind;
        for (int idx : pick) {
            if (obs.kind == ObstacleKind::UnitDisks)
                sub.disks.push_back(obs.disks[static_cast<size_t>(idx)]);
            else
                sub.segments.push_back(obs.segments[static_cast<size_t>(idx)]);
        }
        return enclosed_subset(X, sub).size() == X.size();
    };

    size_t kmax = static_cast<size_t>(std::min<std::uint64_t>(budget, cand.size()));
    std::vector<int> pick;
    for (size_t k = 0; k <= kmax; ++k) {
        std::vector<size_t> c(k);
        std::iota(c.begin(), c.end(), 0);
        for (bool more = true; more;) {
            ++r.explored;
            pick.clear();
            for (size_t t : c) pick.push_back(cand[t]);

            bool worth_checking = X.empty();
            if (!worth_checking) {
                detail::DisjointSet dsu(k);
                for (size_t a = 0; a < k && !worth_checking; ++a)
                    for (size_t b = a + 1; b < k && !worth_checking; ++b)
                        if (mat[static_cast<size_t>(pick[a])][static_cast<size_t>(pick[b])] &&
                            !dsu.unite(a, b))
                            worth_checking = true; // cycle in the intersection graph
            }
            if (worth_checking && encloses_all(pick)) {
                r.found = true;
                r.size = k;
                r.witness = pick;
                return r;
            }

            more = false;
            for (size_t i = k; i-- > 0;) {
                if (c[i] + (k - i) < cand.size()) {
                    ++c[i];
                    for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }

    if (kmax < cand.size()) {
        std::vector<int> all = cand;
        if (encloses_all(all))
            throw BudgetExceeded("optimum exceeds the subset size budget");
    }
    return r; // nothing encloses X, not even the full set
}

} // namespace enclose
