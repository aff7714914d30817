#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "enclose/errors.hpp"

namespace enclose {

// minimize c.x subject to sparse rows {terms rel rhs}, x >= 0
struct LinearProgram {
    struct Row {
        std::vector<std::pair<int, double>> terms;
        char rel = '=';  // '=', '<', '>'
        double rhs = 0.0;
    };
    int n = 0;
    std::vector<double> c;
    std::vector<Row> rows;
};

struct LPResult {
    bool feasible = false;
    bool unbounded = false;
    double objective = 0.0;
    std::vector<double> x;
};

namespace detail {

// dense two-phase primal simplex, Bland's rule throughout
class SimplexTableau {
  public:
    SimplexTableau(const LinearProgram& lp, double pivot_tol) : ptol_(pivot_tol) {
        int m = static_cast<int>(lp.rows.size());
        // structural columns, then one slack or surplus per inequality,
        // then artificials for rows whose slack cannot start basic
        int n_slack = 0;
        for (const auto& r : lp.rows)
            if (r.rel != '=') ++n_slack;
        int slack0 = lp.n;
        art0_ = lp.n + n_slack;

        std::vector<double> rhs(m);
        std::vector<char> rel(m);
        tab_.assign(m, {});
        int si = 0;
        n_art_ = 0;
        basis_.assign(m, -1);
        for (int i = 0; i < m; ++i) {
            const auto& r = lp.rows[i];
            double sgn = r.rhs < 0 ? -1.0 : 1.0;
            rel[i] = r.rel;
            if (sgn < 0) rel[i] = r.rel == '<' ? '>' : (r.rel == '>' ? '<' : '=');
            rhs[i] = sgn * r.rhs;
            tab_[i].assign(art0_ + 1, 0.0);
            for (auto [j, a] : r.terms) tab_[i][j] += sgn * a;
            if (r.rel != '=') {
                tab_[i][slack0 + si] = rel[i] == '<' ? 1.0 : -1.0;
                if (rel[i] == '<') basis_[i] = slack0 + si;
                ++si;
            }
            if (basis_[i] == -1) ++n_art_;
        }
        for (auto& row : tab_) row.resize(art0_ + n_art_ + 1, 0.0);
        int ai = 0;
        for (int i = 0; i < m; ++i) {
            tab_[i].back() = std::exchange(rhs[i], 0.0);
            if (basis_[i] == -1) {
                basis_[i] = art0_ + ai;
                tab_[i][art0_ + ai] = 1.0;
                ++ai;
            }
        }
        ncols_ = art0_ + n_art_;
    }

    // returns false on unboundedness
    bool iterate(std::vector<double>& z) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols_; ++j)
                if (z[j] < -ptol_) { enter = j; break; }
            if (enter == -1) return true;
            int leave = -1;
            double best = 0.0;
            for (size_t i = 0; i < tab_.size(); ++i) {
                double a = tab_[i][enter];
                if (a <= ptol_) continue;
                double ratio = tab_[i].back() / a;
                if (leave == -1 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave == -1) return false;
            pivot(leave, enter, z);
        }
    }

    void pivot(int row, int col, std::vector<double>& z) {
        double p = tab_[row][col];
        for (double& v : tab_[row]) v /= p;
        for (size_t i = 0; i < tab_.size(); ++i) {
            if (static_cast<int>(i) == row) continue;
            double f = tab_[i][col];
            if (f == 0.0) continue;
            for (size_t j = 0; j < tab_[i].size(); ++j) tab_[i][j] -= f * tab_[row][j];
        }
        double f = z[col];
        if (f != 0.0)
            for (size_t j = 0; j < z.size(); ++j) z[j] -= f * tab_[row][j];
        basis_[row] = col;
    }

    // reduced-cost row for the given costs, consistent with the current basis
    std::vector<double> price(const std::vector<double>& cost) const {
        std::vector<double> z(ncols_ + 1, 0.0);
        for (size_t j = 0; j < cost.size() && j < static_cast<size_t>(ncols_); ++j) z[j] = cost[j];
        for (size_t i = 0; i < tab_.size(); ++i) {
            double cb = basis_[i] < static_cast<int>(cost.size()) ? cost[basis_[i]] : 0.0;
            if (cb == 0.0) continue;
            for (size_t j = 0; j < z.size(); ++j) z[j] -= cb * tab_[i][j];
        }
        return z;
    }

    double phase1() {
        std::vector<double> cost(ncols_, 0.0);
        for (int j = art0_; j < ncols_; ++j) cost[j] = 1.0;
        auto z = price(cost);
        (void)iterate(z);  // bounded below by zero
        double v = 0.0;
        for (size_t i = 0; i < tab_.size(); ++i)
            if (basis_[i] >= art0_) v += tab_[i].back();
        return v;
    }

    // pivot artificials out of the basis; drop rows made redundant
    void purge_artificials() {
        std::vector<double> none(ncols_ + 1, 0.0);
        for (size_t i = 0; i < tab_.size();) {
            if (basis_[i] < art0_) { ++i; continue; }
            int col = -1;
            for (int j = 0; j < art0_; ++j)
                if (std::fabs(tab_[i][j]) > ptol_) { col = j; break; }
            if (col != -1) {
                pivot(static_cast<int>(i), col, none);
                ++i;
            } else {
                tab_.erase(tab_.begin() + i);
                basis_.erase(basis_.begin() + i);
            }
        }
        for (auto& row : tab_) {
            row.erase(row.begin() + art0_, row.end() - 1);
        }
        ncols_ = art0_;
    }

    bool phase2(const std::vector<double>& c) {
        std::vector<double> cost(ncols_, 0.0);
        for (size_t j = 0; j < c.size(); ++j) cost[j] = c[j];
        auto z = price(cost);
        return iterate(z);
    }

    std::vector<double> solution(int n) const {
        std::vector<double> x(n, 0.0);
        for (size_t i = 0; i < tab_.size(); ++i)
            if (basis_[i] < n) x[basis_[i]] = tab_[i].back();
        return x;
    }

  private:
    std::vector<std::vector<double>> tab_;
    std::vector<int> basis_;
    int ncols_ = 0;
    int art0_ = 0;
    int n_art_ = 0;
    double ptol_;
};

}  // namespace detail

inline LPResult simplex_solve(const LinearProgram& lp, double pivot_tol = 1e-9,
                              double phase1_tol = 1e-7) {
    detail::SimplexTableau t(lp, pivot_tol);
    if (t.phase1() > phase1_tol) return {};
    t.purge_artificials();
    LPResult res;
    if (!t.phase2(lp.c)) {
        res.unbounded = true;
        return res;
    }
    res.feasible = true;
    res.x = t.solution(lp.n);
    res.objective = 0.0;
    for (int j = 0; j < lp.n; ++j) res.objective += lp.c[j] * res.x[j];
    return res;
}

}  // namespace enclose
