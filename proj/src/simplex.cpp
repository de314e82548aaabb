#include "maxcert/simplex.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace maxcert {

namespace {

// Dense tableau in canonical form. rows_[i] has ncols_ + 1 entries, the
// right-hand side last. obj_ is the reduced-cost row with the negated
// objective value in its last slot. basis_[i] names the variable that is
// basic in row i; its column is a unit vector and its reduced cost is zero.
class Tableau {
public:
    Tableau(Mat rows, std::vector<int> basis, int ncols)
        : rows_(std::move(rows)), basis_(std::move(basis)), ncols_(ncols) {}

    int nrows() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    const Vec& row(int i) const { return rows_[i]; }
    int basis(int i) const { return basis_[i]; }
    Rational objective() const { return -obj_[ncols_]; }
    const Rational& reduced_cost(int j) const { return obj_[j]; }

    // Installs a fresh objective (minimize c.x) and prices out the basis.
    void set_objective(const Vec& c) {
        obj_.assign(ncols_ + 1, Rational(0));
        for (int j = 0; j < static_cast<int>(c.size()); ++j) obj_[j] = c[j];
        for (int i = 0; i < nrows(); ++i) {
            const Rational f = obj_[basis_[i]];
            if (!f.is_zero()) subtract_scaled(obj_, f, rows_[i]);
        }
    }

    void pivot(int row, int col) {
        Vec& pr = rows_[row];
        const Rational piv = pr[col];
        for (Rational& v : pr) v /= piv;
        for (int i = 0; i < nrows(); ++i) {
            if (i == row) continue;
            const Rational f = rows_[i][col];
            if (!f.is_zero()) subtract_scaled(rows_[i], f, pr);
        }
        const Rational f = obj_[col];
        if (!f.is_zero()) subtract_scaled(obj_, f, pr);
        basis_[row] = col;
    }

    // Bland's rule: entering column is the lowest-indexed negative reduced
    // cost, the leaving row breaks ratio ties by the lowest basic variable.
    // Returns false when the objective is unbounded below.
    bool run() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (obj_[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < nrows(); ++i) {
                if (rows_[i][enter].sign() <= 0) continue;
                Rational ratio = rows_[i][ncols_] / rows_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    // Removes basic artificials (columns >= keep) by pivoting them onto an
    // original column, dropping rows that are redundant, then truncates the
    // artificial columns away.
    void eliminate_from(int keep) {
        for (int i = nrows() - 1; i >= 0; --i) {
            if (basis_[i] < keep) continue;
            int col = -1;
            for (int j = 0; j < keep; ++j) {
                if (!rows_[i][j].is_zero()) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) {
                pivot(i, col);
            } else {
                rows_.erase(rows_.begin() + i);
                basis_.erase(basis_.begin() + i);
            }
        }
        for (Vec& r : rows_) {
            r[keep] = r[ncols_];
            r.resize(keep + 1);
        }
        ncols_ = keep;
    }

private:
    static void subtract_scaled(Vec& target, const Rational& f, const Vec& src) {
        for (size_t k = 0; k < target.size(); ++k) {
            if (!src[k].is_zero()) target[k] -= f * src[k];
        }
    }

    Mat rows_;
    Vec obj_;
    std::vector<int> basis_;
    int ncols_;
};

} // namespace

LpResult solve_standard_form(const Mat& a, const Vec& b, const Vec& c) {
    const int r = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    if (static_cast<int>(b.size()) != r) {
        throw std::invalid_argument("right-hand side has " + std::to_string(b.size()) +
                                    " entries for " + std::to_string(r) + " rows");
    }
    for (const Vec& row : a) {
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("constraint matrix is not " + std::to_string(r) + "x" +
                                        std::to_string(n));
        }
    }

    // Phase one: unit artificial basis, minimize the sum of artificials.
    const int total = n + r;
    Mat rows(r, Vec(total + 1, Rational(0)));
    std::vector<int> basis(r);
    for (int i = 0; i < r; ++i) {
        const bool flip = b[i].sign() < 0;
        for (int j = 0; j < n; ++j) rows[i][j] = flip ? -a[i][j] : a[i][j];
        rows[i][total] = flip ? -b[i] : b[i];
        rows[i][n + i] = 1;
        basis[i] = n + i;
    }
    Tableau t(std::move(rows), std::move(basis), total);
    Vec phase1(total, Rational(0));
    for (int j = n; j < total; ++j) phase1[j] = 1;
    t.set_objective(phase1);
    if (!t.run()) throw std::logic_error("phase one cannot be unbounded");
    if (t.objective().is_positive()) return {LpStatus::infeasible, {}, Rational(0)};

    t.eliminate_from(n);
    t.set_objective(c);
    if (!t.run()) return {LpStatus::unbounded, {}, Rational(0)};

    Vec x(n, Rational(0));
    for (int i = 0; i < t.nrows(); ++i) x[t.basis(i)] = t.row(i)[n];
    return {LpStatus::optimal, std::move(x), t.objective()};
}

namespace {

// One LP in the pinning sequence: maximize `goal` over
//   sum_j rows[k][j] w_j - u + v - s_k = 0   for every row k
//   sum_j w_j = 1
//   u - v = mu_i, w_j = c_j   for every pin laid down so far
// with w, s >= 0 and the free value u - v split into u, v >= 0.
struct PinnedProblem {
    const Mat& rows;
    int n;                                  // weight coordinates
    std::vector<std::pair<int, Rational>> pins;  // (coordinate, value); -1 pins u - v

    LpResult maximize(int goal_coord) const {
        const int k = static_cast<int>(rows.size());
        const int total = n + 2 + k;  // w, u, v, slacks
        Mat a;
        Vec b;
        a.reserve(k + 1 + pins.size());
        for (int i = 0; i < k; ++i) {
            Vec row(total, Rational(0));
            for (int j = 0; j < n; ++j) row[j] = rows[i][j];
            row[n] = -1;
            row[n + 1] = 1;
            row[n + 2 + i] = -1;
            a.push_back(std::move(row));
            b.push_back(0);
        }
        Vec sum(total, Rational(0));
        for (int j = 0; j < n; ++j) sum[j] = 1;
        a.push_back(std::move(sum));
        b.push_back(1);
        for (const auto& [coord, value] : pins) {
            Vec row(total, Rational(0));
            if (coord < 0) {
                row[n] = 1;
                row[n + 1] = -1;
            } else {
                row[coord] = 1;
            }
            a.push_back(std::move(row));
            b.push_back(value);
        }
        Vec c(total, Rational(0));
        if (goal_coord < 0) {
            c[n] = -1;  // maximize u - v
            c[n + 1] = 1;
        } else {
            c[goal_coord] = -1;
        }
        return solve_standard_form(a, b, c);
    }
};

} // namespace

MaxMinResult max_min_over_simplex(const Mat& rows) {
    if (rows.empty()) throw std::invalid_argument("max-min needs at least one row");
    const int n = static_cast<int>(rows[0].size());
    if (n == 0) throw std::invalid_argument("max-min needs at least one column");
    for (const Vec& row : rows) {
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("max-min rows must have equal lengths");
        }
    }

    PinnedProblem prob{rows, n, {}};
    LpResult first = prob.maximize(-1);
    if (first.status != LpStatus::optimal) {
        throw std::logic_error("max-min LP must have an optimum");
    }
    const Rational value = -first.objective;
    prob.pins.emplace_back(-1, value);

    Vec weights(n, Rational(0));
    for (int j = 0; j < n; ++j) {
        LpResult step = prob.maximize(j);
        if (step.status != LpStatus::optimal) {
            throw std::logic_error("pinned max-min LP must stay solvable");
        }
        weights[j] = -step.objective;
        prob.pins.emplace_back(j, weights[j]);
    }
    return {value, std::move(weights)};
}

} // namespace maxcert
