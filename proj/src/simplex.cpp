#include "priorinet/simplex.hpp"

#include <stdexcept>

namespace priorinet {

namespace {

// Dictionary simplex on: maximize c.y  s.t.  A y <= b, y >= 0.
// Returns status; on Optimal fills y.
class Dictionary {
  public:
    Dictionary(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
               const std::vector<Rat>& c)
        : m_(static_cast<int>(A.size())), n_(static_cast<int>(c.size())) {
        // Row i: slack_i = b_i - sum_j A[i][j] y_j. Tableau stores
        // basic = row[.][0] + sum over nonbasic of row[.][1+k] * var_k.
        rows_.assign(static_cast<std::size_t>(m_), std::vector<Rat>(static_cast<std::size_t>(n_) + 1, Rat(0)));
        basic_.resize(static_cast<std::size_t>(m_));
        nonbasic_.resize(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) nonbasic_[static_cast<std::size_t>(j)] = j;
        for (int i = 0; i < m_; ++i) {
            basic_[static_cast<std::size_t>(i)] = n_ + i;
            rows_[static_cast<std::size_t>(i)][0] = b[static_cast<std::size_t>(i)];
            for (int j = 0; j < n_; ++j)
                rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) + 1] =
                    -A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        obj_.assign(static_cast<std::size_t>(n_) + 1, Rat(0));
        for (int j = 0; j < n_; ++j) obj_[static_cast<std::size_t>(j) + 1] = c[static_cast<std::size_t>(j)];
    }

    // Makes the dictionary feasible; false if the LP is infeasible.
    bool phase1() {
        int worst = -1;
        for (int i = 0; i < m_; ++i)
            if (rows_[static_cast<std::size_t>(i)][0] < 0 &&
                (worst < 0 || rows_[static_cast<std::size_t>(i)][0] < rows_[static_cast<std::size_t>(worst)][0]))
                worst = i;
        if (worst < 0) return true;

        // Auxiliary variable x0 enters every row; minimize x0.
        const int x0 = n_ + m_;
        for (auto& r : rows_) r.push_back(Rat(1));
        nonbasic_.push_back(x0);
        std::vector<Rat> saved_obj = obj_;
        obj_.assign(obj_.size() + 1, Rat(0));
        obj_.back() = Rat(-1);

        pivot(worst, n_);  // x0 enters, most-negative row leaves
        if (!optimize()) throw std::logic_error("simplex: phase 1 unbounded");
        if (obj_[0] != 0) return false;

        // Drive x0 out of the basis if still present (degenerate).
        for (int i = 0; i < m_; ++i)
            if (basic_[static_cast<std::size_t>(i)] == x0) {
                for (int j = 0; j < static_cast<int>(nonbasic_.size()); ++j)
                    if (sgn(rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) + 1]) != 0) {
                        pivot(i, j);
                        break;
                    }
                break;
            }
        // Remove the x0 column.
        int col = -1;
        for (int j = 0; j < static_cast<int>(nonbasic_.size()); ++j)
            if (nonbasic_[static_cast<std::size_t>(j)] == x0) col = j;
        if (col < 0) throw std::logic_error("simplex: auxiliary variable lost");
        for (auto& r : rows_) r.erase(r.begin() + col + 1);
        nonbasic_.erase(nonbasic_.begin() + col);

        // Restore the objective, substituting basic variables.
        obj_.assign(nonbasic_.size() + 1, Rat(0));
        for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
            const int v = nonbasic_[j];
            if (v < n_) obj_[j + 1] += saved_obj[static_cast<std::size_t>(v) + 1];
        }
        for (int i = 0; i < m_; ++i) {
            const int v = basic_[static_cast<std::size_t>(i)];
            if (v < n_) {
                const Rat coef = saved_obj[static_cast<std::size_t>(v) + 1];
                if (sgn(coef) == 0) continue;
                for (std::size_t j = 0; j <= nonbasic_.size(); ++j)
                    obj_[j] += coef * rows_[static_cast<std::size_t>(i)][j];
            }
        }
        return true;
    }

    // Bland's rule; false when unbounded.
    bool optimize() {
        while (true) {
            int enter = -1, enter_var = 0;
            for (std::size_t j = 0; j < nonbasic_.size(); ++j)
                if (sgn(obj_[j + 1]) > 0 && (enter < 0 || nonbasic_[j] < enter_var)) {
                    enter = static_cast<int>(j);
                    enter_var = nonbasic_[j];
                }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m_; ++i) {
                const Rat& coef = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter) + 1];
                if (sgn(coef) >= 0) continue;
                Rat ratio = -rows_[static_cast<std::size_t>(i)][0] / coef;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basic_[static_cast<std::size_t>(i)] < basic_[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    Rat objective() const { return obj_[0]; }

    std::vector<Rat> solution(int nvars) const {
        std::vector<Rat> y(static_cast<std::size_t>(nvars), Rat(0));
        for (int i = 0; i < m_; ++i)
            if (basic_[static_cast<std::size_t>(i)] < nvars)
                y[static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)])] =
                    rows_[static_cast<std::size_t>(i)][0];
        return y;
    }

  private:
    void pivot(int leave, int enter) {
        const std::vector<Rat>& row = rows_[static_cast<std::size_t>(leave)];
        const Rat coef = row[static_cast<std::size_t>(enter) + 1];
        if (sgn(coef) == 0) throw std::logic_error("simplex: zero pivot");
        // Solve the leaving row for the entering variable; the leaving basic
        // variable takes the entering variable's tableau slot.
        std::vector<Rat> expr(row.size(), Rat(0));
        const Rat inv = Rat(-1) / coef;
        for (std::size_t j = 0; j < row.size(); ++j) expr[j] = row[j] * inv;
        expr[static_cast<std::size_t>(enter) + 1] = Rat(1) / coef;

        auto substitute = [&](std::vector<Rat>& target) {
            Rat c = target[static_cast<std::size_t>(enter) + 1];
            if (sgn(c) == 0) return;
            target[static_cast<std::size_t>(enter) + 1] = Rat(0);
            for (std::size_t j = 0; j < target.size(); ++j) target[j] += c * expr[j];
        };
        for (int i = 0; i < m_; ++i)
            if (i != leave) substitute(rows_[static_cast<std::size_t>(i)]);
        substitute(obj_);
        rows_[static_cast<std::size_t>(leave)] = expr;
        std::swap(basic_[static_cast<std::size_t>(leave)], nonbasic_[static_cast<std::size_t>(enter)]);
    }

    int m_, n_;
    std::vector<std::vector<Rat>> rows_;  // [const, nonbasic coefficients...]
    std::vector<Rat> obj_;
    std::vector<int> basic_, nonbasic_;
};

}  // namespace

LpResult lp_solve(const LpProblem& p) {
    // Rewrite into: maximize c.y, A y <= b, y >= 0.
    // Bounded-below variables are shifted; free variables split.
    const int n = p.nvars;
    std::vector<int> pos(static_cast<std::size_t>(n)), neg(static_cast<std::size_t>(n), -1);
    std::vector<Rat> shift(static_cast<std::size_t>(n), Rat(0));
    int ny = 0;
    for (int j = 0; j < n; ++j) {
        pos[static_cast<std::size_t>(j)] = ny++;
        if (p.lower.size() > static_cast<std::size_t>(j) && p.lower[static_cast<std::size_t>(j)])
            shift[static_cast<std::size_t>(j)] = *p.lower[static_cast<std::size_t>(j)];
        else
            neg[static_cast<std::size_t>(j)] = ny++;
    }

    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    auto add_le = [&](const std::vector<Rat>& coef, const Rat& rhs) {
        std::vector<Rat> row(static_cast<std::size_t>(ny), Rat(0));
        Rat adj = rhs;
        for (int j = 0; j < n; ++j) {
            const Rat& c = coef[static_cast<std::size_t>(j)];
            if (sgn(c) == 0) continue;
            row[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])] += c;
            if (neg[static_cast<std::size_t>(j)] >= 0)
                row[static_cast<std::size_t>(neg[static_cast<std::size_t>(j)])] -= c;
            adj -= c * shift[static_cast<std::size_t>(j)];
        }
        A.push_back(std::move(row));
        b.push_back(adj);
    };

    for (const LpRow& r : p.rows) {
        if (static_cast<int>(r.a.size()) != n) throw std::invalid_argument("lp_solve: row size");
        if (r.rel == LpRel::Le || r.rel == LpRel::Eq) add_le(r.a, r.b);
        if (r.rel == LpRel::Ge || r.rel == LpRel::Eq) {
            std::vector<Rat> na(r.a);
            for (Rat& v : na) v = -v;
            add_le(na, -r.b);
        }
    }
    for (int j = 0; j < n; ++j)
        if (p.upper.size() > static_cast<std::size_t>(j) && p.upper[static_cast<std::size_t>(j)]) {
            std::vector<Rat> coef(static_cast<std::size_t>(n), Rat(0));
            coef[static_cast<std::size_t>(j)] = Rat(1);
            add_le(coef, *p.upper[static_cast<std::size_t>(j)]);
        }

    std::vector<Rat> c(static_cast<std::size_t>(ny), Rat(0));
    Rat const_obj(0);
    for (int j = 0; j < n; ++j) {
        const Rat& cj = p.maximize[static_cast<std::size_t>(j)];
        if (sgn(cj) == 0) continue;
        c[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])] += cj;
        if (neg[static_cast<std::size_t>(j)] >= 0)
            c[static_cast<std::size_t>(neg[static_cast<std::size_t>(j)])] -= cj;
        const_obj += cj * shift[static_cast<std::size_t>(j)];
    }

    Dictionary dict(A, b, c);
    LpResult out;
    if (!dict.phase1()) {
        out.status = LpStatus::Infeasible;
        return out;
    }
    if (!dict.optimize()) {
        out.status = LpStatus::Unbounded;
        return out;
    }
    out.status = LpStatus::Optimal;
    out.objective = dict.objective() + const_obj;
    const std::vector<Rat> y = dict.solution(ny);
    out.x.assign(static_cast<std::size_t>(n), Rat(0));
    for (int j = 0; j < n; ++j) {
        Rat v = y[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])] + shift[static_cast<std::size_t>(j)];
        if (neg[static_cast<std::size_t>(j)] >= 0) v -= y[static_cast<std::size_t>(neg[static_cast<std::size_t>(j)])];
        out.x[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

}  // namespace priorinet
