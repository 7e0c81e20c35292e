#include "priorinet/matrix.hpp"

#include <stdexcept>

namespace priorinet {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat: shape mismatch");
    Mat m = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat: shape mismatch");
    Mat m = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("Mat: shape mismatch");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rat& v = at(i, k);
            if (sgn(v) == 0) continue;
            for (int j = 0; j < o.c_; ++j) m.at(i, j) += v * o.at(k, j);
        }
    return m;
}

Mat Mat::operator*(const Rat& s) const {
    Mat m = *this;
    for (Rat& v : m.a_) v *= s;
    return m;
}

Mat Mat::transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Mat::is_zero() const {
    for (const Rat& v : a_)
        if (sgn(v) != 0) return false;
    return true;
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("Mat::apply: size mismatch");
    std::vector<Rat> out(static_cast<std::size_t>(r_), Rat(0));
    for (int i = 0; i < r_; ++i) out[static_cast<std::size_t>(i)] = row_dot(i, v);
    return out;
}

Rat Mat::row_dot(int i, const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("Mat::row_dot: size mismatch");
    Rat acc(0);
    for (int j = 0; j < c_; ++j) {
        const Rat& a = at(i, j);
        if (sgn(a) != 0) acc += a * v[static_cast<std::size_t>(j)];
    }
    return acc;
}

int Mat::rank() const {
    Mat m = *this;
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
        int piv = -1;
        for (int i = rank; i < r_; ++i)
            if (sgn(m.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        const Rat inv = Rat(1) / m.at(rank, col);
        for (int j = col; j < c_; ++j) m.at(rank, j) *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == rank) continue;
            const Rat f = m.at(i, col);
            if (sgn(f) == 0) continue;
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

Rat Mat::det() const {
    if (r_ != c_) throw std::invalid_argument("Mat::det: not square");
    Mat m = *this;
    Rat d(1);
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int i = col; i < r_; ++i)
            if (sgn(m.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        const Rat inv = Rat(1) / m.at(col, col);
        for (int i = col + 1; i < r_; ++i) {
            const Rat f = m.at(i, col) * inv;
            if (sgn(f) == 0) continue;
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::optional<std::vector<Rat>> Mat::solve(const std::vector<Rat>& b) const {
    if (r_ != c_ || static_cast<int>(b.size()) != r_)
        throw std::invalid_argument("Mat::solve: shape mismatch");
    Mat m = *this;
    std::vector<Rat> rhs = b;
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int i = col; i < r_; ++i)
            if (sgn(m.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            std::swap(rhs[static_cast<std::size_t>(piv)], rhs[static_cast<std::size_t>(col)]);
        }
        const Rat inv = Rat(1) / m.at(col, col);
        for (int j = col; j < c_; ++j) m.at(col, j) *= inv;
        rhs[static_cast<std::size_t>(col)] *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == col) continue;
            const Rat f = m.at(i, col);
            if (sgn(f) == 0) continue;
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
            rhs[static_cast<std::size_t>(i)] -= f * rhs[static_cast<std::size_t>(col)];
        }
    }
    return rhs;
}

std::optional<Mat> Mat::inverse() const {
    if (r_ != c_) throw std::invalid_argument("Mat::inverse: not square");
    Mat m = *this, inv = Mat::identity(r_);
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int i = col; i < r_; ++i)
            if (sgn(m.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < c_; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        const Rat f = Rat(1) / m.at(col, col);
        for (int j = 0; j < c_; ++j) {
            m.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int i = 0; i < r_; ++i) {
            if (i == col) continue;
            const Rat g = m.at(i, col);
            if (sgn(g) == 0) continue;
            for (int j = 0; j < c_; ++j) {
                m.at(i, j) -= g * m.at(col, j);
                inv.at(i, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

Mat Mat::kernel() const {
    Mat m = *this;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
        int piv = -1;
        for (int i = rank; i < r_; ++i)
            if (sgn(m.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        const Rat inv = Rat(1) / m.at(rank, col);
        for (int j = col; j < c_; ++j) m.at(rank, j) *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == rank) continue;
            const Rat f = m.at(i, col);
            if (sgn(f) == 0) continue;
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<int> free_cols;
    {
        std::size_t p = 0;
        for (int col = 0; col < c_; ++col) {
            if (p < pivot_col.size() && pivot_col[p] == col)
                ++p;
            else
                free_cols.push_back(col);
        }
    }
    Mat basis(c_, static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = Rat(1);
        for (int i = 0; i < rank; ++i) basis.at(pivot_col[static_cast<std::size_t>(i)], static_cast<int>(k)) = -m.at(i, fc);
    }
    return basis;
}

Rat Mat::max_abs() const {
    Rat m(0);
    for (const Rat& v : a_) {
        Rat av = abs(v);
        if (av > m) m = av;
    }
    return m;
}

Rat Mat::inf_norm() const {
    Rat best(0);
    for (int i = 0; i < r_; ++i) {
        Rat s(0);
        for (int j = 0; j < c_; ++j) s += abs(at(i, j));
        if (s > best) best = s;
    }
    return best;
}

Poly det_bareiss(std::vector<std::vector<Poly>> m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("det_bareiss: not square");
    if (n == 0) return Poly(Rat(1));
    Poly prev(Rat(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Poly();
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Poly t = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                         m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t.div_exact(prev);
            }
        prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    Poly d = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign < 0 ? -d : d;
}

}  // namespace priorinet
