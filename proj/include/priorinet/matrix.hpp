#pragma once

#include <optional>
#include <vector>

#include "priorinet/polynomial.hpp"
#include "priorinet/rational.hpp"

namespace priorinet {

// Dense rational matrix. Exact arithmetic throughout.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

    static Mat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Rat& s) const;
    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    Mat transpose() const;
    bool is_zero() const;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;  // A v
    Rat row_dot(int i, const std::vector<Rat>& v) const;      // row_i . v

    int rank() const;
    Rat det() const;
    // Solves A x = b for square A; nullopt when singular.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
    std::optional<Mat> inverse() const;
    // Basis of the null space, returned as columns.
    Mat kernel() const;

    // Max absolute entry (infinity norm would be row sums; this is the max norm
    // used by the Kato-bound checks together with row sums).
    Rat max_abs() const;
    Rat inf_norm() const;  // max over rows of sum of |entries|

  private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

// Determinant of a square matrix of polynomials by fraction-free (Bareiss)
// elimination; all intermediate divisions are exact in Q[x].
Poly det_bareiss(std::vector<std::vector<Poly>> m);

}  // namespace priorinet
