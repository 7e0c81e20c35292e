#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "priorinet/rational.hpp"

namespace priorinet {

// Dense univariate polynomial over the rationals. The coefficient of x^i is
// coeff(i); the zero polynomial has degree -1. Degrees in this project stay
// small (a few dozen), so a dense representation is the right trade.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rat constant);
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs);

    static Poly monomial(const Rat& coeff, int deg);
    static Poly x();  // the identity polynomial

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;  // 0 outside the stored range
    const Rat& leading() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    Poly derivative() const;

    // Quotient and remainder of field division.
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    // Division known to be exact; throws std::logic_error on nonzero remainder.
    Poly div_exact(const Poly& d) const;

    // Monic gcd (the zero polynomial if both args are zero).
    static Poly gcd(Poly a, Poly b);

    Poly squarefree_part() const;

    // Multiplicity of r as a root.
    int root_multiplicity(const Rat& r) const;
    // Divides out (x - r)^m; requires m <= root_multiplicity(r).
    Poly deflate(const Rat& r, int m) const;

    // Substitution x -> x^m (m >= 1).
    Poly compose_power(int m) const;
    // Substitution x -> 1 - x (used for series expansion around 1).
    Poly compose_one_minus_x() const;

    Poly monic() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace priorinet
