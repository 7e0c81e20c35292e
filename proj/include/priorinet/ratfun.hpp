#pragma once

#include <string>
#include <vector>

#include "priorinet/polynomial.hpp"

namespace priorinet {

// Truncated Laurent series sum_{j >= lo} c[j - lo] * t^j, exact coefficients.
// Used for expansions in t = 1 - beta around the point beta = 1.
struct LaurentSeries {
    int lo = 0;
    std::vector<Rat> c;  // c[k] is the coefficient of t^(lo + k)

    Rat coeff(int j) const {
        const int k = j - lo;
        if (k < 0 || k >= static_cast<int>(c.size())) return Rat(0);
        return c[static_cast<std::size_t>(k)];
    }
    int hi() const { return lo + static_cast<int>(c.size()) - 1; }
};

// Reduced rational function num/den with monic denominator.
class RatFun {
  public:
    RatFun() : num_(), den_(Rat(1)) {}
    explicit RatFun(Rat constant) : num_(std::move(constant)), den_(Rat(1)) {}
    explicit RatFun(Poly num) : num_(std::move(num)), den_(Rat(1)) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Pole order at x = 1 (0 if regular there; negative never returned).
    int pole_order_at_one() const;
    // Sign of f(x) for x slightly below 1: -1, 0 (identically zero), or +1.
    int sign_near_one() const;

    // Exact evaluation; throws std::domain_error on a pole.
    Rat eval(const Rat& x) const;

    // Laurent expansion around x = 1 in powers of t = 1 - x, coefficients of
    // t^lo .. t^hi. Requires pole order at 1 to be at most -lo.
    LaurentSeries series_at_one(int lo, int hi) const;

    // Substitution x -> x^m.
    RatFun compose_power(int m) const;

    std::string str(const std::string& var = "x") const;

  private:
    Poly num_, den_;
};

// Rational function f of beta = alpha^(1/scale); the germ representative of a
// value component as a function of the discount parameter alpha.
struct ScaledRF {
    long scale = 1;  // L
    RatFun f;

    // Rewrites to a larger compatible scale (new_scale must be a multiple).
    ScaledRF with_scale(long new_scale) const;
};

// Aligns two representatives on a common scale (lcm).
std::pair<ScaledRF, ScaledRF> align_scales(const ScaledRF& a, const ScaledRF& b);

// Laurent coefficients of f with respect to powers of (1 - alpha), indices
// -1..K. Position 0 of the result holds the (1-alpha)^{-1} coefficient.
// Requires pole order at 1 to be at most one.
std::vector<Rat> germ_coefficients(const ScaledRF& v, int K);

}  // namespace priorinet
