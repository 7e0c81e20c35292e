#include "priorinet/ratfun.hpp"

#include <numeric>
#include <stdexcept>

namespace priorinet {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    const Rat lead = den_.leading();
    if (lead != 1) {
        const Rat inv = Rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

int RatFun::pole_order_at_one() const {
    if (is_zero()) return 0;
    return den_.root_multiplicity(Rat(1));
}

int RatFun::sign_near_one() const {
    if (is_zero()) return 0;
    const Rat one(1);
    const int a = num_.root_multiplicity(one);
    const int b = den_.root_multiplicity(one);
    // f = (x-1)^(a-b) * N/D with N(1), D(1) nonzero; (x-1)^k has sign (-1)^k
    // just below 1.
    const Rat nval = num_.deflate(one, a).eval(one);
    const Rat dval = den_.deflate(one, b).eval(one);
    int s = sgn(nval) * sgn(dval);
    if (((a - b) % 2 + 2) % 2 == 1) s = -s;
    return s;
}

Rat RatFun::eval(const Rat& x) const {
    const Rat d = den_.eval(x);
    if (sgn(d) == 0) throw std::domain_error("RatFun::eval: pole at evaluation point");
    return num_.eval(x) / d;
}

LaurentSeries RatFun::series_at_one(int lo, int hi) const {
    LaurentSeries out;
    out.lo = lo;
    out.c.assign(static_cast<std::size_t>(hi - lo + 1), Rat(0));
    if (is_zero()) return out;

    // In t = 1 - x: num(1-t) = t^a * N(t), den(1-t) = t^b * D(t), D(0) != 0.
    Poly nt = num_.compose_one_minus_x();
    Poly dt = den_.compose_one_minus_x();
    int a = 0, b = 0;
    while (sgn(nt.coeff(a)) == 0) ++a;
    while (sgn(dt.coeff(b)) == 0) ++b;
    const int off = a - b;
    if (off < lo)
        throw std::domain_error("RatFun::series_at_one: pole order exceeds requested range");

    const int terms = hi - off + 1;
    if (terms <= 0) return out;
    // Power-series inverse of D up to t^(terms-1).
    std::vector<Rat> dc(static_cast<std::size_t>(terms), Rat(0));
    for (int i = 0; i < terms; ++i) dc[static_cast<std::size_t>(i)] = dt.coeff(b + i);
    std::vector<Rat> inv(static_cast<std::size_t>(terms), Rat(0));
    inv[0] = Rat(1) / dc[0];
    for (int k = 1; k < terms; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += dc[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        inv[static_cast<std::size_t>(k)] = -acc / dc[0];
    }
    for (int k = 0; k < terms; ++k) {
        Rat acc(0);
        for (int j = 0; j <= k; ++j) acc += nt.coeff(a + j) * inv[static_cast<std::size_t>(k - j)];
        const int idx = off + k - lo;
        if (idx >= 0 && idx < static_cast<int>(out.c.size())) out.c[static_cast<std::size_t>(idx)] = acc;
    }
    return out;
}

RatFun RatFun::compose_power(int m) const {
    return RatFun(num_.compose_power(m), den_.compose_power(m));
}

std::string RatFun::str(const std::string& var) const {
    if (den_ == Poly(Rat(1))) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

ScaledRF ScaledRF::with_scale(long new_scale) const {
    if (new_scale == scale) return *this;
    if (new_scale % scale != 0)
        throw std::invalid_argument("ScaledRF::with_scale: incompatible scales");
    return ScaledRF{new_scale, f.compose_power(static_cast<int>(new_scale / scale))};
}

std::pair<ScaledRF, ScaledRF> align_scales(const ScaledRF& a, const ScaledRF& b) {
    const long l = std::lcm(a.scale, b.scale);
    return {a.with_scale(l), b.with_scale(l)};
}

std::vector<Rat> germ_coefficients(const ScaledRF& v, int K) {
    if (K < 0) throw std::invalid_argument("germ_coefficients: K must be >= 0");
    if (v.f.pole_order_at_one() > 1)
        throw std::domain_error("germ_coefficients: pole order at 1 exceeds one");
    const int L = static_cast<int>(v.scale);
    // one_minus_alpha = 1 - beta^L as a function of beta
    Poly oma = Poly(Rat(1)) - Poly::monomial(Rat(1), L);
    const RatFun s(oma);

    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(K) + 2);

    // c_{-1}: leading Laurent coefficient with respect to (1 - alpha).
    LaurentSeries lead = v.f.series_at_one(-1, -1);
    Rat cm1 = lead.coeff(-1) * Rat(L);
    out.push_back(cm1);

    RatFun rest = v.f - RatFun(Poly(cm1)) / s;
    for (int k = 0; k <= K; ++k) {
        const Rat ck = rest.eval(Rat(1));
        out.push_back(ck);
        if (k < K) rest = (rest - RatFun(Poly(ck))) / s;
    }
    return out;
}

}  // namespace priorinet
