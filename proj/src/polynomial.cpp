#include "priorinet/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace priorinet {

namespace {
const Rat kZero(0);
}

Poly::Poly(Rat constant) {
    if (sgn(constant) != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::monomial(const Rat& coeff, int deg) {
    Poly p;
    if (sgn(coeff) != 0) {
        p.c_.assign(static_cast<std::size_t>(deg) + 1, Rat(0));
        p.c_.back() = coeff;
    }
    return p;
}

Poly Poly::x() { return monomial(Rat(1), 1); }

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rat& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const Rat& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rat& v : r.c_) v = -v;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

Poly Poly::operator*(const Rat& s) const {
    if (sgn(s) == 0) return Poly();
    Poly r = *this;
    for (Rat& v : r.c_) v *= s;
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly::divrem: division by zero polynomial");
    Poly q, r = *this;
    const int dd = d.degree();
    const Rat& lead = d.leading();
    while (r.degree() >= dd) {
        const int k = r.degree() - dd;
        const Rat f = r.leading() / lead;
        Poly t = Poly::monomial(f, k);
        q = q + t;
        r = r - t * d;
    }
    return {q, r};
}

Poly Poly::div_exact(const Poly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw std::logic_error("Poly::div_exact: remainder is nonzero");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly Poly::squarefree_part() const {
    if (degree() <= 0) return is_zero() ? Poly() : Poly(Rat(1));
    Poly g = gcd(*this, derivative());
    if (g.degree() <= 0) return monic();
    return div_exact(g).monic();
}

int Poly::root_multiplicity(const Rat& r) const {
    if (is_zero()) return 0;
    int m = 0;
    Poly p = *this;
    const Poly lin{-r, Rat(1)};
    while (sgn(p.eval(r)) == 0) {
        p = p.div_exact(lin);
        ++m;
    }
    return m;
}

Poly Poly::deflate(const Rat& r, int m) const {
    Poly p = *this;
    const Poly lin{-r, Rat(1)};
    for (int i = 0; i < m; ++i) p = p.div_exact(lin);
    return p;
}

Poly Poly::compose_power(int m) const {
    if (m < 1) throw std::invalid_argument("Poly::compose_power: m must be >= 1");
    if (m == 1 || is_zero()) return *this;
    Poly r;
    r.c_.assign((c_.size() - 1) * static_cast<std::size_t>(m) + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * m] = c_[i];
    r.trim();
    return r;
}

Poly Poly::compose_one_minus_x() const {
    // Horner in (1 - x).
    const Poly omx{Rat(1), Rat(-1)};
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * omx + Poly(*it);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * (Rat(1) / leading());
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = coeff(i);
        if (sgn(a) == 0) continue;
        if (!first) os << (sgn(a) > 0 ? " + " : " - ");
        else if (sgn(a) < 0)
            os << "-";
        first = false;
        Rat mag = abs(a);
        if (mag != 1 || i == 0) os << rat_str(mag);
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace priorinet
