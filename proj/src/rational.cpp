#include "priorinet/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace priorinet {

namespace {

bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rat parse_decimal(const std::string& s) {
    // [sign] digits [. digits] [e|E [sign] digits]
    std::string mant = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        const std::string tail = s.substr(e + 1);
        if (!is_plain_integer(tail)) throw parse_error("bad exponent in rational: " + s);
        exp10 = std::strtol(tail.c_str(), nullptr, 10);
        mant = s.substr(0, e);
    }
    std::string digits = mant;
    if (auto dot = mant.find('.'); dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits == "+" || digits == "-") digits += "0";
    if (!is_plain_integer(digits)) throw parse_error("bad rational literal: " + s);
    Rat r(Int(digits));
    if (exp10 > 0)
        r *= rat_pow(Rat(10), exp10);
    else if (exp10 < 0)
        r /= rat_pow(Rat(10), -exp10);
    r.canonicalize();
    return r;
}

}  // namespace

Rat rat_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("empty rational literal");
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!is_plain_integer(num) || !is_plain_integer(den))
            throw parse_error("bad rational literal: " + text);
        Int d(den);
        if (d == 0) throw parse_error("zero denominator: " + text);
        Rat r(Int(num), d);
        r.canonicalize();
        return r;
    }
    if (s.find('.') != std::string::npos || s.find_first_of("eE") != std::string::npos)
        return parse_decimal(s);
    if (!is_plain_integer(s)) throw parse_error("bad rational literal: " + text);
    return Rat(Int(s));
}

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string rat_decimal(const Rat& x, int digits) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rat scaled = x * Rat(scale);
    // round half away from zero
    Int twice_num = 2 * scaled.get_num();
    Int rounded;
    if (sgn(scaled) >= 0)
        mpz_fdiv_q(rounded.get_mpz_t(), Int(twice_num + scaled.get_den()).get_mpz_t(),
                   Int(2 * scaled.get_den()).get_mpz_t());
    else
        mpz_cdiv_q(rounded.get_mpz_t(), Int(twice_num - scaled.get_den()).get_mpz_t(),
                   Int(2 * scaled.get_den()).get_mpz_t());
    bool neg = rounded < 0;
    Int mag = neg ? Int(-rounded) : rounded;
    std::string raw = mag.get_str();
    if (static_cast<int>(raw.size()) <= digits) raw.insert(0, digits + 1 - raw.size(), '0');
    std::string out = raw.substr(0, raw.size() - digits);
    if (digits > 0) out += "." + raw.substr(raw.size() - digits);
    return (neg && mag != 0) ? "-" + out : out;
}

double rat_double(const Rat& x) { return x.get_d(); }

Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int denominator_lcm(const std::vector<Rat>& xs) {
    Int l = 1;
    for (const Rat& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return l;
}

std::optional<Rat> rat_root(const Rat& x, unsigned long k) {
    if (k == 0) throw std::invalid_argument("rat_root: k must be >= 1");
    if (sgn(x) < 0) return std::nullopt;
    Int rn, rd;
    if (!mpz_root(rn.get_mpz_t(), x.get_num().get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), x.get_den().get_mpz_t(), k)) return std::nullopt;
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    const bool inv = e < 0;
    unsigned long k = static_cast<unsigned long>(inv ? -e : e);
    if (inv && sgn(x) == 0) throw std::domain_error("rat_pow: zero to negative power");
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), x.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), x.get_den().get_mpz_t(), k);
    Rat r = inv ? Rat(d, n) : Rat(n, d);
    r.canonicalize();
    return r;
}

}  // namespace priorinet
