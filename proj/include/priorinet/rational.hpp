#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace priorinet {

// Exact rational scalar. All core arithmetic in the library is carried out
// on this type; doubles appear only in the numeric eigenvalue fallback and
// in exported decimal renderings.
using Rat = mpq_class;
using Int = mpz_class;

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p/q", "p", or a plain decimal like "0.75" / "-1.5e2" into an exact
// rational. Throws parse_error on malformed input or zero denominator.
Rat rat_parse(const std::string& text);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& x);

// Fixed-point decimal rendering with the given number of fractional digits,
// rounded to nearest (ties away from zero).
std::string rat_decimal(const Rat& x, int digits);

double rat_double(const Rat& x);

Int rat_floor(const Rat& x);
Int rat_ceil(const Rat& x);

// lcm of the denominators of a list of rationals (>= 1).
Int denominator_lcm(const std::vector<Rat>& xs);

// Exact k-th root: returns r with r^k == x if one exists (k >= 1, x >= 0).
std::optional<Rat> rat_root(const Rat& x, unsigned long k);

// x^e for integer e (e < 0 requires x != 0).
Rat rat_pow(const Rat& x, long e);

inline int rat_sign(const Rat& x) { return sgn(x); }

}  // namespace priorinet
