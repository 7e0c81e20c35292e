#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "priorinet/polynomial.hpp"

namespace priorinet {

// Sturm chain of the squarefree part of p.
std::vector<Poly> sturm_chain(const Poly& p);

// Sign variations of the chain evaluated at x.
int sturm_variations(const std::vector<Poly>& chain, const Rat& x);

// Number of distinct real roots of p in the half-open interval [a, b).
// p must be nonzero.
int count_roots_halfopen(const Poly& p, const Rat& a, const Rat& b);

// An isolating interval [lo, hi] around some root of p in [a, b), when one
// exists; the interval contains exactly one root and has width <= 2^-40.
std::optional<std::pair<Rat, Rat>> isolate_root(const Poly& p, const Rat& a, const Rat& b);

}  // namespace priorinet
