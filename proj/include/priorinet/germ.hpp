#pragma once

#include <optional>
#include <vector>

#include "priorinet/ratfun.hpp"

namespace priorinet {

struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

enum class GermOrder { Less, Equal, Greater };

// One component of a value germ at alpha = 1^-: truncated expansion
//   c(0)/(1-alpha) + c(1) + c(2)(1-alpha) + ...
// plus, when available, the exact rational-function representative which is
// authoritative for ordering.
struct GermScalar {
    std::vector<Rat> coeffs;          // coeffs[k] multiplies (1-alpha)^(k-1)
    std::optional<ScaledRF> exact;

    Rat pole() const { return coeffs.empty() ? Rat(0) : coeffs[0]; }
    Rat constant() const { return coeffs.size() < 2 ? Rat(0) : coeffs[1]; }

    static GermScalar from_exact(const ScaledRF& rep, int K = 3);
};

// A value vector in the germ field.
using LaurentGerm = std::vector<GermScalar>;

// Total order of the germ field: sign of f - g near 1^-, decided on the exact
// representatives. Throws contract_error when either side lacks one
// (truncations alone cannot certify equality).
GermOrder germ_compare(const GermScalar& f, const GermScalar& g);

// Order on raw representatives.
GermOrder germ_compare(const ScaledRF& f, const ScaledRF& g);

}  // namespace priorinet
