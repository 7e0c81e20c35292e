#include "priorinet/germ.hpp"

namespace priorinet {

GermScalar GermScalar::from_exact(const ScaledRF& rep, int K) {
    GermScalar g;
    g.coeffs = germ_coefficients(rep, K);
    g.exact = rep;
    return g;
}

GermOrder germ_compare(const ScaledRF& f, const ScaledRF& g) {
    auto [a, b] = align_scales(f, g);
    const RatFun diff = a.f - b.f;
    if (diff.is_zero()) return GermOrder::Equal;
    return diff.sign_near_one() > 0 ? GermOrder::Greater : GermOrder::Less;
}

GermOrder germ_compare(const GermScalar& f, const GermScalar& g) {
    if (!f.exact || !g.exact)
        throw contract_error("germ_compare: exact representative required");
    return germ_compare(*f.exact, *g.exact);
}

}  // namespace priorinet
