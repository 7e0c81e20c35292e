#include "priorinet/sturm.hpp"

#include <stdexcept>

namespace priorinet {

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    Poly p0 = p.squarefree_part();
    if (p0.degree() <= 0) {
        chain.push_back(p0);
        return chain;
    }
    chain.push_back(p0);
    chain.push_back(p0.derivative());
    while (chain.back().degree() > 0) {
        Poly rem = chain[chain.size() - 2].divrem(chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

int sturm_variations(const std::vector<Poly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const Poly& q : chain) {
        const int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Roots in (a, b] of the squarefree part: V(a) - V(b).
static int count_open_closed(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

int count_roots_halfopen(const Poly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::invalid_argument("count_roots_halfopen: zero polynomial");
    if (!(a < b)) return 0;
    const Poly sf = p.squarefree_part();
    if (sf.degree() <= 0) return 0;
    const std::vector<Poly> chain = sturm_chain(p);
    int count = count_open_closed(chain, a, b);
    if (sgn(sf.eval(b)) == 0) --count;  // b excluded
    if (sgn(sf.eval(a)) == 0) ++count;  // a included
    return count;
}

std::optional<std::pair<Rat, Rat>> isolate_root(const Poly& p, const Rat& a, const Rat& b) {
    if (count_roots_halfopen(p, a, b) == 0) return std::nullopt;
    const Poly sf = p.squarefree_part();
    if (sgn(sf.eval(a)) == 0) return std::make_pair(a, a);
    Rat lo = a, hi = b;
    const Rat width_limit = rat_pow(Rat(2), -40);
    // Narrow by bisection, keeping at least one root in [lo, hi).
    while (hi - lo > width_limit || count_roots_halfopen(p, lo, hi) > 1) {
        const Rat mid = (lo + hi) / 2;
        if (sgn(sf.eval(mid)) == 0) return std::make_pair(mid, mid);
        if (count_roots_halfopen(p, lo, mid) > 0)
            hi = mid;
        else
            lo = mid;
    }
    return std::make_pair(lo, hi);
}

}  // namespace priorinet
