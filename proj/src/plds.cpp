#include "priorinet/plds.hpp"

#include <sstream>

namespace priorinet {

long Plds::scale() const {
    std::vector<Rat> ds(delays.begin(), delays.end());
    Int l = denominator_lcm(ds);
    if (!l.fits_slong_p()) throw validation_error("delay denominators too large");
    return l.get_si();
}

Rat Plds::max_delay() const {
    Rat m(0);
    for (const Rat& d : delays)
        if (d > m) m = d;
    return m;
}

void Plds::validate() const {
    if (n <= 0) throw validation_error("plds: empty system");
    if (static_cast<int>(actions.size()) != n || static_cast<int>(names.size()) != n)
        throw validation_error("plds: size mismatch");
    for (int i = 0; i < n; ++i) {
        if (actions[static_cast<std::size_t>(i)].empty())
            throw validation_error("plds: coordinate " + names[static_cast<std::size_t>(i)] +
                                   " has no action");
        for (const Action& a : actions[static_cast<std::size_t>(i)])
            for (const auto& [d, row] : a.rows) {
                if (sgn(d) < 0) throw validation_error("plds: negative delay");
                if (!delays.count(d))
                    throw validation_error("plds: delay " + rat_str(d) + " missing from delay set");
                if (static_cast<int>(row.size()) != n)
                    throw validation_error("plds: row length mismatch");
            }
    }
}

std::size_t Plds::policy_count() const {
    std::size_t count = 1;
    for (const auto& as : actions) {
        if (count > (static_cast<std::size_t>(1) << 62) / as.size()) return SIZE_MAX;
        count *= as.size();
    }
    return count;
}

std::vector<Policy> enumerate_policies(const Plds& sys) {
    std::vector<Policy> out;
    Policy cur;
    cur.choice.assign(static_cast<std::size_t>(sys.n), 0);
    while (true) {
        out.push_back(cur);
        int i = sys.n - 1;
        for (; i >= 0; --i) {
            if (cur.choice[static_cast<std::size_t>(i)] + 1 <
                static_cast<int>(sys.actions[static_cast<std::size_t>(i)].size())) {
                ++cur.choice[static_cast<std::size_t>(i)];
                break;
            }
            cur.choice[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

std::string policy_str(const Policy& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.choice.size(); ++i) {
        if (i) os << ",";
        os << p.choice[i] + 1;
    }
    os << ")";
    return os.str();
}

PolicyRestriction policy_restrict(const Plds& sys, const Policy& sigma) {
    if (static_cast<int>(sigma.choice.size()) != sys.n)
        throw validation_error("policy_restrict: policy length mismatch");
    PolicyRestriction pr;
    pr.n = sys.n;
    pr.offsets.assign(static_cast<std::size_t>(sys.n), Rat(0));
    for (int i = 0; i < sys.n; ++i) {
        const int a = sigma.choice[static_cast<std::size_t>(i)];
        if (a < 0 || a >= static_cast<int>(sys.actions[static_cast<std::size_t>(i)].size()))
            throw validation_error("policy_restrict: unknown action index for coordinate " +
                                   sys.names[static_cast<std::size_t>(i)]);
        const Action& act = sys.actions[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
        pr.offsets[static_cast<std::size_t>(i)] = act.offset;
        for (const auto& [d, row] : act.rows) {
            auto [it, inserted] = pr.family.try_emplace(d, sys.n, sys.n);
            for (int j = 0; j < sys.n; ++j) it->second.at(i, j) = row[static_cast<std::size_t>(j)];
        }
    }
    return pr;
}

MatPoly matrix_polynomial(const PolicyRestriction& pr, const std::set<Rat>& delays) {
    std::vector<Rat> ds(delays.begin(), delays.end());
    for (const auto& [d, m] : pr.family) ds.push_back(d);
    const Int l = denominator_lcm(ds);
    if (!l.fits_slong_p()) throw validation_error("matrix_polynomial: scale overflow");

    MatPoly mp;
    mp.scale = l.get_si();
    mp.n = pr.n;
    for (const auto& [d, m] : pr.family) {
        Rat e = d * Rat(l);
        if (e.get_den() != 1) throw std::logic_error("matrix_polynomial: non-integral exponent");
        if (m.is_zero()) continue;
        mp.terms.emplace(e.get_num().get_si(), m);
    }
    return mp;
}

Mat MatPoly::eval(const Rat& beta) const {
    Mat out(n, n);
    for (const auto& [e, m] : terms) out = out + m * rat_pow(beta, e);
    return out;
}

Mat MatPoly::at_one() const {
    Mat out(n, n);
    for (const auto& [e, m] : terms) out = out + m;
    return out;
}

Mat MatPoly::at_zero() const {
    auto it = terms.find(0);
    return it == terms.end() ? Mat(n, n) : it->second;
}

std::vector<std::vector<Poly>> MatPoly::as_poly_matrix() const {
    std::vector<std::vector<Poly>> out(static_cast<std::size_t>(n),
                                       std::vector<Poly>(static_cast<std::size_t>(n)));
    for (const auto& [e, m] : terms)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Rat& v = m.at(i, j);
                if (sgn(v) != 0)
                    out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                        Poly::monomial(v, static_cast<int>(e));
            }
    return out;
}

Mat slope_matrix(const PolicyRestriction& pr) {
    Mat s(pr.n, pr.n);
    for (const auto& [d, m] : pr.family) s = s + m * (d - 1);
    return s;
}

Rat eval_action_beta(const Plds& sys, int /*coord*/, const Action& a, const std::vector<Rat>& v,
                     const Rat& beta) {
    const long L = sys.scale();
    Rat acc = a.offset;
    for (const auto& [d, row] : a.rows) {
        Rat e = d * Rat(L);
        const Rat w = rat_pow(beta, e.get_num().get_si());
        Rat dot(0);
        for (int j = 0; j < sys.n; ++j)
            if (sgn(row[static_cast<std::size_t>(j)]) != 0)
                dot += row[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
        acc += w * dot;
    }
    return acc;
}

std::vector<Rat> eval_T_beta(const Plds& sys, const std::vector<Rat>& v, const Rat& beta) {
    if (static_cast<int>(v.size()) != sys.n)
        throw std::invalid_argument("eval_T_beta: dimension mismatch");
    std::vector<Rat> out(static_cast<std::size_t>(sys.n));
    for (int i = 0; i < sys.n; ++i) {
        bool first = true;
        for (const Action& a : sys.actions[static_cast<std::size_t>(i)]) {
            Rat val = eval_action_beta(sys, i, a, v, beta);
            if (first || val < out[static_cast<std::size_t>(i)]) out[static_cast<std::size_t>(i)] = val;
            first = false;
        }
    }
    return out;
}

std::vector<Rat> eval_T_alpha(const Plds& sys, const std::vector<Rat>& v, const Rat& alpha) {
    const long L = sys.scale();
    auto beta = rat_root(alpha, static_cast<unsigned long>(L));
    if (!beta)
        throw std::domain_error("eval_T_alpha: alpha has no rational " + std::to_string(L) +
                                "-th root; pick alpha = b^" + std::to_string(L));
    return eval_T_beta(sys, v, *beta);
}

}  // namespace priorinet
