#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "priorinet/matrix.hpp"
#include "priorinet/ratfun.hpp"

namespace priorinet {

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// One affine branch of a coordinate: offset + delayed linear terms. A delay
// absent from `rows` contributes the zero matrix row.
struct Action {
    std::string id;
    Rat offset;
    std::map<Rat, std::vector<Rat>> rows;  // delay -> coefficient row (length n)
};

// The compiled piecewise linear time-delay system
//   x_i(t) = min_{a in A_i} ( r_i^a + sum_tau row_tau^a . x(t - tau) ).
struct Plds {
    int n = 0;
    std::vector<std::string> names;           // coordinate -> counter name
    std::vector<std::vector<Action>> actions; // per coordinate, at least one
    std::set<Rat> delays;                     // the system-wide delay set T

    // Rescaling factor L: the least integer such that L*tau is integral for
    // every delay tau in T.
    long scale() const;
    Rat max_delay() const;
    void validate() const;  // throws validation_error
    std::size_t policy_count() const;
};

struct Policy {
    std::vector<int> choice;  // coordinate -> action index

    bool operator==(const Policy& o) const { return choice == o.choice; }
    bool operator<(const Policy& o) const { return choice < o.choice; }
};

// All policies in lexicographic order of (coordinate, action index).
std::vector<Policy> enumerate_policies(const Plds& sys);
// Render like (1,2,1) using 1-based action indices.
std::string policy_str(const Policy& p);

// The data of one policy: offset vector r^sigma and the family {P^sigma_tau}.
struct PolicyRestriction {
    std::vector<Rat> offsets;
    std::map<Rat, Mat> family;  // delay -> n x n coefficient matrix
    int n = 0;
};

PolicyRestriction policy_restrict(const Plds& sys, const Policy& sigma);

// P^sigma(alpha) = sum_tau P^sigma_tau alpha^tau, rescaled to integer
// exponents of beta = alpha^(1/L).
struct MatPoly {
    long scale = 1;               // L
    int n = 0;
    std::map<long, Mat> terms;    // exponent of beta -> matrix

    Mat eval(const Rat& beta) const;
    Mat at_one() const;                    // P(1)
    Mat at_zero() const;                   // P(0): the exponent-0 term
    std::vector<std::vector<Poly>> as_poly_matrix() const;  // entries in beta
};

// `delays` must contain every delay used by the restriction; it fixes the
// system-wide rescaling so all policies share one beta.
MatPoly matrix_polynomial(const PolicyRestriction& pr, const std::set<Rat>& delays);

// S^sigma = sum_tau (tau - 1) P^sigma_tau.
Mat slope_matrix(const PolicyRestriction& pr);

// Exact evaluation of T_alpha(v). alpha^(1/L) must be rational; otherwise a
// domain_error is thrown (choose alpha = b^L to stay exact).
std::vector<Rat> eval_T_alpha(const Plds& sys, const std::vector<Rat>& v, const Rat& alpha);

// As above but at a given beta = alpha^(1/L).
std::vector<Rat> eval_T_beta(const Plds& sys, const std::vector<Rat>& v, const Rat& beta);

// Row value r_i^a + [P^a(beta)]_i v for a single action.
Rat eval_action_beta(const Plds& sys, int coord, const Action& a, const std::vector<Rat>& v,
                     const Rat& beta);

}  // namespace priorinet
