#pragma once

#include <optional>
#include <string>
#include <vector>

#include "priorinet/plds.hpp"
#include "priorinet/sturm.hpp"

namespace priorinet {

enum class CheckStatus { Pass, Fail, Indeterminate };

// det(I - P^sigma(alpha)) as an exact polynomial in beta = alpha^(1/L).
Poly det_polynomial(const MatPoly& p);

// Assumption A(i): no alpha in [0,1) with det(I - P(alpha)) = 0.
struct A1Result {
    bool pass = false;
    bool identically_singular = false;
    std::optional<std::pair<Rat, Rat>> witness;  // isolating interval in beta
};
A1Result check_A1(const MatPoly& p);

// Assumption A(ii): P(0) has no (real) eigenvalue in [1, +inf). Nilpotency of
// P(0) is decided exactly; otherwise real eigenvalues are located numerically
// with margin tol_margin around 1 reported as Indeterminate.
struct A2Result {
    CheckStatus status = CheckStatus::Fail;
    bool nilpotent = false;
    double offending_eigenvalue = 0.0;
};
A2Result check_A2(const Mat& p0, double tol_margin = 1e-9);

// Assumption B(i): 1 is absent from the spectrum of P(1) or semisimple.
struct B1Result {
    bool pass = false;
    bool fast_path = false;  // nonnegative matrix + stoichiometric invariant
    int rank1 = 0, rank2 = 0;
};
B1Result check_B1(const Mat& p1, const std::optional<std::vector<Rat>>& invariant = std::nullopt);

// Spectral projector C_{-1}: residue of (I - alpha P(1))^{-1} at alpha = 1,
// i.e. the projector onto ker(I - P(1)) along im(I - P(1)). Exact.
struct SpectralProjector {
    Mat c_minus1;
    int eig1_multiplicity = 0;
};
SpectralProjector spectral_projector(const Mat& p1);

// Assumption B(ii): det(I + C_{-1} S) != 0.
struct B2Result {
    bool pass = false;
    Rat det;
};
B2Result check_B2(const Mat& c_minus1, const Mat& slope);

// Active policies via the interior LP with box bound M (see report for the
// bound actually used). Identical competing rows impose no constraint.
struct ActivityOptions {
    std::optional<Rat> box;  // default: 1000 * (1 + max |r|)
};
bool policy_is_active(const Plds& sys, const Policy& sigma, const ActivityOptions& opt = {});
std::vector<Policy> active_policies(const Plds& sys, const ActivityOptions& opt = {});

enum class PolicyScope { All, Active };

struct PolicyRecord {
    Policy sigma;
    A1Result a1;
    A2Result a2;
    B1Result b1;
    B2Result b2;

    CheckStatus status() const;
};

struct AssumptionReport {
    std::vector<PolicyRecord> records;
    CheckStatus verdict = CheckStatus::Fail;
    PolicyScope scope = PolicyScope::All;
    Rat activity_box;          // the M actually used (0 when scope == All)
    std::size_t policies_examined = 0;
};

struct ReportOptions {
    PolicyScope scope = PolicyScope::All;
    int threads = 1;
    std::size_t policy_limit = 1000000;  // refuse larger spaces unless forced
    bool force = false;
    ActivityOptions activity;
};

AssumptionReport assumptions_report(const Plds& sys, const ReportOptions& opt = {});

}  // namespace priorinet
