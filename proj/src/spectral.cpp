#include "priorinet/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <atomic>
#include <thread>

namespace priorinet {

Poly det_polynomial(const MatPoly& p) {
    auto entries = p.as_poly_matrix();
    const int n = p.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly& e = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            e = -e;
            if (i == j) e = e + Poly(Rat(1));
        }
    return det_bareiss(std::move(entries));
}

A1Result check_A1(const MatPoly& p) {
    A1Result res;
    const Poly d = det_polynomial(p);
    if (d.is_zero()) {
        res.identically_singular = true;
        return res;
    }
    // Roots of d in beta over [0, 1) are exactly the alpha in [0, 1) where 1
    // is an eigenvalue of P(alpha).
    const int roots = count_roots_halfopen(d, Rat(0), Rat(1));
    if (roots == 0) {
        res.pass = true;
        return res;
    }
    res.witness = isolate_root(d, Rat(0), Rat(1));
    return res;
}

static bool is_nilpotent(const Mat& m) {
    const int n = m.rows();
    Mat acc = m;
    for (int k = 1; k < n; ++k) {
        if (acc.is_zero()) return true;
        acc = acc * m;
    }
    return acc.is_zero();
}

A2Result check_A2(const Mat& p0, double tol_margin) {
    A2Result res;
    if (is_nilpotent(p0)) {
        res.nilpotent = true;
        res.status = CheckStatus::Pass;
        return res;
    }
    const int n = p0.rows();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rat_double(p0.at(i, j));
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    res.status = CheckStatus::Pass;
    for (int k = 0; k < n; ++k) {
        const std::complex<double> ev = solver.eigenvalues()(k);
        const double imag_tol = 1e-9 * (1.0 + std::abs(ev));
        if (std::abs(ev.imag()) > imag_tol) continue;  // only [1, +inf) matters
        const double re = ev.real();
        if (re >= 1.0 + tol_margin) {
            res.status = CheckStatus::Fail;
            res.offending_eigenvalue = re;
            return res;
        }
        if (re > 1.0 - tol_margin) {
            res.status = CheckStatus::Indeterminate;
            res.offending_eigenvalue = re;
        }
    }
    return res;
}

B1Result check_B1(const Mat& p1, const std::optional<std::vector<Rat>>& invariant) {
    B1Result res;
    if (invariant) {
        bool nonneg = true;
        for (int i = 0; i < p1.rows() && nonneg; ++i)
            for (int j = 0; j < p1.cols(); ++j)
                if (sgn(p1.at(i, j)) < 0) {
                    nonneg = false;
                    break;
                }
        if (nonneg) {
            res.pass = true;
            res.fast_path = true;
            return res;
        }
    }
    const Mat a = Mat::identity(p1.rows()) - p1;
    res.rank1 = a.rank();
    res.rank2 = (a * a).rank();
    res.pass = res.rank1 == res.rank2;
    return res;
}

SpectralProjector spectral_projector(const Mat& p1) {
    SpectralProjector out;
    const int n = p1.rows();
    const Mat a = Mat::identity(n) - p1;
    const Mat v = a.kernel();               // right eigenvectors for eigenvalue 1
    const Mat w = a.transpose().kernel();   // left eigenvectors
    out.eig1_multiplicity = v.cols();
    if (v.cols() == 0) {
        out.c_minus1 = Mat(n, n);
        return out;
    }
    const Mat wt_v = w.transpose() * v;
    const auto inv = wt_v.inverse();
    if (!inv)
        throw std::logic_error(
            "spectral_projector: W^T V singular; eigenvalue 1 is not semisimple");
    out.c_minus1 = v * (*inv) * w.transpose();
    return out;
}

B2Result check_B2(const Mat& c_minus1, const Mat& slope) {
    B2Result res;
    res.det = (Mat::identity(c_minus1.rows()) + c_minus1 * slope).det();
    res.pass = sgn(res.det) != 0;
    return res;
}

namespace {

Rat default_box(const Plds& sys) {
    Rat max_r(0);
    for (const auto& as : sys.actions)
        for (const Action& a : as) {
            Rat v = abs(a.offset);
            if (v > max_r) max_r = v;
        }
    return Rat(1000) * (1 + max_r);
}

// Flattened coefficient vector of an action over z in (R^n)^T.
std::vector<Rat> action_coefficients(const Plds& sys, const Action& a,
                                     const std::vector<Rat>& delay_list) {
    const int n = sys.n;
    std::vector<Rat> coef(delay_list.size() * static_cast<std::size_t>(n), Rat(0));
    for (const auto& [d, row] : a.rows) {
        std::size_t k = 0;
        while (delay_list[k] != d) ++k;
        for (int j = 0; j < n; ++j) coef[k * static_cast<std::size_t>(n) + j] = row[static_cast<std::size_t>(j)];
    }
    return coef;
}

}  // namespace

bool policy_is_active(const Plds& sys, const Policy& sigma, const ActivityOptions& opt) {
    const std::vector<Rat> delay_list(sys.delays.begin(), sys.delays.end());
    const int n = sys.n;
    const int nz = static_cast<int>(delay_list.size()) * n;
    const Rat box = opt.box ? *opt.box : default_box(sys);

    LpProblem lp;
    lp.nvars = nz + 1;  // z entries then delta
    lp.maximize.assign(static_cast<std::size_t>(lp.nvars), Rat(0));
    lp.maximize.back() = Rat(1);
    lp.lower.assign(static_cast<std::size_t>(lp.nvars), std::nullopt);
    lp.upper.assign(static_cast<std::size_t>(lp.nvars), std::nullopt);
    for (int k = 0; k < nz; ++k) {
        lp.lower[static_cast<std::size_t>(k)] = -box;
        lp.upper[static_cast<std::size_t>(k)] = box;
    }

    bool any_constraint = false;
    for (int i = 0; i < n; ++i) {
        const auto& as = sys.actions[static_cast<std::size_t>(i)];
        const Action& chosen = as[static_cast<std::size_t>(sigma.choice[static_cast<std::size_t>(i)])];
        const std::vector<Rat> chosen_coef = action_coefficients(sys, chosen, delay_list);
        for (std::size_t ai = 0; ai < as.size(); ++ai) {
            if (static_cast<int>(ai) == sigma.choice[static_cast<std::size_t>(i)]) continue;
            const Action& other = as[ai];
            std::vector<Rat> diff = action_coefficients(sys, other, delay_list);
            bool identical_row = other.offset == chosen.offset;
            for (int k = 0; k < nz; ++k) {
                diff[static_cast<std::size_t>(k)] =
                    chosen_coef[static_cast<std::size_t>(k)] - diff[static_cast<std::size_t>(k)];
                if (sgn(diff[static_cast<std::size_t>(k)]) != 0) identical_row = false;
            }
            // A duplicate of the chosen row minimizes wherever it does; it
            // does not cut the agreement region.
            if (identical_row) continue;
            LpRow row;
            row.a = std::move(diff);
            row.a.push_back(Rat(1));  // + delta
            row.rel = LpRel::Le;
            row.b = other.offset - chosen.offset;
            lp.rows.push_back(std::move(row));
            any_constraint = true;
        }
    }
    if (!any_constraint) return true;
    const LpResult res = lp_solve(lp);
    if (res.status == LpStatus::Unbounded) return true;
    return res.status == LpStatus::Optimal && sgn(res.objective) > 0;
}

std::vector<Policy> active_policies(const Plds& sys, const ActivityOptions& opt) {
    std::vector<Policy> out;
    for (const Policy& p : enumerate_policies(sys))
        if (policy_is_active(sys, p, opt)) out.push_back(p);
    return out;
}

CheckStatus PolicyRecord::status() const {
    if (a1.pass && a2.status == CheckStatus::Pass && b1.pass && b2.pass) return CheckStatus::Pass;
    if (a2.status == CheckStatus::Indeterminate && a1.pass && b1.pass && b2.pass)
        return CheckStatus::Indeterminate;
    return CheckStatus::Fail;
}

AssumptionReport assumptions_report(const Plds& sys, const ReportOptions& opt) {
    AssumptionReport report;
    report.scope = opt.scope;

    if (sys.policy_count() > opt.policy_limit && !opt.force)
        throw validation_error("assumptions_report: policy space exceeds limit (" +
                               std::to_string(opt.policy_limit) + "); pass force to override");

    std::vector<Policy> policies;
    if (opt.scope == PolicyScope::Active) {
        policies = active_policies(sys, opt.activity);
        report.activity_box = opt.activity.box ? *opt.activity.box : default_box(sys);
    } else {
        policies = enumerate_policies(sys);
    }
    report.policies_examined = policies.size();
    report.records.resize(policies.size());

    const auto invariant = stoichiometric_invariant_hint(sys);

    const int nthreads = std::max(1, opt.threads);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t k = next.fetch_add(1);
            if (k >= policies.size()) break;
            PolicyRecord rec;
            rec.sigma = policies[k];
            const PolicyRestriction pr = policy_restrict(sys, rec.sigma);
            const MatPoly mp = matrix_polynomial(pr, sys.delays);
            rec.a1 = check_A1(mp);
            rec.a2 = check_A2(mp.at_zero());
            const Mat p1 = mp.at_one();
            rec.b1 = check_B1(p1, invariant);
            if (rec.b1.pass) {
                const SpectralProjector proj = spectral_projector(p1);
                rec.b2 = check_B2(proj.c_minus1, slope_matrix(pr));
            }
            rec.b2_det = rec.b2.det;
            report.records[k] = std::move(rec);
        }
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    report.verdict = CheckStatus::Pass;
    for (const PolicyRecord& rec : report.records) {
        const CheckStatus s = rec.status();
        if (s == CheckStatus::Fail) {
            report.verdict = CheckStatus::Fail;
            break;
        }
        if (s == CheckStatus::Indeterminate) report.verdict = CheckStatus::Indeterminate;
    }
    return report;
}

}  // namespace priorinet
