#pragma once

// Identity suites run over one (q, beta) cell: every check reduces to an
// IdentityReport with a scalar residual. Random inputs come from a fixed
// seed per check, so repeated runs produce identical reports.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "qsb/measure.hpp"
#include "qsb/operators.hpp"
#include "qsb/orthopoly.hpp"
#include "qsb/qcore.hpp"
#include "qsb/sbt.hpp"

namespace qsb {

enum class Suite { All, Ortho, Unitary, Operators, Hermite, QCore };

struct VerifyOptions {
    int degree = 12;
    double tail_tol = 1e-12;
    double rel_tol = 1e-9;
};

/// Default verification grid: the free case, mid-range deformations and
/// the slow-convergence regime near q -> 1, across small/unit/large
/// scale.
inline std::vector<QParams> default_grid() {
    std::vector<QParams> cells;
    for (double q : {0.0, 0.3, 0.5, 0.7, 0.9, 0.95})
        for (double beta : {0.5, 1.0, 2.0}) cells.push_back({q, beta});
    return cells;
}

namespace detail {

inline constexpr unsigned long long kSuiteSeed = 0x9e3779b97f4a7c15ULL;

inline std::complex<double> random_unit_box(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const double re = dist(rng);
    const double im = dist(rng);
    return {re, im};
}

inline std::vector<std::complex<double>> random_coeffs(std::mt19937_64& rng, int degree) {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = random_unit_box(rng);
    return c;
}

inline double rel_dev(double value, double reference) {
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

// --- qcore checks ---------------------------------------------------

inline IdentityReport check_gamma_factorial(const QParams& p, const VerifyOptions& opt) {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
        worst = std::max(worst, rel_dev(q_gamma_factorial(n, p.q, {opt.rel_tol, opt.tail_tol}),
                                        q_factorial(n, p.q)));
    return detail::make_report("qcore.gamma_factorial", p, opt.degree, 20, worst, opt.rel_tol);
}

inline IdentityReport check_bracket_recurrence(const QParams& p, const VerifyOptions& opt) {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
        worst = std::max(worst, std::abs(q_bracket(n + 1, p.q) - p.q * q_bracket(n, p.q) - 1.0));
    return detail::make_report("qcore.bracket_recurrence", p, opt.degree, 20, worst, opt.rel_tol);
}

inline IdentityReport check_pochhammer_split(const QParams& p, const VerifyOptions& opt) {
    const double a = 0.7;
    double worst = 0.0;
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            const double whole = q_pochhammer(a, p.q, m + n);
            const double split =
                q_pochhammer(a, p.q, m) * q_pochhammer(a * std::pow(p.q, m), p.q, n);
            worst = std::max(worst, std::abs(whole - split));
        }
    return detail::make_report("qcore.pochhammer_split", p, opt.degree, 12, worst, opt.rel_tol);
}

// --- orthopoly / measure checks --------------------------------------

inline IdentityReport check_monic_leading(const QParams& p, const VerifyOptions& opt) {
    const int top = std::min(opt.degree + 2, 20);
    double worst = 0.0;
    for (PolyFamily fam : {PolyFamily::Charlier, PolyFamily::Hermite})
        for (int n = 0; n <= top; ++n) {
            const auto poly = poly_monomial(fam, p, n);
            worst = std::max(worst, std::abs(poly.coeffs.back() - 1.0));
        }
    return detail::make_report("ortho.monic_leading", p, opt.degree, top, worst, opt.rel_tol);
}

inline IdentityReport check_recurrence_residual(const QParams& p, const VerifyOptions& opt) {
    std::mt19937_64 rng(kSuiteSeed);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    const int top = std::min(opt.degree, 15);
    double worst = 0.0;
    for (PolyFamily fam : {PolyFamily::Charlier, PolyFamily::Hermite}) {
        const auto jac = jacobi_params(fam, p, top);
        for (int trial = 0; trial < 6; ++trial) {
            const double x = dist(rng);
            const auto vals = poly_eval_all(fam, p, top + 1, x);
            for (int n = 1; n <= top; ++n) {
                const double lhs = (x - jac[static_cast<std::size_t>(n)].alpha) *
                                   vals[static_cast<std::size_t>(n)];
                const double rhs = vals[static_cast<std::size_t>(n) + 1] +
                                   jac[static_cast<std::size_t>(n)].omega *
                                       vals[static_cast<std::size_t>(n) - 1];
                const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
                worst = std::max(worst, std::abs(lhs - rhs) / scale);
            }
        }
    }
    return detail::make_report("ortho.recurrence_residual", p, opt.degree, top, worst, opt.rel_tol);
}

inline IdentityReport check_gram(const QParams& p, const VerifyOptions& opt) {
    const int top = std::min(opt.degree, 12);
    const auto measure = nu_q_atoms(p, opt.tail_tol);
    const auto w = weight_sequence(p, top);
    double worst = 0.0;
    for (int n = 0; n <= top; ++n)
        for (int m = 0; m <= top; ++m) {
            const auto g = monomial_gram(measure, n, m, n + m + 2);
            if (n == m)
                worst = std::max(worst, rel_dev(g.real(), w[static_cast<std::size_t>(n)]));
            else
                worst = std::max(worst, std::abs(g) / w[static_cast<std::size_t>(std::max(n, m))]);
        }
    return detail::make_report("ortho.charlier_gram", p, opt.degree, top, worst, opt.rel_tol);
}

inline IdentityReport check_basis_roundtrip(const QParams& p, const VerifyOptions& opt) {
    std::mt19937_64 rng(kSuiteSeed);
    double worst = 0.0;
    for (PolyFamily fam : {PolyFamily::Charlier, PolyFamily::Hermite}) {
        OrthoCoeffs f{fam, p, random_coeffs(rng, 8)};
        const auto back = monomial_to_basis(basis_to_monomial(f), fam, p);
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
            num = std::max(num, std::abs(back.coeffs[k] - f.coeffs[k]));
            den = std::max(den, std::abs(f.coeffs[k]));
        }
        worst = std::max(worst, num / den);
    }
    return detail::make_report("ortho.basis_roundtrip", p, opt.degree, 8, worst, opt.rel_tol);
}

inline IdentityReport check_normalization(const QParams& p, const VerifyOptions& opt) {
    const auto measure = nu_q_atoms(p, opt.tail_tol);
    CompensatedSum mass;
    for (const auto& atom : measure.atoms) mass.add(atom.weight);
    const double res = std::abs(mass.value() - 1.0);
    return detail::make_report("measure.normalization", p, opt.degree,
                               static_cast<int>(measure.atoms.size()) - 1, res, opt.tail_tol);
}

inline IdentityReport check_atom_radii(const QParams& p, const VerifyOptions& opt) {
    const auto measure = nu_q_atoms(p, opt.tail_tol);
    const double boundary_sq = p.beta / (1.0 - p.q);
    double violation = std::abs(measure.atoms[0].radius * measure.atoms[0].radius - boundary_sq);
    for (std::size_t j = 0; j + 1 < measure.atoms.size(); ++j) {
        // Radii must decrease strictly and stay inside the closed disk.
        if (measure.atoms[j + 1].radius >= measure.atoms[j].radius) violation = 1.0;
        const double rsq = measure.atoms[j + 1].radius * measure.atoms[j + 1].radius;
        violation = std::max(violation, rsq - boundary_sq);
    }
    return detail::make_report("measure.atom_radii", p, opt.degree,
                               static_cast<int>(measure.atoms.size()) - 1, violation, opt.rel_tol);
}

// --- transform checks -------------------------------------------------

inline IdentityReport check_parseval(const QParams& p, const VerifyOptions& opt) {
    std::mt19937_64 rng(kSuiteSeed);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        OrthoCoeffs f{PolyFamily::Charlier, p, random_coeffs(rng, opt.degree)};
        worst = std::max(worst, rel_dev(hardy_norm_sq(sb_transform(f)), l2_norm_sq(f)));
    }
    return detail::make_report("sbt.parseval", p, opt.degree, opt.degree, worst, opt.rel_tol);
}

inline IdentityReport check_quadrature_isometry(const QParams& p, const VerifyOptions& opt) {
    std::mt19937_64 rng(kSuiteSeed);
    const auto measure = nu_q_atoms(p, opt.tail_tol);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        OrthoCoeffs f{PolyFamily::Charlier, p, random_coeffs(rng, opt.degree)};
        const auto series = sb_transform(f);
        const double by_quad = hardy_norm_sq_quadrature(series, measure, 2 * opt.degree + 2);
        worst = std::max(worst, rel_dev(by_quad, l2_norm_sq(f)));
    }
    return detail::make_report("sbt.quadrature_isometry", p, opt.degree, opt.degree, worst,
                               opt.rel_tol);
}

inline IdentityReport check_coherent_norm(const QParams& p, const VerifyOptions& opt) {
    const double r0sq = p.beta / (1.0 - p.q);
    double worst = 0.0;
    for (double frac : {0.1, 0.3, 0.5}) {
        const std::complex<double> z = std::polar(std::sqrt(frac * r0sq), 0.7);
        // Direct coefficient sum, 200 terms; converged far below 1e-12
        // at these interior sample points.
        CompensatedSum direct;
        double term = 1.0;
        double bracket = 0.0;
        const double xsq = std::norm(z) / p.beta;
        for (int n = 0; n < 200; ++n) {
            direct.add(term);
            bracket = 1.0 + p.q * bracket;
            term *= xsq / bracket;
        }
        worst = std::max(worst, rel_dev(coherent_norm_sq(p, z), direct.value()));
    }
    return detail::make_report("sbt.coherent_norm", p, opt.degree, 200, worst, opt.rel_tol);
}

inline IdentityReport check_eval_dual_route(const QParams& p, const VerifyOptions& opt) {
    std::mt19937_64 rng(kSuiteSeed);
    const double r0 = std::sqrt(p.beta / (1.0 - p.q));
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        OrthoCoeffs f{PolyFamily::Charlier, p, random_coeffs(rng, 8)};
        const std::complex<double> z = std::polar(0.4 * r0, 0.3 + 0.5 * trial);
        const auto direct = sb_eval_at(f, z);
        const auto via_inner = l2_inner(coherent_coeffs(f.family, p, std::conj(z), f.degree()), f);
        double scale = 1.0;
        std::complex<double> zn{1.0, 0.0};
        for (const auto& c : f.coeffs) {
            scale += std::abs(c * zn);
            zn *= z;
        }
        worst = std::max(worst, std::abs(direct - via_inner) / scale);
    }
    return detail::make_report("sbt.eval_dual_route", p, opt.degree, 8, worst, opt.rel_tol);
}

inline IdentityReport check_coherent_reproducing(const QParams& p, const VerifyOptions& opt) {
    const double r0 = std::sqrt(p.beta / (1.0 - p.q));
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        const std::complex<double> w = std::polar(0.6 * r0, 0.4 + 0.9 * trial);
        const std::complex<double> z = std::polar(0.6 * r0, 1.3 - 0.7 * trial);
        const int degree = default_coherent_degree(p, w);
        const auto state = coherent_coeffs(PolyFamily::Charlier, p, std::conj(w), degree);
        const auto lhs = sb_eval_at(state, z);
        const auto rhs = q_exp(std::conj(w) * z / p.beta, p.q, Tolerance{opt.rel_tol, 1e-16});
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    return detail::make_report("sbt.coherent_reproducing", p, opt.degree, opt.degree, worst,
                               opt.rel_tol);
}

inline IdentityReport check_schwartz_bound(const QParams& p, const VerifyOptions& opt) {
    std::mt19937_64 rng(kSuiteSeed);
    const double r0 = std::sqrt(p.beta / (1.0 - p.q));
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        OrthoCoeffs f{PolyFamily::Charlier, p, random_coeffs(rng, 8)};
        const std::complex<double> z = std::polar((0.2 + 0.06 * trial) * r0, 0.9 * trial);
        double lhs = 0.0;
        double zn = 1.0;
        for (const auto& c : f.coeffs) {
            lhs += std::abs(c) * zn;
            zn *= std::abs(z);
        }
        const double rhs =
            std::sqrt(l2_norm_sq(f)) * std::sqrt(coherent_norm_sq(p, z));
        worst = std::max(worst, std::max(0.0, lhs - rhs) / rhs);
    }
    return detail::make_report("sbt.schwartz_bound", p, opt.degree, 8, worst, opt.rel_tol);
}

// --- operator checks --------------------------------------------------

inline IdentityReport check_data_path(const QParams& p, const VerifyOptions& opt) {
    std::mt19937_64 rng(kSuiteSeed);
    const int deg = opt.degree;
    const auto rhs_op = op_D(p, deg) + op_Z(deg) + op_alpha(p, deg);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        OrthoCoeffs f{PolyFamily::Charlier, p, random_coeffs(rng, deg - 1)};
        const auto lhs = sb_transform(multiply_by_x(f));
        const auto rhs = apply(rhs_op, sb_transform(f));
        for (int n = 0; n <= deg; ++n)
            worst = std::max(worst, std::abs(lhs.coeffs[static_cast<std::size_t>(n)] -
                                             rhs.coeffs[static_cast<std::size_t>(n)]));
    }
    return detail::make_report("operators.charlier_x_data_path", p, opt.degree, deg - 1, worst,
                               opt.rel_tol);
}

inline IdentityReport check_adjoint_pairing(const QParams& p, const VerifyOptions& opt) {
    std::mt19937_64 rng(kSuiteSeed);
    const int deg = opt.degree;
    const auto Z = op_Z(deg), D = op_D(p, deg);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto F = make_series(p, random_coeffs(rng, deg - 1));
        const auto G = make_series(p, random_coeffs(rng, deg - 1));
        const auto lhs = hardy_inner(apply(Z, F), make_series(p, G.coeffs));
        const auto rhs = hardy_inner(make_series(p, F.coeffs), apply(D, G));
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    return detail::make_report("operators.adjoint_pairing", p, opt.degree, deg - 1, worst,
                               opt.rel_tol);
}

inline IdentityReport check_family_shift(const QParams& p, const VerifyOptions& opt) {
    const int deg = opt.degree;
    const auto diff = op_Q(PolyFamily::Charlier, p, deg) - op_Q(PolyFamily::Hermite, p, deg);
    const double res = max_abs_diff(diff, op_alpha(p, deg), deg - 1);
    return detail::make_report("operators.family_diagonal_shift", p, opt.degree, deg - 1, res,
                               opt.rel_tol);
}

inline IdentityReport check_pointwise_matrix(const QParams& p, const VerifyOptions& opt) {
    std::mt19937_64 rng(kSuiteSeed);
    const int deg = std::min(opt.degree, 10);
    const auto D = op_D(p, deg);
    const double r0 = std::sqrt(p.beta / (1.0 - p.q));
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const auto F = make_series(p, random_coeffs(rng, deg));
        const auto DF = apply(D, F);
        // Analytic limit at the origin.
        worst = std::max(worst,
                         std::abs(apply_D_pointwise(F, {0.0, 0.0}) - p.beta * F.coeffs[1]));
        for (int s = 0; s < 4; ++s) {
            const std::complex<double> z = std::polar(0.6 * r0 * (0.3 + 0.2 * s), 0.8 * s + 0.2);
            const auto pointwise = apply_D_pointwise(F, z);
            const auto via_matrix = series_eval(DF, z);
            worst = std::max(worst,
                             std::abs(pointwise - via_matrix) / std::max(1.0, std::abs(via_matrix)));
        }
    }
    return detail::make_report("operators.pointwise_matrix_agreement", p, opt.degree, deg, worst,
                               opt.rel_tol);
}

inline IdentityReport check_hermite_parity(const QParams& p, const VerifyOptions& opt) {
    std::mt19937_64 rng(kSuiteSeed);
    std::uniform_real_distribution<double> dist(0.1, 3.0);
    const int top = std::min(opt.degree, 15);
    double worst = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
        const double x = dist(rng);
        const auto plus = poly_eval_all(PolyFamily::Hermite, p, top, x);
        const auto minus = poly_eval_all(PolyFamily::Hermite, p, top, -x);
        for (int n = 0; n <= top; ++n) {
            const double sign = n % 2 == 0 ? 1.0 : -1.0;
            const double scale = std::max(1.0, std::abs(plus[static_cast<std::size_t>(n)]));
            worst = std::max(worst, std::abs(minus[static_cast<std::size_t>(n)] -
                                             sign * plus[static_cast<std::size_t>(n)]) /
                                        scale);
        }
    }
    return detail::make_report("hermite.parity", p, opt.degree, top, worst, opt.rel_tol);
}

}  // namespace detail

/// Run one suite on one (q, beta) cell. Reports come back in a fixed
/// order; every random input is derived from a fixed seed.
inline std::vector<IdentityReport> run_suite(Suite suite, const QParams& p,
                                             const VerifyOptions& opt) {
    check_params(p);
    if (opt.degree < 2) throw std::domain_error("qsb: verification needs degree >= 2");
    std::vector<IdentityReport> reports;
    const bool all = suite == Suite::All;

    if (all || suite == Suite::QCore) {
        reports.push_back(detail::check_gamma_factorial(p, opt));
        reports.push_back(detail::check_bracket_recurrence(p, opt));
        reports.push_back(detail::check_pochhammer_split(p, opt));
    }
    if (all || suite == Suite::Ortho) {
        reports.push_back(detail::check_monic_leading(p, opt));
        reports.push_back(detail::check_recurrence_residual(p, opt));
        reports.push_back(detail::check_gram(p, opt));
        reports.push_back(detail::check_basis_roundtrip(p, opt));
        reports.push_back(detail::check_normalization(p, opt));
        reports.push_back(detail::check_atom_radii(p, opt));
    }
    if (all || suite == Suite::Unitary) {
        reports.push_back(detail::check_parseval(p, opt));
        reports.push_back(detail::check_quadrature_isometry(p, opt));
        reports.push_back(detail::check_coherent_norm(p, opt));
        reports.push_back(detail::check_eval_dual_route(p, opt));
        reports.push_back(detail::check_coherent_reproducing(p, opt));
        reports.push_back(detail::check_schwartz_bound(p, opt));
    }
    if (all || suite == Suite::Operators) {
        reports.push_back(verify_theorem_qp(p, opt.degree, opt.rel_tol));
        reports.push_back(verify_corollary(p, opt.degree, opt.rel_tol));
        reports.push_back(verify_commutation(p, opt.degree, opt.rel_tol));
        reports.push_back(detail::check_data_path(p, opt));
        reports.push_back(detail::check_adjoint_pairing(p, opt));
        reports.push_back(detail::check_family_shift(p, opt));
        reports.push_back(detail::check_pointwise_matrix(p, opt));
    }
    if (all || suite == Suite::Hermite) {
        reports.push_back(verify_hermite(p, opt.degree, opt.rel_tol));
        reports.push_back(detail::check_hermite_parity(p, opt));
    }
    return reports;
}

}  // namespace qsb
