#pragma once

// Matrix representations on the truncated monomial basis z^0..z^N of the
// q-creation operator Z, the q-annihilation operator D, the q-number and
// shifted-number diagonals, and the Hardy-side image of multiplication
// by x; plus the verifiers for the operator identities tying them
// together. Since Z raises degree, the z^N column of any identity
// involving Z is truncation-polluted, so identities are asserted on
// input degrees 0..N-1 only.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsb/measure.hpp"
#include "qsb/orthopoly.hpp"
#include "qsb/qcore.hpp"

namespace qsb {

/// Dense operator on span{z^0..z^degree}; entry (i, j) maps input degree
/// j to output degree i. Everything in this module is diagonal or
/// tridiagonal, so the bandwidth is kept as metadata for assertions.
struct BandedOperator {
    int degree = 0;
    std::vector<std::complex<double>> entries;  // row-major, (degree+1)^2
    int bandwidth = 0;
    std::string label;

    int dim() const { return degree + 1; }
    std::complex<double>& at(int i, int j) {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim()) +
                       static_cast<std::size_t>(j)];
    }
    const std::complex<double>& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim()) +
                       static_cast<std::size_t>(j)];
    }
};

/// Verification record for one operator identity checked on input
/// degrees degree_min..degree_max at truncation N.
struct IdentityReport {
    std::string identity;
    QParams params;
    int truncation = 0;
    int degree_min = 0;
    int degree_max = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

namespace detail {

inline BandedOperator make_operator(int degree, std::string label) {
    if (degree < 0) throw std::domain_error("qsb: operator degree must be nonnegative");
    BandedOperator op;
    op.degree = degree;
    op.entries.assign(static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 1),
                      {0.0, 0.0});
    op.label = std::move(label);
    return op;
}

inline int scan_bandwidth(const BandedOperator& op) {
    int bw = 0;
    for (int i = 0; i <= op.degree; ++i)
        for (int j = 0; j <= op.degree; ++j)
            if (op.at(i, j) != std::complex<double>{0.0, 0.0}) bw = std::max(bw, std::abs(i - j));
    return bw;
}

inline void check_same_dim(const BandedOperator& a, const BandedOperator& b) {
    if (a.degree != b.degree)
        throw std::invalid_argument("qsb: operator dimensions differ (" + a.label + " vs " +
                                    b.label + ")");
}

inline IdentityReport make_report(std::string identity, const QParams& p, int truncation,
                                  int degree_max, double residual, double tol) {
    IdentityReport rep;
    rep.identity = std::move(identity);
    rep.params = p;
    rep.truncation = truncation;
    rep.degree_min = 0;
    rep.degree_max = degree_max;
    rep.residual = residual;
    rep.tolerance = tol;
    rep.passed = residual <= tol;
    return rep;
}

}  // namespace detail

inline BandedOperator op_identity(int degree) {
    auto op = detail::make_operator(degree, "I");
    for (int i = 0; i <= degree; ++i) op.at(i, i) = 1.0;
    return op;
}

/// Creation operator Z: z^n -> z^(n+1). The image of the z^N column
/// would leave the truncated space and is dropped; identity checks
/// therefore exclude input degree N.
inline BandedOperator op_Z(int degree) {
    if (degree < 1) throw std::domain_error("qsb: op_Z needs degree >= 1");
    auto op = detail::make_operator(degree, "Z");
    for (int n = 0; n < degree; ++n) op.at(n + 1, n) = 1.0;
    op.bandwidth = 1;
    return op;
}

/// Annihilation operator D: z^n -> beta [n]_q z^(n-1), constants to 0.
inline BandedOperator op_D(const QParams& p, int degree) {
    check_params(p);
    if (degree < 1) throw std::domain_error("qsb: op_D needs degree >= 1");
    auto op = detail::make_operator(degree, "D");
    double b = 0.0;
    for (int n = 1; n <= degree; ++n) {
        b = 1.0 + p.q * b;  // [n]_q
        op.at(n - 1, n) = p.beta * b;
    }
    op.bandwidth = 1;
    return op;
}

/// Number operator: diagonal [n]_q.
inline BandedOperator op_number(const QParams& p, int degree) {
    check_params(p);
    check_degree(degree);
    auto op = detail::make_operator(degree, "N_q");
    double b = 0.0;
    for (int n = 0; n <= degree; ++n) {
        if (n > 0) b = 1.0 + p.q * b;
        op.at(n, n) = b;
    }
    return op;
}

/// Shifted number operator: diagonal [n]_q + beta.
inline BandedOperator op_alpha(const QParams& p, int degree) {
    check_params(p);
    check_degree(degree);
    auto op = detail::make_operator(degree, "alpha_Nq");
    double b = 0.0;
    for (int n = 0; n <= degree; ++n) {
        if (n > 0) b = 1.0 + p.q * b;
        op.at(n, n) = b + p.beta;
    }
    return op;
}

/// Hardy-side image S Q S^-1 of multiplication by x, built directly from
/// the Szego-Jacobi parameters (independently of the operator identities
/// it is used to verify): subdiagonal 1, diagonal alpha_n, superdiagonal
/// beta [n]_q.
inline BandedOperator op_Q(PolyFamily family, const QParams& p, int degree) {
    if (degree < 1) throw std::domain_error("qsb: op_Q needs degree >= 1");
    const auto jac = jacobi_params(family, p, degree);
    auto op = detail::make_operator(
        degree, family == PolyFamily::Charlier ? "Q_charlier" : "Q_hermite");
    for (int n = 0; n <= degree; ++n) {
        if (n + 1 <= degree) op.at(n + 1, n) = 1.0;
        op.at(n, n) = jac[static_cast<std::size_t>(n)].alpha;
        if (n >= 1) op.at(n - 1, n) = jac[static_cast<std::size_t>(n)].omega;
    }
    op.bandwidth = 1;
    return op;
}

inline BandedOperator operator+(const BandedOperator& a, const BandedOperator& b) {
    detail::check_same_dim(a, b);
    auto out = detail::make_operator(a.degree, "(" + a.label + "+" + b.label + ")");
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = a.entries[i] + b.entries[i];
    out.bandwidth = detail::scan_bandwidth(out);
    return out;
}

inline BandedOperator operator-(const BandedOperator& a, const BandedOperator& b) {
    detail::check_same_dim(a, b);
    auto out = detail::make_operator(a.degree, "(" + a.label + "-" + b.label + ")");
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = a.entries[i] - b.entries[i];
    out.bandwidth = detail::scan_bandwidth(out);
    return out;
}

inline BandedOperator operator*(std::complex<double> scale, const BandedOperator& a) {
    auto out = a;
    for (auto& e : out.entries) e *= scale;
    return out;
}

/// Matrix product (a then b applied second is b*a as usual).
inline BandedOperator operator*(const BandedOperator& a, const BandedOperator& b) {
    detail::check_same_dim(a, b);
    auto out = detail::make_operator(a.degree, a.label + "*" + b.label);
    const int dim = a.dim();
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) {
            const std::complex<double> aik = a.at(i, k);
            if (aik == std::complex<double>{0.0, 0.0}) continue;
            for (int j = 0; j < dim; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    out.bandwidth = detail::scan_bandwidth(out);
    return out;
}

/// Apply the operator to a monomial series (padded with zeros up to the
/// operator dimension).
inline MonomialSeries apply(const BandedOperator& op, const MonomialSeries& f) {
    if (f.degree() > op.degree)
        throw std::invalid_argument("qsb: series degree exceeds operator truncation");
    MonomialSeries out = make_series(f.params, {});
    out.coeffs.assign(static_cast<std::size_t>(op.dim()), {0.0, 0.0});
    for (int i = 0; i <= op.degree; ++i) {
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j <= std::min(op.degree, f.degree()); ++j)
            acc += op.at(i, j) * f.coeffs[static_cast<std::size_t>(j)];
        out.coeffs[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

/// Max absolute entry difference over input degrees (columns) 0..max_col.
inline double max_abs_diff(const BandedOperator& a, const BandedOperator& b, int max_col) {
    detail::check_same_dim(a, b);
    if (max_col > a.degree) throw std::invalid_argument("qsb: column range exceeds dimension");
    double worst = 0.0;
    for (int i = 0; i <= a.degree; ++i)
        for (int j = 0; j <= max_col; ++j) worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    return worst;
}

/// Pointwise q-difference quotient beta (F(z) - F(qz)) / (z (1-q)).
/// At z = 0 the analytic limit beta c_1 is returned: the coefficient
/// action D z = beta demands it, so the coefficient-space definition is
/// taken as authoritative over a literal zero convention at the origin.
inline std::complex<double> apply_D_pointwise(const MonomialSeries& f, std::complex<double> z) {
    check_params(f.params);
    const QParams& p = f.params;
    if (z == std::complex<double>{0.0, 0.0})
        return f.coeffs.size() > 1 ? p.beta * f.coeffs[1] : std::complex<double>{0.0, 0.0};
    return p.beta * (series_eval(f, z) - series_eval(f, p.q * z)) / (z * (1.0 - p.q));
}

/// Residual of D Z - q Z D against scale * I on input degrees 0..N-1.
/// The operators satisfy D Z - q Z D = beta I; scale = 1 recovers the
/// unit-scale form, which coincides with it exactly when beta = 1.
inline double commutation_residual(const QParams& p, int degree, double scale) {
    if (degree < 2) throw std::domain_error("qsb: commutation check needs degree >= 2");
    const auto Z = op_Z(degree), D = op_D(p, degree);
    const auto lhs = D * Z - std::complex<double>(p.q) * (Z * D);
    return max_abs_diff(lhs, std::complex<double>(scale) * op_identity(degree), degree - 1);
}

/// Multiplication-by-x representation, Charlier side:
/// Q_charlier == D + Z + alpha on degrees 0..N-1.
inline IdentityReport verify_theorem_qp(const QParams& p, int degree, double tol) {
    if (degree < 2) throw std::domain_error("qsb: verify_theorem_qp needs degree >= 2");
    const auto lhs = op_Q(PolyFamily::Charlier, p, degree);
    const auto rhs = op_D(p, degree) + op_Z(degree) + op_alpha(p, degree);
    const double res = max_abs_diff(lhs, rhs, degree - 1);
    return detail::make_report("operators.charlier_x_representation", p, degree, degree - 1, res,
                               tol);
}

/// Decomposition identities:
///   (1) alpha == (1/beta) Z D + beta I == N_q + beta I
///   (2) Z + D + alpha == (Z/sqrt(beta) + sqrt(beta) I)(D/sqrt(beta) + sqrt(beta) I)
/// Residual is the max over both, on degrees 0..N-1.
inline IdentityReport verify_corollary(const QParams& p, int degree, double tol) {
    if (degree < 2) throw std::domain_error("qsb: verify_corollary needs degree >= 2");
    const auto Z = op_Z(degree), D = op_D(p, degree);
    const auto alpha = op_alpha(p, degree);
    const auto I = op_identity(degree);
    const auto betaI = std::complex<double>(p.beta) * I;

    const auto via_zd = std::complex<double>(1.0 / p.beta) * (Z * D) + betaI;
    const auto via_number = op_number(p, degree) + betaI;
    double res = max_abs_diff(alpha, via_zd, degree - 1);
    res = std::max(res, max_abs_diff(alpha, via_number, degree - 1));

    const double root = std::sqrt(p.beta);
    const auto left = std::complex<double>(1.0 / root) * Z + std::complex<double>(root) * I;
    const auto right = std::complex<double>(1.0 / root) * D + std::complex<double>(root) * I;
    res = std::max(res, max_abs_diff(Z + D + alpha, left * right, degree - 1));
    return detail::make_report("operators.alpha_factorization", p, degree, degree - 1, res, tol);
}

/// q-deformed commutation relation D Z - q Z D = beta I (the unit-scale
/// statement holds verbatim at beta = 1; commutation_residual exposes
/// the unit-scale residual separately).
inline IdentityReport verify_commutation(const QParams& p, int degree, double tol) {
    const double res = commutation_residual(p, degree, p.beta);
    return detail::make_report("operators.q_commutation", p, degree, degree - 1, res, tol);
}

/// Multiplication-by-x representation, Hermite side:
/// Q_hermite == D + Z on degrees 0..N-1.
inline IdentityReport verify_hermite(const QParams& p, int degree, double tol) {
    if (degree < 2) throw std::domain_error("qsb: verify_hermite needs degree >= 2");
    const auto lhs = op_Q(PolyFamily::Hermite, p, degree);
    const auto rhs = op_D(p, degree) + op_Z(degree);
    const double res = max_abs_diff(lhs, rhs, degree - 1);
    return detail::make_report("operators.hermite_x_representation", p, degree, degree - 1, res,
                               tol);
}

}  // namespace qsb
