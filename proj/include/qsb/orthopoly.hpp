#pragma once

// q-Charlier and q-Hermite polynomial systems: Szego-Jacobi parameters,
// three-term recurrences (coefficient and value domain), the weighted
// coefficient-space inner product, and the triangular change of basis
// between the orthogonal and monomial representations.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsb/qcore.hpp"

namespace qsb {

enum class PolyFamily { Charlier, Hermite };

inline const char* family_name(PolyFamily family) {
    return family == PolyFamily::Charlier ? "charlier" : "hermite";
}

/// One row of the three-term recurrence
///   P_{n+1}(x) = (x - alpha_n) P_n(x) - omega_n P_{n-1}(x).
struct JacobiTerm {
    double alpha;
    double omega;
};

/// A function of L^2(mu^(q)) as a finite coefficient vector over the
/// orthogonal basis {C_n^(q)} or {H_n^(q)}. Index n holds the
/// coefficient of the degree-n basis polynomial.
struct OrthoCoeffs {
    PolyFamily family = PolyFamily::Charlier;
    QParams params;
    std::vector<std::complex<double>> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// A polynomial in the monomial basis, constant term first. Both
/// recurrences are monic, so the leading coefficient of a degree-n
/// basis polynomial is exactly 1.
struct MonomialPoly {
    std::vector<std::complex<double>> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Szego-Jacobi parameters (alpha_n, omega_n) for n = 0..N.
/// Charlier: alpha_n = [n]_q + beta, omega_n = beta [n]_q.
/// Hermite:  alpha_n = 0,           omega_n = beta [n]_q.
/// omega_0 = 0 in both families since [0]_q = 0.
inline std::vector<JacobiTerm> jacobi_params(PolyFamily family, const QParams& p, int degree) {
    check_params(p);
    check_degree(degree);
    std::vector<JacobiTerm> terms(static_cast<std::size_t>(degree) + 1);
    double b = 0.0;  // [n]_q
    for (int n = 0; n <= degree; ++n) {
        if (n > 0) b = 1.0 + p.q * b;
        const double omega = p.beta * b;
        const double alpha = family == PolyFamily::Charlier ? b + p.beta : 0.0;
        terms[static_cast<std::size_t>(n)] = {alpha, omega};
    }
    return terms;
}

namespace detail {

// Rows 0..degree of the change-of-basis matrix: row n holds the
// monomial coefficients of the degree-n basis polynomial, obtained by
// running the recurrence in the coefficient domain.
inline std::vector<std::vector<double>> monomial_rows(PolyFamily family, const QParams& p,
                                                      int degree) {
    const auto jac = jacobi_params(family, p, degree);
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(degree) + 1);
    rows.push_back({1.0});
    if (degree == 0) return rows;
    rows.push_back({-jac[0].alpha, 1.0});
    for (int n = 1; n < degree; ++n) {
        const auto& pn = rows[static_cast<std::size_t>(n)];
        const auto& pm = rows[static_cast<std::size_t>(n) - 1];
        std::vector<double> next(static_cast<std::size_t>(n) + 2, 0.0);
        for (std::size_t k = 0; k < pn.size(); ++k) {
            next[k + 1] += pn[k];                  // x * P_n
            next[k] -= jac[static_cast<std::size_t>(n)].alpha * pn[k];
        }
        for (std::size_t k = 0; k < pm.size(); ++k)
            next[k] -= jac[static_cast<std::size_t>(n)].omega * pm[k];
        rows.push_back(std::move(next));
    }
    return rows;
}

inline void check_same_space(const OrthoCoeffs& f, const OrthoCoeffs& g) {
    if (f.family != g.family || !(f.params == g.params))
        throw std::invalid_argument("qsb: coefficient vectors live in different spaces (family or "
                                    "(q,beta) mismatch)");
}

}  // namespace detail

/// Monomial coefficients of the degree-n basis polynomial.
inline MonomialPoly poly_monomial(PolyFamily family, const QParams& p, int n) {
    check_degree(n);
    const auto rows = detail::monomial_rows(family, p, n);
    const auto& row = rows.back();
    MonomialPoly out;
    out.coeffs.assign(row.begin(), row.end());
    return out;
}

/// Value of the degree-n basis polynomial at x, by forward recurrence.
/// (The expanded monomial form is ill-conditioned for large n.)
template <typename Scalar>
Scalar poly_eval(PolyFamily family, const QParams& p, int n, Scalar x) {
    check_degree(n);
    const auto jac = jacobi_params(family, p, n);
    Scalar prev = Scalar(0);
    Scalar cur = Scalar(1);
    for (int k = 0; k < n; ++k) {
        Scalar next = (x - jac[static_cast<std::size_t>(k)].alpha) * cur -
                      jac[static_cast<std::size_t>(k)].omega * prev;
        prev = std::exchange(cur, next);
    }
    return cur;
}

/// Values P_0(x)..P_N(x) in one recurrence pass.
template <typename Scalar>
std::vector<Scalar> poly_eval_all(PolyFamily family, const QParams& p, int degree, Scalar x) {
    check_degree(degree);
    const auto jac = jacobi_params(family, p, degree);
    std::vector<Scalar> vals(static_cast<std::size_t>(degree) + 1);
    vals[0] = Scalar(1);
    if (degree == 0) return vals;
    vals[1] = x - jac[0].alpha;
    for (int k = 1; k < degree; ++k)
        vals[static_cast<std::size_t>(k) + 1] =
            (x - jac[static_cast<std::size_t>(k)].alpha) * vals[static_cast<std::size_t>(k)] -
            jac[static_cast<std::size_t>(k)].omega * vals[static_cast<std::size_t>(k) - 1];
    return vals;
}

/// Weighted sesquilinear inner product
///   <f, g> = sum_n beta^n [n]_q! conj(a_n) b_n,
/// conjugate-linear in the first argument. Shorter vectors are
/// implicitly zero-padded.
inline std::complex<double> l2_inner(const OrthoCoeffs& f, const OrthoCoeffs& g) {
    detail::check_same_space(f, g);
    const std::size_t n = std::min(f.coeffs.size(), g.coeffs.size());
    if (n == 0) return {0.0, 0.0};
    const auto w = weight_sequence(f.params, static_cast<int>(n) - 1);
    CompensatedSum re, im;
    for (std::size_t k = 0; k < n; ++k) {
        // Conjugate product first: <f,f> then has exactly zero imaginary part.
        const std::complex<double> t = w[k] * (std::conj(f.coeffs[k]) * g.coeffs[k]);
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.value(), im.value()};
}

/// Squared norm sum_n beta^n [n]_q! |a_n|^2.
inline double l2_norm_sq(const OrthoCoeffs& f) {
    check_params(f.params);
    if (f.coeffs.empty()) return 0.0;
    const auto w = weight_sequence(f.params, f.degree());
    CompensatedSum s;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) s.add(w[k] * std::norm(f.coeffs[k]));
    return s.value();
}

/// Expand f = sum a_n P_n into the monomial basis.
inline MonomialPoly basis_to_monomial(const OrthoCoeffs& f) {
    check_params(f.params);
    MonomialPoly out;
    if (f.coeffs.empty()) return out;
    const auto rows = detail::monomial_rows(f.family, f.params, f.degree());
    out.coeffs.assign(f.coeffs.size(), {0.0, 0.0});
    for (std::size_t n = 0; n < f.coeffs.size(); ++n)
        for (std::size_t k = 0; k < rows[n].size(); ++k) out.coeffs[k] += f.coeffs[n] * rows[n][k];
    return out;
}

/// Expand a monomial polynomial over the orthogonal basis. Inverse of
/// basis_to_monomial by back substitution (the change of basis is
/// triangular with unit diagonal).
inline OrthoCoeffs monomial_to_basis(const MonomialPoly& poly, PolyFamily family,
                                     const QParams& p) {
    check_params(p);
    OrthoCoeffs out;
    out.family = family;
    out.params = p;
    if (poly.coeffs.empty()) return out;
    const int deg = poly.degree();
    const auto rows = detail::monomial_rows(family, p, deg);
    out.coeffs.assign(poly.coeffs.begin(), poly.coeffs.end());
    for (int n = deg; n >= 0; --n) {
        const std::complex<double> a = out.coeffs[static_cast<std::size_t>(n)];
        // Subtract a * P_n's sub-leading coefficients from the residual.
        for (int k = 0; k < n; ++k)
            out.coeffs[static_cast<std::size_t>(k)] -=
                a * rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    return out;
}

/// Coefficients of x * f over the orthogonal basis, straight from the
/// recurrence: (x f)_m = a_{m-1} + alpha_m a_m + omega_{m+1} a_{m+1}.
/// Output degree is deg(f) + 1.
inline OrthoCoeffs multiply_by_x(const OrthoCoeffs& f) {
    check_params(f.params);
    OrthoCoeffs out;
    out.family = f.family;
    out.params = f.params;
    if (f.coeffs.empty()) return out;
    const int deg = f.degree();
    const auto jac = jacobi_params(f.family, f.params, deg + 1);
    out.coeffs.assign(static_cast<std::size_t>(deg) + 2, {0.0, 0.0});
    for (int m = 0; m <= deg + 1; ++m) {
        std::complex<double> v{0.0, 0.0};
        if (m >= 1 && m - 1 <= deg) v += f.coeffs[static_cast<std::size_t>(m) - 1];
        if (m <= deg)
            v += jac[static_cast<std::size_t>(m)].alpha * f.coeffs[static_cast<std::size_t>(m)];
        if (m + 1 <= deg)
            v += jac[static_cast<std::size_t>(m) + 1].omega *
                 f.coeffs[static_cast<std::size_t>(m) + 1];
        out.coeffs[static_cast<std::size_t>(m)] = v;
    }
    return out;
}

}  // namespace qsb
