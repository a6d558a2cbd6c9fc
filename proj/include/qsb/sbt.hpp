#pragma once

// The Segal-Bargmann transform between coefficient space and the Hardy
// space H^2(nu_q): on coefficients it is the identity map sending the
// degree-n basis polynomial to z^n, which makes it unitary by
// construction. Coherent state evaluation and the pointwise transform
// provide the nontrivial cross-checks.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qsb/measure.hpp"
#include "qsb/orthopoly.hpp"
#include "qsb/qcore.hpp"

namespace qsb {

/// Truncated coherent state E(x, z) = sum_{n<=N} P_n(x) z^n/(beta^n [n]_q!)
/// at a point z of the disk Omega_q^beta.
struct CoherentState {
    PolyFamily family = PolyFamily::Charlier;
    QParams params;
    std::complex<double> z;
    int degree = 0;
};

inline void check_in_domain(const QParams& p, std::complex<double> z) {
    check_params(p);
    if (!(std::norm(z) < p.beta / (1.0 - p.q)))
        throw std::domain_error("qsb: point lies outside the disk |z|^2 < beta/(1-q)");
}

/// Smallest truncation degree N with (|z|^2 (1-q)/beta)^(N/2) < 1e-14;
/// the coherent series tail is geometrically dominated by that ratio.
inline int default_coherent_degree(const QParams& p, std::complex<double> z) {
    check_in_domain(p, z);
    const double rho = std::norm(z) * (1.0 - p.q) / p.beta;  // (|z|/r_0)^2
    if (rho == 0.0) return 0;
    const int n = static_cast<int>(std::ceil(2.0 * std::log(1e-14) / std::log(rho)));
    return n < 1 ? 1 : n;
}

/// The transform S f: identity on coefficients, basis polynomial P_n to
/// the monomial z^n.
inline MonomialSeries sb_transform(const OrthoCoeffs& f) {
    check_params(f.params);
    return make_series(f.params, f.coeffs);
}

/// Inverse transform back onto the orthogonal basis of the requested
/// family; exact round-trip with sb_transform.
inline OrthoCoeffs sb_inverse(const MonomialSeries& f, PolyFamily family) {
    check_params(f.params);
    return {family, f.params, f.coeffs};
}

/// Coefficient vector of the truncated coherent state at z:
/// e_n = z^n / (beta^n [n]_q!).
inline OrthoCoeffs coherent_coeffs(PolyFamily family, const QParams& p, std::complex<double> z,
                                   int degree) {
    check_in_domain(p, z);
    check_degree(degree);
    const auto w = weight_sequence(p, degree);
    OrthoCoeffs out;
    out.family = family;
    out.params = p;
    out.coeffs.resize(static_cast<std::size_t>(degree) + 1);
    std::complex<double> zn{1.0, 0.0};
    for (int n = 0; n <= degree; ++n) {
        out.coeffs[static_cast<std::size_t>(n)] = zn / w[static_cast<std::size_t>(n)];
        zn *= z;
    }
    return out;
}

inline OrthoCoeffs coherent_coeffs(const CoherentState& state) {
    return coherent_coeffs(state.family, state.params, state.z, state.degree);
}

/// Partial sum sum_{n<=N} P_n(x) z^n/(beta^n [n]_q!). The denominator is
/// beta^n [n]_q! for both families.
inline std::complex<double> coherent_eval(PolyFamily family, const QParams& p, double x,
                                          std::complex<double> z, int degree) {
    check_in_domain(p, z);
    check_degree(degree);
    const auto vals = poly_eval_all(family, p, degree, x);
    const auto w = weight_sequence(p, degree);
    std::complex<double> zn{1.0, 0.0};
    CompensatedSum re, im;
    for (int n = 0; n <= degree; ++n) {
        const std::complex<double> term =
            vals[static_cast<std::size_t>(n)] * zn / w[static_cast<std::size_t>(n)];
        re.add(term.real());
        im.add(term.imag());
        zn *= z;
    }
    return {re.value(), im.value()};
}

/// Squared norm of the coherent state, exp_q(|z|^2/beta); finite on the
/// disk and equal to the direct coefficient sum sum |z|^(2n)/(beta^n [n]_q!).
inline double coherent_norm_sq(const QParams& p, std::complex<double> z) {
    check_in_domain(p, z);
    // Tight tail tolerance: the series must be converged to roundoff
    // even when |z| approaches the domain boundary.
    return q_exp(std::norm(z) / p.beta, p.q, Tolerance{1e-9, 1e-16});
}

/// Transformed function evaluated at z: sum a_n z^n. Agrees with the
/// inner product of f against the coherent state at conj(z), which is
/// how the transform is defined in the first place.
inline std::complex<double> sb_eval_at(const OrthoCoeffs& f, std::complex<double> z) {
    check_in_domain(f.params, z);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = f.coeffs.size(); k-- > 0;) acc = acc * z + f.coeffs[k];
    return acc;
}

}  // namespace qsb
