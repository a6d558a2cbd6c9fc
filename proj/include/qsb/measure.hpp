#pragma once

// The radial probability measure nu_q on the disk Omega_q^beta, built as
// a finite list of weighted circles, plus exact trigonometric quadrature
// over it and the Hardy-space inner product in both its closed
// coefficient form and its quadrature form.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qsb/qcore.hpp"

namespace qsb {

struct RadialAtom {
    double radius;
    double weight;
};

/// nu_q as atoms (r_j, w_j) with r_j = q^(j/2) sqrt(beta/(1-q)) and
/// w_j = (q;q)_inf q^j / (q;q)_j. Each circle carries the normalized
/// uniform angular measure (total mass 1 per circle), which is the
/// normalization that makes nu_q a probability measure. tail_bound is a
/// certified bound on the discarded mass sum_{j>J} w_j.
struct RadialAtomMeasure {
    std::vector<RadialAtom> atoms;
    QParams params;
    double tail_bound = 0.0;
};

/// An element of the Hardy space H^2(nu_q) as a finite monomial
/// coefficient vector c_0..c_N over z^0..z^N, together with the squared
/// radius beta/(1-q) of its convergence disk.
struct MonomialSeries {
    QParams params;
    std::vector<std::complex<double>> coeffs;
    double domain_radius_sq = 0.0;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

inline MonomialSeries make_series(const QParams& p, std::vector<std::complex<double>> coeffs) {
    check_params(p);
    return {p, std::move(coeffs), p.beta / (1.0 - p.q)};
}

/// Horner evaluation of a monomial series.
inline std::complex<double> series_eval(const MonomialSeries& f, std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = f.coeffs.size(); k-- > 0;) acc = acc * z + f.coeffs[k];
    return acc;
}

/// Build the atomic representation of nu_q, truncated so that the
/// certified discarded mass stays below tail_tol (with a factor-two
/// safety margin so that the *computed* total mass lands within
/// tail_tol of 1).
///
/// Accuracy notes: log(q;q)_inf is accumulated as sum log1p(-q^j) with
/// compensated summation, the weights follow the ratio recurrence
/// w_{j+1} = w_j q/(1-q^{j+1}), and the truncation index from the
/// geometric bound q^(J+1)/(1-q) is certified by directly summing 64
/// further weights plus the geometric remainder.
inline RadialAtomMeasure nu_q_atoms(const QParams& p, double tail_tol) {
    check_params(p);
    if (!(tail_tol > 0.0 && tail_tol < 1.0))
        throw std::domain_error("qsb: tail_tol must lie in (0,1)");
    const double q = p.q;
    const double r0 = std::sqrt(p.beta / (1.0 - q));

    RadialAtomMeasure out;
    out.params = p;
    if (q == 0.0) {
        out.atoms.push_back({r0, 1.0});
        out.tail_bound = 0.0;
        return out;
    }

    // log (q;q)_inf, truncated once the remaining log tail q^(j+1)/(1-q)
    // is negligible at double precision.
    CompensatedSum log_euler;
    for (int j = 1; j <= kSeriesIterCap; ++j) {
        const double qj = std::pow(q, j);
        log_euler.add(std::log1p(-qj));
        if (qj * q / (1.0 - q) < 1e-19) {
            log_euler.add(-qj * q / (1.0 - q));  // first-order tail correction
            break;
        }
    }

    // Target half of tail_tol to leave headroom for rounding in the mass.
    const double target = 0.5 * tail_tol;
    int trunc = static_cast<int>(std::ceil(std::log(target * (1.0 - q)) / std::log(q))) - 1;
    if (trunc < 0) trunc = 0;

    const auto weight_upto = [&](int last) {
        std::vector<double> w(static_cast<std::size_t>(last) + 1);
        w[0] = std::exp(log_euler.value());
        for (int j = 0; j < last; ++j)
            w[static_cast<std::size_t>(j) + 1] =
                w[static_cast<std::size_t>(j)] * q / (1.0 - std::pow(q, j + 1));
        return w;
    };

    // Certify: direct sum of 64 extra weights plus the geometric
    // remainder bound (w_j <= q^j). Extend the cut if needed.
    std::vector<double> w;
    double certified = 0.0;
    for (;;) {
        w = weight_upto(trunc + 64);
        CompensatedSum extra;
        for (int j = trunc + 1; j <= trunc + 64; ++j) extra.add(w[static_cast<std::size_t>(j)]);
        certified = extra.value() + std::pow(q, trunc + 65) / (1.0 - q);
        if (certified < target) break;
        trunc += 64;
    }

    out.atoms.reserve(static_cast<std::size_t>(trunc) + 1);
    for (int j = 0; j <= trunc; ++j)
        out.atoms.push_back({std::pow(q, 0.5 * j) * r0, w[static_cast<std::size_t>(j)]});
    out.tail_bound = certified;
    return out;
}

/// Quadrature of an arbitrary integrand over nu_q:
///   sum_j w_j (1/K) sum_{k<K} f(r_j e^(2 pi i k / K)),
/// exact for trigonometric polynomials of angular degree < K on each
/// circle. Deterministic summation order (j outer, k inner, compensated).
template <typename F>
std::complex<double> quad_integrate(F&& values, const RadialAtomMeasure& measure, int points) {
    if (points < 1) throw std::invalid_argument("qsb: quadrature needs at least one angular point");
    CompensatedSum re, im;
    const double step = 2.0 * std::numbers::pi / points;
    for (const auto& atom : measure.atoms) {
        CompensatedSum cre, cim;
        for (int k = 0; k < points; ++k) {
            const std::complex<double> v = values(std::polar(atom.radius, step * k));
            cre.add(v.real());
            cim.add(v.imag());
        }
        re.add(atom.weight * cre.value() / points);
        im.add(atom.weight * cim.value() / points);
    }
    return {re.value(), im.value()};
}

/// Monomial Gram integral over a prebuilt measure:
///   integral conj(z)^n z^m dnu_q
///   = sum_j w_j r_j^(n+m) * (1/K) sum_k e^(i (m-n) 2 pi k / K).
/// Requires K >= n+m+1 so the angular rule is exact for the integrand.
inline std::complex<double> monomial_gram(const RadialAtomMeasure& measure, int n, int m,
                                          int points) {
    check_degree(n);
    check_degree(m);
    if (points < n + m + 1)
        throw std::invalid_argument("qsb: monomial_gram needs K >= n+m+1 angular points");
    const double step = 2.0 * std::numbers::pi / points;
    CompensatedSum are, aim;
    for (int k = 0; k < points; ++k) {
        const std::complex<double> e = std::polar(1.0, step * k * (m - n));
        are.add(e.real());
        aim.add(e.imag());
    }
    const std::complex<double> angular{are.value() / points, aim.value() / points};
    CompensatedSum radial;
    for (const auto& atom : measure.atoms)
        radial.add(atom.weight * std::pow(atom.radius, n + m));
    return radial.value() * angular;
}

/// Monomial Gram integral; equals delta_{nm} beta^n [n]_q! up to the
/// tail and angular roundoff.
inline std::complex<double> monomial_gram(const QParams& p, int n, int m, double tail_tol,
                                          int points) {
    return monomial_gram(nu_q_atoms(p, tail_tol), n, m, points);
}

/// Closed-form Hardy inner product
///   (F, G) = sum_n beta^n [n]_q! conj(a_n) b_n.
inline std::complex<double> hardy_inner(const MonomialSeries& f, const MonomialSeries& g) {
    if (!(f.params == g.params))
        throw std::invalid_argument("qsb: Hardy inner product with mismatched (q,beta)");
    check_params(f.params);
    const std::size_t n = std::min(f.coeffs.size(), g.coeffs.size());
    if (n == 0) return {0.0, 0.0};
    const auto w = weight_sequence(f.params, static_cast<int>(n) - 1);
    CompensatedSum re, im;
    for (std::size_t k = 0; k < n; ++k) {
        // Conjugate product first: (F,F) then has exactly zero imaginary part.
        const std::complex<double> t = w[k] * (std::conj(f.coeffs[k]) * g.coeffs[k]);
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.value(), im.value()};
}

/// Squared Hardy norm sum_n beta^n [n]_q! |a_n|^2.
inline double hardy_norm_sq(const MonomialSeries& f) {
    check_params(f.params);
    if (f.coeffs.empty()) return 0.0;
    const auto w = weight_sequence(f.params, f.degree());
    CompensatedSum s;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) s.add(w[k] * std::norm(f.coeffs[k]));
    return s.value();
}

/// Squared Hardy norm through nu_q quadrature of |F|^2; the independent
/// cross-check of the closed form above.
inline double hardy_norm_sq_quadrature(const MonomialSeries& f, const RadialAtomMeasure& measure,
                                       int points) {
    const auto integral = quad_integrate(
        [&](std::complex<double> z) -> std::complex<double> {
            return std::norm(series_eval(f, z));
        },
        measure, points);
    return integral.real();
}

}  // namespace qsb
