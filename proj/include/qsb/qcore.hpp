#pragma once

// q-arithmetic primitives and q-series special functions: brackets,
// factorials, the q-exponential, Pochhammer symbols and the q-Gamma
// factorial. All routines work in plain double precision; series and
// products are truncated by explicit tail bounds.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsb {

/// Deformation/scale pair (q, beta) shared by every construction.
/// Valid range: 0 <= q < 1, beta > 0.
struct QParams {
    double q = 0.5;
    double beta = 1.0;

    friend bool operator==(const QParams&, const QParams&) = default;
};

/// Tolerances for identity checks (rel_tol) and series/product
/// truncation (tail_tol). Both must lie strictly in (0, 1).
///
/// Note on tail_tol: adaptive series stop once the next term drops
/// below tail_tol * |partial sum|, which leaves a discarded tail of
/// roughly tail_tol / (1 - r) relative, r being the asymptotic term
/// ratio. Callers near a convergence boundary should tighten tail_tol
/// accordingly.
struct Tolerance {
    double rel_tol = 1e-9;
    double tail_tol = 1e-12;
};

// Hard cap on adaptive series/product iterations. Everything here is
// geometrically dominated, so hitting the cap indicates misuse.
inline constexpr int kSeriesIterCap = 1'000'000;

inline void check_q(double q) {
    if (!(q >= 0.0 && q < 1.0))
        throw std::domain_error("qsb: q must lie in [0,1), got " + std::to_string(q));
}

inline void check_params(const QParams& p) {
    check_q(p.q);
    if (!(p.beta > 0.0))
        throw std::domain_error("qsb: beta must be positive, got " + std::to_string(p.beta));
}

inline void check_tolerance(const Tolerance& tol) {
    if (!(tol.rel_tol > 0.0 && tol.rel_tol < 1.0))
        throw std::domain_error("qsb: rel_tol must lie in (0,1)");
    if (!(tol.tail_tol > 0.0 && tol.tail_tol < 1.0))
        throw std::domain_error("qsb: tail_tol must lie in (0,1)");
}

inline void check_degree(int n) {
    if (n < 0) throw std::domain_error("qsb: degree must be nonnegative, got " + std::to_string(n));
}

/// Neumaier-compensated accumulator. Deterministic for a fixed order of
/// add() calls; error stays at a few ulps of the final value regardless
/// of the number of terms.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// q-bracket [n]_q = 1 + q + ... + q^(n-1), with [0]_q = 0.
///
/// Computed by the forward recurrence b <- 1 + q*b so that the exact
/// relation [n+1]_q = 1 + q [n]_q carries over to floating point up to
/// a couple of ulps.
inline double q_bracket(int n, double q) {
    check_q(q);
    check_degree(n);
    double b = 0.0;
    for (int k = 0; k < n; ++k) b = 1.0 + q * b;
    return b;
}

/// q-factorial [n]_q! = [1]_q [2]_q ... [n]_q, empty product for n = 0.
inline double q_factorial(int n, double q) {
    check_q(q);
    check_degree(n);
    double f = 1.0;
    double b = 0.0;
    for (int k = 0; k < n; ++k) {
        b = 1.0 + q * b;  // b = [k+1]_q
        f *= b;
    }
    return f;
}

/// Weight sequence lambda_n = beta^n [n]_q! for n = 0..N. These weights
/// define both coefficient-space inner products, so sharing one code
/// path keeps the two sides of the transform in exact agreement.
inline std::vector<double> weight_sequence(const QParams& p, int degree) {
    check_params(p);
    check_degree(degree);
    std::vector<double> w(static_cast<std::size_t>(degree) + 1);
    w[0] = 1.0;
    double b = 0.0;
    for (int n = 1; n <= degree; ++n) {
        b = 1.0 + p.q * b;  // [n]_q
        w[static_cast<std::size_t>(n)] = w[static_cast<std::size_t>(n) - 1] * p.beta * b;
    }
    return w;
}

namespace detail {

template <typename T>
inline double magnitude(const T& x) {
    return std::abs(x);
}

template <typename T>
T q_exp_impl(T x, double q, const Tolerance& tol) {
    check_q(q);
    check_tolerance(tol);
    const double radius = 1.0 / (1.0 - q);
    const double mag = magnitude(x);
    // Margin keeps us away from the catastrophically slow regime at the
    // boundary of the convergence disk.
    if (mag >= (1.0 - 1e-6) * radius)
        throw std::domain_error("qsb: q_exp argument magnitude " + std::to_string(mag) +
                                " at or beyond convergence radius " + std::to_string(radius));
    T sum = T(1);
    T term = T(1);
    double bracket = 0.0;
    for (int n = 1; n <= kSeriesIterCap; ++n) {
        bracket = 1.0 + q * bracket;  // [n]_q
        term = term * x / bracket;
        const double tmag = magnitude(term);
        if (tmag < tol.tail_tol * magnitude(sum)) return sum;
        sum += term;
        if (!(tmag < std::numeric_limits<double>::infinity()))
            throw std::runtime_error("qsb: q_exp overflow");
    }
    throw std::runtime_error("qsb: q_exp did not converge within iteration cap");
}

}  // namespace detail

/// q-exponential exp_q(x) = sum x^n/[n]_q!, convergent for |x| < 1/(1-q).
inline double q_exp(double x, double q, const Tolerance& tol = {}) {
    return detail::q_exp_impl(x, q, tol);
}
inline std::complex<double> q_exp(std::complex<double> x, double q, const Tolerance& tol = {}) {
    return detail::q_exp_impl(x, q, tol);
}

/// Finite q-Pochhammer symbol (a;q)_n = prod_{j<n} (1 - a q^j), with
/// (a;q)_0 = 1.
inline double q_pochhammer(double a, double q, int n) {
    check_q(q);
    check_degree(n);
    double prod = 1.0;
    double p = 1.0;  // q^j
    for (int j = 0; j < n; ++j) {
        prod *= 1.0 - a * p;
        p *= q;
    }
    return prod;
}

/// Infinite q-Pochhammer symbol (a;q)_inf, convergent for q in [0,1).
///
/// For |a| < 1 all factors are positive and the product is evaluated in
/// log space: log(a;q)_inf = sum log1p(-a q^j), truncated once the
/// geometric log-tail bound |a| q^(j)/(1-q) falls below tail_tol, with
/// the first-order tail correction -a q^J/(1-q) applied. This keeps the
/// relative error near machine level even when the product is tiny
/// (q close to 1). Outside |a| < 1 the plain product is used.
inline double q_pochhammer_inf(double a, double q, const Tolerance& tol = {}) {
    check_q(q);
    check_tolerance(tol);
    if (a == 0.0 || q == 0.0) return 1.0 - a * 1.0;  // only the j = 0 factor differs from 1
    if (std::abs(a) < 1.0) {
        CompensatedSum log_sum;
        double tail = 0.0;
        int j = 0;
        for (; j <= kSeriesIterCap; ++j) {
            const double aqj = a * std::pow(q, j);
            tail = std::abs(aqj) * q / ((1.0 - q) * (1.0 - std::abs(aqj) * q));
            if (std::abs(aqj) < 1e-300 || tail < tol.tail_tol * 1e-3) {
                log_sum.add(std::log1p(-aqj));
                // First-order bound on the discarded log tail.
                log_sum.add(-a * std::pow(q, j + 1) / (1.0 - q));
                break;
            }
            log_sum.add(std::log1p(-aqj));
        }
        if (j > kSeriesIterCap)
            throw std::runtime_error("qsb: q_pochhammer_inf did not converge");
        return std::exp(log_sum.value());
    }
    double prod = 1.0;
    double p = 1.0;
    for (int j = 0; j <= kSeriesIterCap; ++j) {
        prod *= 1.0 - a * p;
        p *= q;
        if (std::abs(a) * p < tol.tail_tol) return prod;
    }
    throw std::runtime_error("qsb: q_pochhammer_inf did not converge");
}

/// q-Gamma factorial Gamma_q(n+1), evaluated through the series
///
///   Gamma_q(n+1) = (q;q)_inf / (1-q)^n * sum_j q^((n+1)j) / (q;q)_j.
///
/// Mathematically this equals [n]_q!; the two independent code paths are
/// cross-checked in the test suite rather than assumed here.
inline double q_gamma_factorial(int n, double q, const Tolerance& tol = {}) {
    check_q(q);
    check_degree(n);
    check_tolerance(tol);
    if (q == 0.0) return 1.0;  // only the j = 0 term survives
    CompensatedSum series;
    double power = 1.0;        // q^((n+1) j)
    double poch = 1.0;         // (q;q)_j
    const double step = std::pow(q, n + 1);
    double qj = 1.0;           // q^j (for the Pochhammer update)
    int iter = 0;
    for (; iter <= kSeriesIterCap; ++iter) {
        const double term = power / poch;
        series.add(term);
        if (term < tol.tail_tol * series.value()) break;
        power *= step;
        qj *= q;
        poch *= 1.0 - qj;
    }
    if (iter > kSeriesIterCap)
        throw std::runtime_error("qsb: q_gamma_factorial did not converge");
    const double euler = q_pochhammer_inf(q, q, tol);
    return euler / std::pow(1.0 - q, n) * series.value();
}

}  // namespace qsb
