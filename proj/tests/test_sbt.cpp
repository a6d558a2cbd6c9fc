#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "qsb/sbt.hpp"

using namespace qsb;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<std::complex<double>> random_coeffs(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<std::complex<double>> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = {dist(rng), dist(rng)};
    return c;
}

}  // namespace

TEST_CASE("transform sends basis polynomials to monomials", "[sbt]") {
    const QParams p{0.5, 1.0};
    OrthoCoeffs d3{PolyFamily::Charlier, p, {0, 0, 0, 1}};
    const auto series = sb_transform(d3);
    REQUIRE(series.coeffs == d3.coeffs);
    REQUIRE(series.domain_radius_sq == 2.0);

    OrthoCoeffs one{PolyFamily::Charlier, p, {1}};
    REQUIRE(sb_transform(one).coeffs == one.coeffs);
}

TEST_CASE("transform round-trip is exact and isometric", "[sbt]") {
    std::mt19937_64 rng(5);
    const QParams p{0.7, 1.4};
    OrthoCoeffs f{PolyFamily::Charlier, p, random_coeffs(rng, 10)};
    const auto series = sb_transform(f);
    const auto back = sb_inverse(series, PolyFamily::Charlier);
    REQUIRE(back.coeffs == f.coeffs);
    REQUIRE(back.family == f.family);
    REQUIRE(hardy_norm_sq(series) == l2_norm_sq(f));
}

TEST_CASE("x transforms to beta + z", "[sbt]") {
    const QParams p{0.45, 1.25};
    MonomialPoly x;
    x.coeffs = {{0.0, 0.0}, {1.0, 0.0}};
    const auto series = sb_transform(monomial_to_basis(x, PolyFamily::Charlier, p));
    REQUIRE(series.coeffs.size() == 2);
    REQUIRE(series.coeffs[0].real() == 1.25);
    REQUIRE(series.coeffs[1].real() == 1.0);
}

TEST_CASE("coherent_eval basics", "[sbt]") {
    const QParams p{0.5, 1.0};
    REQUIRE(coherent_eval(PolyFamily::Charlier, p, 2.3, {0.0, 0.0}, 9) ==
            std::complex<double>{1.0, 0.0});
    // C_1 vanishes at beta, so the N=1 partial sum is still 1.
    REQUIRE(coherent_eval(PolyFamily::Charlier, p, 1.0, {0.4, 0.2}, 1) ==
            std::complex<double>{1.0, 0.0});
    REQUIRE(coherent_eval(PolyFamily::Charlier, {0.3, 1.7}, 1.7, {0.5, -0.3}, 1) ==
            std::complex<double>{1.0, 0.0});
    REQUIRE_THROWS_AS(coherent_eval(PolyFamily::Charlier, p, 0.0, {2.0, 0.0}, 4),
                      std::domain_error);
}

TEST_CASE("coherent_eval truncation settles geometrically", "[sbt]") {
    // Deep inside the disk the N=10 -> N=20 change is already below
    // 1e-10; the tail ratio is |z|/r_0 so the margin shrinks toward the
    // boundary and toward q=1.
    for (double q : {0.0, 0.3, 0.5}) {
        const QParams p{q, 1.0};
        const double r0 = std::sqrt(p.beta / (1.0 - q));
        const double x = 1.0 / (1.0 - q) + p.beta;  // inside the support
        const auto z = std::polar(0.1 * r0, 0.6);
        const auto s10 = coherent_eval(PolyFamily::Charlier, p, x, z, 10);
        const auto s20 = coherent_eval(PolyFamily::Charlier, p, x, z, 20);
        REQUIRE_THAT(std::abs(s20 - s10), WithinAbs(0.0, 1e-10));

        // Successive tails keep decreasing.
        const auto s30 = coherent_eval(PolyFamily::Charlier, p, x, z, 30);
        REQUIRE(std::abs(s30 - s20) < std::abs(s20 - s10));
    }
}

TEST_CASE("default_coherent_degree bounds the tail ratio", "[sbt]") {
    const QParams p{0.5, 1.0};
    REQUIRE(default_coherent_degree(p, {0.0, 0.0}) == 0);
    const auto z = std::polar(0.6 * std::sqrt(2.0), 0.0);
    const int n = default_coherent_degree(p, z);
    const double rho = std::norm(z) * (1.0 - p.q) / p.beta;
    REQUIRE(std::pow(rho, 0.5 * n) < 1e-14);
    REQUIRE(std::pow(rho, 0.5 * (n - 2)) >= 1e-14);
}

TEST_CASE("coherent_norm_sq values and domain", "[sbt]") {
    REQUIRE(coherent_norm_sq({0.5, 1.0}, {0.0, 0.0}) == 1.0);
    REQUIRE_THAT(coherent_norm_sq({0.0, 1.0}, {0.5, 0.0}), WithinRel(4.0 / 3.0, 1e-13));

    // Independent extended-precision series oracle at q=0.5, beta=2, |z|^2=1.
    {
        const QParams p{0.5, 2.0};
        const std::complex<double> z{0.6, 0.8};
        long double direct = 0.0L, term = 1.0L, bracket = 0.0L;
        const long double x = 0.5L;  // |z|^2 / beta
        for (int n = 0; n < 200; ++n) {
            direct += term;
            bracket = 1.0L + 0.5L * bracket;
            term *= x / bracket;
        }
        REQUIRE_THAT(coherent_norm_sq(p, z), WithinRel(static_cast<double>(direct), 1e-12));
    }

    const double boundary = std::sqrt(2.0);  // q=0.5, beta=1
    REQUIRE_THROWS_AS(coherent_norm_sq({0.5, 1.0}, {boundary, 0.0}), std::domain_error);
    REQUIRE_THROWS_AS(coherent_norm_sq({0.5, 1.0}, {2.0, 0.0}), std::domain_error);
}

TEST_CASE("coherent state squared norm equals the coefficient sum", "[sbt]") {
    for (double q : {0.0, 0.5, 0.9}) {
        const QParams p{q, 1.3};
        const auto z = std::polar(0.5 * std::sqrt(p.beta / (1.0 - q)), 1.1);
        const int degree = default_coherent_degree(p, z);
        const auto state = coherent_coeffs(PolyFamily::Charlier, p, z, degree);
        REQUIRE_THAT(l2_norm_sq(state), WithinRel(coherent_norm_sq(p, z), 1e-12));
    }
}

TEST_CASE("sb_eval_at matches the coherent inner-product route", "[sbt]") {
    const QParams p{0.5, 1.0};
    OrthoCoeffs d0{PolyFamily::Charlier, p, {1}};
    REQUIRE(sb_eval_at(d0, {0.3, 0.2}) == std::complex<double>{1.0, 0.0});

    OrthoCoeffs d4{PolyFamily::Charlier, p, {0, 0, 0, 0, 1}};
    const std::complex<double> z{0.3, -0.4};
    REQUIRE_THAT(std::abs(sb_eval_at(d4, z) - std::pow(z, 4)), WithinAbs(0.0, 1e-15));

    std::mt19937_64 rng(9);
    const double r0 = std::sqrt(p.beta / (1.0 - p.q));
    for (int trial = 0; trial < 10; ++trial) {
        OrthoCoeffs f{PolyFamily::Charlier, p, random_coeffs(rng, 8)};
        const auto zz = std::polar(0.4 * r0, 0.5 + 0.4 * trial);
        const auto direct = sb_eval_at(f, zz);
        const auto via_inner =
            l2_inner(coherent_coeffs(f.family, p, std::conj(zz), f.degree()), f);
        double scale = 1.0;
        std::complex<double> zn{1.0, 0.0};
        for (const auto& c : f.coeffs) {
            scale += std::abs(c * zn);
            zn *= zz;
        }
        REQUIRE_THAT(std::abs(direct - via_inner) / scale, WithinAbs(0.0, 1e-12));
    }

    REQUIRE_THROWS_AS(sb_eval_at(d4, {5.0, 0.0}), std::domain_error);
}

TEST_CASE("Cauchy-Schwarz form of the evaluation bound", "[sbt]") {
    // sum |a_n z^n| <= ||f|| * sqrt(exp_q(|z|^2/beta)).
    std::mt19937_64 rng(21);
    for (double q : {0.0, 0.5, 0.9}) {
        const QParams p{q, 1.0};
        const double r0 = std::sqrt(p.beta / (1.0 - q));
        for (int trial = 0; trial < 8; ++trial) {
            OrthoCoeffs f{PolyFamily::Charlier, p, random_coeffs(rng, 8)};
            const auto z = std::polar((0.1 + 0.1 * trial) * r0, 0.3 * trial);
            double lhs = 0.0, zn = 1.0;
            for (const auto& c : f.coeffs) {
                lhs += std::abs(c) * zn;
                zn *= std::abs(z);
            }
            const double rhs = std::sqrt(l2_norm_sq(f)) * std::sqrt(coherent_norm_sq(p, z));
            REQUIRE(lhs <= rhs * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("coherent states reproduce the q-exponential kernel", "[sbt]") {
    for (double q : {0.0, 0.5, 0.9}) {
        const QParams p{q, 1.5};
        const double r0 = std::sqrt(p.beta / (1.0 - q));
        for (int trial = 0; trial < 4; ++trial) {
            const auto w = std::polar(0.6 * r0, 0.4 + 0.9 * trial);
            const auto z = std::polar(0.6 * r0, 1.3 - 0.7 * trial);
            const CoherentState state{PolyFamily::Charlier, p, std::conj(w),
                                      default_coherent_degree(p, w)};
            const auto lhs = sb_eval_at(coherent_coeffs(state), z);
            const auto rhs = q_exp(std::conj(w) * z / p.beta, p.q, Tolerance{1e-9, 1e-16});
            REQUIRE_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-10 * (1.0 + std::abs(rhs))));
        }
    }
}

TEST_CASE("coherent_coeffs validates its domain", "[sbt]") {
    REQUIRE_THROWS_AS(coherent_coeffs(PolyFamily::Charlier, {0.5, 1.0}, {1.5, 0.0}, 4),
                      std::domain_error);
    REQUIRE_THROWS_AS(coherent_coeffs(PolyFamily::Charlier, {0.5, 1.0}, {0.5, 0.0}, -1),
                      std::domain_error);
}
