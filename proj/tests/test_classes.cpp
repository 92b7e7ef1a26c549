#include "doctest.h"

#include <cmath>

#include "hardylab/classes.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/factorization.hpp"

using namespace hardylab;

namespace {

FourierSeries from_fn(auto&& coeff, int order) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = coeff(n);
    return FourierSeries::from_taylor(std::span<const double>(c));
}

DiskGrid ladder_to(int j, int m) {
    std::vector<double> radii{0.0};
    for (int i = 1; i <= j; ++i) radii.push_back(1.0 - std::ldexp(1.0, -i));
    return {radii, m};
}

// sqrt(1 - z) from the binomial series.
FourierSeries sqrt_one_minus_z(int order) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1.0;
    for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n) - 1] * (n - 1.5) / n;
    return FourierSeries::from_taylor(std::span<const double>(c));
}

// Taylor coefficients of exp((1+z)/(1-z)) = e * sum L_n^{(-1)}(-2) z^n (Laguerre generating function).
FourierSeries exp_cayley(int order) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1);
    double l0 = 1.0, l1 = 2.0;
    c[0] = std::exp(1.0);
    if (order >= 1) c[1] = std::exp(1.0) * l1;
    for (int n = 2; n <= order; ++n) {
        const double ln = ((2.0 * n - 2.0 + 2.0) * l1 - (n - 2.0) * l0) / n;
        l0 = l1;
        l1 = ln;
        c[static_cast<std::size_t>(n)] = std::exp(1.0) * ln;
    }
    return FourierSeries::from_taylor(std::span<const double>(c));
}

} // namespace

TEST_CASE("lipschitz seminorm of constants and z") {
    const auto grid = ladder_to(10, 1024);
    CHECK(lipschitz_seminorm(FourierSeries::constant(3.0), 0.5, grid) == 0.0);
    CHECK(lipschitz_seminorm(FourierSeries::constant(3.0), 2.5, grid) == 0.0);
    const auto z = FourierSeries::monomial(1);
    CHECK(lipschitz_seminorm(z, 0.5, grid) == doctest::Approx(1.0));   // attained at r = 0
    CHECK(lipschitz_seminorm(z, 1.0, grid) == 0.0);
    CHECK_THROWS_AS(lipschitz_seminorm(z, 0.0, grid), DomainError);
}

TEST_CASE("lipschitz seminorm separates exponents of sqrt(1 - z)") {
    const auto f = sqrt_one_minus_z(1 << 14);
    const int m = 1 << 15;
    const double half_lo = lipschitz_seminorm(f, 0.5, ladder_to(4, m));
    const double half_hi = lipschitz_seminorm(f, 0.5, ladder_to(10, m));
    const double hi_lo = lipschitz_seminorm(f, 0.7, ladder_to(4, m));
    const double hi_hi = lipschitz_seminorm(f, 0.7, ladder_to(10, m));
    CHECK(half_hi / half_lo < 1.1);
    CHECK(hi_hi / hi_lo > 1.8);   // (1-r)^{-0.2} over six octaves is 2.3
}

TEST_CASE("lipschitz seminorm is homogeneous and monotone under coarsening") {
    const auto f = from_fn([](int n) { return std::pow(n + 1.0, -1.7); }, 512);
    const auto fine = ladder_to(8, 4096);
    const DiskGrid coarse({0.0, 0.5, 0.875}, 4096);
    const double s = lipschitz_seminorm(f, 0.6, fine);
    CHECK(lipschitz_seminorm(f * cplx{0.0, -2.5}, 0.6, fine) == doctest::Approx(2.5 * s).epsilon(1e-12));
    CHECK(lipschitz_seminorm(f, 0.6, coarse) <= s);
}

TEST_CASE("gevrey fit recovers synthetic exponents") {
    for (double alpha : {0.25, 1.0 / 3.0, 0.5}) {
        for (double c : {1.0, 2.0}) {
            const auto f = from_fn([&](int n) { return std::exp(-c * std::pow(n, alpha)); }, 2048);
            const auto fit = gevrey_fit(f);
            CHECK(std::abs(fit.alpha - alpha) < 1e-3);
            CHECK(std::abs(fit.c - c) < 1e-3);
            CHECK(fit.residual < 1e-6);
        }
    }
    const auto g = from_fn([](int n) { return std::exp(-2.0 * std::sqrt(n)); }, 2048);
    CHECK(gevrey_fit(g).verdict == ClassVerdict::Member);
}

TEST_CASE("gevrey fit on polynomials and power laws") {
    CHECK(gevrey_fit(FourierSeries::from_terms({{0, 1.0}, {3, 2.0}})).verdict == ClassVerdict::FiniteSupport);
    const auto pl = from_fn([](int n) { return std::pow(n + 1.0, -2.0); }, 2048);
    const auto fit = gevrey_fit(pl);
    CHECK(fit.verdict == ClassVerdict::NonMember);
    CHECK(fit.alpha < 0.2);
    const auto flat = from_fn([](int) { return 1.5; }, 256);
    const auto nd = gevrey_fit(flat);
    CHECK(nd.verdict == ClassVerdict::NonMember);
    CHECK(nd.alpha == 0.0);
}

TEST_CASE("gevrey class inclusion") {
    GevreyOptions third;
    third.alpha0 = 1.0 / 3.0;
    for (double alpha : {0.5, 0.6, 0.8}) {
        const auto f = from_fn([&](int n) { return std::exp(-1.5 * std::pow(n, alpha)); }, 2048);
        REQUIRE(gevrey_fit(f).verdict == ClassVerdict::Member);
        CHECK(gevrey_fit(f, third).verdict == ClassVerdict::Member);
    }
}

TEST_CASE("privalov membership of bounded and Cayley symbols") {
    const auto bounded = FourierSeries::from_terms({{0, 0.5}, {1, 0.5}});
    const auto grid = ladder_to(10, 1 << 15);
    for (double q : {1.0, 2.0, 3.0}) {
        const auto rep = privalov_membership(bounded, q, grid);
        CHECK(rep.verdict == ClassVerdict::Member);
        CHECK(rep.ladder.back() <= std::pow(std::log1p(1.0), q) + 1e-12);
    }
    std::vector<double> c(1 << 14, 2.0);
    c[0] = 1.0;
    const auto cayley = FourierSeries::from_taylor(std::span<const double>(c));
    CHECK(privalov_membership(cayley, 2.0, grid).verdict == ClassVerdict::Member);
    CHECK_THROWS_AS(privalov_membership(cayley, 0.5, grid), DomainError);
}

TEST_CASE("privalov non-membership of exp of the Cayley transform") {
    const auto f = exp_cayley(4096);
    const auto grid = ladder_to(4, 1 << 14);
    const auto rep = privalov_membership(f, 2.0, grid);
    CHECK(rep.verdict == ClassVerdict::NonMember);
    CHECK(rep.ladder.back() == doctest::Approx(16.03).epsilon(1e-2));
    // Monotone in q.
    CHECK(privalov_membership(f, 3.0, grid).verdict == ClassVerdict::NonMember);
}

TEST_CASE("coefficient growth margins") {
    CHECK(coefficient_growth_margin(FourierSeries::from_terms({{0, 4.0}, {2, 1.0}}, 64), 2.0) <= 0.0);
    const auto third = from_fn([](int n) { return std::exp(std::cbrt(static_cast<double>(n))); }, 2048);
    const double m = coefficient_growth_margin(third, 2.0);
    CHECK(m == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(growth_verdict(m) == ClassVerdict::Marginal);
    const auto fast = from_fn([](int n) { return std::exp(std::pow(n, 0.6)); }, 2048);
    const double mf = coefficient_growth_margin(fast, 2.0);
    CHECK(mf > 5.0);
    CHECK(growth_verdict(mf) == ClassVerdict::NonMember);
    // Smirnov exponent 1/2 at q = 1.
    const auto half = from_fn([](int n) { return std::exp(0.3 * std::sqrt(n)); }, 1024);
    CHECK(coefficient_growth_margin(half, 1.0) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(growth_verdict(0.3) == ClassVerdict::Member);
}
