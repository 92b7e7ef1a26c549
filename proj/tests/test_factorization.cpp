#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "hardylab/errors.hpp"
#include "hardylab/factorization.hpp"

using namespace hardylab;
using std::numbers::pi;

namespace {

Settings small_settings() { return {256, 1 << 12, 1.0 - 0x1p-12}; }

BoundaryGrid log_modulus_of(auto&& fn, int m) {
    std::vector<double> g(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double a = std::abs(fn(BoundaryGrid::point(k, m)));
        g[static_cast<std::size_t>(k)] = a == 0.0 ? -INFINITY : std::log(a);
    }
    return BoundaryGrid::from_real(g);
}

double max_grid_error(const FourierSeries& f, const FourierSeries& g, int m) {
    const auto x = synthesize(f, m), y = synthesize(g, m);
    double d = 0.0;
    for (int k = 0; k < m; ++k) d = std::max(d, std::abs(x[k] - y[k]));
    return d;
}

} // namespace

TEST_CASE("outer function of a constant log-modulus") {
    std::vector<double> zeros(1024, 0.0), twos(1024, 2.0);
    const auto one = outer_from_log_modulus(BoundaryGrid::from_real(zeros), 64);
    CHECK(max_coefficient_distance(one, FourierSeries::constant(1.0)) < 1e-14);
    const auto e2 = outer_from_log_modulus(BoundaryGrid::from_real(twos), 64);
    CHECK(max_coefficient_distance(e2, FourierSeries::constant(std::exp(2.0))) < 1e-12);
}

TEST_CASE("outer function 1 - z from its boundary log-modulus") {
    const int m = 1 << 12;
    const auto f = outer_from_log_modulus(log_modulus_of([](cplx z) { return 1.0 - z; }, m), 256);
    CHECK(max_coefficient_distance(f, FourierSeries::from_terms({{0, 1.0}, {1, -1.0}})) < 1e-6);
}

TEST_CASE("outer reconstruction of rational outer functions") {
    const int m = 1 << 12;
    auto check = [&](auto&& fn, FourierSeries expected) {
        const auto f = outer_from_log_modulus(log_modulus_of(fn, m), 256);
        CHECK(max_coefficient_distance(f, expected.with_order(256)) < 1e-6);
    };
    check([](cplx z) { return (1.0 - z) / 2.0; }, FourierSeries::from_terms({{0, 0.5}, {1, -0.5}}));
    check([](cplx z) { return (1.0 - z) * (1.0 - z); }, FourierSeries::from_terms({{0, 1.0}, {1, -2.0}, {2, 1.0}}));
    check([](cplx z) { return 2.0 + z; }, FourierSeries::from_terms({{0, 2.0}, {1, 1.0}}));
}

TEST_CASE("outer reconstruction with a zero between grid points") {
    const int m = 1 << 12;
    const cplx w = std::polar(1.0, pi / m);  // halfway between two samples
    const auto f = outer_from_log_modulus(log_modulus_of([&](cplx z) { return 1.0 - std::conj(w) * z; }, m), 128);
    CHECK(std::abs(f[0] - 1.0) < 1e-3);
    CHECK(std::abs(f[1] + std::conj(w)) < 1e-3);
}

TEST_CASE("outer_from_log_modulus rejects bad samples") {
    std::vector<cplx> nonreal(256, cplx{0.0, 1.0});
    CHECK_THROWS_AS(outer_from_log_modulus(BoundaryGrid(nonreal), 16), NumericalError);
    std::vector<double> huge(256, 1000.0);
    CHECK_THROWS_AS(outer_from_log_modulus(BoundaryGrid::from_real(huge), 16), NumericalError);
    std::vector<double> dead(256, -INFINITY);
    CHECK_THROWS_AS(outer_from_log_modulus(BoundaryGrid::from_real(dead), 16), NumericalError);
}

TEST_CASE("outer powers") {
    const auto s = small_settings();
    const auto f = FourierSeries::from_terms({{0, 2.0}, {1, 0.5}, {2, -0.25}});
    CHECK(max_coefficient_distance(outer_power(f, 1.0, s), f.with_order(s.working_order)) < 1e-8);
    CHECK(max_coefficient_distance(outer_power(FourierSeries::constant(4.0), 0.5, s), FourierSeries::constant(2.0)) <
          1e-12);
    const auto sq = outer_power(FourierSeries::from_terms({{0, 1.0}, {1, -1.0}}), 2.0, s);
    CHECK(max_coefficient_distance(sq, FourierSeries::from_terms({{0, 1.0}, {1, -2.0}, {2, 1.0}})) < 1e-6);
    CHECK(outer_power_factor(FourierSeries::from_terms({{0, 1.0}, {1, -1.0}}), 2.0, s).has_boundary_zeros());
}

TEST_CASE("outer_power boundary modulus is |f|^theta") {
    const auto s = small_settings();
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    for (int trial = 0; trial < 4; ++trial) {
        const auto f = FourierSeries::from_terms({{0, 1.0}, {1, {u(rng), u(rng)}}, {2, {u(rng), u(rng)}}});
        for (double theta : {0.5, 1.5, 3.0}) {
            const auto vals = outer_power_factor(f, theta, s).boundary_values();
            const auto fv = synthesize(f, s.grid_size);
            double err = 0.0;
            for (int k = 0; k < s.grid_size; ++k)
                err = std::max(err, std::abs(std::abs(vals[static_cast<std::size_t>(k)]) - std::pow(std::abs(fv[k]), theta)));
            CHECK(err < 1e-6);
        }
    }
}

TEST_CASE("pythagorean mates") {
    const auto c = pythagorean_mate(FourierSeries::constant(0.6));
    CHECK(max_coefficient_distance(c.a, FourierSeries::constant(0.8)) < 1e-12);

    const auto pair = pythagorean_mate(FourierSeries::from_terms({{0, 0.5}, {1, 0.5}}));
    CHECK(max_coefficient_distance(pair.a, FourierSeries::from_terms({{0, 0.5}, {1, -0.5}})) < 1e-8);
    CHECK(pair_defect(pair) < 1e-9);
    CHECK(pair.a[0].real() > 0.0);

    CHECK_THROWS_AS(pythagorean_mate(FourierSeries::monomial(1)), ExtremePointError);
    CHECK_THROWS_AS(pythagorean_mate(FourierSeries::constant(1.5)), DomainError);
}

TEST_CASE("mate with a double boundary zero") {
    // b = 1/q with |q|^2 = 7 - 8 cos t + 2 cos 2t, so 1 - |b|^2 = |1 - z|^4 / |q|^2.
    // Roots of q solve z + 1/z = 2 +- i; keep the pair outside the disk.
    const cplx w{2.0, 1.0};
    cplx r = 0.5 * (w + std::sqrt(w * w - 4.0));
    if (std::abs(r) < 1.0) r = 1.0 / r;
    const double q1 = -2.0 * (1.0 / r).real(), q2 = std::norm(1.0 / r);
    const double k = std::sqrt(7.0 / (1.0 + q1 * q1 + q2 * q2));
    RationalFunction inv_q{{1.0}, {k, k * q1, k * q2}};
    CHECK(inv_q.denominator[0].real() == doctest::Approx(2.081019).epsilon(1e-6));
    const auto b = inv_q.series(512);
    const auto pair = pythagorean_mate(b, 1e-6, {}, small_settings());
    CHECK(pair_defect(pair, small_settings().grid_size) < 1e-6);
    // a = (1 - z)^2 / q
    const auto expected = multiply(FourierSeries::from_terms({{0, 1.0}, {1, -2.0}, {2, 1.0}}),
                                   RationalFunction{{1.0}, inv_q.denominator}.series(256), 256);
    CHECK(max_coefficient_distance(pair.a.with_order(256), expected) < 1e-6);
}

TEST_CASE("non-extremality margin") {
    CHECK(non_extremality_margin(FourierSeries::constant(0.6)) == doctest::Approx(std::log(0.64)).epsilon(1e-12));
    CHECK(non_extremality_margin(FourierSeries::constant(0.0)) == 0.0);
    CHECK(non_extremality_margin(FourierSeries::from_terms({{0, 0.5}, {1, 0.5}})) ==
          doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-6));
    CHECK(non_extremality_margin(FourierSeries::monomial(1)) == kMinusInfinity);
}

TEST_CASE("pythagorean factorization examples") {
    const auto s = small_settings();
    const auto one = pythagorean_factorize(FourierSeries::constant(1.0), {}, 1e-6, s);
    CHECK(std::abs(one.c - 1.0) < 1e-12);
    CHECK(max_coefficient_distance(one.pair.a, FourierSeries::constant(std::sqrt(0.5))) < 1e-12);
    CHECK(max_coefficient_distance(one.pair.b, FourierSeries::constant(std::sqrt(0.5))) < 1e-12);

    const RationalFunction cayley{{1.0, 1.0}, {1.0, -1.0}};
    const auto f = pythagorean_factorize(cayley, {}, 1e-6, s);
    CHECK(std::abs(f.c - 1.0) < 1e-6);
    CHECK(max_coefficient_distance(f.pair.b, FourierSeries::from_terms({{0, 0.5}, {1, 0.5}})) < 1e-6);
    CHECK(max_coefficient_distance(f.pair.a, FourierSeries::from_terms({{0, 0.5}, {1, -0.5}})) < 1e-6);
    CHECK(f.recombination_residual < 1e-6);

    const auto zf = pythagorean_factorize(FourierSeries::monomial(1), BlaschkeSpec{{0.0}, 1.0}, 1e-6, s);
    CHECK(std::abs(zf.c - 1.0) < 1e-12);
    CHECK(max_coefficient_distance(zf.pair.b, FourierSeries::monomial(1, std::sqrt(0.5))) < 1e-12);
    CHECK(max_coefficient_distance(zf.pair.a, FourierSeries::constant(std::sqrt(0.5))) < 1e-12);

    CHECK_THROWS_AS(pythagorean_factorize(FourierSeries::monomial(1), {}, 1e-6, s), NumericalError);
    CHECK_THROWS_AS(pythagorean_factorize(RationalFunction{{1.0}, {0.5, -1.0}}, {}, 1e-6, s), DomainError);
}

TEST_CASE("factorization outputs are positive at the origin and recombine") {
    const auto s = small_settings();
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const auto h = FourierSeries::from_terms({{0, {u(rng), u(rng)}}, {1, {u(rng), u(rng)}}, {3, {u(rng), u(rng)}}});
        const BlaschkeSpec inner{{cplx{0.3 * u(rng), 0.3 * u(rng)}}, 1.0};
        const auto hi = multiply(h, inner.series(s.working_order), s.working_order);
        try {
            const auto f = pythagorean_factorize(hi, inner, 1e-6, s);
            CHECK(f.a_outer.value_at_origin() > 0.0);
            CHECK(f.b_outer.value_at_origin() > 0.0);
            CHECK(std::abs(f.pair.a[0].imag()) < 1e-12);
            CHECK(std::abs(std::abs(f.c) - 1.0) < 1e-12);
            CHECK(pair_defect(f.pair, s.grid_size) < 1e-6);
        } catch (const NumericalError&) {
            // h may vanish inside the disk; such h is not outer and is skipped
        }
    }
}

TEST_CASE("stability experiment") {
    const auto s = small_settings();
    const RationalFunction cayley{{1.0, 1.0}, {1.0, -1.0}};
    std::vector<FourierSeries> none(3, FourierSeries{});
    const auto zero = stability_experiment(cayley, none, 1e-6, s);
    for (const auto& row : zero.rows) {
        CHECK(row.metric == 0.0);
        CHECK(row.a_error == 0.0);
        CHECK(row.b_error == 0.0);
    }

    std::vector<FourierSeries> consts;
    for (int n : {2, 4, 8, 16}) consts.push_back(FourierSeries::constant(1.0 / n));
    const auto t = stability_experiment(FourierSeries::constant(1.0), consts, 1e-6, s);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double n = std::pow(2.0, static_cast<double>(i + 1));
        const double an = 1.0 / std::sqrt(1.0 + (1.0 + 1.0 / n) * (1.0 + 1.0 / n));
        CHECK(t.rows[i].a_error == doctest::Approx(std::abs(an - std::sqrt(0.5))).epsilon(1e-9));
    }
    CHECK(t.strictly_decreasing);
}

TEST_CASE("rational inner part and perturbed stability") {
    const RationalFunction cayley{{1.0, 1.0}, {1.0, -1.0}};
    CHECK(cayley.inner_part().zeros.empty());
    const auto h4 = cayley.plus(FourierSeries::monomial(4, 0.25));
    CHECK(h4.inner_part().zeros.size() == 2);
    CHECK_THROWS_AS(pythagorean_factorize(h4, {}, 1e-6, small_settings()), NumericalError);
    CHECK_NOTHROW(pythagorean_factorize(h4, h4.inner_part(), 1e-6, small_settings()));

    std::vector<FourierSeries> p;
    for (int n : {4, 16, 64}) p.push_back(FourierSeries::monomial(n, 1.0 / n));
    const auto t = stability_experiment(cayley, p, 1e-6, small_settings());
    CHECK(t.strictly_decreasing);
    CHECK(t.rows.back().a_error < 1e-1);
}

TEST_CASE("rational series by long division") {
    const RationalFunction cayley{{1.0, 1.0}, {1.0, -1.0}};
    const auto s = cayley.series(5);
    CHECK(s[0] == cplx{1.0});
    for (int n = 1; n <= 5; ++n) CHECK(s[n] == cplx{2.0});
    CHECK_THROWS_AS(RationalFunction({1.0}, {0.0, 1.0}).series(3), DomainError);
}
