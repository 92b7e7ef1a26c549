#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "hardylab/errors.hpp"
#include "hardylab/spectral.hpp"

using namespace hardylab;
using std::numbers::pi;

namespace {

BoundaryGrid sampled(int m, auto&& fn) {
    std::vector<cplx> v(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(k)] = fn(2.0 * pi * k / m);
    return BoundaryGrid(std::move(v));
}

FourierSeries random_series(std::mt19937& rng, int order, bool analytic) {
    std::normal_distribution<double> d;
    FourierSeries f(order);
    for (int n = analytic ? 0 : -order; n <= order; ++n) f.set(n, {d(rng), d(rng)});
    return f;
}

} // namespace

TEST_CASE("analyze recovers trigonometric coefficients") {
    const auto c = analyze(sampled(8, [](double) { return cplx{1.0}; }), 2);
    CHECK(std::abs(c[0] - 1.0) < 1e-15);
    CHECK(std::abs(c[1]) < 1e-15);

    const auto e = analyze(sampled(8, [](double t) { return std::polar(1.0, t); }), 2);
    CHECK(std::abs(e[1] - 1.0) < 1e-15);
    CHECK(std::abs(e[0]) < 1e-15);

    const auto cs = analyze(sampled(16, [](double t) { return cplx{2.0 * std::cos(t)}; }), 3);
    CHECK(std::abs(cs[1] - 1.0) < 1e-14);
    CHECK(std::abs(cs[-1] - 1.0) < 1e-14);
    CHECK(std::abs(cs[2]) < 1e-14);
}

TEST_CASE("analyze rejects undersized grids") {
    CHECK_THROWS_AS(analyze(sampled(4, [](double) { return cplx{1.0}; }), 2), GridError);
    CHECK_THROWS_AS(BoundaryGrid(std::vector<cplx>(6)), GridError);
}

TEST_CASE("synthesize samples z on four points") {
    const auto g = synthesize(FourierSeries::from_terms({{1, 1.0}}), 4);
    const cplx want[] = {1.0, {0.0, 1.0}, -1.0, {0.0, -1.0}};
    for (int k = 0; k < 4; ++k) CHECK(std::abs(g[k] - want[k]) < 1e-15);
}

TEST_CASE("synthesize and analyze are inverse on admissible grids") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_series(rng, 20, false);
        const auto back = analyze(synthesize(f, 64), 20);
        CHECK(max_coefficient_distance(f, back) < 1e-13);
    }
}

TEST_CASE("projections split a series and conj is an involution") {
    std::mt19937 rng(11);
    const auto f = random_series(rng, 12, false);
    CHECK(max_coefficient_distance(project_plus(f) + project_minus(f), f) == 0.0);
    CHECK(max_coefficient_distance(conj_series(conj_series(f)), f) == 0.0);
    CHECK(project_plus(project_minus(f)).is_zero());

    // conj(P_+ f) = P_- conj f + conj(f_0)
    auto lhs = conj_series(project_plus(f));
    auto rhs = project_minus(conj_series(f)) + FourierSeries::constant(std::conj(f[0]));
    CHECK(max_coefficient_distance(lhs, rhs) < 1e-15);
}

TEST_CASE("evaluate sums the power series inside the disk") {
    std::vector<double> geo(60, 1.0);
    const auto f = FourierSeries::from_taylor(std::span<const double>(geo));
    CHECK(std::abs(evaluate(f, 0.25) - 4.0 / 3.0) < 1e-15);
    CHECK_THROWS_AS(evaluate(f, 1.0), DomainError);
    CHECK_THROWS_AS(evaluate(FourierSeries::from_terms({{-1, 1.0}}), 0.1), DomainError);
}

TEST_CASE("derivative of a polynomial") {
    const auto f = FourierSeries::from_terms({{0, 3.0}, {2, 1.0}, {3, 2.0}});
    const auto d = derivative(f);
    CHECK(d[1] == cplx{2.0});
    CHECK(d[2] == cplx{6.0});
    CHECK(d[0] == cplx{0.0});
    CHECK(derivative(f, 2)[0] == cplx{2.0});
}

TEST_CASE("hp quasinorm of 1 + z") {
    const auto f = FourierSeries::from_terms({{0, 1.0}, {1, 1.0}});
    const DiskGrid grid({0.0, 0.5, 1.0 - 1e-9}, 256);
    CHECK(hp_quasinorm(f, 2.0, grid) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
    CHECK_THROWS_AS(hp_quasinorm(f, 0.0, grid), DomainError);
    CHECK_THROWS_AS(hp_quasinorm(f, -1.0, grid), DomainError);
}

TEST_CASE("hp quasinorm is monotone in p on a probability space") {
    std::mt19937 rng(3);
    const auto f = random_series(rng, 10, true);
    const auto grid = DiskGrid::standard(256);
    double prev = 0.0;
    for (double p : {0.5, 1.0, 2.0, 4.0}) {
        const double v = hp_quasinorm(f, p, grid);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("privalov distance of a constant") {
    const auto f = FourierSeries::constant(std::numbers::e - 1.0);
    CHECK(privalov_distance(f, FourierSeries{}, 1.0, DiskGrid::boundary()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(privalov_distance(f, f, 2.0, DiskGrid::boundary()) == 0.0);
    CHECK_THROWS_AS(privalov_distance(f, f, 0.5, DiskGrid::boundary()), DomainError);
}

TEST_CASE("privalov distance obeys the triangle inequality for q = 1") {
    std::mt19937 rng(5);
    const auto grid = DiskGrid({0.99}, 256);
    for (int t = 0; t < 5; ++t) {
        const auto f = random_series(rng, 8, true), g = random_series(rng, 8, true), h = random_series(rng, 8, true);
        CHECK(privalov_distance(f, h, 1.0, grid) <=
              privalov_distance(f, g, 1.0, grid) + privalov_distance(g, h, 1.0, grid) + 1e-12);
    }
}

TEST_CASE("garsia norm of z is one") {
    const auto z = FourierSeries::monomial(1);
    CHECK(garsia_bmoa_norm(z, DiskGrid::standard(1024)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(garsia_bmoa_norm(FourierSeries::constant(5.0), DiskGrid::standard(64)) == 0.0);
}

TEST_CASE("duality pairing") {
    const auto f = FourierSeries::from_terms({{0, 1.0}, {1, 1.0}});
    const auto m = FourierSeries::from_terms({{1, 1.0 / 3.0}});
    const DiskGrid grid({1.0 - 1e-12}, 64);
    CHECK(std::abs(duality_pairing(f, m, grid) - 1.0 / 3.0) < 1e-10);
    CHECK(radial_tolerance(f, grid) < 1e-11);
}

TEST_CASE("disk grid validation") {
    CHECK_THROWS_AS(DiskGrid({}, 64), GridError);
    CHECK_THROWS_AS(DiskGrid({0.5, 0.2}, 64), GridError);
    CHECK_THROWS_AS(DiskGrid({1.0}, 64), GridError);
    CHECK_THROWS_AS(DiskGrid({0.5}, 60), GridError);
}
