#include "hardylab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hardylab/errors.hpp"
#include "hardylab/fft.hpp"

namespace hardylab {
namespace {

int support_order(const FourierSeries& f) {
    for (int n = f.order(); n > 0; --n)
        if (f[n] != cplx{} || f[-n] != cplx{}) return n;
    return 0;
}

std::size_t slot(int n, int m) {
    const int r = n % m;
    return static_cast<std::size_t>(r < 0 ? r + m : r);
}

void require_grid(int m, int order, const char* what) {
    if (!detail::is_power_of_two(m))
        throw GridError(std::string(what) + ": grid size " + std::to_string(m) + " is not a power of two");
    if (m < 2 * order + 1)
        throw GridError(std::string(what) + ": grid size " + std::to_string(m) + " too small for order " +
                        std::to_string(order) + " (need M >= 2N+1)");
}

void require_analytic(const FourierSeries& f, const char* what) {
    if (!f.is_analytic()) throw DomainError(std::string(what) + ": series has negative-index coefficients");
}

} // namespace

BoundaryGrid::BoundaryGrid(std::vector<cplx> values) : values_(std::move(values)) {
    if (!detail::is_power_of_two(static_cast<long long>(values_.size())))
        throw GridError("boundary grid size " + std::to_string(values_.size()) + " is not a power of two");
}

BoundaryGrid BoundaryGrid::from_real(std::span<const double> values) {
    return BoundaryGrid(std::vector<cplx>(values.begin(), values.end()));
}

cplx BoundaryGrid::point(int k, int m) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
}

DiskGrid::DiskGrid(std::vector<double> radii, int angular_resolution)
    : radii_(std::move(radii)), m_(angular_resolution) {
    if (radii_.empty()) throw GridError("disk grid needs at least one radius");
    if (!detail::is_power_of_two(m_)) throw GridError("disk grid angular resolution must be a power of two");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        if (!(radii_[i] >= 0.0 && radii_[i] < 1.0)) throw GridError("disk grid radii must lie in [0, 1)");
        if (i > 0 && radii_[i] <= radii_[i - 1]) throw GridError("disk grid radii must be strictly increasing");
    }
}

DiskGrid DiskGrid::standard(int angular_resolution) {
    std::vector<double> radii{0.0};
    for (int j = 1; j <= 14; ++j) radii.push_back(1.0 - std::ldexp(1.0, -j));
    return DiskGrid(std::move(radii), angular_resolution);
}

DiskGrid DiskGrid::ladder(int dim) {
    if (dim < 1) throw GridError("ladder needs dim >= 1");
    int m = 1024;
    while (m < 8 * dim) m <<= 1;
    std::vector<double> radii{0.0};
    const int top = static_cast<int>(std::floor(std::log2(static_cast<double>(dim)))) + 1;
    for (int j = 1; j <= top; ++j) radii.push_back(1.0 - std::ldexp(1.0, -j));
    return DiskGrid(std::move(radii), m);
}

DiskGrid DiskGrid::boundary(const Settings& settings) {
    return DiskGrid({settings.boundary_radius}, settings.grid_size);
}

FourierSeries analyze(const BoundaryGrid& samples, int order) {
    const int m = samples.size();
    require_grid(m, order, "analyze");
    const auto spectrum = detail::fft_forward(samples.values());
    const double inv = 1.0 / static_cast<double>(m);
    FourierSeries f(order);
    for (int n = -order; n <= order; ++n) f.set(n, spectrum[slot(n, m)] * inv);
    return f;
}

std::vector<cplx> sample_at_radius(const FourierSeries& f, double r, int m) {
    const int order = support_order(f);
    require_grid(m, order, "synthesize");
    std::vector<cplx> spec(static_cast<std::size_t>(m));
    double pw = 1.0;
    spec[0] = f[0];
    for (int n = 1; n <= order; ++n) {
        pw *= r;
        spec[slot(n, m)] += f[n] * pw;
        spec[slot(-n, m)] += f[-n] * pw;
    }
    return detail::fft_inverse(spec);
}

BoundaryGrid synthesize(const FourierSeries& f, int m) { return BoundaryGrid(sample_at_radius(f, 1.0, m)); }

FourierSeries derivative(const FourierSeries& f, int k) {
    require_analytic(f, "derivative");
    FourierSeries out(f.order());
    for (int n = k; n <= f.order(); ++n) {
        double factor = 1.0;
        for (int j = 0; j < k; ++j) factor *= static_cast<double>(n - j);
        out.set(n - k, f[n] * factor);
    }
    return out;
}

FourierSeries project_plus(const FourierSeries& f) {
    FourierSeries out(f.order());
    for (int n = 0; n <= f.order(); ++n) out.set(n, f[n]);
    return out;
}

FourierSeries project_minus(const FourierSeries& f) {
    FourierSeries out(f.order());
    for (int n = 1; n <= f.order(); ++n) out.set(-n, f[-n]);
    return out;
}

FourierSeries conj_series(const FourierSeries& f) {
    FourierSeries out(f.order());
    for (int n = -f.order(); n <= f.order(); ++n) out.set(n, std::conj(f[-n]));
    return out;
}

cplx evaluate(const FourierSeries& f, cplx z) {
    if (std::abs(z) >= 1.0) throw DomainError("evaluate: |z| must be < 1");
    require_analytic(f, "evaluate");
    cplx acc{};
    for (int n = f.degree(); n >= 0; --n) acc = acc * z + f[n];
    return acc;
}

double hp_quasinorm(const FourierSeries& f, double p, const DiskGrid& grid) {
    if (!(p > 0.0)) throw DomainError("hp_quasinorm: p must be positive");
    double best = 0.0;
    for (double r : grid.radii()) {
        const auto vals = sample_at_radius(f, r, grid.angular_resolution());
        double s = 0.0;
        for (cplx v : vals) s += std::pow(std::abs(v), p);
        best = std::max(best, s / static_cast<double>(vals.size()));
    }
    return std::pow(best, 1.0 / p);
}

double privalov_distance(const FourierSeries& f, const FourierSeries& g, double q, const DiskGrid& grid) {
    if (!(q >= 1.0)) throw DomainError("privalov_distance: q must be >= 1");
    const auto vals = sample_at_radius(f - g, grid.largest_radius(), grid.angular_resolution());
    double s = 0.0;
    for (cplx v : vals) s += std::pow(std::log1p(std::abs(v)), q);
    return s / static_cast<double>(vals.size());
}

double garsia_bmoa_norm(const FourierSeries& u, const DiskGrid& grid) {
    const int m = grid.angular_resolution();
    const auto boundary = sample_at_radius(u, 1.0, m);
    std::vector<cplx> sq(boundary.size());
    for (std::size_t k = 0; k < sq.size(); ++k) sq[k] = std::norm(boundary[k]);
    auto spectrum = detail::fft_forward(sq);
    const double inv = 1.0 / static_cast<double>(m);
    double best = 0.0;
    std::vector<cplx> damped(spectrum.size());
    for (double r : grid.radii()) {
        for (int k = 0; k < m; ++k) {
            const int n = k <= m / 2 ? k : k - m;
            damped[static_cast<std::size_t>(k)] = spectrum[static_cast<std::size_t>(k)] * inv *
                                                  std::pow(r, std::abs(n));
        }
        const auto poisson = detail::fft_inverse(damped);
        const auto inner = sample_at_radius(u, r, m);
        for (int k = 0; k < m; ++k) {
            const double v = poisson[static_cast<std::size_t>(k)].real() - std::norm(inner[static_cast<std::size_t>(k)]);
            best = std::max(best, v);
        }
    }
    return std::sqrt(best);
}

cplx duality_pairing(const FourierSeries& f, const FourierSeries& m, const DiskGrid& grid) {
    const double r2 = grid.largest_radius() * grid.largest_radius();
    const int top = std::min(f.order(), m.order());
    cplx acc{};
    double pw = 1.0;
    for (int n = 0; n <= top; ++n) {
        acc += f[n] * std::conj(m[n]) * pw;
        pw *= r2;
    }
    return acc;
}

double radial_tolerance(const FourierSeries& f, const DiskGrid& grid) {
    const int d = std::max(f.degree(), 0);
    return 1.0 - std::pow(grid.largest_radius(), d);
}

} // namespace hardylab
