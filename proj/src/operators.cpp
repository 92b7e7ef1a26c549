#include "hardylab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hardylab/errors.hpp"
#include "hardylab/fft.hpp"
#include "hardylab/spectral.hpp"

namespace hardylab {

ToeplitzMatrix::ToeplitzMatrix(FourierSeries symbol, int dim) : symbol_(std::move(symbol)) {
    if (dim < 1) throw DimensionError("Toeplitz truncation needs dim >= 1");
    entries_.resize(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) entries_(j, k) = std::conj(symbol_[k - j]);
}

HankelMatrix::HankelMatrix(FourierSeries symbol, int dim) : symbol_(std::move(symbol)) {
    if (dim < 1) throw DimensionError("Hankel truncation needs dim >= 1");
    entries_.resize(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) entries_(j, k) = std::conj(symbol_[j + k + 1]);
}

ToeplitzMatrix toeplitz_matrix(const FourierSeries& g, int dim) { return {g, dim}; }
HankelMatrix hankel_matrix(const FourierSeries& m, int dim) { return {m, dim}; }

std::vector<cplx> apply(const ComplexMatrix& matrix, std::span<const cplx> v) {
    if (static_cast<Eigen::Index>(v.size()) != matrix.cols())
        throw DimensionError("apply: vector of length " + std::to_string(v.size()) + " for a matrix with " +
                             std::to_string(matrix.cols()) + " columns");
    const Eigen::Map<const ComplexVector> x(v.data(), static_cast<Eigen::Index>(v.size()));
    const ComplexVector y = matrix * x;
    return {y.data(), y.data() + y.size()};
}

std::vector<cplx> apply(const ToeplitzMatrix& matrix, std::span<const cplx> v) { return apply(matrix.entries(), v); }
std::vector<cplx> apply(const HankelMatrix& matrix, std::span<const cplx> v) { return apply(matrix.entries(), v); }
FourierSeries hankel_image(const HankelMatrix& matrix, std::span<const cplx> h) {
    const auto out = hardylab::apply(matrix, h);
    FourierSeries u(static_cast<int>(out.size()));
    for (std::size_t j = 0; j < out.size(); ++j) u.set(static_cast<int>(j) + 1, std::conj(out[j]));
    return u;
}

NormEstimate operator_norm(const ComplexMatrix& matrix, double rel_tol, int max_iterations) {
    NormEstimate est;
    if (matrix.size() == 0) return est;
    std::mt19937 rng(12345);
    std::normal_distribution<double> nd;
    ComplexVector x(matrix.cols());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = cplx{nd(rng), nd(rng)};
    x.normalize();

    double sigma2 = 0.0;
    est.converged = false;
    for (int it = 1; it <= max_iterations; ++it) {
        const ComplexVector y = matrix.adjoint() * (matrix * x);
        const double next = std::abs(x.dot(y));   // Rayleigh quotient of M^H M
        const double ny = y.norm();
        est.iterations = it;
        if (ny == 0.0) {
            sigma2 = 0.0;
            est.converged = true;
            break;
        }
        x = y / ny;
        if (std::abs(next - sigma2) <= rel_tol * next) {
            sigma2 = next;
            est.converged = true;
            break;
        }
        sigma2 = next;
    }
    est.value = std::sqrt(sigma2);
    return est;
}

NormEstimate operator_norm(const ToeplitzMatrix& matrix, double rel_tol, int max_iterations) {
    return operator_norm(matrix.entries(), rel_tol, max_iterations);
}
NormEstimate operator_norm(const HankelMatrix& matrix, double rel_tol, int max_iterations) {
    return operator_norm(matrix.entries(), rel_tol, max_iterations);
}

double commutation_residual(const FourierSeries& g1, const FourierSeries& g2, int dim) {
    if (!g1.is_analytic() || !g2.is_analytic()) throw DomainError("commutation_residual: symbols must be analytic");
    const int d1 = std::max(g1.degree(), 0), d2 = std::max(g2.degree(), 0);
    const int window = dim - d1 - d2;
    if (window < 1)
        throw DimensionError("commutation_residual: dim " + std::to_string(dim) + " leaves an empty window for degrees " +
                             std::to_string(d1) + " and " + std::to_string(d2));
    const auto t1 = toeplitz_matrix(g1, dim).entries();
    const auto t2 = toeplitz_matrix(g2, dim).entries();
    const auto t12 = toeplitz_matrix(multiply(g1, g2, d1 + d2), dim).entries();
    const ComplexMatrix a = t1 * t2, b = t2 * t1;
    double worst = 0.0;
    for (int j = 0; j < window; ++j)
        for (int k = 0; k < window; ++k)
            worst = std::max({worst, std::abs(t12(j, k) - a(j, k)), std::abs(t12(j, k) - b(j, k)),
                              std::abs(a(j, k) - b(j, k))});
    return worst;
}

// ---------------------------------------------------------------------------
// Continuity probes

std::string ProbeSpace::name() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Hp: os << "Hp(" << exponent << ")"; break;
    case Kind::Privalov: os << "Privalov(" << exponent << ")"; break;
    case Kind::Smirnov: os << "Smirnov"; break;
    }
    return os.str();
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Bounded: return "Bounded";
    case Verdict::Divergent: return "Divergent";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

Verdict ratio_verdict(double ratio, double bounded_threshold, double divergent_threshold) {
    if (ratio < bounded_threshold) return Verdict::Bounded;
    if (ratio > divergent_threshold) return Verdict::Divergent;
    return Verdict::Inconclusive;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Radius standing in for the boundary when measuring atom size.
constexpr double kUnitRadius = 1.0 - 0x1p-14;

// (1-|w|^2)^{1/p} (1 - conj(w) z)^{-2/p}, first dim coefficients.
std::vector<cplx> hp_atom(cplx w, double p, int dim) {
    const double a = 2.0 / p;
    std::vector<cplx> h(static_cast<std::size_t>(dim));
    cplx c{std::pow(1.0 - std::norm(w), 1.0 / p)};
    h[0] = c;
    for (int k = 1; k < dim; ++k) {
        c *= std::conj(w) * ((a + k - 1) / k);
        h[static_cast<std::size_t>(k)] = c;
    }
    return h;
}

// Samples of F = lambda (1 + conj(w) z)/(1 - conj(w) z) on m points.
std::vector<cplx> exp_atom_exponent(double lambda, cplx w, int m) {
    std::vector<cplx> f(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const cplx wz = std::conj(w) * BoundaryGrid::point(k, m);
        f[static_cast<std::size_t>(k)] = lambda * (1.0 + wz) / (1.0 - wz);
    }
    return f;
}

// mean (log(1 + |e^F|))^q, with log(1 + e^x) evaluated stably.
double exp_atom_metric(const std::vector<cplx>& f, double q) {
    double s = 0.0;
    for (cplx v : f) {
        const double x = v.real();
        const double sp = x > 30.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
        s += std::pow(sp, q);
    }
    return s / static_cast<double>(f.size());
}

double calibrate_lambda(cplx w, double q, int m, double target) {
    double lo = 0.0, hi = 50.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (exp_atom_metric(exp_atom_exponent(mid, w, m), q) > target ? hi : lo) = mid;
    }
    return lo;
}

// First dim Taylor coefficients of exp(lambda (1 + conj(w) z)/(1 - conj(w) z)).
std::vector<cplx> exp_atom(double lambda, cplx w, int dim, int m) {
    auto f = exp_atom_exponent(lambda, w, m);
    for (cplx& v : f) v = std::exp(v);
    const auto spec = detail::fft_forward(f);
    std::vector<cplx> h(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) h[static_cast<std::size_t>(k)] = spec[static_cast<std::size_t>(k)] / static_cast<double>(m);
    return h;
}

double probe_at_dim(const FourierSeries& m, const ProbeSpace& space, int dim, const ProbeOptions& opt) {
    const auto hankel = hankel_matrix(m, dim);
    const auto garsia = DiskGrid::ladder(dim);
    const int grid = garsia.angular_resolution();
    const DiskGrid unit_grid({kUnitRadius}, grid);
    double best = 0.0;
    for (int i = 0; i < opt.radii; ++i) {
        const double t = opt.radii > 1 ? static_cast<double>(i) / (opt.radii - 1) : 0.0;
        double lambda = 0.0, rw;
        if (space.kind == ProbeSpace::Kind::Hp) {
            rw = 1.0 - 0.5 * std::pow(2.0 / dim, t);
        } else {
            // Keep the atom's coefficient peak inside the truncation.
            const double dmin = std::min(0.5, 1.0 / std::sqrt(static_cast<double>(dim)));
            rw = 1.0 - 0.5 * std::pow(dmin / 0.5, t);
            lambda = calibrate_lambda(rw, space.exponent, 4 * grid, opt.target_metric);
        }
        for (int a = 0; a < opt.angles; ++a) {
            const cplx w = std::polar(rw, kTwoPi * a / opt.angles);
            const auto h = space.kind == ProbeSpace::Kind::Hp ? hp_atom(w, space.exponent, dim)
                                                              : exp_atom(lambda, w, dim, 4 * grid);
            const auto hs = FourierSeries::from_taylor(std::span<const cplx>(h));
            const double unit = space.kind == ProbeSpace::Kind::Hp
                                    ? hp_quasinorm(hs, space.exponent, unit_grid)
                                    : privalov_distance(hs, FourierSeries{}, space.exponent, unit_grid);
            if (!(unit > 0.0)) continue;
            best = std::max(best, garsia_bmoa_norm(hankel_image(hankel, h), garsia) / unit);
        }
    }
    return best;
}

} // namespace

ContinuityProbeReport hankel_continuity_probe(const FourierSeries& m, const ProbeSpace& space, std::span<const int> dims,
                                              const ProbeOptions& options) {
    if (dims.empty()) throw DimensionError("continuity probe needs at least one dim");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1) throw DimensionError("continuity probe dims must be positive");
        if (i > 0 && dims[i] <= dims[i - 1]) throw DimensionError("continuity probe dims must be strictly increasing");
    }
    if (!(space.exponent > 0.0)) throw DomainError("continuity probe exponent must be positive");
    if (space.kind != ProbeSpace::Kind::Hp && space.exponent < 1.0)
        throw DomainError("Privalov exponent must be >= 1");

    ContinuityProbeReport report{space, {dims.begin(), dims.end()}, {}, 0.0, Verdict::Inconclusive};
    double running = 0.0;
    for (int dim : dims) {
        running = std::max(running, probe_at_dim(m, space, dim, options));
        report.norms.push_back(running);
    }
    const double first = report.norms.front(), last = report.norms.back();
    report.growth_ratio = first > 0.0 ? last / first : (last > 0.0 ? INFINITY : 1.0);
    report.verdict = ratio_verdict(report.growth_ratio, options.bounded_threshold, options.divergent_threshold);
    return report;
}

} // namespace hardylab
