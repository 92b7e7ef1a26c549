#include "hardylab/factorization.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hardylab/errors.hpp"
#include "hardylab/fft.hpp"

namespace hardylab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// A sample this far below both neighbours (in log) is a discretised boundary zero.
constexpr double kDipThreshold = 5.0;
// exp() overflows past this.
constexpr double kLogOverflow = 700.0;
// Roots within this distance of the circle are snapped onto it; companion eigenvalues of
// repeated roots are only accurate to about sqrt(eps).
constexpr double kCircleSnap = 1e-7;
constexpr double kRootCluster = 1e-4;

cplx poly_at(const std::vector<cplx>& c, cplx z) {
    cplx acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// log |1 - e^{i t}|
double log_chord(double t) { return std::log(2.0 * std::abs(std::sin(0.5 * t))); }

// Taylor series of (1 - w z)^mu.
FourierSeries binomial_series(cplx w, double mu, int order) {
    FourierSeries s(order);
    cplx c{1.0};
    s.set(0, c);
    for (int n = 1; n <= order; ++n) {
        c *= -w * ((mu - (n - 1)) / static_cast<double>(n));
        s.set(n, c);
    }
    return s;
}

std::size_t wrap(long long k, long long m) { return static_cast<std::size_t>(((k % m) + m) % m); }

struct Run {
    long long start;   // first index (may be negative before wrapping)
    long long length;
};

// Cyclic runs of flagged samples.
std::vector<Run> find_runs(const std::vector<bool>& flagged) {
    const long long m = static_cast<long long>(flagged.size());
    std::vector<Run> runs;
    long long first_clear = -1;
    for (long long k = 0; k < m; ++k)
        if (!flagged[static_cast<std::size_t>(k)]) {
            first_clear = k;
            break;
        }
    if (first_clear < 0) return {{0, m}};
    for (long long i = 1; i <= m; ++i) {
        const long long k = first_clear + i;
        if (!flagged[wrap(k, m)]) continue;
        long long len = 0;
        while (len < m && flagged[wrap(k + len, m)]) ++len;
        runs.push_back({k, len});
        i += len;
    }
    return runs;
}

// Least-squares quadratic through (t_i, y_i), evaluated at t.
struct QuadraticFit {
    double c0 = 0, c1 = 0, c2 = 0;
    double operator()(double t) const { return c0 + t * (c1 + t * c2); }
};

QuadraticFit fit_quadratic(const std::vector<double>& t, const std::vector<double>& y) {
    Eigen::MatrixXd a(static_cast<Eigen::Index>(t.size()), 3);
    Eigen::VectorXd b(static_cast<Eigen::Index>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        a(r, 0) = 1.0;
        a(r, 1) = t[i];
        a(r, 2) = t[i] * t[i];
        b(r) = y[i];
    }
    const Eigen::Vector3d c = a.colPivHouseholderQr().solve(b);
    return {c(0), c(1), c(2)};
}

// Roots of sum c_k z^k via the companion matrix.
double round_multiplicity(double mu) {
    const double half = std::round(2.0 * mu) / 2.0;
    return std::abs(mu - half) <= 0.05 ? half : mu;
}

} // namespace

std::vector<cplx> polynomial_roots(std::span<const cplx> c) {
    std::size_t deg = c.size();
    while (deg > 0 && c[deg - 1] == cplx{}) --deg;
    if (deg == 0) throw DomainError("zero polynomial has no isolated roots");
    if (deg == 1) return {};
    const auto n = static_cast<Eigen::Index>(deg - 1);
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c[deg - 1];
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<cplx> roots(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);

    // A root of multiplicity k comes back as a ring of radius ~eps^(1/k); the ring's centroid
    // is accurate to ~eps, so tight clusters are replaced by their mean.
    std::vector<bool> taken(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (taken[i]) continue;
        std::vector<std::size_t> members{i};
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (!taken[j] && std::abs(roots[j] - roots[i]) <= kRootCluster * std::max(1.0, std::abs(roots[i])))
                members.push_back(j);
        if (members.size() == 1) continue;
        cplx mean{};
        for (auto j : members) mean += roots[j];
        mean /= static_cast<double>(members.size());
        for (auto j : members) {
            roots[j] = mean;
            taken[j] = true;
        }
    }
    return roots;
}

// ---------------------------------------------------------------------------
// RationalFunction / BlaschkeSpec

cplx RationalFunction::numerator_at(cplx z) const { return poly_at(numerator, z); }
cplx RationalFunction::denominator_at(cplx z) const { return poly_at(denominator, z); }

FourierSeries RationalFunction::series(int order) const {
    if (denominator.empty() || denominator.front() == cplx{})
        throw DomainError("rational function: denominator vanishes at the origin");
    FourierSeries s(order);
    const cplx q0 = denominator.front();
    for (int n = 0; n <= order; ++n) {
        cplx acc = n < static_cast<int>(numerator.size()) ? numerator[static_cast<std::size_t>(n)] : cplx{};
        const int top = std::min(n, static_cast<int>(denominator.size()) - 1);
        for (int k = 1; k <= top; ++k) acc -= denominator[static_cast<std::size_t>(k)] * s[n - k];
        s.set(n, acc / q0);
    }
    return s;
}

RationalFunction RationalFunction::plus(const FourierSeries& polynomial) const {
    if (!polynomial.is_analytic()) throw DomainError("rational perturbation must be analytic");
    const int deg = std::max(polynomial.degree(), 0);
    std::vector<cplx> num(std::max(numerator.size(), denominator.size() + static_cast<std::size_t>(deg)));
    std::copy(numerator.begin(), numerator.end(), num.begin());
    for (std::size_t i = 0; i < denominator.size(); ++i)
        for (int j = 0; j <= deg; ++j) num[i + static_cast<std::size_t>(j)] += denominator[i] * polynomial[j];
    return {std::move(num), denominator};
}

BlaschkeSpec RationalFunction::inner_part() const {
    BlaschkeSpec spec;
    for (cplx r : polynomial_roots(numerator))
        if (std::abs(r) < 1.0 - kCircleSnap) spec.zeros.push_back(r);
    return spec;
}

cplx BlaschkeSpec::operator()(cplx z) const {
    cplx v = rotation;
    for (cplx a : zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
    return v;
}

FourierSeries BlaschkeSpec::series(int order) const {
    FourierSeries out = FourierSeries::constant(rotation, order);
    for (cplx a : zeros) {
        if (std::abs(a) >= 1.0) throw DomainError("Blaschke zeros must lie in the open disk");
        // (z - a)/(1 - conj(a) z) = -a + (1 - |a|^2) sum_{n>=1} conj(a)^{n-1} z^n
        FourierSeries factor(order);
        factor.set(0, -a);
        cplx pw{1.0};
        for (int n = 1; n <= order; ++n) {
            factor.set(n, (1.0 - std::norm(a)) * pw);
            pw *= std::conj(a);
        }
        out = multiply(out, factor, order);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Outer functions

OuterFunction::OuterFunction(std::vector<LinearFactor> factors, std::vector<cplx> log_samples,
                             double log_value_at_origin)
    : factors_(std::move(factors)), log_samples_(std::move(log_samples)), log_origin_(log_value_at_origin) {}

double OuterFunction::value_at_origin() const noexcept { return std::exp(log_origin_); }

bool OuterFunction::has_boundary_zeros() const noexcept {
    return std::any_of(factors_.begin(), factors_.end(), [](const LinearFactor& f) { return f.on_boundary(); });
}

std::vector<cplx> OuterFunction::boundary_values() const {
    const int m = grid_size();
    std::vector<cplx> out(log_samples_.size());
    for (int k = 0; k < m; ++k) {
        cplx v = std::exp(log_samples_[static_cast<std::size_t>(k)]);
        const cplx z = BoundaryGrid::point(k, m);
        for (const auto& f : factors_) {
            const cplx base = 1.0 - z / f.root;
            if (base == cplx{} || (f.on_boundary() && std::abs(z - f.root) < 1e-15)) {
                v = 0.0;
            } else {
                v *= f.multiplicity == 1.0 ? base : std::pow(base, f.multiplicity);
            }
        }
        out[static_cast<std::size_t>(k)] = v;
    }
    return out;
}

FourierSeries OuterFunction::series(int order) const {
    const int m = grid_size();
    std::vector<cplx> e(log_samples_.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::exp(log_samples_[k]);
    const auto spec = detail::fft_forward(e);
    FourierSeries s(order);
    const int top = std::min(order, m / 2 - 1);
    for (int n = 0; n <= top; ++n) s.set(n, spec[static_cast<std::size_t>(n)] / static_cast<double>(m));
    for (const auto& f : factors_) s = multiply(s, binomial_series(1.0 / f.root, f.multiplicity, order), order);
    return s;
}

OuterFunction outer_factor(const BoundaryGrid& log_modulus) {
    const long long m = log_modulus.size();
    std::vector<double> g(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        const cplx v = log_modulus[static_cast<int>(k)];
        const double re = v.real();
        if (std::isnan(re) || std::isnan(v.imag()))
            throw NumericalError("log-modulus sample " + std::to_string(k) + " is NaN");
        if (std::isfinite(re) && std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(re)))
            throw NumericalError("log-modulus sample " + std::to_string(k) + " is not real");
        if (re > kLogOverflow) throw NumericalError("log-modulus sample " + std::to_string(k) + " overflows exp");
        g[static_cast<std::size_t>(k)] = re;
    }

    auto at = [&](long long k) { return g[wrap(k, m)]; };
    std::vector<bool> singular(g.size(), false);
    for (long long k = 0; k < m; ++k) {
        const double v = at(k);
        if (!std::isfinite(v) || v < -kLogOverflow) {
            singular[static_cast<std::size_t>(k)] = true;
            continue;
        }
        const double lo = std::min(at(k - 1), at(k + 1));
        if (v < lo - kDipThreshold) singular[static_cast<std::size_t>(k)] = true;
    }

    const auto runs = find_runs(singular);
    long long total = 0;
    for (const auto& r : runs) total += r.length;
    if (total > m / 16)
        throw NumericalError("log-modulus is singular on " + std::to_string(total) + " of " + std::to_string(m) +
                             " samples (zero set of positive measure)");

    std::vector<LinearFactor> zeros;
    std::vector<double> reg = g;
    for (const auto& run : runs) {
        const double center = static_cast<double>(run.start) + 0.5 * static_cast<double>(run.length - 1);
        const double half = 0.5 * static_cast<double>(run.length - 1);
        const long long left = run.start - 1, right = run.start + run.length;
        auto outside_ok = [&](long long j) {
            return !singular[wrap(left - j, m)] && !singular[wrap(right + j, m)];
        };

        // Symmetric sums cancel the odd part of the smooth background.
        double mu = 0.0;
        if (outside_ok(0) && outside_ok(2)) {
            const double s0 = at(left) + at(right), s2 = at(left - 2) + at(right + 2);
            const double l0 = log_chord(kTwoPi * (half + 1.0) / m), l2 = log_chord(kTwoPi * (half + 3.0) / m);
            mu = round_multiplicity((s0 - s2) / (2.0 * (l0 - l2)));
        }
        if (mu < 0.25) mu = 0.0;
        const double angle = kTwoPi * center / static_cast<double>(m);
        if (mu > 0.0) zeros.push_back({std::polar(1.0, angle), mu});

        // Fill the run from the regularized values just outside it.
        std::vector<double> ts, ys;
        for (long long j = 0; j < 8; ++j) {
            for (long long k : {left - j, right + j}) {
                if (singular[wrap(k, m)]) continue;
                const double t = static_cast<double>(k) - center;
                ts.push_back(t);
                ys.push_back(at(k) - mu * log_chord(kTwoPi * t / m));
            }
        }
        if (ts.size() < 3) throw NumericalError("boundary zeros too dense to regularize");
        const auto fit = fit_quadratic(ts, ys);
        for (long long i = 0; i < run.length; ++i)
            reg[wrap(run.start + i, m)] = fit(static_cast<double>(run.start + i) - center);
    }

    // Subtract the zero singularities everywhere outside the runs.
    if (!zeros.empty())
        for (long long k = 0; k < m; ++k) {
            if (singular[static_cast<std::size_t>(k)]) continue;
            const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
            for (const auto& z : zeros) reg[static_cast<std::size_t>(k)] -= z.multiplicity * log_chord(theta - std::arg(z.root));
        }

    std::vector<cplx> spec = detail::fft_forward(std::vector<cplx>(reg.begin(), reg.end()));
    const double inv = 1.0 / static_cast<double>(m);
    std::vector<cplx> completion(spec.size());
    completion[0] = spec[0].real() * inv;
    for (long long n = 1; n < m / 2; ++n) completion[static_cast<std::size_t>(n)] = 2.0 * spec[static_cast<std::size_t>(n)] * inv;
    completion[static_cast<std::size_t>(m / 2)] = spec[static_cast<std::size_t>(m / 2)] * inv;
    auto log_samples = detail::fft_inverse(completion);
    for (double v : reg)
        if (v > kLogOverflow) throw NumericalError("outer function overflows");
    return OuterFunction(std::move(zeros), std::move(log_samples), completion[0].real());
}

OuterFunction outer_factor(const BoundaryGrid& smooth_log_modulus, std::vector<LinearFactor> known) {
    for (const auto& f : known)
        if (std::abs(f.root) < 1.0 - 1e-12) throw DomainError("outer factors need roots outside the open disk");
    auto out = outer_factor(smooth_log_modulus);
    out.factors_.insert(out.factors_.end(), known.begin(), known.end());
    return out;
}

FourierSeries outer_from_log_modulus(const BoundaryGrid& log_modulus, int order) {
    if (log_modulus.size() < 2 * order + 1)
        throw GridError("outer_from_log_modulus: grid of " + std::to_string(log_modulus.size()) +
                        " samples too small for order " + std::to_string(order));
    return outer_factor(log_modulus).series(order);
}

OuterFunction outer_power_factor(const FourierSeries& f, double theta, const Settings& settings) {
    if (!f.is_analytic()) throw DomainError("outer_power: series must be analytic");
    const auto samples = synthesize(f, settings.grid_size);
    std::vector<double> g(static_cast<std::size_t>(samples.size()));
    for (int k = 0; k < samples.size(); ++k) {
        const double a = std::abs(samples[k]);
        g[static_cast<std::size_t>(k)] = a == 0.0 ? -std::numeric_limits<double>::infinity() : theta * std::log(a);
    }
    return outer_factor(BoundaryGrid::from_real(g));
}

FourierSeries outer_power(const FourierSeries& f, double theta, const Settings& settings) {
    return outer_power_factor(f, theta, settings).series(settings.working_order);
}

// ---------------------------------------------------------------------------
// Pythagorean mates

namespace {

std::vector<double> defect_samples(const FourierSeries& b, const Settings& settings, double tol) {
    if (!b.is_analytic()) throw DomainError("symbol b must be analytic");
    const auto s = synthesize(b, settings.grid_size);
    std::vector<double> w(static_cast<std::size_t>(s.size()));
    for (int k = 0; k < s.size(); ++k) {
        const double mod = std::abs(s[k]);
        if (mod > 1.0 + tol)
            throw DomainError("symbol b leaves the unit ball: |b| = " + std::to_string(mod) + " at sample " +
                              std::to_string(k));
        w[static_cast<std::size_t>(k)] = 1.0 - std::norm(s[k]);
    }
    return w;
}

std::vector<double> half_log(const std::vector<double>& w, double precision_floor) {
    std::vector<double> g(w.size());
    for (std::size_t k = 0; k < w.size(); ++k)
        g[k] = w[k] <= precision_floor ? -std::numeric_limits<double>::infinity() : 0.5 * std::log(w[k]);
    return g;
}

double margin_from_defect(const std::vector<double>& w, const ExtremalityOptions& options) {
    const auto g = half_log(w, options.precision_floor);
    double margin;
    try {
        margin = 2.0 * outer_factor(BoundaryGrid::from_real(g)).log_value_at_origin();
    } catch (const NumericalError&) {
        return kMinusInfinity;
    }
    if (!std::isfinite(margin) || margin <= options.log_floor) return kMinusInfinity;
    if (std::abs(margin) <= 64.0 * std::numeric_limits<double>::epsilon()) return 0.0;
    return margin;
}

} // namespace

double non_extremality_margin(const FourierSeries& b, const ExtremalityOptions& options, const Settings& settings) {
    return margin_from_defect(defect_samples(b, settings, 1e-9), options);
}

PythagoreanPair pythagorean_mate(const FourierSeries& b, double tol, const ExtremalityOptions& options,
                                 const Settings& settings) {
    const auto w = defect_samples(b, settings, tol);
    const double margin = margin_from_defect(w, options);
    if (margin < options.extreme_threshold) throw ExtremePointError(margin);

    const auto outer = outer_factor(BoundaryGrid::from_real(half_log(w, options.precision_floor)));
    PythagoreanPair pair{b, outer.series(settings.working_order), tol};
    const double defect = pair_defect(pair, settings.grid_size);
    if (defect > tol)
        throw NumericalError("pythagorean_mate: |a|^2 + |b|^2 - 1 reaches " + std::to_string(defect) +
                             " on the grid (tolerance " + std::to_string(tol) + ")");
    return pair;
}

double pair_defect(const PythagoreanPair& pair, int grid_size) {
    const auto a = synthesize(pair.a, grid_size), b = synthesize(pair.b, grid_size);
    double worst = 0.0;
    for (int k = 0; k < grid_size; ++k) worst = std::max(worst, std::abs(std::norm(a[k]) + std::norm(b[k]) - 1.0));
    return worst;
}

// ---------------------------------------------------------------------------
// Factorization of h = c I b_o / a

std::vector<cplx> PythagoreanFactorization::b_boundary() const {
    auto v = b_outer.boundary_values();
    const int m = static_cast<int>(v.size());
    for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(k)] *= c * inner(BoundaryGrid::point(k, m));
    return v;
}

namespace {

constexpr double kResidualFloor = 1e-6;

// Assemble the factorization from outer factors of |a| and |b_o|; p/q are the boundary samples of h.
PythagoreanFactorization recombine(OuterFunction a_outer, OuterFunction b_outer, const std::vector<cplx>& p,
                                   const std::vector<cplx>& q, const BlaschkeSpec& inner, double tol,
                                   const Settings& settings) {
    const int m = static_cast<int>(p.size());
    const auto av = a_outer.boundary_values(), bv = b_outer.boundary_values();

    std::vector<cplx> iv(p.size());
    for (int k = 0; k < m; ++k) iv[static_cast<std::size_t>(k)] = inner(BoundaryGrid::point(k, m));
    auto usable = [&](std::size_t k) { return q[k] != cplx{} && std::abs(av[k]) >= kResidualFloor; };

    std::size_t best = p.size();
    for (std::size_t k = 0; k < p.size(); ++k)
        if (usable(k) && (best == p.size() || std::abs(bv[k]) > std::abs(bv[best]))) best = k;
    if (best == p.size()) throw NumericalError("factorization: mate vanishes on the whole grid");

    cplx c{1.0};
    if (std::abs(bv[best]) > 0.0) {
        const cplx ratio = (p[best] / q[best]) * av[best] / (iv[best] * bv[best]);
        c = ratio / std::abs(ratio);
    }

    double residual = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!usable(k)) continue;
        // Relative to |h| where h is large: near boundary poles |h| ~ 1/|a| reaches 1e6.
        const cplx h = p[k] / q[k];
        residual = std::max(residual, std::abs(c * iv[k] * bv[k] / av[k] - h) / std::max(1.0, std::abs(h)));
    }
    if (residual > tol)
        throw NumericalError("factorization residual " + std::to_string(residual) + " exceeds tolerance " +
                             std::to_string(tol) + "; check the supplied inner factor");

    const int order = settings.working_order;
    FourierSeries b = multiply(inner.series(order), b_outer.series(order), order);
    b *= c;
    PythagoreanPair pair{std::move(b), a_outer.series(order), tol};
    return PythagoreanFactorization{std::move(pair), c, std::move(a_outer), std::move(b_outer), inner, residual};
}

// |poly(zeta)| = exp(log_scale) * prod |1 - zeta/root| on the circle, with every root moved
// outside the open disk by reflection.
struct OuterPolynomial {
    std::vector<LinearFactor> factors;
    double log_scale = 0.0;
    std::vector<cplx> reflected;  // roots inside the disk
};

OuterPolynomial outer_polynomial(const std::vector<cplx>& c) {
    std::size_t deg = c.size();
    while (deg > 0 && c[deg - 1] == cplx{}) --deg;
    if (deg == 0) throw DomainError("polynomial vanishes identically");
    OuterPolynomial out;
    out.log_scale = std::log(std::abs(c[deg - 1]));
    for (cplx r : polynomial_roots(c)) {
        const double mod = std::abs(r);
        if (std::abs(mod - 1.0) <= kCircleSnap) {
            out.factors.push_back({r / mod, 1.0});
        } else if (mod > 1.0) {
            out.log_scale += std::log(mod);
            out.factors.push_back({r, 1.0});
        } else {
            out.factors.push_back({1.0 / std::conj(r), 1.0});
            out.reflected.push_back(r);
        }
    }
    return out;
}

void require_no_poles_inside(const std::vector<cplx>& den) {
    for (cplx r : polynomial_roots(den))
        if (std::abs(r) < 1.0 - kCircleSnap) throw DomainError("rational function has a pole inside the disk");
}

} // namespace

PythagoreanFactorization pythagorean_factorize(const FourierSeries& h, const BlaschkeSpec& inner, double tol,
                                               const Settings& settings) {
    if (!h.is_analytic()) throw DomainError("pythagorean_factorize: h must be analytic");
    const auto s = synthesize(h, settings.grid_size);
    std::vector<cplx> p(s.values().begin(), s.values().end());
    std::vector<double> ga(p.size()), gb(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double np = std::norm(p[k]);
        ga[k] = -0.5 * std::log1p(np);
        gb[k] = np == 0.0 ? -std::numeric_limits<double>::infinity() : 0.5 * std::log(np) + ga[k];
    }
    return recombine(outer_factor(BoundaryGrid::from_real(ga)), outer_factor(BoundaryGrid::from_real(gb)), p,
                     std::vector<cplx>(p.size(), cplx{1.0}), inner, tol, settings);
}

namespace {

// With inner == nullptr the numerator zeros inside the disk form the inner factor.
PythagoreanFactorization factorize_rational(const RationalFunction& h, const BlaschkeSpec* inner, double tol,
                                            const Settings& settings) {
    require_no_poles_inside(h.denominator);
    const int m = settings.grid_size;
    if (!detail::is_power_of_two(m)) throw GridError("grid size must be a power of two");
    const auto num = outer_polynomial(h.numerator), den = outer_polynomial(h.denominator);
    std::vector<cplx> p(static_cast<std::size_t>(m)), q(static_cast<std::size_t>(m));
    std::vector<double> ga(p.size()), gb(p.size());
    for (int k = 0; k < m; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const cplx z = BoundaryGrid::point(k, m);
        p[i] = h.numerator_at(z);
        q[i] = h.denominator_at(z);
        const double half_total = 0.5 * std::log(std::norm(p[i]) + std::norm(q[i]));
        if (!std::isfinite(half_total)) throw DomainError("numerator and denominator vanish together on the grid");
        ga[i] = den.log_scale - half_total;
        gb[i] = num.log_scale - half_total;
    }
    const BlaschkeSpec own{num.reflected, 1.0};
    return recombine(outer_factor(BoundaryGrid::from_real(ga), den.factors),
                     outer_factor(BoundaryGrid::from_real(gb), num.factors), p, q, inner ? *inner : own, tol,
                     settings);
}

} // namespace

PythagoreanFactorization pythagorean_factorize(const RationalFunction& h, const BlaschkeSpec& inner, double tol,
                                               const Settings& settings) {
    return factorize_rational(h, &inner, tol, settings);
}

// ---------------------------------------------------------------------------
// Stability

namespace {

double max_distance(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    double d = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) d = std::max(d, std::abs(x[k] - y[k]));
    return d;
}

template <class Factorize>
StabilityTable stability_table(const PythagoreanFactorization& base, std::span<const FourierSeries> perturbations,
                               const Settings& settings, Factorize&& factorize) {
    const auto a0 = base.a_outer.boundary_values();
    const auto b0 = base.b_boundary();
    const auto metric_grid = DiskGrid::boundary(settings);
    StabilityTable table;
    for (const auto& pert : perturbations) {
        const auto f = factorize(pert);
        table.rows.push_back({privalov_distance(pert, FourierSeries{}, 1.0, metric_grid),
                              max_distance(f.a_outer.boundary_values(), a0), max_distance(f.b_boundary(), b0)});
    }
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        const auto& prev = table.rows[i - 1];
        const auto& cur = table.rows[i];
        if (!(cur.metric < prev.metric && cur.a_error < prev.a_error && cur.b_error < prev.b_error))
            table.strictly_decreasing = false;
    }
    return table;
}

} // namespace

StabilityTable stability_experiment(const RationalFunction& h, std::span<const FourierSeries> perturbations,
                                    double tol, const Settings& settings) {
    const auto base = factorize_rational(h, nullptr, tol, settings);
    return stability_table(base, perturbations, settings, [&](const FourierSeries& pert) {
        return factorize_rational(h.plus(pert), nullptr, tol, settings);
    });
}

StabilityTable stability_experiment(const FourierSeries& h, std::span<const FourierSeries> perturbations,
                                    double tol, const Settings& settings) {
    const auto base = pythagorean_factorize(h, {}, tol, settings);
    return stability_table(base, perturbations, settings, [&](const FourierSeries& pert) {
        return pythagorean_factorize(h + pert, {}, tol, settings);
    });
}

} // namespace hardylab
