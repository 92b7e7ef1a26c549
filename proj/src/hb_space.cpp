#include "hardylab/hb_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hardylab/errors.hpp"
#include "hardylab/spectral.hpp"

namespace hardylab {
namespace {

ComplexVector coefficients(const FourierSeries& f, int dim) {
    ComplexVector v(dim);
    for (int n = 0; n < dim; ++n) v(n) = f[n];
    return v;
}

FourierSeries series_of(const ComplexVector& v, int order) {
    FourierSeries f(order);
    for (Eigen::Index n = 0; n < v.size() && n <= order; ++n) f.set(static_cast<int>(n), v(n));
    return f;
}

// Power iteration for the largest singular value of an operator given by its action and adjoint.
template <class Forward, class Adjoint>
NormEstimate power_norm(Eigen::Index n, Forward&& forward, Adjoint&& adjoint, double rel_tol, int max_iterations) {
    std::mt19937 rng(2024);
    std::normal_distribution<double> nd;
    ComplexVector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = cplx{nd(rng), nd(rng)};
    x.normalize();
    NormEstimate est;
    est.converged = false;
    double s2 = 0.0;
    for (int it = 1; it <= max_iterations; ++it) {
        const ComplexVector y = adjoint(forward(x));
        const double next = std::abs(x.dot(y));
        const double ny = y.norm();
        est.iterations = it;
        if (ny == 0.0 || !std::isfinite(ny)) {
            s2 = ny == 0.0 ? 0.0 : INFINITY;
            est.converged = ny == 0.0;
            break;
        }
        x = y / ny;
        if (std::abs(next - s2) <= rel_tol * next) {
            s2 = next;
            est.converged = true;
            break;
        }
        s2 = next;
    }
    est.value = std::sqrt(s2);
    return est;
}

// cond_2 estimate of an upper-triangular matrix with non-zero diagonal.
double triangular_condition(const ComplexMatrix& t) {
    const auto upper = t.triangularView<Eigen::Upper>();
    const auto fwd = [&](const ComplexVector& x) -> ComplexVector { return upper * x; };
    const auto adj = [&](const ComplexVector& x) -> ComplexVector { return upper.adjoint() * x; };
    const auto inv = [&](const ComplexVector& x) -> ComplexVector { return upper.solve(x); };
    const auto inv_adj = [&](const ComplexVector& x) -> ComplexVector { return upper.adjoint().solve(x); };
    const double big = power_norm(t.cols(), fwd, adj, 1e-3, 60).value;
    const double small_inv = power_norm(t.cols(), inv, inv_adj, 1e-3, 60).value;
    return big * small_inv;
}

struct TriangularSolve {
    ComplexVector x;
    double residual;
    double condition;
};

TriangularSolve solve_upper(const ComplexMatrix& t, const ComplexVector& rhs) {
    for (Eigen::Index i = 0; i < t.rows(); ++i)
        if (t(i, i) == cplx{}) throw NumericalError("Toeplitz truncation is singular (symbol vanishes at the origin)");
    ComplexVector x = t.triangularView<Eigen::Upper>().solve(rhs);
    const double residual = (t * x - rhs).norm();
    return {std::move(x), residual, triangular_condition(t)};
}

void require_analytic(const FourierSeries& f, const char* what) {
    if (!f.is_analytic()) throw DomainError(std::string(what) + ": series must be analytic");
}

} // namespace

std::string to_string(Membership m) {
    switch (m) {
    case Membership::InSpace: return "InSpace";
    case Membership::OutOfSpace: return "OutOfSpace";
    case Membership::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(MultiplierVerdict v) {
    return v == MultiplierVerdict::Multiplier ? "Multiplier" : "NotCertified";
}

MateSolution solve_mate(const PythagoreanPair& pair, const FourierSeries& f, int dim) {
    require_analytic(f, "solve_mate");
    if (dim < 1) throw DimensionError("solve_mate: dim must be positive");
    if (f.degree() >= dim)
        throw DomainError("solve_mate: degree " + std::to_string(f.degree()) + " does not fit dim " + std::to_string(dim));
    const auto tb = toeplitz_matrix(pair.b, dim).entries();
    const auto ta = toeplitz_matrix(pair.a, dim).entries();
    const ComplexVector fv = coefficients(f, dim);
    const auto sol = solve_upper(ta, tb * fv);

    MateSolution out;
    out.dim = dim;
    out.f = f.with_order(dim - 1);
    out.f_plus = series_of(sol.x, dim - 1);
    out.residual = (tb * fv - ta * sol.x).norm();
    out.hb_norm = std::sqrt(fv.squaredNorm() + sol.x.squaredNorm());
    out.condition = sol.condition;
    out.ill_conditioned = sol.condition > kConditionCap;
    return out;
}

MembershipReport membership_diagnostic(const PythagoreanPair& pair, const FourierSeries& f, std::span<const int> dims,
                                       const MembershipOptions& options) {
    if (dims.empty()) throw DimensionError("membership_diagnostic needs at least one dim");
    for (std::size_t i = 1; i < dims.size(); ++i)
        if (dims[i] <= dims[i - 1]) throw DimensionError("membership dims must be strictly increasing");

    MembershipReport report;
    report.dims.assign(dims.begin(), dims.end());
    for (int dim : dims) {
        const auto sol = solve_mate(pair, f, dim);
        report.hb_norms.push_back(sol.hb_norm);
        report.residuals.push_back(sol.residual);
    }
    const double last = report.hb_norms.back(), first = report.hb_norms.front();
    const double prev = report.hb_norms.size() > 1 ? report.hb_norms[report.hb_norms.size() - 2] : last;
    const double change = last == 0.0 ? std::abs(last - prev) : std::abs(last - prev) / last;
    if (first > 0.0 && last / first > options.divergence_factor)
        report.verdict = Membership::OutOfSpace;
    else if (report.hb_norms.size() > 1 && change < options.stabilization_tol &&
             report.residuals.back() < options.residual_tol)
        report.verdict = Membership::InSpace;
    return report;
}

Preimage toeplitz_preimage(const FourierSeries& m, const FourierSeries& a, int dim) {
    require_analytic(m, "toeplitz_preimage");
    require_analytic(a, "toeplitz_preimage");
    if (dim < 1) throw DimensionError("toeplitz_preimage: dim must be positive");
    const auto ta = toeplitz_matrix(a, dim).entries();
    const auto sol = solve_upper(ta, coefficients(m, dim));
    return {series_of(sol.x, dim - 1), sol.residual, sol.condition, sol.condition > kConditionCap};
}

MultiplierReport lotto_sarason_check(const PythagoreanPair& pair, const FourierSeries& m, std::span<const int> dims,
                                     const MultiplierOptions& options) {
    require_analytic(m, "lotto_sarason_check");
    if (dims.empty()) throw DimensionError("lotto_sarason_check needs at least one dim");
    for (std::size_t i = 1; i < dims.size(); ++i)
        if (dims[i] <= dims[i - 1]) throw DimensionError("multiplier dims must be strictly increasing");

    MultiplierReport report;
    report.m = m;
    report.dims.assign(dims.begin(), dims.end());
    for (int dim : dims) {
        const auto pre = toeplitz_preimage(m, pair.a, dim);
        const auto grid = DiskGrid::ladder(dim);
        const auto tb = toeplitz_matrix(pair.b, dim).entries();
        const ComplexVector uv = coefficients(pre.u, dim);
        const auto mate = series_of(tb * uv, dim - 1);
        report.u_garsia.push_back(garsia_bmoa_norm(pre.u, grid));
        report.mate_garsia.push_back(garsia_bmoa_norm(mate, grid));
        report.ill_conditioned = report.ill_conditioned || pre.ill_conditioned;
        if (options.composed_norms) {
            const auto hu = hankel_matrix(pre.u, dim).entries();
            for (const auto* symbol : {&pair.a, &pair.b}) {
                const auto hs = hankel_matrix(*symbol, dim).entries();
                const auto fwd = [&](const ComplexVector& x) -> ComplexVector { return hu.adjoint() * (hs * x); };
                const auto adj = [&](const ComplexVector& x) -> ComplexVector { return hs.adjoint() * (hu * x); };
                const double v = power_norm(dim, fwd, adj, 1e-8, 500).value;
                (symbol == &pair.a ? report.composed_a : report.composed_b).push_back(v);
            }
        }
        report.u = pre.u;
        report.mate_of_m = mate;
    }
    const double first = report.u_garsia.front(), last = report.u_garsia.back();
    report.growth_ratio = first > 0.0 ? last / first : (last > 0.0 ? INFINITY : 1.0);
    const bool finite = std::isfinite(last) && last <= options.garsia_cap;
    report.verdict = finite && report.growth_ratio <= options.growth_threshold && !report.ill_conditioned
                         ? MultiplierVerdict::Multiplier
                         : MultiplierVerdict::NotCertified;
    return report;
}

double mate_linearity_residual(const PythagoreanPair& pair1, const PythagoreanPair& pair2,
                               const PythagoreanPair& combined, cplx lambda, const FourierSeries& m, int dim) {
    const auto m1 = solve_mate(pair1, m, dim).f_plus;
    const auto m2 = solve_mate(pair2, m, dim).f_plus;
    const auto mh = solve_mate(combined, m, dim).f_plus;
    const int window = std::max(dim / 2, 1);
    double s = 0.0;
    for (int n = 0; n < window; ++n) s += std::norm(mh[n] - std::conj(lambda) * m1[n] - m2[n]);
    return std::sqrt(s);
}

RationalFunction linear_combination(const RationalFunction& h1, const RationalFunction& h2, cplx lambda) {
    // Cross-multiplying would leave h2's denominator as a common factor.
    if (lambda == cplx{}) return h2;
    auto product = [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
        std::vector<cplx> out(x.size() + y.size() - 1);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
        return out;
    };
    auto num1 = product(h1.numerator, h2.denominator);
    const auto num2 = product(h2.numerator, h1.denominator);
    num1.resize(std::max(num1.size(), num2.size()));
    for (auto& c : num1) c *= lambda;
    for (std::size_t i = 0; i < num2.size(); ++i) num1[i] += num2[i];
    return {std::move(num1), product(h1.denominator, h2.denominator)};
}

double mate_linearity_residual(const RationalFunction& h1, const RationalFunction& h2, cplx lambda,
                               const FourierSeries& m, int dim, const Settings& settings) {
    const auto h = linear_combination(h1, h2, lambda);
    auto pair_of = [&](const RationalFunction& r) {
        return pythagorean_factorize(r, r.inner_part(), 1e-6, settings).pair;
    };
    return mate_linearity_residual(pair_of(h1), pair_of(h2), pair_of(h), lambda, m, dim);
}

} // namespace hardylab
