#include "hardylab/classes.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hardylab/errors.hpp"

namespace hardylab {

std::string to_string(ClassVerdict v) {
    switch (v) {
    case ClassVerdict::Member: return "Member";
    case ClassVerdict::NonMember: return "NonMember";
    case ClassVerdict::Marginal: return "Marginal";
    case ClassVerdict::FiniteSupport: return "FiniteSupport";
    }
    return "?";
}

double lipschitz_seminorm(const FourierSeries& f, double alpha, const DiskGrid& grid) {
    if (!(alpha > 0.0)) throw DomainError("lipschitz_seminorm: alpha must be positive");
    if (!f.is_analytic()) throw DomainError("lipschitz_seminorm: series must be analytic");
    const int k = static_cast<int>(std::floor(alpha)) + 1;
    const auto fk = derivative(f, k);
    if (fk.is_zero()) return 0.0;
    double best = 0.0;
    for (double r : grid.radii()) {
        const auto vals = sample_at_radius(fk, r, grid.angular_resolution());
        double peak = 0.0;
        for (cplx v : vals) peak = std::max(peak, std::abs(v));
        best = std::max(best, std::pow(1.0 - r, k - alpha) * peak);
    }
    return best;
}

GevreyFit gevrey_fit(const FourierSeries& f, const GevreyOptions& options) {
    GevreyFit fit;
    int support = 0;
    for (int n = 0; n <= f.order(); ++n)
        if (std::abs(f[n]) > options.floor) ++support;
    if (support < options.min_support) {
        fit.verdict = ClassVerdict::FiniteSupport;
        return fit;
    }

    // Longest run n >= skip with floor < |f_n| < 1, so -log|f_n| > 0.
    int best_begin = 0, best_len = 0;
    for (int n = options.skip; n <= f.order();) {
        const auto ok = [&](int i) { const double a = std::abs(f[i]); return a > options.floor && a < 1.0; };
        if (!ok(n)) { ++n; continue; }
        int end = n;
        while (end <= f.order() && ok(end)) ++end;
        if (end - n > best_len) best_begin = n, best_len = end - n;
        n = end;
    }
    if (best_len < 8) return fit;   // not decaying: NonMember with alpha = 0

    Eigen::MatrixXd design(best_len, 2);
    Eigen::VectorXd y(best_len);
    for (int i = 0; i < best_len; ++i) {
        const int n = best_begin + i;
        design(i, 0) = 1.0;
        design(i, 1) = std::log(static_cast<double>(n));
        y(i) = std::log(-std::log(std::abs(f[n])));
    }
    const Eigen::VectorXd beta = design.colPivHouseholderQr().solve(y);
    fit.c = std::exp(beta(0));
    fit.alpha = beta(1);
    fit.residual = (design * beta - y).norm() / std::sqrt(static_cast<double>(best_len));
    fit.tail_begin = best_begin;
    fit.tail_end = best_begin + best_len;

    const bool exponent_ok = fit.alpha >= options.alpha0 - options.alpha_slack;
    const bool residual_ok = fit.residual <= options.residual_tol;
    fit.verdict = exponent_ok && residual_ok ? ClassVerdict::Member
                  : exponent_ok               ? ClassVerdict::Marginal
                                              : ClassVerdict::NonMember;
    return fit;
}

ClassReport to_report(const GevreyFit& fit, const GevreyOptions& options) {
    std::ostringstream name;
    name << "Gevrey(" << options.alpha0 << ")";
    return {name.str(), {fit.c, fit.alpha}, fit.residual, fit.alpha - options.alpha0, fit.verdict, {}};
}

ClassReport privalov_membership(const FourierSeries& f, double q, const DiskGrid& grid, const PrivalovOptions& options) {
    if (!(q >= 1.0)) throw DomainError("privalov_membership: q must be >= 1");
    ClassReport report;
    std::ostringstream name;
    name << "Privalov(" << q << ")";
    report.class_name = name.str();
    report.exponents = {q};
    for (double r : grid.radii()) {
        if (r == 0.0) continue;
        report.ladder.push_back(privalov_distance(f, FourierSeries{}, q, DiskGrid({r}, grid.angular_resolution())));
    }
    const auto& lad = report.ladder;
    if (lad.size() < 3) throw GridError("privalov_membership needs at least three non-zero radii");
    const std::size_t n = lad.size();
    const double last = lad[n - 1], prev = lad[n - 2], before = lad[n - 3];
    report.margin = last > 0.0 ? std::abs(last - prev) / last : 0.0;
    const bool exploding = lad.front() > 0.0 && last / lad.front() > options.divergence_factor;
    const bool not_settling = last - prev > 0.0 && last - prev >= prev - before;
    if (!std::isfinite(last) || exploding || (not_settling && report.margin >= options.stabilization_tol))
        report.verdict = ClassVerdict::NonMember;
    else if (report.margin < options.stabilization_tol)
        report.verdict = ClassVerdict::Member;
    else
        report.verdict = ClassVerdict::Marginal;
    return report;
}

double coefficient_growth_margin(const FourierSeries& f, double q, int skip) {
    if (!(q >= 1.0)) throw DomainError("coefficient_growth_margin: q must be >= 1");
    const double e = 1.0 / (1.0 + q);
    double best = -INFINITY;
    for (int n = std::max(skip, 1); n <= f.order(); ++n) {
        const double a = std::abs(f[n]);
        if (a == 0.0) continue;
        best = std::max(best, std::log(a) / std::pow(static_cast<double>(n), e));
    }
    return best;
}

ClassVerdict growth_verdict(double margin, double band) {
    if (margin < 1.0 - band) return ClassVerdict::Member;
    if (margin > 1.0 + band) return ClassVerdict::NonMember;
    return ClassVerdict::Marginal;
}

} // namespace hardylab
