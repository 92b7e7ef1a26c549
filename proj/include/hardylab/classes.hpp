#pragma once

#include <string>
#include <vector>

#include "hardylab/fourier_series.hpp"
#include "hardylab/spectral.hpp"

namespace hardylab {

enum class ClassVerdict { Member, NonMember, Marginal, FiniteSupport };
std::string to_string(ClassVerdict v);

struct ClassReport {
    std::string class_name;
    std::vector<double> exponents;   ///< fitted parameters, e.g. {c, alpha} for Gevrey
    double fit_residual = 0.0;
    double margin = 0.0;
    ClassVerdict verdict = ClassVerdict::Marginal;
    std::vector<double> ladder;      ///< per-radius values where a radial ladder was used
};

/// Derivative-growth seminorm for the analytic Lipschitz class of order alpha:
/// sup over grid circles of (1-r)^{k-alpha} max |f^{(k)}(r zeta)| with k = floor(alpha) + 1.
/// For integer alpha this is the Zygmund-type second-difference characterization.
double lipschitz_seminorm(const FourierSeries& f, double alpha, const DiskGrid& grid);

struct GevreyOptions {
    double alpha0 = 0.5;          ///< class exponent the verdict refers to
    double alpha_slack = 0.05;
    double residual_tol = 0.05;   ///< RMS of the log(-log) regression
    int skip = 16;                ///< leading coefficients excluded as transient
    int min_support = 32;
    double floor = 1e-290;        ///< coefficients below this count as zero
};

struct GevreyFit {
    double c = 0.0;
    double alpha = 0.0;
    double residual = 0.0;
    int tail_begin = 0;
    int tail_end = 0;             ///< one past the last index used
    ClassVerdict verdict = ClassVerdict::NonMember;
};

/// Regresses log(-log|f_n|) on log n over the longest decaying tail.
GevreyFit gevrey_fit(const FourierSeries& f, const GevreyOptions& options = {});
ClassReport to_report(const GevreyFit& fit, const GevreyOptions& options = {});

struct PrivalovOptions {
    double stabilization_tol = 1e-2;   ///< relative change over the last two radii
    double divergence_factor = 10.0;   ///< last/first above this => NonMember
};

/// Radial ladder of mean (log(1 + |f(r zeta)|))^q over the grid radii (zero radius skipped).
/// NonMember also when the last two increments fail to shrink.
ClassReport privalov_membership(const FourierSeries& f, double q, const DiskGrid& grid,
                                const PrivalovOptions& options = {});

/// max over n >= skip of log|f_n| / n^{1/(1+q)}; -inf when the tail is zero. q = 1 gives the
/// Smirnov exponent 1/2.
double coefficient_growth_margin(const FourierSeries& f, double q, int skip = 16);

/// Member below 1 - band, NonMember above 1 + band, Marginal in between.
ClassVerdict growth_verdict(double margin, double band = 0.25);

} // namespace hardylab
