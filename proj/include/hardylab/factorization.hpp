#pragma once

#include <limits>
#include <span>
#include <vector>

#include "hardylab/fourier_series.hpp"
#include "hardylab/spectral.hpp"

namespace hardylab {

/// Quotient of two polynomials num(z)/den(z), coefficients in ascending order.
///
/// Used wherever a symbol has poles on the circle (e.g. (1+z)/(1-z)): its truncated
/// Taylor series has O(1) boundary error, so boundary moduli are taken from the
/// closed form instead.
struct RationalFunction {
    std::vector<cplx> numerator{1.0};
    std::vector<cplx> denominator{1.0};

    cplx numerator_at(cplx z) const;
    cplx denominator_at(cplx z) const;
    cplx operator()(cplx z) const { return numerator_at(z) / denominator_at(z); }

    /// Taylor expansion by long division; requires denominator(0) != 0.
    FourierSeries series(int order) const;
    /// this + polynomial perturbation, kept in closed form.
    RationalFunction plus(const FourierSeries& polynomial) const;
    /// Blaschke data of the numerator zeros in the open disk (exact up to root-finding).
    struct BlaschkeSpec inner_part() const;
};

/// Roots of c_0 + c_1 z + ... (companion matrix eigenvalues); trailing zeros are ignored.
/// Roots closer than 1e-4 (relative) are merged into their mean, so repeated roots come back repeated.
/// Throws DomainError for the zero polynomial.
std::vector<cplx> polynomial_roots(std::span<const cplx> coefficients);

/// Finite Blaschke product rotation * prod (z - z_j)/(1 - conj(z_j) z).
struct BlaschkeSpec {
    std::vector<cplx> zeros;
    cplx rotation{1.0};

    cplx operator()(cplx z) const;
    FourierSeries series(int order) const;
    bool empty() const noexcept { return zeros.empty() && rotation == cplx{1.0}; }
};

/// Factor (1 - z/root)^multiplicity of an outer function, |root| >= 1.
/// Roots on the circle are boundary zeros.
struct LinearFactor {
    cplx root{1.0};
    double multiplicity = 1.0;

    bool on_boundary() const noexcept { return std::abs(std::abs(root) - 1.0) <= 1e-12; }
};

/// Outer function in factored form: prod (1 - z/root_j)^{mu_j} * exp(L(z)), where L is the
/// analytic completion of the remaining smooth log-modulus.
///
/// Keeping zeros on or near the circle as explicit factors preserves relative accuracy of
/// boundary values there, which the truncated series alone cannot provide.
class OuterFunction {
public:
    OuterFunction(std::vector<LinearFactor> factors, std::vector<cplx> log_samples, double log_value_at_origin);

    const std::vector<LinearFactor>& factors() const noexcept { return factors_; }
    int grid_size() const noexcept { return static_cast<int>(log_samples_.size()); }
    /// Positive real value at z = 0.
    double value_at_origin() const noexcept;
    double log_value_at_origin() const noexcept { return log_origin_; }
    /// Boundary values on the M-point grid the function was built on.
    std::vector<cplx> boundary_values() const;
    /// Taylor series truncated to `order`.
    FourierSeries series(int order) const;
    /// Zeros on the circle were detected, so the function is ill-conditioned for division.
    bool has_boundary_zeros() const noexcept;

private:
    friend OuterFunction outer_factor(const BoundaryGrid&, std::vector<LinearFactor>);

    std::vector<LinearFactor> factors_;
    std::vector<cplx> log_samples_;
    double log_origin_;
};

/// Outer function with |a| = e^g on the circle and a(0) = e^{mean g} > 0.
///
/// Samples may be -inf (or sharply dip) at isolated clusters; these are treated as boundary
/// zeros whose multiplicity is estimated from the neighbouring samples.
/// Throws NumericalError for non-real samples, +inf/NaN, exp overflow, or a zero set of
/// positive measure.
OuterFunction outer_factor(const BoundaryGrid& log_modulus);

/// As above, with known factors whose log-modulus has already been removed from the samples.
OuterFunction outer_factor(const BoundaryGrid& smooth_log_modulus, std::vector<LinearFactor> known);

FourierSeries outer_from_log_modulus(const BoundaryGrid& log_modulus, int order = Settings{}.working_order);

/// Outer function with boundary modulus |f|^theta and positive value at 0.
/// `f` is assumed outer with f(0) > 0.
OuterFunction outer_power_factor(const FourierSeries& f, double theta, const Settings& settings = {});
FourierSeries outer_power(const FourierSeries& f, double theta, const Settings& settings = {});

/// Thresholds for the non-extremality test.
struct ExtremalityOptions {
    double log_floor = -1.0e6;              ///< margins at or below this are reported as -inf
    double extreme_threshold = -50.0;       ///< mean log(1-|b|^2) below this => extreme
    double precision_floor = 1.0e-9;        ///< 1-|b|^2 below this is treated as an exact zero
};

constexpr double kMinusInfinity = -std::numeric_limits<double>::infinity();

/// Normalized quadrature of log(1 - |b|^2) on the grid; -inf sentinel for extreme symbols.
double non_extremality_margin(const FourierSeries& b, const ExtremalityOptions& options = {},
                              const Settings& settings = {});

struct PythagoreanPair {
    FourierSeries b;
    FourierSeries a;
    double tol = 1e-9;
};

/// (b, a) with a the outer mate of b. Throws ExtremePointError for extreme b and
/// DomainError when max |b| > 1 + tol.
PythagoreanPair pythagorean_mate(const FourierSeries& b, double tol = 1e-9, const ExtremalityOptions& options = {},
                                 const Settings& settings = {});

/// Max over the grid of | |a|^2 + |b|^2 - 1 |.
double pair_defect(const PythagoreanPair& pair, int grid_size = Settings{}.grid_size);

struct PythagoreanFactorization {
    PythagoreanPair pair;            ///< (c I b_o, a)
    cplx c{1.0};                     ///< unimodular constant
    OuterFunction a_outer;
    OuterFunction b_outer;
    BlaschkeSpec inner;
    double recombination_residual = 0.0;   ///< max |c I b_o/a - h| / max(1, |h|) where |a| >= 1e-6

    /// Boundary values of b = c I b_o on the factorization grid.
    std::vector<cplx> b_boundary() const;
};

/// Pythagorean factorization h = c I b_o / a with |a|^2 = 1/(|h|^2+1).
/// The inner factor of h must be supplied explicitly. Throws NumericalError when the
/// recombination residual exceeds tol.
PythagoreanFactorization pythagorean_factorize(const FourierSeries& h, const BlaschkeSpec& inner = {},
                                               double tol = 1e-6, const Settings& settings = {});
PythagoreanFactorization pythagorean_factorize(const RationalFunction& h, const BlaschkeSpec& inner = {},
                                               double tol = 1e-6, const Settings& settings = {});

struct StabilityRow {
    double metric = 0.0;   ///< Smirnov distance between h_n and h
    double a_error = 0.0;  ///< max-grid |a_n - a|
    double b_error = 0.0;  ///< max-grid |b_n - b|
};

struct StabilityTable {
    std::vector<StabilityRow> rows;
    /// Every column strictly decreasing down the rows. Non-monotone tables are flagged, not rejected.
    bool strictly_decreasing = true;
};

/// Rational h: each h + p_n is factorized with its own inner part, so perturbations may move
/// numerator zeros into the disk.
StabilityTable stability_experiment(const RationalFunction& h, std::span<const FourierSeries> perturbations,
                                    double tol = 1e-6, const Settings& settings = {});
/// Series h: h and every h + p_n must be outer.
StabilityTable stability_experiment(const FourierSeries& h, std::span<const FourierSeries> perturbations,
                                    double tol = 1e-6, const Settings& settings = {});

} // namespace hardylab
