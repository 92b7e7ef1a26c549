#pragma once

#include <span>
#include <vector>

#include "hardylab/fourier_series.hpp"

namespace hardylab {

/// Samples of a boundary function at the M points e^{2 pi i k/M}, M a power of two.
class BoundaryGrid {
public:
    explicit BoundaryGrid(std::vector<cplx> values);
    static BoundaryGrid from_real(std::span<const double> values);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    std::span<const cplx> values() const noexcept { return values_; }
    cplx operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }

    /// The sample point e^{2 pi i k/M}.
    static cplx point(int k, int m);

private:
    std::vector<cplx> values_;
};

/// Circles of radius r < 1 on which disk quantities are sampled, each with M angles.
class DiskGrid {
public:
    DiskGrid(std::vector<double> radii, int angular_resolution);

    /// Default ladder {0} U {1 - 2^-j : j = 1..14} at the given resolution.
    static DiskGrid standard(int angular_resolution = 1 << 14);
    /// Ladder matched to a truncation dim: {0} U {1 - 2^-j : j = 1..floor(log2 dim)+1} on
    /// M = max(8 dim, 1024) angles, so the finest circle resolves degree-dim data.
    static DiskGrid ladder(int dim);
    /// A single circle, used where a radial limit is replaced by one radius.
    static DiskGrid boundary(const Settings& settings = {});

    std::span<const double> radii() const noexcept { return radii_; }
    double largest_radius() const noexcept { return radii_.back(); }
    int angular_resolution() const noexcept { return m_; }

private:
    std::vector<double> radii_;
    int m_;
};

/// Discrete Fourier coefficients of the samples under normalized arclength, up to `order`.
/// Throws GridError when M < 2*order + 1.
FourierSeries analyze(const BoundaryGrid& samples, int order);

/// Boundary samples of f on M points. Throws GridError when M < 2N + 1.
BoundaryGrid synthesize(const FourierSeries& f, int m);

/// Samples of f(r zeta) on the M-point circle (negative modes damped by r^{|n|}).
std::vector<cplx> sample_at_radius(const FourierSeries& f, double r, int m);

/// Derivative f^{(k)} of an analytic series, as a series of the same order.
FourierSeries derivative(const FourierSeries& f, int k = 1);

FourierSeries project_plus(const FourierSeries& f);
FourierSeries project_minus(const FourierSeries& f);

/// Series of the complex-conjugate boundary function: out(n) = conj(f(-n)).
FourierSeries conj_series(const FourierSeries& f);

/// Power series value sum f_n z^n of an analytic series; |z| < 1 required.
cplx evaluate(const FourierSeries& f, cplx z);

/// max over grid radii of (mean |f(r zeta)|^p)^{1/p}.
double hp_quasinorm(const FourierSeries& f, double p, const DiskGrid& grid);

/// mean (log(1 + |f - g|))^q on the largest grid circle; q = 1 is the Smirnov metric.
double privalov_distance(const FourierSeries& f, const FourierSeries& g, double q, const DiskGrid& grid);

/// Garsia-type BMOA proxy: sup over grid points w of (P[|u|^2](w) - |u(w)|^2)^{1/2}.
double garsia_bmoa_norm(const FourierSeries& u, const DiskGrid& grid);

/// sum_{n >= 0} f_n conj(m_n) r^{2n} at the largest grid radius.
cplx duality_pairing(const FourierSeries& f, const FourierSeries& m, const DiskGrid& grid);

/// Relative radial-limit error 1 - r^{degree} at the largest grid radius; reported alongside
/// norms computed on a DiskGrid.
double radial_tolerance(const FourierSeries& f, const DiskGrid& grid);

} // namespace hardylab
