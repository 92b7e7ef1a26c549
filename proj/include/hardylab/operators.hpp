#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

#include "hardylab/fourier_series.hpp"

namespace hardylab {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// dim x dim truncation of the Toeplitz operator f -> P_+(conj(g) f):
/// entries conj(g_hat(k - j)). Upper triangular for analytic g.
class ToeplitzMatrix {
public:
    ToeplitzMatrix(FourierSeries symbol, int dim);

    const FourierSeries& symbol() const noexcept { return symbol_; }
    int dim() const noexcept { return static_cast<int>(entries_.rows()); }
    const ComplexMatrix& entries() const noexcept { return entries_; }
    cplx operator()(int j, int k) const { return entries_(j, k); }

private:
    FourierSeries symbol_;
    ComplexMatrix entries_;
};

/// dim x dim truncation of the Hankel operator f -> P_-(conj(m) f):
/// entries conj(m_hat(j + k + 1)); row j is the output Fourier index -(j+1).
class HankelMatrix {
public:
    HankelMatrix(FourierSeries symbol, int dim);

    const FourierSeries& symbol() const noexcept { return symbol_; }
    int dim() const noexcept { return static_cast<int>(entries_.rows()); }
    const ComplexMatrix& entries() const noexcept { return entries_; }
    cplx operator()(int j, int k) const { return entries_(j, k); }

private:
    FourierSeries symbol_;
    ComplexMatrix entries_;
};

ToeplitzMatrix toeplitz_matrix(const FourierSeries& g, int dim);
HankelMatrix hankel_matrix(const FourierSeries& m, int dim);

/// Matrix-vector product; throws DimensionError on a length mismatch.
/// Call as hardylab::apply when passing a std::vector, or ADL finds std::apply.
std::vector<cplx> apply(const ComplexMatrix& matrix, std::span<const cplx> v);
std::vector<cplx> apply(const ToeplitzMatrix& matrix, std::span<const cplx> v);
std::vector<cplx> apply(const HankelMatrix& matrix, std::span<const cplx> v);

/// Hankel output as an analytic series: u_{j+1} = conj((H h)_j), i.e. the conjugate of the
/// anti-analytic function P_-(conj(m) h).
FourierSeries hankel_image(const HankelMatrix& matrix, std::span<const cplx> h);

struct NormEstimate {
    double value = 0.0;
    int iterations = 0;
    bool converged = true;   ///< false when the iteration cap was reached (Inconclusive)
};

/// Largest singular value by power iteration on M^H M from a fixed pseudo-random start.
NormEstimate operator_norm(const ComplexMatrix& matrix, double rel_tol = 1e-13, int max_iterations = 20000);
NormEstimate operator_norm(const ToeplitzMatrix& matrix, double rel_tol = 1e-13, int max_iterations = 20000);
NormEstimate operator_norm(const HankelMatrix& matrix, double rel_tol = 1e-13, int max_iterations = 20000);

/// Max-entry deviation among T(g1 g2), T(g1) T(g2) and T(g2) T(g1) on the leading window of
/// size dim - deg g1 - deg g2. Throws DimensionError when the window is empty.
double commutation_residual(const FourierSeries& g1, const FourierSeries& g2, int dim);

/// Function space the continuity probe draws unit test functions from.
struct ProbeSpace {
    enum class Kind { Hp, Privalov, Smirnov };
    Kind kind = Kind::Hp;
    double exponent = 1.0;   ///< p for Hp, q for Privalov, 1 for Smirnov

    static ProbeSpace hp(double p) { return {Kind::Hp, p}; }
    static ProbeSpace privalov(double q) { return {Kind::Privalov, q}; }
    static ProbeSpace smirnov() { return {Kind::Smirnov, 1.0}; }
    std::string name() const;
};

enum class Verdict { Bounded, Divergent, Inconclusive };
std::string to_string(Verdict v);

struct ProbeOptions {
    int radii = 8;
    int angles = 8;
    double bounded_threshold = 1.5;
    double divergent_threshold = 4.0;
    double target_metric = 1.0;   ///< Privalov metric of the calibrated exponential atoms
};

struct ContinuityProbeReport {
    ProbeSpace space;
    std::vector<int> dims;
    /// Probe norms, cumulative over the dim ladder so the sequence is non-decreasing.
    std::vector<double> norms;
    double growth_ratio = 0.0;
    Verdict verdict = Verdict::Inconclusive;
};

/// Growth of sup_h garsia(H_m h)/metric(h) along the dim ladder over a deterministic atom family.
/// Throws DimensionError unless dims are positive and strictly increasing.
ContinuityProbeReport hankel_continuity_probe(const FourierSeries& m, const ProbeSpace& space, std::span<const int> dims,
                                              const ProbeOptions& options = {});

/// Bounded / Divergent / Inconclusive from a last/first ratio.
Verdict ratio_verdict(double ratio, double bounded_threshold, double divergent_threshold);

} // namespace hardylab
