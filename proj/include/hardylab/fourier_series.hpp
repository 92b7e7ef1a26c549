#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace hardylab {

using cplx = std::complex<double>;

/// Working defaults shared by the numerical modules.
struct Settings {
    int working_order = 2048;             ///< truncation order N of series products and outputs
    int grid_size = 1 << 14;              ///< boundary samples M (power of two)
    double boundary_radius = 1.0 - 0x1p-14; ///< stand-in for radial limits r -> 1-
};

/// Finitely supported two-sided Fourier series sum_{n=-N}^{N} c_n zeta^n.
///
/// Coefficients outside [-N, N] are zero. Reading outside the range is allowed
/// and yields zero; writing outside it throws.
class FourierSeries {
public:
    FourierSeries() : order_(0), coeffs_(1, cplx{}) {}
    explicit FourierSeries(int order);

    /// Series built from (index, value) pairs; the order defaults to the largest |index|.
    static FourierSeries from_terms(std::initializer_list<std::pair<int, cplx>> terms, int order = -1);
    /// Analytic series with the given Taylor coefficients c_0, c_1, ...
    static FourierSeries from_taylor(std::span<const cplx> taylor, int order = -1);
    static FourierSeries from_taylor(std::span<const double> taylor, int order = -1);
    static FourierSeries constant(cplx value, int order = 0);
    /// The monomial zeta^k.
    static FourierSeries monomial(int k, cplx value = 1.0, int order = -1);

    int order() const noexcept { return order_; }

    cplx operator[](int n) const noexcept {
        return (n < -order_ || n > order_) ? cplx{} : coeffs_[static_cast<std::size_t>(n + order_)];
    }
    void set(int n, cplx value);

    /// Coefficients laid out from index -N to N.
    std::span<const cplx> data() const noexcept { return coeffs_; }

    /// Taylor coefficients c_0 .. c_{count-1} (zero padded beyond the order).
    std::vector<cplx> taylor(int count) const;

    /// Same function with a different truncation order (drops or zero-pads).
    FourierSeries with_order(int order) const;

    /// All negative-index coefficients are within tol of zero.
    bool is_analytic(double tol = 0.0) const noexcept;
    /// Largest index with a coefficient of modulus > tol; -1 for the zero series
    /// restricted to non-negative indices.
    int degree(double tol = 0.0) const noexcept;
    bool is_zero(double tol = 0.0) const noexcept;

    double l2_norm() const noexcept;
    double max_abs_coefficient() const noexcept;

    FourierSeries& operator+=(const FourierSeries& other);
    FourierSeries& operator-=(const FourierSeries& other);
    FourierSeries& operator*=(cplx scale);

    friend FourierSeries operator+(FourierSeries lhs, const FourierSeries& rhs) { return lhs += rhs; }
    friend FourierSeries operator-(FourierSeries lhs, const FourierSeries& rhs) { return lhs -= rhs; }
    friend FourierSeries operator*(FourierSeries lhs, cplx scale) { return lhs *= scale; }
    friend FourierSeries operator*(cplx scale, FourierSeries rhs) { return rhs *= scale; }
    friend FourierSeries operator-(FourierSeries f) { return f *= -1.0; }

    /// Coefficientwise equality (orders may differ; missing entries count as zero).
    friend bool operator==(const FourierSeries& lhs, const FourierSeries& rhs);

private:
    void grow_to(int order);

    int order_;
    std::vector<cplx> coeffs_;
};

/// Max |f_n - g_n| over all indices.
double max_coefficient_distance(const FourierSeries& f, const FourierSeries& g);

/// Product of two series (coefficient convolution) truncated to `order`.
FourierSeries multiply(const FourierSeries& f, const FourierSeries& g, int order);

} // namespace hardylab
