#include "hardylab/fourier_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardylab/errors.hpp"
#include "hardylab/fft.hpp"

namespace hardylab {

FourierSeries::FourierSeries(int order) : order_(order), coeffs_() {
    if (order < 0) throw GridError("FourierSeries order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(2 * order + 1), cplx{});
}

FourierSeries FourierSeries::from_terms(std::initializer_list<std::pair<int, cplx>> terms, int order) {
    int needed = 0;
    for (const auto& [n, v] : terms) needed = std::max(needed, std::abs(n));
    FourierSeries f(order < 0 ? needed : order);
    for (const auto& [n, v] : terms) f.set(n, f[n] + v);
    return f;
}

FourierSeries FourierSeries::from_taylor(std::span<const cplx> taylor, int order) {
    const int len = static_cast<int>(taylor.size());
    FourierSeries f(order < 0 ? std::max(len - 1, 0) : order);
    for (int n = 0; n < std::min(len, f.order() + 1); ++n) f.set(n, taylor[static_cast<std::size_t>(n)]);
    return f;
}

FourierSeries FourierSeries::from_taylor(std::span<const double> taylor, int order) {
    std::vector<cplx> c(taylor.begin(), taylor.end());
    return from_taylor(std::span<const cplx>(c), order);
}

FourierSeries FourierSeries::constant(cplx value, int order) {
    FourierSeries f(order);
    f.set(0, value);
    return f;
}

FourierSeries FourierSeries::monomial(int k, cplx value, int order) {
    FourierSeries f(order < 0 ? std::abs(k) : order);
    f.set(k, value);
    return f;
}

void FourierSeries::set(int n, cplx value) {
    if (n < -order_ || n > order_)
        throw GridError("index " + std::to_string(n) + " outside truncation order " + std::to_string(order_));
    coeffs_[static_cast<std::size_t>(n + order_)] = value;
}

std::vector<cplx> FourierSeries::taylor(int count) const {
    std::vector<cplx> out(static_cast<std::size_t>(std::max(count, 0)));
    for (int n = 0; n < count; ++n) out[static_cast<std::size_t>(n)] = (*this)[n];
    return out;
}

FourierSeries FourierSeries::with_order(int order) const {
    FourierSeries out(order);
    const int lim = std::min(order, order_);
    for (int n = -lim; n <= lim; ++n) out.set(n, (*this)[n]);
    return out;
}

bool FourierSeries::is_analytic(double tol) const noexcept {
    for (int n = -order_; n < 0; ++n)
        if (std::abs((*this)[n]) > tol) return false;
    return true;
}

int FourierSeries::degree(double tol) const noexcept {
    for (int n = order_; n >= 0; --n)
        if (std::abs((*this)[n]) > tol) return n;
    return -1;
}

bool FourierSeries::is_zero(double tol) const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [tol](cplx c) { return std::abs(c) <= tol; });
}

double FourierSeries::l2_norm() const noexcept {
    double s = 0.0;
    for (cplx c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
}

double FourierSeries::max_abs_coefficient() const noexcept {
    double m = 0.0;
    for (cplx c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

void FourierSeries::grow_to(int order) {
    if (order <= order_) return;
    *this = with_order(order);
}

FourierSeries& FourierSeries::operator+=(const FourierSeries& other) {
    grow_to(other.order_);
    for (int n = -other.order_; n <= other.order_; ++n)
        coeffs_[static_cast<std::size_t>(n + order_)] += other[n];
    return *this;
}

FourierSeries& FourierSeries::operator-=(const FourierSeries& other) {
    grow_to(other.order_);
    for (int n = -other.order_; n <= other.order_; ++n)
        coeffs_[static_cast<std::size_t>(n + order_)] -= other[n];
    return *this;
}

FourierSeries& FourierSeries::operator*=(cplx scale) {
    for (cplx& c : coeffs_) c *= scale;
    return *this;
}

bool operator==(const FourierSeries& lhs, const FourierSeries& rhs) {
    return max_coefficient_distance(lhs, rhs) == 0.0;
}

double max_coefficient_distance(const FourierSeries& f, const FourierSeries& g) {
    const int n = std::max(f.order(), g.order());
    double d = 0.0;
    for (int k = -n; k <= n; ++k) d = std::max(d, std::abs(f[k] - g[k]));
    return d;
}

FourierSeries multiply(const FourierSeries& f, const FourierSeries& g, int order) {
    // Index ranges that actually carry data, so sparse low-degree factors stay cheap.
    auto support = [](const FourierSeries& s) {
        int lo = s.order() + 1, hi = -s.order() - 1;
        for (int n = -s.order(); n <= s.order(); ++n)
            if (s[n] != cplx{}) {
                lo = std::min(lo, n);
                hi = std::max(hi, n);
            }
        return std::pair{lo, hi};
    };
    FourierSeries out(order);
    const auto [flo, fhi] = support(f);
    const auto [glo, ghi] = support(g);
    if (flo > fhi || glo > ghi) return out;

    const long long fl = fhi - flo + 1, gl = ghi - glo + 1;
    if (std::min(fl, gl) <= 64) {
        for (int i = flo; i <= fhi; ++i) {
            const cplx fi = f[i];
            if (fi == cplx{}) continue;
            const int jlo = std::max(glo, -order - i), jhi = std::min(ghi, order - i);
            for (int j = jlo; j <= jhi; ++j) out.set(i + j, out[i + j] + fi * g[j]);
        }
        return out;
    }
    long long m = 1;
    while (m < fl + gl - 1) m <<= 1;
    std::vector<cplx> a(static_cast<std::size_t>(m)), b(static_cast<std::size_t>(m));
    for (int i = flo; i <= fhi; ++i) a[static_cast<std::size_t>(i - flo)] = f[i];
    for (int j = glo; j <= ghi; ++j) b[static_cast<std::size_t>(j - glo)] = g[j];
    auto fa = detail::fft_forward(a);
    auto fb = detail::fft_forward(b);
    for (std::size_t k = 0; k < fa.size(); ++k) fa[k] *= fb[k];
    auto conv = detail::fft_inverse(fa);
    const double inv = 1.0 / static_cast<double>(m);
    for (long long k = 0; k < fl + gl - 1; ++k) {
        const long long n = k + flo + glo;
        if (n >= -order && n <= order) out.set(static_cast<int>(n), conv[static_cast<std::size_t>(k)] * inv);
    }
    return out;
}

} // namespace hardylab
