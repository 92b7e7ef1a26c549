#pragma once

#include <span>
#include <string>
#include <vector>

#include "hardylab/factorization.hpp"
#include "hardylab/fourier_series.hpp"
#include "hardylab/operators.hpp"

namespace hardylab {

/// Condition numbers above this flag a truncated solve as ill-conditioned.
constexpr double kConditionCap = 1e12;

/// Solution of the truncated mate equation T(b) f = T(a) f_plus.
struct MateSolution {
    FourierSeries f;
    FourierSeries f_plus;
    double residual = 0.0;   ///< l2 norm of T(b) f - T(a) f_plus on the window
    double hb_norm = 0.0;    ///< sqrt(|f|^2 + |f_plus|^2)
    int dim = 0;
    double condition = 1.0;  ///< estimate of cond(T(a)) at this dim
    bool ill_conditioned = false;
};

/// Throws DomainError for non-analytic f or degree >= dim.
MateSolution solve_mate(const PythagoreanPair& pair, const FourierSeries& f, int dim);

enum class Membership { InSpace, OutOfSpace, Inconclusive };
std::string to_string(Membership m);

struct MembershipOptions {
    double stabilization_tol = 1e-3;   ///< relative change of hb_norm over the last two dims
    double divergence_factor = 10.0;   ///< last/first hb_norm above this => OutOfSpace
    double residual_tol = 1e-8;
};

struct MembershipReport {
    std::vector<int> dims;
    std::vector<double> hb_norms;
    std::vector<double> residuals;
    Membership verdict = Membership::Inconclusive;
};

MembershipReport membership_diagnostic(const PythagoreanPair& pair, const FourierSeries& f, std::span<const int> dims,
                                       const MembershipOptions& options = {});

struct Preimage {
    FourierSeries u;
    double residual = 0.0;
    double condition = 1.0;
    bool ill_conditioned = false;
};

/// Solve T(a) u = m on the dim truncation (upper triangular, so the least-squares minimizer is
/// the back-substitution solution).
Preimage toeplitz_preimage(const FourierSeries& m, const FourierSeries& a, int dim);

enum class MultiplierVerdict { Multiplier, NotCertified };
std::string to_string(MultiplierVerdict v);

struct MultiplierOptions {
    double growth_threshold = 1.5;   ///< last/first Garsia ratio allowed for certification
    double garsia_cap = 1e3;         ///< Garsia values above this are never certified
    bool composed_norms = true;      ///< also report truncated norms for the composed-Hankel conditions
};

struct MultiplierReport {
    FourierSeries m;
    std::vector<int> dims;
    FourierSeries u;                  ///< Toeplitz preimage at the largest dim
    std::vector<double> u_garsia;
    FourierSeries mate_of_m;          ///< T(b) u at the largest dim
    std::vector<double> mate_garsia;
    double growth_ratio = 1.0;
    MultiplierVerdict verdict = MultiplierVerdict::NotCertified;
    bool ill_conditioned = false;
    /// |H*(u) H(a)| and |H*(u) H(b)| per dim; reported only, never turned into a verdict.
    std::vector<double> composed_a;
    std::vector<double> composed_b;
};

/// Certifies m = T(a) u with u in BMOA (sufficient multiplier condition) by Garsia stabilization.
MultiplierReport lotto_sarason_check(const PythagoreanPair& pair, const FourierSeries& m, std::span<const int> dims,
                                     const MultiplierOptions& options = {});

/// l2 norm of m_+(h) - conj(lambda) m_+(h1) - m_+(h2) on the leading dim/2 coefficients, where
/// each mate solves T(b) m = T(a) m_+ for the pair of the respective quotient.
double mate_linearity_residual(const PythagoreanPair& pair1, const PythagoreanPair& pair2,
                               const PythagoreanPair& combined, cplx lambda, const FourierSeries& m, int dim);

/// Convenience form for rational quotients: factorizes h1, h2 and lambda h1 + h2.
double mate_linearity_residual(const RationalFunction& h1, const RationalFunction& h2, cplx lambda,
                               const FourierSeries& m, int dim, const Settings& settings = {});

/// lambda h1 + h2 in closed form.
RationalFunction linear_combination(const RationalFunction& h1, const RationalFunction& h2, cplx lambda);

} // namespace hardylab
