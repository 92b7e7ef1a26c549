#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hardylab/factorization.hpp"
#include "hardylab/fourier_series.hpp"

namespace hardylab::lab {

/// Malformed DSL or config text, with a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_, column_;
};

struct RationalSpec {
    std::vector<cplx> numerator;
    std::vector<cplx> denominator;
};
struct CoefficientsSpec {
    std::vector<cplx> coefficients;
};
struct GevreySpec {
    double c = 1.0;
    double alpha = 0.5;
};
struct PowerlawSpec {
    double s = 2.0;
};
struct OuterPowerSpec {
    std::vector<cplx> base;
    double theta = 1.0;
};
struct BlaschkeSpecText {
    std::vector<cplx> zeros;
};

using FunctionKind =
    std::variant<RationalSpec, CoefficientsSpec, GevreySpec, PowerlawSpec, OuterPowerSpec, BlaschkeSpecText>;

struct FunctionSpec {
    std::string text;   ///< source, echoed into reports
    FunctionKind kind;
};

struct SpecOptions {
    /// Quotients b/a are unbounded where a vanishes, so pair and stability inputs may put
    /// denominator zeros on the circle; symbols may not.
    bool allow_boundary_poles = false;
};

/// Grammar (whitespace-insensitive, numbers are reals or (re, im)):
///   rational: num=[...] den=[...]
///   coefficients: [...]
///   generator: gevrey c=<x> alpha=<x> | powerlaw s=<x> | outerpower base=[...] theta=<x>
///   blaschke: zeros=[...]
/// Throws ParseError; a rational denominator vanishing on the closed disk (or strictly
/// inside it, with allow_boundary_poles) is reported at the den= position.
FunctionSpec parse_function_spec(std::string_view text, const SpecOptions& options = {});

/// Taylor series up to settings.working_order (long division for rationals).
FourierSeries to_series(const FunctionSpec& spec, const Settings& settings = {});

/// Rational view of the spec: rationals, coefficient lists (as polynomials) and Blaschke products.
/// Throws DomainError for generators.
RationalFunction to_rational(const FunctionSpec& spec);

bool is_rational(const FunctionSpec& spec) noexcept;

} // namespace hardylab::lab
