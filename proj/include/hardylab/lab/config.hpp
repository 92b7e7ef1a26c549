#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hardylab/hb_space.hpp"
#include "hardylab/lab/function_spec.hpp"
#include "hardylab/operators.hpp"

namespace hardylab::lab {

/// Invalid configuration; carries the position of the offending text (0 when not tied to one).
class ConfigError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A raw value with the 1-based position where it starts.
struct IniValue {
    std::string text;
    int line = 0;
    int column = 0;
    int key_column = 0;   ///< where the key of this entry starts
};

/// Flat key = value file with [section] headers; '#' and ';' start comments outside quotes.
/// Keys before the first header belong to section "".
class IniDocument {
public:
    static IniDocument parse(std::string_view text);

    const IniValue* find(const std::string& section, const std::string& key) const;
    const std::map<std::string, std::map<std::string, IniValue>>& sections() const noexcept { return sections_; }
    /// Position of the first [name] header; nullptr for the implicit "" section.
    const IniValue* header(const std::string& section) const;

private:
    std::map<std::string, std::map<std::string, IniValue>> sections_;
    std::map<std::string, IniValue> headers_;
};

/// Splits a comma-separated list of "quoted" items, keeping positions. Throws ConfigError.
std::vector<IniValue> split_quoted(const IniValue& value);
/// Splits a comma-separated list of bare numbers.
std::vector<IniValue> split_plain(const IniValue& value);

enum class OutputFormat { Json, Csv };

inline const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names{"theorem-a", "theorem-b", "davis-mccarthy",
                                                "stability", "mate-linearity", "sanity"};
    return names;
}

struct ClassPanel {
    std::vector<FunctionSpec> symbols;
    std::vector<FunctionSpec> pair_quotients;   ///< each h = b/a is factorized into a pair
};

struct ScenarioConfig {
    std::string scenario;
    Settings settings;
    std::vector<int> dims{64, 256, 1024};
    std::filesystem::path out_dir{"."};
    OutputFormat format = OutputFormat::Json;
    bool record_timing = false;

    ProbeOptions probe;
    MultiplierOptions multiplier;
    double factorization_tol = 1e-6;

    double p = 1.0;
    ClassPanel theorem_a;
    double q = 2.0;
    ClassPanel theorem_b;
    ClassPanel davis_mccarthy;

    FunctionSpec stability_h;
    std::vector<int> stability_ns{4, 16, 64, 256, 512};
    double stability_final_tol = 1e-2;

    FunctionSpec linearity_h1, linearity_h2, linearity_m;
    cplx linearity_lambda{2.0};
    int linearity_dim = 256;
    double linearity_tol = 1e-6;

    unsigned sanity_seed = 20240607;
    int sanity_trials = 8;
    int sanity_degree = 24;
};

/// All defaults, with the named scenario.
ScenarioConfig default_config(const std::string& scenario = "sanity");

/// Parses a config file's text; throws ConfigError with line and column. Range checks live in validate().
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Checks cross-field invariants (M >= 2N + 1, increasing ladders, known scenario).
void validate(const ScenarioConfig& config);

} // namespace hardylab::lab
