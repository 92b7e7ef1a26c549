#include "hardylab/lab/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hardylab/errors.hpp"

namespace hardylab::lab {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Index of the first comment character outside double quotes.
std::size_t comment_start(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (!quoted && (line[i] == '#' || line[i] == ';')) return i;
    }
    return line.size();
}

std::string_view trim(std::string_view s, std::size_t& offset) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    offset += b;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string& what, const IniValue& at) { throw ConfigError(what, at.line, at.column); }

double as_double(const IniValue& v) {
    double out = 0.0;
    const char* first = v.text.data();
    const char* last = first + v.text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) fail("expected a number, got '" + v.text + "'", v);
    return out;
}

int as_int(const IniValue& v) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.text.data(), v.text.data() + v.text.size(), out);
    if (ec != std::errc{} || ptr != v.text.data() + v.text.size()) fail("expected an integer, got '" + v.text + "'", v);
    return out;
}

bool as_bool(const IniValue& v) {
    if (v.text == "true" || v.text == "yes" || v.text == "1") return true;
    if (v.text == "false" || v.text == "no" || v.text == "0") return false;
    fail("expected true or false, got '" + v.text + "'", v);
}

std::string unquote(const IniValue& v) {
    if (v.text.size() >= 2 && v.text.front() == '"' && v.text.back() == '"') return v.text.substr(1, v.text.size() - 2);
    return v.text;
}

FunctionSpec spec_at(const IniValue& v, const SpecOptions& options) {
    const std::string body = unquote(v);
    const int shift = body.size() == v.text.size() ? 0 : 1;
    try {
        return parse_function_spec(body, options);
    } catch (const ParseError& e) {
        // Quoted specs sit on one config line, so inner columns map by offset.
        const int line = v.line + e.line() - 1;
        const int column = e.line() == 1 ? v.column + shift + e.column() - 1 : e.column();
        std::string what = e.what();
        what = what.substr(0, what.rfind(" at line "));
        throw ConfigError(what, line, column);
    }
}

std::vector<FunctionSpec> spec_list(const IniValue& v, const SpecOptions& options) {
    std::vector<FunctionSpec> out;
    for (const auto& item : split_quoted(v)) out.push_back(spec_at(item, options));
    if (out.empty()) fail("empty function list", v);
    return out;
}

std::vector<int> int_list(const IniValue& v) {
    std::vector<int> out;
    for (const auto& item : split_plain(v)) out.push_back(as_int(item));
    return out;
}

cplx as_complex(const IniValue& v) {
    const std::string t = v.text;
    if (!t.empty() && t.front() == '(') {
        const auto comma = t.find(',');
        if (comma == std::string::npos || t.back() != ')') fail("expected (re, im)", v);
        std::size_t o1 = 0, o2 = 0;
        const auto re = trim(std::string_view(t).substr(1, comma - 1), o1);
        const auto im = trim(std::string_view(t).substr(comma + 1, t.size() - comma - 2), o2);
        return {as_double({std::string(re), v.line, v.column}), as_double({std::string(im), v.line, v.column})};
    }
    return as_double(v);
}

using Handler = void (*)(ScenarioConfig&, const IniValue&);

struct KeyRule {
    const char* section;
    const char* key;
    Handler apply;
};

const SpecOptions kSymbol{};
const SpecOptions kQuotient{true};

const KeyRule kRules[] = {
    {"run", "scenario", [](ScenarioConfig& c, const IniValue& v) { c.scenario = unquote(v); }},
    {"run", "working_order", [](ScenarioConfig& c, const IniValue& v) { c.settings.working_order = as_int(v); }},
    {"run", "grid_size", [](ScenarioConfig& c, const IniValue& v) { c.settings.grid_size = as_int(v); }},
    {"run", "boundary_radius", [](ScenarioConfig& c, const IniValue& v) { c.settings.boundary_radius = as_double(v); }},
    {"run", "dims", [](ScenarioConfig& c, const IniValue& v) { c.dims = int_list(v); }},
    {"run", "out", [](ScenarioConfig& c, const IniValue& v) { c.out_dir = unquote(v); }},
    {"run", "format",
     [](ScenarioConfig& c, const IniValue& v) {
         const auto f = unquote(v);
         if (f == "json") c.format = OutputFormat::Json;
         else if (f == "csv") c.format = OutputFormat::Csv;
         else fail("format must be json or csv", v);
     }},
    {"run", "record_timing", [](ScenarioConfig& c, const IniValue& v) { c.record_timing = as_bool(v); }},

    {"thresholds", "bounded", [](ScenarioConfig& c, const IniValue& v) { c.probe.bounded_threshold = as_double(v); }},
    {"thresholds", "divergent", [](ScenarioConfig& c, const IniValue& v) { c.probe.divergent_threshold = as_double(v); }},
    {"thresholds", "probe_radii", [](ScenarioConfig& c, const IniValue& v) { c.probe.radii = as_int(v); }},
    {"thresholds", "probe_angles", [](ScenarioConfig& c, const IniValue& v) { c.probe.angles = as_int(v); }},
    {"thresholds", "target_metric", [](ScenarioConfig& c, const IniValue& v) { c.probe.target_metric = as_double(v); }},
    {"thresholds", "multiplier_growth",
     [](ScenarioConfig& c, const IniValue& v) { c.multiplier.growth_threshold = as_double(v); }},
    {"thresholds", "garsia_cap", [](ScenarioConfig& c, const IniValue& v) { c.multiplier.garsia_cap = as_double(v); }},
    {"thresholds", "factorization_tol", [](ScenarioConfig& c, const IniValue& v) { c.factorization_tol = as_double(v); }},

    {"theorem-a", "p", [](ScenarioConfig& c, const IniValue& v) { c.p = as_double(v); }},
    {"theorem-a", "symbols", [](ScenarioConfig& c, const IniValue& v) { c.theorem_a.symbols = spec_list(v, kSymbol); }},
    {"theorem-a", "pairs",
     [](ScenarioConfig& c, const IniValue& v) { c.theorem_a.pair_quotients = spec_list(v, kQuotient); }},
    {"theorem-b", "q", [](ScenarioConfig& c, const IniValue& v) { c.q = as_double(v); }},
    {"theorem-b", "symbols", [](ScenarioConfig& c, const IniValue& v) { c.theorem_b.symbols = spec_list(v, kSymbol); }},
    {"theorem-b", "pairs",
     [](ScenarioConfig& c, const IniValue& v) { c.theorem_b.pair_quotients = spec_list(v, kQuotient); }},
    {"davis-mccarthy", "symbols",
     [](ScenarioConfig& c, const IniValue& v) { c.davis_mccarthy.symbols = spec_list(v, kSymbol); }},
    {"davis-mccarthy", "pairs",
     [](ScenarioConfig& c, const IniValue& v) { c.davis_mccarthy.pair_quotients = spec_list(v, kQuotient); }},

    {"stability", "h", [](ScenarioConfig& c, const IniValue& v) { c.stability_h = spec_at(v, kQuotient); }},
    {"stability", "n", [](ScenarioConfig& c, const IniValue& v) { c.stability_ns = int_list(v); }},
    {"stability", "final_tolerance", [](ScenarioConfig& c, const IniValue& v) { c.stability_final_tol = as_double(v); }},

    {"mate-linearity", "h1", [](ScenarioConfig& c, const IniValue& v) { c.linearity_h1 = spec_at(v, kQuotient); }},
    {"mate-linearity", "h2", [](ScenarioConfig& c, const IniValue& v) { c.linearity_h2 = spec_at(v, kQuotient); }},
    {"mate-linearity", "m", [](ScenarioConfig& c, const IniValue& v) { c.linearity_m = spec_at(v, kSymbol); }},
    {"mate-linearity", "lambda", [](ScenarioConfig& c, const IniValue& v) { c.linearity_lambda = as_complex(v); }},
    {"mate-linearity", "dim", [](ScenarioConfig& c, const IniValue& v) { c.linearity_dim = as_int(v); }},
    {"mate-linearity", "tolerance", [](ScenarioConfig& c, const IniValue& v) { c.linearity_tol = as_double(v); }},

    {"sanity", "seed",
     [](ScenarioConfig& c, const IniValue& v) {
         const int s = as_int(v);
         if (s < 0) fail("seed must be non-negative", v);
         c.sanity_seed = static_cast<unsigned>(s);
     }},
    {"sanity", "trials", [](ScenarioConfig& c, const IniValue& v) { c.sanity_trials = as_int(v); }},
    {"sanity", "degree", [](ScenarioConfig& c, const IniValue& v) { c.sanity_degree = as_int(v); }},
};

void require_increasing(const std::vector<int>& v, const char* what) {
    if (v.empty()) throw ConfigError(std::string(what) + " must not be empty", 0, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) throw ConfigError(std::string(what) + " entries must be positive", 0, 0);
        if (i > 0 && v[i] <= v[i - 1]) throw ConfigError(std::string(what) + " must be strictly increasing", 0, 0);
    }
}

} // namespace

IniDocument IniDocument::parse(std::string_view text) {
    IniDocument doc;
    std::string section;
    doc.sections_[section];
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        std::size_t offset = 0;
        const auto line = trim(raw.substr(0, comment_start(raw)), offset);
        if (line.empty()) continue;
        const int col = static_cast<int>(offset) + 1;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("unterminated section header", line_no, col);
            std::size_t inner = offset + 1;
            section = std::string(trim(line.substr(1, line.size() - 2), inner));
            if (section.empty()) throw ConfigError("empty section name", line_no, col);
            doc.sections_[section];
            doc.headers_.try_emplace(section, IniValue{section, line_no, col, col});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected key = value", line_no, col);
        std::size_t key_off = offset;
        const auto key = trim(line.substr(0, eq), key_off);
        if (key.empty()) throw ConfigError("missing key before '='", line_no, col);
        std::size_t val_off = offset + eq + 1;
        const auto value = trim(line.substr(eq + 1), val_off);
        auto& entries = doc.sections_[section];
        if (entries.count(std::string(key)))
            throw ConfigError("duplicate key '" + std::string(key) + "'", line_no, static_cast<int>(key_off) + 1);
        entries[std::string(key)] = {std::string(value), line_no, static_cast<int>(val_off) + 1,
                                     static_cast<int>(key_off) + 1};
    }
    return doc;
}

const IniValue* IniDocument::header(const std::string& section) const {
    const auto h = headers_.find(section);
    return h == headers_.end() ? nullptr : &h->second;
}

const IniValue* IniDocument::find(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    if (s == sections_.end()) return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
}

std::vector<IniValue> split_quoted(const IniValue& value) {
    std::vector<IniValue> out;
    const std::string& t = value.text;
    std::size_t i = 0;
    while (i < t.size()) {
        while (i < t.size() && is_space(t[i])) ++i;
        if (i >= t.size()) break;
        if (t[i] != '"') throw ConfigError("expected a quoted item", value.line, value.column + static_cast<int>(i));
        const std::size_t close = t.find('"', i + 1);
        if (close == std::string::npos)
            throw ConfigError("unterminated quoted item", value.line, value.column + static_cast<int>(i));
        out.push_back({t.substr(i, close - i + 1), value.line, value.column + static_cast<int>(i)});
        i = close + 1;
        while (i < t.size() && is_space(t[i])) ++i;
        if (i < t.size()) {
            if (t[i] != ',') throw ConfigError("expected ',' between items", value.line, value.column + static_cast<int>(i));
            ++i;
        }
    }
    return out;
}

std::vector<IniValue> split_plain(const IniValue& value) {
    std::vector<IniValue> out;
    std::size_t start = 0;
    const std::string& t = value.text;
    while (start <= t.size()) {
        std::size_t comma = t.find(',', start);
        if (comma == std::string::npos) comma = t.size();
        std::size_t off = start;
        const auto item = trim(std::string_view(t).substr(start, comma - start), off);
        if (item.empty()) throw ConfigError("empty list item", value.line, value.column + static_cast<int>(off));
        out.push_back({std::string(item), value.line, value.column + static_cast<int>(off)});
        start = comma + 1;
    }
    return out;
}

ScenarioConfig default_config(const std::string& scenario) {
    ScenarioConfig c;
    c.scenario = scenario;
    const auto sym = [](const char* t) { return parse_function_spec(t, kSymbol); };
    const auto quo = [](const char* t) { return parse_function_spec(t, kQuotient); };
    c.theorem_a = {{sym("generator: powerlaw s=2.2"), sym("generator: powerlaw s=1.1")},
                   {quo("rational: num=[1,1] den=[1,-1]"), quo("coefficients: [0.75]")}};
    c.theorem_b = {{sym("generator: gevrey c=2 alpha=0.5"), sym("generator: powerlaw s=2")},
                   {quo("rational: num=[1,1] den=[1,-1]"), quo("coefficients: [0.75]"),
                    quo("rational: num=[1] den=[1,-2,1]")}};
    c.davis_mccarthy = c.theorem_b;
    c.stability_h = quo("rational: num=[1,1] den=[1,-1]");
    c.linearity_h1 = quo("rational: num=[1,1] den=[1,-1]");
    c.linearity_h2 = quo("coefficients: [1]");
    c.linearity_m = sym("coefficients: [0, 1]");
    return c;
}

ScenarioConfig parse_config(std::string_view text) {
    const auto doc = IniDocument::parse(text);
    ScenarioConfig config = default_config("");
    for (const auto& [section, entries] : doc.sections()) {
        const bool known_section = std::any_of(std::begin(kRules), std::end(kRules),
                                               [&](const KeyRule& r) { return section == r.section; });
        if (!known_section) {
            if (const auto* h = doc.header(section))
                throw ConfigError("unknown section [" + section + "]", h->line, h->column);
            if (!entries.empty()) {
                const auto& [key, value] = *entries.begin();
                throw ConfigError("key '" + key + "' outside any section", value.line, value.key_column);
            }
            continue;
        }
        for (const auto& [key, value] : entries) {
            const auto rule = std::find_if(std::begin(kRules), std::end(kRules), [&](const KeyRule& r) {
                return section == r.section && key == r.key;
            });
            if (rule == std::end(kRules))
                throw ConfigError("unknown key '" + key + "' in [" + section + "]", value.line, value.key_column);
            rule->apply(config, value);
        }
    }
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string(), 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void validate(const ScenarioConfig& c) {
    const auto& names = scenario_names();
    if (c.scenario.empty()) throw ConfigError("no scenario given ([run] scenario or --scenario)", 0, 0);
    if (std::find(names.begin(), names.end(), c.scenario) == names.end())
        throw ConfigError("unknown scenario '" + c.scenario + "'", 0, 0);
    if (c.settings.working_order < 1) throw ConfigError("working_order must be positive", 0, 0);
    if (c.settings.grid_size < 2 * c.settings.working_order + 1)
        throw ConfigError("grid_size must be at least 2 * working_order + 1", 0, 0);
    if ((c.settings.grid_size & (c.settings.grid_size - 1)) != 0)
        throw ConfigError("grid_size must be a power of two", 0, 0);
    if (!(c.settings.boundary_radius > 0.0 && c.settings.boundary_radius < 1.0))
        throw ConfigError("boundary_radius must lie in (0, 1)", 0, 0);
    require_increasing(c.dims, "dims");
    require_increasing(c.stability_ns, "stability n");
    if (c.dims.back() > c.settings.working_order)
        throw ConfigError("largest dim exceeds working_order", 0, 0);
    if (!(c.p > 0.0)) throw ConfigError("p must be positive", 0, 0);
    if (!(c.q >= 1.0)) throw ConfigError("q must be >= 1", 0, 0);
    if (c.linearity_dim < 2 || c.linearity_dim > c.settings.working_order)
        throw ConfigError("mate-linearity dim must lie in [2, working_order]", 0, 0);
    if (c.sanity_trials < 1 || c.sanity_degree < 1) throw ConfigError("sanity trials and degree must be positive", 0, 0);
    if (c.probe.radii < 1 || c.probe.angles < 1) throw ConfigError("probe radii and angles must be positive", 0, 0);
    if (!(c.probe.bounded_threshold < c.probe.divergent_threshold))
        throw ConfigError("bounded threshold must be below the divergent threshold", 0, 0);
}

} // namespace hardylab::lab
