#pragma once

#include <deque>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardylab/lab/config.hpp"

namespace hardylab::lab {

using Json = nlohmann::json;   // std::map objects, so keys serialize sorted

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;

    void add_row(std::vector<Json> row);
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string scenario;
    Json inputs = Json::object();
    Json tolerances = Json::object();
    std::deque<Table> tables;   ///< deque keeps references from table() valid
    std::vector<Check> checks;
    std::optional<double> wall_time_seconds;   ///< only with record_timing, to keep output byte-stable

    bool pass() const noexcept;
    Table& table(const std::string& name, std::vector<std::string> columns);
    void check(std::string name, bool pass, std::string detail = {});
};

/// Deterministic JSON: sorted keys, two-space indent, doubles as %.17g, non-finite values as
/// the strings "inf", "-inf" and "nan".
std::string to_json_text(const Report& report);
std::string dump_json(const Json& value);

/// Writes <dir>/<scenario>.json, or one <scenario>_<table>.csv per table, <scenario>_checks.csv
/// and a <scenario>_manifest.csv index. Returns the files written; throws std::runtime_error on I/O failure.
std::vector<std::filesystem::path> emit_report(const Report& report, OutputFormat format,
                                               const std::filesystem::path& dir);

/// %.17g with the non-finite spellings used above.
std::string format_double(double v);

} // namespace hardylab::lab
