#include "hardylab/lab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hardylab::lab {

void Table::add_row(std::vector<Json> row) {
    if (row.size() != columns.size())
        throw std::logic_error("table " + name + ": row of " + std::to_string(row.size()) + " cells for " +
                               std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

bool Report::pass() const noexcept {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Table& Report::table(const std::string& name, std::vector<std::string> columns) {
    tables.push_back({name, std::move(columns), {}});
    return tables.back();
}

void Report::check(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void write_json(std::string& out, const Json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (v.type()) {
    case Json::value_t::object: {
        if (v.empty()) { out += "{}"; return; }
        out += "{\n";
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += inner + Json(it.key()).dump() + ": ";
            write_json(out, it.value(), indent + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case Json::value_t::array: {
        if (v.empty()) { out += "[]"; return; }
        // Rows of scalars stay on one line.
        bool flat = true;
        for (const auto& e : v) flat = flat && !e.is_structured();
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ", ";
                write_json(out, v[i], indent + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",\n";
            out += inner;
            write_json(out, v[i], indent + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    case Json::value_t::number_float: {
        const double d = v.get<double>();
        out += std::isfinite(d) ? format_double(d) : "\"" + format_double(d) + "\"";
        return;
    }
    default:
        out += v.dump();
    }
}

Json report_json(const Report& r) {
    Json j = Json::object();
    j["scenario"] = r.scenario;
    j["inputs"] = r.inputs;
    j["tolerances"] = r.tolerances;
    j["verdict"] = r.pass() ? "PASS" : "FAIL";
    Json tables = Json::object();
    for (const auto& t : r.tables) {
        Json rows = Json::array();
        for (const auto& row : t.rows) rows.push_back(Json(row));
        tables[t.name] = {{"columns", t.columns}, {"rows", rows}};
    }
    j["tables"] = tables;
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    if (r.wall_time_seconds) j["wall_time_seconds"] = *r.wall_time_seconds;
    return j;
}

std::string csv_cell(const Json& v) {
    std::string s;
    if (v.is_number_float()) s = format_double(v.get<double>());
    else if (v.is_string()) s = v.get<std::string>();
    else s = v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string csv_line(const std::vector<Json>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ",";
        line += csv_cell(cells[i]);
    }
    return line + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

} // namespace

std::string dump_json(const Json& value) {
    std::string out;
    write_json(out, value, 0);
    return out + "\n";
}

std::string to_json_text(const Report& report) { return dump_json(report_json(report)); }

std::vector<std::filesystem::path> emit_report(const Report& report, OutputFormat format,
                                               const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    const std::string stem = report.scenario.empty() ? "report" : report.scenario;
    std::vector<std::filesystem::path> written;
    if (format == OutputFormat::Json) {
        written.push_back(dir / (stem + ".json"));
        write_file(written.back(), to_json_text(report));
        return written;
    }

    std::string manifest = csv_line({"file", "table", "rows"});
    for (const auto& t : report.tables) {
        const std::string file = stem + "_" + t.name + ".csv";
        std::vector<Json> header(t.columns.begin(), t.columns.end());
        std::string body = csv_line(header);
        for (const auto& row : t.rows) body += csv_line(row);
        written.push_back(dir / file);
        write_file(written.back(), body);
        manifest += csv_line({file, t.name, static_cast<std::int64_t>(t.rows.size())});
    }
    if (!report.checks.empty()) {
        const std::string file = stem + "_checks.csv";
        std::string body = csv_line({"name", "pass", "detail"});
        for (const auto& c : report.checks) body += csv_line({c.name, c.pass ? "PASS" : "FAIL", c.detail});
        written.push_back(dir / file);
        write_file(written.back(), body);
        manifest += csv_line({file, "checks", static_cast<std::int64_t>(report.checks.size())});
    }
    written.push_back(dir / (stem + "_manifest.csv"));
    write_file(written.back(), manifest);
    return written;
}

} // namespace hardylab::lab
