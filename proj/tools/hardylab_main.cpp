#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "hardylab/lab/scenarios.hpp"

namespace {

constexpr int kAllPass = 0;
constexpr int kSomeFail = 1;
constexpr int kConfigError = 2;

using namespace hardylab::lab;

int finish(const Report& report, const ScenarioConfig& config, bool write) {
    for (const auto& c : report.checks)
        std::printf("%s  %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.empty() ? "" : ": ",
                    c.detail.c_str());
    if (write) {
        try {
            for (const auto& path : emit_report(report, config.format, config.out_dir))
                std::printf("wrote %s\n", path.string().c_str());
        } catch (const std::exception& e) {
            std::fprintf(stderr, "hardylab: %s\n", e.what());
            return kConfigError;
        }
    }
    std::printf("%s: %s\n", report.scenario.c_str(), report.pass() ? "PASS" : "FAIL");
    return report.pass() ? kAllPass : kSomeFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral experiments on de Branges-Rovnyak spaces"};
    app.require_subcommand(1);

    std::string config_path, scenario, out_dir, format;
    bool record_timing = false;
    auto* run = app.add_subcommand("run", "Run a scenario from a config file");
    run->add_option("config", config_path, "Path to the INI config")->required();
    run->add_option("--scenario", scenario, "Override [run] scenario");
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    run->add_flag("--record-timing", record_timing, "Include wall time in the report (breaks byte stability)");

    std::string check_out, check_format;
    auto* check = app.add_subcommand("check", "Run the invariant suite at defaults");
    check->add_option("--out", check_out, "Also write the report here");
    check->add_option("--format", check_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (*check) {
            auto config = default_config("sanity");
            if (!check_out.empty()) config.out_dir = check_out;
            if (check_format == "csv") config.format = OutputFormat::Csv;
            return finish(run_scenario(config), config, !check_out.empty());
        }
        auto config = load_config(config_path);
        if (!scenario.empty()) config.scenario = scenario;
        if (!out_dir.empty()) config.out_dir = out_dir;
        if (!format.empty()) config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
        if (record_timing) config.record_timing = true;
        validate(config);
        return finish(run_scenario(config), config, true);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "hardylab: config error: %s\n", e.what());
        return kConfigError;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "hardylab: config error: %s\n", e.what());
        return kConfigError;
    }
}
