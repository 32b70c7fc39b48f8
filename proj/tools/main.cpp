#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "errors.hpp"
#include "triage/model.hpp"

namespace {

using namespace triage::cli;

std::filesystem::path resolve_registry(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PEARSON_TRIAGE_REGISTRY")) {
        if (*env) return env;
    }
    throw UsageError("no registry path; pass --registry or set PEARSON_TRIAGE_REGISTRY");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pearson Type-I triage toolkit: symptom coupling reports, CBO "
                 "reuse metrics and treatment-reuse classification over a "
                 "patient registry"};
    app.require_subcommand(1);
    app.fallthrough();  // let subcommands pass --registry up to the app

    std::string registry_flag;
    app.add_option("--registry", registry_flag,
                   "registry CSV path (default: $PEARSON_TRIAGE_REGISTRY)");

    std::string format_name = "text";
    std::string config_path;
    std::size_t normal_max = 0;
    std::size_t cardiac_min = 3;

    auto add_threshold_options = [&](CLI::App* cmd) {
        cmd->add_option("--normal-max", normal_max,
                        "largest cbo still classed normal (default 0)");
        cmd->add_option("--cardiac-min", cardiac_min,
                        "smallest cbo classed cardiac (default 3)");
        cmd->add_option("--config", config_path,
                        "JSON config with normal_max/cardiac_min (flags win)");
    };

    // ingest
    std::string ingest_input;
    bool boolean_mode = false;
    auto* ingest = app.add_subcommand("ingest", "append validated patient rows");
    ingest->add_option("input", ingest_input, "CSV file to ingest")->required();
    ingest->add_flag("--boolean", boolean_mode, "accept 0/1 cells and re-encode them");

    // report
    std::string kind_name;
    int prefix_k = 4;
    auto* report = app.add_subcommand("report", "coupling and reuse-metric reports");
    report->add_option("--kind", kind_name,
                       "single | prefix | profile-groups | cbo | cbo-histogram | clusters")
        ->required();
    report->add_option("--k", prefix_k, "prefix length for --kind prefix (default 4)");
    report->add_option("--format", format_name, "text | json | csv");
    add_threshold_options(report);

    // classify
    std::string row_flag, codes_flag, new_id = "NEW";
    auto* classify = app.add_subcommand("classify", "place a new patient in a cluster");
    classify->add_option("--row", row_flag, "full CSV row: id,c1,...,c11");
    classify->add_option("--codes", codes_flag, "11 comma-separated code cells");
    classify->add_option("--id", new_id, "id used with --codes (default NEW)");
    classify->add_flag("--boolean", boolean_mode, "interpret cells as 0/1 booleans");
    classify->add_option("--format", format_name, "text | json | csv");
    add_threshold_options(classify);

    // fit
    std::string member_flag, moments_flag;
    int cluster_flag = 0;
    auto* fit = app.add_subcommand("fit", "Pearson diagnostics for one cluster");
    fit->add_option("--member", member_flag, "select the cluster containing this patient");
    fit->add_option("--cluster", cluster_flag, "select a cluster by id");
    fit->add_option("--moments", moments_flag,
                    "fit synthetic central moments mu1,mu2,mu3,mu4 instead");
    fit->add_option("--format", format_name, "text | json");
    add_threshold_options(fit);

    // chart
    std::string which_name, out_path;
    auto* chart = app.add_subcommand("chart", "emit an SVG bar chart");
    chart->add_option("--which", which_name, "symptom-counts | cbo-histogram")->required();
    chart->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const auto thresholds = resolve_thresholds(
            config_path, report->count("--normal-max") || classify->count("--normal-max") ||
                             fit->count("--normal-max"),
            normal_max,
            report->count("--cardiac-min") || classify->count("--cardiac-min") ||
                fit->count("--cardiac-min"),
            cardiac_min);
        const Format format = format_from_name(format_name);

        std::string output;
        if (app.got_subcommand(ingest)) {
            output = cmd_ingest(ingest_input, resolve_registry(registry_flag), boolean_mode);
        } else if (app.got_subcommand(report)) {
            output = cmd_report(resolve_registry(registry_flag),
                                report_kind_from_name(kind_name), prefix_k, format,
                                thresholds);
        } else if (app.got_subcommand(classify)) {
            std::optional<std::string> row, codes;
            if (classify->count("--row")) row = row_flag;
            if (classify->count("--codes")) codes = codes_flag;
            output = cmd_classify(resolve_registry(registry_flag), row, codes, new_id,
                                  boolean_mode, format, thresholds);
        } else if (app.got_subcommand(fit)) {
            std::optional<std::string> member, moments;
            std::optional<int> cluster_id;
            if (fit->count("--member")) member = member_flag;
            if (fit->count("--cluster")) cluster_id = cluster_flag;
            if (fit->count("--moments")) moments = moments_flag;
            output = cmd_fit(resolve_registry(registry_flag), member, cluster_id, moments,
                             format, thresholds);
        } else if (app.got_subcommand(chart)) {
            output = cmd_chart(resolve_registry(registry_flag),
                               chart_kind_from_name(which_name), out_path);
        }
        std::cout << output;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const triage::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
