#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "json.hpp"
#include "registry.hpp"
#include "render.hpp"
#include "triage/cluster.hpp"
#include "triage/serialization.hpp"

namespace triage::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Dataset nonempty_registry(const std::filesystem::path& path) {
    Dataset ds = load_registry(path);
    if (ds.empty()) throw DataError("registry " + path.string() + " is empty");
    return ds;
}

std::string pretty(const std::string& compact_json) {
    return json::parse(compact_json).dump(2) + "\n";
}

PatientRecord record_from_cells(const std::string& csv_cells, const std::string& id,
                                bool boolean_mode) {
    const std::string doc = csv_header() + "\n" + id + "," + csv_cells + "\n";
    try {
        const Dataset one =
            parse_dataset(doc, boolean_mode ? ParseMode::boolean : ParseMode::strict);
        return one.at(0);
    } catch (const ParseError& e) {
        throw DataError(std::string("new patient row: ") + e.what());
    }
}

PatientRecord record_from_row(const std::string& row, bool boolean_mode) {
    const auto comma = row.find(',');
    if (comma == std::string::npos) throw DataError("new patient row: missing cells");
    return record_from_cells(row.substr(comma + 1), row.substr(0, comma), boolean_mode);
}

}  // namespace

CategoryThresholds resolve_thresholds(const std::string& config_path, bool have_normal,
                                      std::size_t normal_max, bool have_cardiac,
                                      std::size_t cardiac_min) {
    CategoryThresholds t;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw IoError("cannot read config " + config_path);
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded()) throw DataError("config " + config_path + ": malformed JSON");
        if (j.contains("normal_max")) t.normal_max = j["normal_max"].get<std::size_t>();
        if (j.contains("cardiac_min")) t.cardiac_min = j["cardiac_min"].get<std::size_t>();
    }
    if (have_normal) t.normal_max = normal_max;  // flags win over the file
    if (have_cardiac) t.cardiac_min = cardiac_min;
    if (t.normal_max >= t.cardiac_min)
        throw UsageError("--normal-max must be below --cardiac-min");
    return t;
}

Format format_from_name(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "svg") return Format::svg;
    throw UsageError("unknown format: " + name);
}

ReportKind report_kind_from_name(const std::string& name) {
    if (name == "single") return ReportKind::single;
    if (name == "prefix") return ReportKind::prefix;
    if (name == "profile-groups") return ReportKind::profile_groups;
    if (name == "cbo") return ReportKind::cbo;
    if (name == "cbo-histogram") return ReportKind::cbo_histogram;
    if (name == "clusters") return ReportKind::clusters;
    throw UsageError("unknown report kind: " + name);
}

ChartKind chart_kind_from_name(const std::string& name) {
    if (name == "symptom-counts") return ChartKind::symptom_counts;
    if (name == "cbo-histogram") return ChartKind::cbo_histogram;
    throw UsageError("unknown chart: " + name);
}

std::string cmd_ingest(const std::filesystem::path& input_csv,
                       const std::filesystem::path& registry, bool boolean_mode) {
    Dataset incoming;
    try {
        incoming = parse_dataset(read_bytes(input_csv),
                                 boolean_mode ? ParseMode::boolean : ParseMode::strict);
    } catch (const ParseError& e) {
        throw DataError(input_csv.string() + ": " + e.what());
    }
    const std::size_t n = append_records(registry, incoming);
    return "ingested " + std::to_string(n) + " records\n";
}

std::string cmd_report(const std::filesystem::path& registry, ReportKind kind, int k,
                       Format format, const CategoryThresholds& thresholds) {
    if (format == Format::svg)
        throw UsageError("report does not emit svg; use the chart command");
    const Dataset ds = nonempty_registry(registry);

    switch (kind) {
        case ReportKind::single: {
            const auto rows = single_symptom_coupling(ds);
            if (format == Format::json) return pretty(to_json(rows));
            if (format == Format::csv) return render_single_csv(rows);
            return render_single_text(rows);
        }
        case ReportKind::prefix: {
            if (k < 1 || k > static_cast<int>(kSymptomCount))
                throw UsageError("--k must be in 1..11");
            const auto groups = prefix_coupling(ds, k);
            if (format == Format::json) return pretty(to_json(groups));
            if (format == Format::csv) return render_groups_csv(groups);
            return render_prefix_text(groups);
        }
        case ReportKind::profile_groups: {
            const auto groups = profile_groups(ds);
            if (format == Format::json) return pretty(to_json(groups));
            if (format == Format::csv) return render_groups_csv(groups);
            return render_profile_groups_text(groups);
        }
        case ReportKind::cbo: {
            const auto table = cbo(ds);
            if (format == Format::json) return pretty(to_json(table));
            if (format == Format::csv) return render_cbo_csv(table);
            return render_cbo_text(table);
        }
        case ReportKind::cbo_histogram: {
            const auto hist = cbo_histogram(cbo(ds));
            if (format == Format::json) return pretty(to_json(hist));
            if (format == Format::csv) return render_histogram_csv(hist);
            return render_histogram_text(hist);
        }
        case ReportKind::clusters: {
            const auto clusters = build_clusters(ds, thresholds);
            if (format == Format::json) return pretty(to_json(clusters));
            if (format == Format::csv) return render_clusters_csv(clusters);
            return render_clusters_text(clusters);
        }
    }
    throw UsageError("unknown report kind");
}

std::string cmd_classify(const std::filesystem::path& registry,
                         const std::optional<std::string>& row,
                         const std::optional<std::string>& codes, const std::string& id,
                         bool boolean_mode, Format format,
                         const CategoryThresholds& thresholds) {
    if (row.has_value() == codes.has_value())
        throw UsageError("provide exactly one of --row or --codes");
    if (format == Format::svg) throw UsageError("classify emits text, json or csv");

    const Dataset ds = nonempty_registry(registry);
    const PatientRecord incoming = row.has_value()
                                       ? record_from_row(*row, boolean_mode)
                                       : record_from_cells(*codes, id, boolean_mode);

    const auto clusters = build_clusters(ds, thresholds);
    const auto result = classify(incoming, clusters, ds);
    if (format == Format::json) return pretty(to_json(result));
    if (format == Format::csv) return render_classification_csv(result);
    return render_classification_text(result);
}

std::string cmd_fit(const std::filesystem::path& registry,
                    const std::optional<std::string>& member,
                    const std::optional<int>& cluster_id,
                    const std::optional<std::string>& moments_csv, Format format,
                    const CategoryThresholds& thresholds) {
    const int selectors = static_cast<int>(member.has_value()) +
                          static_cast<int>(cluster_id.has_value()) +
                          static_cast<int>(moments_csv.has_value());
    if (selectors != 1)
        throw UsageError("provide exactly one of --member, --cluster or --moments");
    if (format == Format::svg || format == Format::csv)
        throw UsageError("fit emits text or json");

    FitDiagnostics diag;
    if (moments_csv) {
        // Synthetic diagnostics: four comma-separated central moments.
        Moments m;
        double* fields[4] = {&m.mu1, &m.mu2, &m.mu3, &m.mu4};
        std::size_t start = 0, idx = 0;
        const std::string& text = *moments_csv;
        while (idx < 4) {
            const std::size_t comma = text.find(',', start);
            const std::string cell = comma == std::string::npos
                                         ? text.substr(start)
                                         : text.substr(start, comma - start);
            try {
                *fields[idx] = std::stod(cell);
            } catch (const std::exception&) {
                throw DataError("--moments: '" + cell + "' is not a number");
            }
            ++idx;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (idx != 4) throw DataError("--moments needs four values mu1,mu2,mu3,mu4");
        m.n = 0;  // synthetic, no sample behind it
        diag.label = "moments " + text;
        diag.moments = m;
    } else {
        const Dataset ds = nonempty_registry(registry);
        const auto clusters = build_clusters(ds, thresholds);
        const ClusterModel* selected = nullptr;
        for (const auto& c : clusters) {
            if (cluster_id && c.cluster_id == *cluster_id) selected = &c;
            if (member && std::find(c.member_ids.begin(), c.member_ids.end(), *member) !=
                              c.member_ids.end())
                selected = &c;
        }
        if (!selected) {
            throw DataError(member ? "no cluster contains patient " + *member
                                   : "no cluster with id " +
                                         std::to_string(cluster_id.value()));
        }
        std::string members;
        for (const auto& m : selected->member_ids) {
            if (!members.empty()) members += ',';
            members += m;
        }
        diag.label = "cluster " + std::to_string(selected->cluster_id) + " (" + members + ")";
        const auto fit = fit_cluster_model(selected->member_ids, ds);
        diag.moments = fit.moments;
        diag.model = fit.model;
        diag.error = fit.error;
    }

    if (diag.moments && !diag.model && diag.error == FitError::none) {
        // --moments path: run the fit pipeline here.
        const auto fit = fit_type1(*diag.moments);
        diag.model = fit.value;
        diag.error = fit.error;
    }
    if (diag.moments) {
        const auto stats = shape_stats(*diag.moments);
        if (stats.ok()) {
            diag.stats = *stats;
            diag.family = select_type(*stats);
        }
    }
    if (diag.model) diag.normalization_check = normalization(*diag.model);

    if (format == Format::json) return render_fit_json(diag);
    return render_fit_text(diag);
}

std::string cmd_chart(const std::filesystem::path& registry, ChartKind kind,
                      const std::filesystem::path& out_path) {
    const Dataset ds = nonempty_registry(registry);

    std::vector<Bar> bars;
    std::string title;
    if (kind == ChartKind::symptom_counts) {
        title = "patients per symptom";
        // symptom-index order, zero-count symptoms omitted
        auto rows = single_symptom_coupling(ds);
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            return a.symptom_index < b.symptom_index;
        });
        for (const auto& r : rows) {
            bars.push_back({std::string(symptom_keys()[r.symptom_index - 1]), r.count});
        }
    } else {
        title = "patients per cbo value";
        for (const auto& [value, count] : cbo_histogram(cbo(ds))) {
            bars.push_back({"cbo " + std::to_string(value), count});
        }
    }

    const std::string svg = render_bar_chart_svg(title, bars);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + out_path.string());
    out << svg;
    if (!out.good()) throw IoError("short write to " + out_path.string());
    return "wrote " + out_path.string() + "\n";
}

}  // namespace triage::cli
