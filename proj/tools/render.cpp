#include "render.hpp"

#include <cstdio>

#include "json.hpp"
#include "triage/serialization.hpp"

namespace triage::cli {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& items, const char* sep = ",") {
    std::string s;
    for (const auto& item : items) {
        if (!s.empty()) s += sep;
        s += item;
    }
    return s;
}

std::string sprintf_line(const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), fmt, args...);
    return buf;
}

std::string fit_status(const ClusterModel& c) {
    if (c.fitted()) return "fitted";
    return "degenerate: " + std::string(to_string(c.fit_error));
}

}  // namespace

std::string fmt_double(double v) { return sprintf_line("%.6f", v); }

std::string render_single_text(const std::vector<SymptomCoupling>& rows) {
    std::string out = "symptom  count  patients\n";
    for (const auto& r : rows) {
        out += sprintf_line("%7d  %5zu  %s\n", r.symptom_index, r.count,
                            join(r.patient_ids).c_str());
    }
    return out;
}

std::string render_prefix_text(const std::vector<CouplingGroup>& groups) {
    std::string out = "size  patients\n";
    for (const auto& g : groups) {
        out += sprintf_line("%4zu  %s\n", g.member_ids.size(),
                            join(g.member_ids).c_str());
    }
    return out;
}

std::string render_profile_groups_text(const std::vector<CouplingGroup>& groups) {
    std::string out = "shared profiles\nsize  patients\n";
    std::vector<std::string> singles;
    for (const auto& g : groups) {
        if (g.member_ids.size() >= 2) {
            out += sprintf_line("%4zu  %s\n", g.member_ids.size(),
                                join(g.member_ids).c_str());
        } else {
            singles.push_back(g.member_ids.front());
        }
    }
    out += "unique profiles\n";
    out += singles.empty() ? "none" : join(singles);
    out += '\n';
    return out;
}

std::string render_cbo_text(const CboTable& table) {
    std::string out = sprintf_line("%-8s %-12s %4s\n", "patient", "associated", "cbo");
    std::vector<std::string> none_ids;
    for (const auto& e : table.entries) {
        if (e.cbo == 0) {
            none_ids.push_back(e.id);
            continue;
        }
        out += sprintf_line("%-8s %-12s %4zu\n", e.id.c_str(),
                            join(e.associated_ids).c_str(), e.cbo);
    }
    if (!none_ids.empty()) {
        out += join(none_ids);
        out += sprintf_line("  NONE  %zu\n", none_ids.size());
    }
    return out;
}

std::string render_histogram_text(const Histogram& hist) {
    std::string out;
    for (const auto& [value, count] : hist) {
        out += sprintf_line("(%zu,%zu)\n", value, count);
    }
    return out;
}

std::string render_clusters_text(const std::vector<ClusterModel>& clusters) {
    std::string out = sprintf_line("%7s  %4s  %-11s  %-34s  %s\n", "cluster", "size",
                                   "category", "fit", "patients");
    for (const auto& c : clusters) {
        out += sprintf_line("%7d  %4zu  %-11s  %-34s  %s\n", c.cluster_id,
                            c.member_ids.size(), std::string(to_string(c.category)).c_str(),
                            fit_status(c).c_str(), join(c.member_ids).c_str());
    }
    return out;
}

std::string render_classification_text(const ClassificationResult& r) {
    std::string out;
    out += "category: " + std::string(to_string(r.category)) + "\n";
    out += "path: " + std::string(to_string(r.path)) + "\n";
    out += sprintf_line("cluster: %d\n", r.cluster_id);
    out += "matched: " + join(r.matched_patient_ids) + "\n";
    if (r.log_likelihoods) {
        out += "log-likelihoods:\n";
        for (const auto& ll : *r.log_likelihoods) {
            out += sprintf_line("  cluster %d: %.6f\n", ll.cluster_id, ll.log_likelihood);
        }
    }
    out += "recommendation: " + r.recommendation + "\n";
    return out;
}

std::string render_single_csv(const std::vector<SymptomCoupling>& rows) {
    std::string out = "symptom,count,patients\n";
    for (const auto& r : rows) {
        out += sprintf_line("%d,%zu,%s\n", r.symptom_index, r.count,
                            join(r.patient_ids, ";").c_str());
    }
    return out;
}

std::string render_groups_csv(const std::vector<CouplingGroup>& groups) {
    std::string out = "key,size,patients\n";
    for (const auto& g : groups) {
        std::string key;
        for (int v : g.key) {
            if (!key.empty()) key += ';';
            key += std::to_string(v);
        }
        out += sprintf_line("%s,%zu,%s\n", key.c_str(), g.member_ids.size(),
                            join(g.member_ids, ";").c_str());
    }
    return out;
}

std::string render_cbo_csv(const CboTable& table) {
    std::string out = "id,associated,cbo\n";
    for (const auto& e : table.entries) {
        out += sprintf_line("%s,%s,%zu\n", e.id.c_str(),
                            join(e.associated_ids, ";").c_str(), e.cbo);
    }
    return out;
}

std::string render_histogram_csv(const Histogram& hist) {
    std::string out = "cbo,patients\n";
    for (const auto& [value, count] : hist) {
        out += sprintf_line("%zu,%zu\n", value, count);
    }
    return out;
}

std::string render_clusters_csv(const std::vector<ClusterModel>& clusters) {
    std::string out = "cluster_id,size,category,fit_status,reason,patients\n";
    for (const auto& c : clusters) {
        out += sprintf_line("%d,%zu,%s,%s,%s,%s\n", c.cluster_id, c.member_ids.size(),
                            std::string(to_string(c.category)).c_str(),
                            c.fitted() ? "fitted" : "degenerate",
                            c.fitted() ? "" : std::string(to_string(c.fit_error)).c_str(),
                            join(c.member_ids, ";").c_str());
    }
    return out;
}

std::string render_classification_csv(const ClassificationResult& r) {
    std::string out = "patient_id,path,cluster_id,category,matched\n";
    out += sprintf_line("%s,%s,%d,%s,%s\n", r.patient_id.c_str(),
                        std::string(to_string(r.path)).c_str(), r.cluster_id,
                        std::string(to_string(r.category)).c_str(),
                        join(r.matched_patient_ids, ";").c_str());
    return out;
}

std::string render_fit_text(const FitDiagnostics& d) {
    std::string out = "selection: " + d.label + "\n";
    if (d.moments) {
        out += sprintf_line("n: %zu\n", d.moments->n);
        out += "mu1: " + fmt_double(d.moments->mu1) + "\n";
        out += "mu2: " + fmt_double(d.moments->mu2) + "\n";
        out += "mu3: " + fmt_double(d.moments->mu3) + "\n";
        out += "mu4: " + fmt_double(d.moments->mu4) + "\n";
    }
    if (d.stats) {
        out += "skewness: " + fmt_double(d.stats->skewness) + "\n";
        out += "kurtosis: " + fmt_double(d.stats->kurtosis) + "\n";
        out += "kappa: " + fmt_double(d.stats->kappa) + "\n";
    }
    if (d.family) {
        out += "type: " + std::string(to_string(*d.family)) + "\n";
    }
    if (d.model) {
        out += "status: fitted\n";
        out += "h: " + fmt_double(d.model->h) + "\n";
        out += "m0: " + fmt_double(d.model->m0) + "\n";
        out += "c1: " + fmt_double(d.model->c1) + "\n";
        out += "c2: " + fmt_double(d.model->c2) + "\n";
        out += "g1: " + fmt_double(d.model->g1) + "\n";
        out += "g2: " + fmt_double(d.model->g2) + "\n";
        out += "a0: " + fmt_double(d.model->a0_norm) + "\n";
        out += sprintf_line("support: (%.6f, %.6f)\n", d.model->support_lower(),
                            d.model->support_upper());
        if (d.normalization_check) {
            out += "normalization: " + fmt_double(*d.normalization_check) + "\n";
        }
    } else {
        out += "status: degenerate: " + std::string(to_string(d.error)) + "\n";
    }
    return out;
}

std::string render_fit_json(const FitDiagnostics& d) {
    json j;
    j["selection"] = d.label;
    if (d.moments) {
        j["moments"] = {{"mu1", d.moments->mu1},
                        {"mu2", d.moments->mu2},
                        {"mu3", d.moments->mu3},
                        {"mu4", d.moments->mu4},
                        {"n", d.moments->n}};
    }
    if (d.stats) {
        j["skewness"] = d.stats->skewness;
        j["kurtosis"] = d.stats->kurtosis;
        j["kappa"] = d.stats->kappa;
    }
    if (d.family) j["type"] = std::string(to_string(*d.family));
    if (d.model) {
        j["status"] = "fitted";
        j["model"] = json::parse(triage::to_json(*d.model));
        if (d.normalization_check) j["normalization"] = *d.normalization_check;
    } else {
        j["status"] = "degenerate";
        j["reason"] = std::string(to_string(d.error));
    }
    return j.dump(2) + "\n";
}

std::string render_bar_chart_svg(const std::string& title, const std::vector<Bar>& bars) {
    constexpr int kBarWidth = 40;
    constexpr int kGap = 20;
    constexpr int kUnit = 16;  // pixels per count
    constexpr int kMarginX = 40;
    constexpr int kTop = 40;
    constexpr int kBottom = 40;

    std::size_t max_count = 0;
    for (const auto& b : bars) max_count = std::max(max_count, b.count);

    const int width = 2 * kMarginX + static_cast<int>(bars.size()) * (kBarWidth + kGap);
    const int base_y = kTop + static_cast<int>(max_count) * kUnit;
    const int height = base_y + kBottom;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "  <text x=\"" + std::to_string(width / 2) +
           "\" y=\"20\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"14\">" + title + "</text>\n";
    svg += "  <line x1=\"" + std::to_string(kMarginX - 10) + "\" y1=\"" +
           std::to_string(base_y) + "\" x2=\"" + std::to_string(width - kMarginX + 10) +
           "\" y2=\"" + std::to_string(base_y) + "\" stroke=\"black\"/>\n";

    for (std::size_t i = 0; i < bars.size(); ++i) {
        const int x = kMarginX + static_cast<int>(i) * (kBarWidth + kGap);
        const int bar_h = static_cast<int>(bars[i].count) * kUnit;
        const int y = base_y - bar_h;
        svg += "  <rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
               "\" width=\"" + std::to_string(kBarWidth) + "\" height=\"" +
               std::to_string(bar_h) + "\" fill=\"#4a7fb5\"/>\n";
        svg += "  <text x=\"" + std::to_string(x + kBarWidth / 2) + "\" y=\"" +
               std::to_string(y - 5) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" +
               std::to_string(bars[i].count) + "</text>\n";
        svg += "  <text x=\"" + std::to_string(x + kBarWidth / 2) + "\" y=\"" +
               std::to_string(base_y + 16) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" +
               bars[i].label + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace triage::cli
