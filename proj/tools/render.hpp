#pragma once

#include <string>
#include <utility>
#include <vector>

#include "triage/cluster.hpp"
#include "triage/coupling.hpp"
#include "triage/model.hpp"
#include "triage/pearson.hpp"

namespace triage::cli {

using Histogram = std::vector<std::pair<std::size_t, std::size_t>>;

/// Fixed decimal rendering (6 places) used by all text reports.
std::string fmt_double(double v);

// Plain-text tables, byte stable.
std::string render_single_text(const std::vector<SymptomCoupling>& rows);
std::string render_prefix_text(const std::vector<CouplingGroup>& groups);
std::string render_profile_groups_text(const std::vector<CouplingGroup>& groups);
std::string render_cbo_text(const CboTable& table);
std::string render_histogram_text(const Histogram& hist);
std::string render_clusters_text(const std::vector<ClusterModel>& clusters);
std::string render_classification_text(const ClassificationResult& result);

// CSV renderings.
std::string render_single_csv(const std::vector<SymptomCoupling>& rows);
std::string render_groups_csv(const std::vector<CouplingGroup>& groups);
std::string render_cbo_csv(const CboTable& table);
std::string render_histogram_csv(const Histogram& hist);
std::string render_clusters_csv(const std::vector<ClusterModel>& clusters);
std::string render_classification_csv(const ClassificationResult& result);

/// Everything cmd_fit can print about one cluster (or synthetic moments).
struct FitDiagnostics {
    std::string label;                      // "cluster 13 (P1,P5,P16,P20)" or "moments"
    std::optional<Moments> moments;
    std::optional<ShapeStats> stats;
    std::optional<FamilyType> family;
    std::optional<PearsonType1Model> model;
    FitError error = FitError::none;        // none iff model present
    std::optional<double> normalization_check;
};

std::string render_fit_text(const FitDiagnostics& d);
std::string render_fit_json(const FitDiagnostics& d);

/// One bar of a deterministic SVG chart.
struct Bar {
    std::string label;
    std::size_t count = 0;
};

/// Self-contained SVG 1.1 document; bar heights are count * 16 px.
std::string render_bar_chart_svg(const std::string& title, const std::vector<Bar>& bars);

}  // namespace triage::cli
