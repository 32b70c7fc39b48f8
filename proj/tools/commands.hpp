#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "triage/coupling.hpp"

namespace triage::cli {

enum class Format { text, json, csv, svg };

Format format_from_name(const std::string& name);  // UsageError on unknown names

enum class ReportKind { single, prefix, profile_groups, cbo, cbo_histogram, clusters };

ReportKind report_kind_from_name(const std::string& name);  // UsageError

enum class ChartKind { symptom_counts, cbo_histogram };

ChartKind chart_kind_from_name(const std::string& name);  // UsageError

/// Thresholds from an optional JSON config file ({"normal_max": 0,
/// "cardiac_min": 3}), overridden by whichever flags were given.  Rejects
/// normal_max >= cardiac_min.
CategoryThresholds resolve_thresholds(const std::string& config_path, bool have_normal,
                                      std::size_t normal_max, bool have_cardiac,
                                      std::size_t cardiac_min);

/// Appends validated rows from input_csv to the registry.  Returns the
/// rendered confirmation line.
std::string cmd_ingest(const std::filesystem::path& input_csv,
                       const std::filesystem::path& registry, bool boolean_mode);

std::string cmd_report(const std::filesystem::path& registry, ReportKind kind, int k,
                       Format format, const CategoryThresholds& thresholds);

/// `row` is a full CSV row ("id,c1,...,c11"); `codes` is the 11 code cells
/// with a separate id.  Exactly one of the two must be provided.
std::string cmd_classify(const std::filesystem::path& registry,
                         const std::optional<std::string>& row,
                         const std::optional<std::string>& codes, const std::string& id,
                         bool boolean_mode, Format format,
                         const CategoryThresholds& thresholds);

std::string cmd_fit(const std::filesystem::path& registry,
                    const std::optional<std::string>& member,
                    const std::optional<int>& cluster_id,
                    const std::optional<std::string>& moments_csv, Format format,
                    const CategoryThresholds& thresholds);

/// Writes the SVG to out_path; returns the rendered confirmation line.
std::string cmd_chart(const std::filesystem::path& registry, ChartKind kind,
                      const std::filesystem::path& out_path);

}  // namespace triage::cli
