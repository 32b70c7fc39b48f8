#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "triage/coupling.hpp"
#include "triage/model.hpp"
#include "triage/pearson.hpp"

namespace triage {

/// One profile group together with its category and Type-I fit (if any).
struct ClusterModel {
    int cluster_id = 0;                      // 1-based, profile_groups order
    std::vector<std::string> member_ids;     // dataset order
    Category category = Category::normal;    // from the members' shared cbo
    std::optional<PearsonType1Model> model;  // present iff fitted
    FitError fit_error = FitError::none;     // reason when degenerate

    bool fitted() const { return model.has_value(); }
};

/// Fit of the pooled nonzero symptom codes of a member set.  Degeneracy is a
/// status, not an error; the pooled moments are kept for diagnostics when
/// they were computable.
struct ClusterFit {
    std::optional<PearsonType1Model> model;
    FitError error = FitError::none;
    std::optional<Moments> moments;

    bool fitted() const { return model.has_value(); }
};

ClusterFit fit_cluster_model(std::span<const std::string> member_ids, const Dataset& ds);

/// One cluster per profile group; categories via categorize(size-1).
/// Throws std::invalid_argument on an empty dataset.
std::vector<ClusterModel> build_clusters(const Dataset& ds,
                                         const CategoryThresholds& thresholds = {});

struct LogLikelihood {
    double value = 0.0;
    bool usable = false;  // false for an empty value list
};

/// Sum of log_pdf over the given values; out-of-support values contribute
/// the kLogFloor term.
LogLikelihood likelihood(const PearsonType1Model& model, std::span<const double> values);

/// Likelihood over the record's nonzero codes.
LogLikelihood likelihood(const PearsonType1Model& model, const PatientRecord& r);

enum class ClassificationPath { exact_match, max_likelihood, nearest_neighbor };

std::string_view to_string(ClassificationPath p);

struct ClusterLikelihood {
    int cluster_id = 0;
    double log_likelihood = 0.0;
};

struct ClassificationResult {
    std::string patient_id;
    ClassificationPath path = ClassificationPath::exact_match;
    int cluster_id = 0;
    Category category = Category::normal;
    std::vector<std::string> matched_patient_ids;
    std::optional<std::vector<ClusterLikelihood>> log_likelihoods;  // max_likelihood only
    std::string recommendation;
};

/// Picks the entry with the largest log-likelihood; ties go to the lowest
/// cluster id.  Exposed separately so its invariances can be tested.
const ClusterLikelihood* argmax_likelihood(std::span<const ClusterLikelihood> lls);

/// Classification cascade: exact profile match, then maximum likelihood over
/// fitted clusters (records with at least one symptom), then nearest
/// neighbour by Hamming distance.  Throws on an empty cluster set.
ClassificationResult classify(const PatientRecord& r,
                              std::span<const ClusterModel> clusters,
                              const Dataset& ds);

}  // namespace triage
