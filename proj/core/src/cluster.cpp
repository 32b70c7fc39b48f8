#include "triage/cluster.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace triage {

std::string_view to_string(ClassificationPath p) {
    switch (p) {
        case ClassificationPath::exact_match: return "exact-match";
        case ClassificationPath::max_likelihood: return "max-likelihood";
        case ClassificationPath::nearest_neighbor: return "nearest-neighbor";
    }
    return "?";
}

namespace {

std::string join_ids(std::span<const std::string> ids) {
    std::string s;
    for (const auto& id : ids) {
        if (!s.empty()) s += ", ";
        s += id;
    }
    return s;
}

}  // namespace

ClusterFit fit_cluster_model(std::span<const std::string> member_ids, const Dataset& ds) {
    std::vector<double> pooled;
    for (const auto& id : member_ids) {
        auto idx = ds.index_of(id);
        if (!idx) throw std::invalid_argument("fit_cluster_model: unknown id " + id);
        for (int c : ds.records[*idx].codes) {
            if (c != 0) pooled.push_back(static_cast<double>(c));
        }
    }
    ClusterFit fit;
    if (pooled.empty()) {
        fit.error = FitError::empty_sample;
        return fit;
    }
    if (pooled.size() < 4) {
        fit.error = FitError::too_few_samples;
        fit.moments = central_moments(pooled);
        return fit;
    }
    const Moments m = central_moments(pooled);
    fit.moments = m;
    if (!(m.mu2 > 0.0)) {
        fit.error = FitError::zero_variance;
        return fit;
    }
    if (std::set<double>(pooled.begin(), pooled.end()).size() < 4) {
        fit.error = FitError::too_few_distinct;
        return fit;
    }
    auto outcome = fit_type1(m);
    if (!outcome.ok()) {
        fit.error = outcome.error;
        return fit;
    }
    fit.model = *outcome;
    return fit;
}

std::vector<ClusterModel> build_clusters(const Dataset& ds,
                                         const CategoryThresholds& thresholds) {
    const auto groups = profile_groups(ds);  // throws when empty
    std::vector<ClusterModel> clusters;
    clusters.reserve(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        ClusterModel c;
        c.cluster_id = static_cast<int>(i + 1);
        c.member_ids = groups[i].member_ids;
        c.category = categorize(c.member_ids.size() - 1, thresholds);
        auto fit = fit_cluster_model(c.member_ids, ds);
        c.model = fit.model;
        c.fit_error = fit.error;
        clusters.push_back(std::move(c));
    }
    return clusters;
}

LogLikelihood likelihood(const PearsonType1Model& model, std::span<const double> values) {
    LogLikelihood ll;
    ll.usable = !values.empty();
    for (double v : values) ll.value += log_pdf(model, v);
    return ll;
}

LogLikelihood likelihood(const PearsonType1Model& model, const PatientRecord& r) {
    std::vector<double> values;
    for (int c : r.codes) {
        if (c != 0) values.push_back(static_cast<double>(c));
    }
    return likelihood(model, values);
}

const ClusterLikelihood* argmax_likelihood(std::span<const ClusterLikelihood> lls) {
    const ClusterLikelihood* best = nullptr;
    for (const auto& ll : lls) {
        if (!best || ll.log_likelihood > best->log_likelihood ||
            (ll.log_likelihood == best->log_likelihood && ll.cluster_id < best->cluster_id))
            best = &ll;
    }
    return best;
}

ClassificationResult classify(const PatientRecord& r,
                              std::span<const ClusterModel> clusters,
                              const Dataset& ds) {
    if (clusters.empty()) throw std::invalid_argument("classify: empty cluster set");
    if (ds.empty()) throw std::invalid_argument("classify: empty dataset");

    ClassificationResult result;
    result.patient_id = r.id;

    auto finish = [&](const ClusterModel& c, ClassificationPath path) {
        result.path = path;
        result.cluster_id = c.cluster_id;
        result.category = c.category;
        result.matched_patient_ids = c.member_ids;
        result.recommendation =
            "reuse prior treatment of patients " + join_ids(c.member_ids);
        return result;
    };

    // 1. Exact profile match.
    const SymptomProfile profile = presence_vector(r);
    for (const auto& c : clusters) {
        auto idx = ds.index_of(c.member_ids.front());
        if (idx && presence_vector(ds.records[*idx]) == profile)
            return finish(c, ClassificationPath::exact_match);
    }

    // 2. Maximum likelihood over fitted clusters.
    const bool has_symptoms =
        std::any_of(r.codes.begin(), r.codes.end(), [](int c) { return c != 0; });
    if (has_symptoms) {
        std::vector<ClusterLikelihood> lls;
        for (const auto& c : clusters) {
            if (c.fitted())
                lls.push_back({c.cluster_id, likelihood(*c.model, r).value});
        }
        if (!lls.empty()) {
            const ClusterLikelihood* best = argmax_likelihood(lls);
            auto it = std::find_if(clusters.begin(), clusters.end(), [&](const auto& c) {
                return c.cluster_id == best->cluster_id;
            });
            result.log_likelihoods = std::move(lls);
            return finish(*it, ClassificationPath::max_likelihood);
        }
    }

    // 3. Nearest neighbour over all patients; ties to the earliest record.
    std::size_t best_idx = 0;
    int best_d = dissimilarity(r, ds.records[0]);
    for (std::size_t i = 1; i < ds.size(); ++i) {
        const int d = dissimilarity(r, ds.records[i]);
        if (d < best_d) {
            best_d = d;
            best_idx = i;
        }
    }
    const std::string& neighbor = ds.records[best_idx].id;
    for (const auto& c : clusters) {
        if (std::find(c.member_ids.begin(), c.member_ids.end(), neighbor) !=
            c.member_ids.end())
            return finish(c, ClassificationPath::nearest_neighbor);
    }
    throw std::logic_error("classify: nearest neighbour not covered by any cluster");
}

}  // namespace triage
