#include "triage/serialization.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace triage {

using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error("malformed JSON");
    return j;
}

std::string_view path_name(ClassificationPath p) { return to_string(p); }

ClassificationPath path_from_name(std::string_view name) {
    if (name == "exact-match") return ClassificationPath::exact_match;
    if (name == "max-likelihood") return ClassificationPath::max_likelihood;
    if (name == "nearest-neighbor") return ClassificationPath::nearest_neighbor;
    throw std::runtime_error("unknown classification path: " + std::string(name));
}

json model_to_value(const PearsonType1Model& m) {
    return json{{"m0", m.m0},
                {"c1", m.c1},
                {"c2", m.c2},
                {"g1", m.g1},
                {"g2", m.g2},
                {"a0_norm", m.a0_norm},
                {"skewness", m.stats.skewness},
                {"kurtosis", m.stats.kurtosis},
                {"kappa", m.stats.kappa},
                {"h", m.h},
                {"n", m.n}};
}

PearsonType1Model model_from_value(const json& j) {
    PearsonType1Model m;
    m.m0 = j.at("m0").get<double>();
    m.c1 = j.at("c1").get<double>();
    m.c2 = j.at("c2").get<double>();
    m.g1 = j.at("g1").get<double>();
    m.g2 = j.at("g2").get<double>();
    m.a0_norm = j.at("a0_norm").get<double>();
    m.log_a0 = std::log(m.a0_norm);
    m.stats.skewness = j.at("skewness").get<double>();
    m.stats.kurtosis = j.at("kurtosis").get<double>();
    m.stats.kappa = j.at("kappa").get<double>();
    m.h = j.at("h").get<double>();
    m.n = j.at("n").get<std::size_t>();
    return m;
}

}  // namespace

std::string_view category_name(Category c) { return to_string(c); }

Category category_from_name(std::string_view name) {
    if (name == "normal") return Category::normal;
    if (name == "pro-cardiac") return Category::pro_cardiac;
    if (name == "cardiac") return Category::cardiac;
    throw std::runtime_error("unknown category: " + std::string(name));
}

std::string to_json(const PearsonType1Model& model) { return model_to_value(model).dump(); }

PearsonType1Model model_from_json(std::string_view text) {
    return model_from_value(parse(text));
}

std::string to_json(const ClassificationResult& r) {
    json j{{"patient_id", r.patient_id},
           {"path", path_name(r.path)},
           {"cluster_id", r.cluster_id},
           {"category", category_name(r.category)},
           {"matched_patient_ids", r.matched_patient_ids}};
    if (r.log_likelihoods) {
        json lls = json::array();
        for (const auto& ll : *r.log_likelihoods) {
            lls.push_back(json{{"cluster_id", ll.cluster_id},
                               {"log_likelihood", ll.log_likelihood}});
        }
        j["log_likelihoods"] = std::move(lls);
    }
    j["recommendation"] = r.recommendation;
    return j.dump();
}

ClassificationResult classification_from_json(std::string_view text) {
    json j = parse(text);
    ClassificationResult r;
    r.patient_id = j.at("patient_id").get<std::string>();
    r.path = path_from_name(j.at("path").get<std::string>());
    r.cluster_id = j.at("cluster_id").get<int>();
    r.category = category_from_name(j.at("category").get<std::string>());
    r.matched_patient_ids = j.at("matched_patient_ids").get<std::vector<std::string>>();
    if (j.contains("log_likelihoods")) {
        std::vector<ClusterLikelihood> lls;
        for (const auto& item : j.at("log_likelihoods")) {
            lls.push_back({item.at("cluster_id").get<int>(),
                           item.at("log_likelihood").get<double>()});
        }
        r.log_likelihoods = std::move(lls);
    }
    r.recommendation = j.at("recommendation").get<std::string>();
    return r;
}

std::string to_json(const std::vector<SymptomCoupling>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        arr.push_back(json{{"symptom", row.symptom_index},
                           {"name", std::string(symptom_names()[row.symptom_index - 1])},
                           {"count", row.count},
                           {"patient_ids", row.patient_ids}});
    }
    return arr.dump();
}

std::vector<SymptomCoupling> symptom_couplings_from_json(std::string_view text) {
    std::vector<SymptomCoupling> rows;
    for (const auto& item : parse(text)) {
        SymptomCoupling row;
        row.symptom_index = item.at("symptom").get<int>();
        row.count = item.at("count").get<std::size_t>();
        row.patient_ids = item.at("patient_ids").get<std::vector<std::string>>();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_json(const std::vector<CouplingGroup>& groups) {
    json arr = json::array();
    for (const auto& g : groups) {
        arr.push_back(json{{"key", g.key}, {"member_ids", g.member_ids}});
    }
    return arr.dump();
}

std::vector<CouplingGroup> coupling_groups_from_json(std::string_view text) {
    std::vector<CouplingGroup> groups;
    for (const auto& item : parse(text)) {
        CouplingGroup g;
        g.key = item.at("key").get<std::vector<int>>();
        g.member_ids = item.at("member_ids").get<std::vector<std::string>>();
        groups.push_back(std::move(g));
    }
    return groups;
}

std::string to_json(const CboTable& table) {
    json arr = json::array();
    for (const auto& e : table.entries) {
        arr.push_back(json{{"id", e.id},
                           {"associated_ids", e.associated_ids},
                           {"cbo", e.cbo}});
    }
    return arr.dump();
}

CboTable cbo_table_from_json(std::string_view text) {
    CboTable table;
    for (const auto& item : parse(text)) {
        CboEntry e;
        e.id = item.at("id").get<std::string>();
        e.associated_ids = item.at("associated_ids").get<std::vector<std::string>>();
        e.cbo = item.at("cbo").get<std::size_t>();
        table.entries.push_back(std::move(e));
    }
    return table;
}

std::string to_json(const std::vector<std::pair<std::size_t, std::size_t>>& histogram) {
    json arr = json::array();
    for (const auto& [value, count] : histogram) {
        arr.push_back(json{{"cbo", value}, {"patients", count}});
    }
    return arr.dump();
}

std::vector<std::pair<std::size_t, std::size_t>> histogram_from_json(std::string_view text) {
    std::vector<std::pair<std::size_t, std::size_t>> histogram;
    for (const auto& item : parse(text)) {
        histogram.emplace_back(item.at("cbo").get<std::size_t>(),
                               item.at("patients").get<std::size_t>());
    }
    return histogram;
}

std::string to_json(const std::vector<ClusterModel>& clusters) {
    json arr = json::array();
    for (const auto& c : clusters) {
        json j{{"cluster_id", c.cluster_id},
               {"member_ids", c.member_ids},
               {"category", category_name(c.category)},
               {"fit_status", c.fitted() ? "fitted" : "degenerate"}};
        if (c.fitted()) {
            j["model"] = model_to_value(*c.model);
        } else {
            j["reason"] = to_string(c.fit_error);
        }
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

std::vector<ClusterModel> clusters_from_json(std::string_view text) {
    std::vector<ClusterModel> clusters;
    for (const auto& item : parse(text)) {
        ClusterModel c;
        c.cluster_id = item.at("cluster_id").get<int>();
        c.member_ids = item.at("member_ids").get<std::vector<std::string>>();
        c.category = category_from_name(item.at("category").get<std::string>());
        if (item.at("fit_status").get<std::string>() == "fitted") {
            c.model = model_from_value(item.at("model"));
        } else {
            const auto reason = item.at("reason").get<std::string>();
            for (int e = static_cast<int>(FitError::none);
                 e <= static_cast<int>(FitError::nonpositive_half_width); ++e) {
                if (to_string(static_cast<FitError>(e)) == reason) {
                    c.fit_error = static_cast<FitError>(e);
                    break;
                }
            }
        }
        clusters.push_back(std::move(c));
    }
    return clusters;
}

}  // namespace triage
