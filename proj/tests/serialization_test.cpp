#include "triage/serialization.hpp"

#include <cmath>

#include "doctest.h"
#include "support/test_support.hpp"

using namespace triage;

namespace {

bool close(double a, double b) {
    if (a == b) return true;
    return std::abs(a - b) <= 1e-15 * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("model JSON round trip is value identical") {
    const auto fit = fit_type1(testsup::beta_moments(2, 3));
    REQUIRE(fit.ok());
    const std::string text = to_json(*fit);
    const PearsonType1Model back = model_from_json(text);

    CHECK(close(back.m0, fit->m0));
    CHECK(close(back.c1, fit->c1));
    CHECK(close(back.c2, fit->c2));
    CHECK(close(back.g1, fit->g1));
    CHECK(close(back.g2, fit->g2));
    CHECK(close(back.a0_norm, fit->a0_norm));
    CHECK(close(back.stats.skewness, fit->stats.skewness));
    CHECK(close(back.stats.kurtosis, fit->stats.kurtosis));
    CHECK(close(back.stats.kappa, fit->stats.kappa));
    CHECK(close(back.h, fit->h));
    CHECK(back.n == fit->n);

    // the reconstructed model evaluates identically for practical purposes
    CHECK(close(pdf(back, 0.5), pdf(*fit, 0.5)));
    CHECK(to_json(back) == text);
}

TEST_CASE("classification result JSON round trip") {
    const Dataset ds = testsup::table1();
    const auto clusters = build_clusters(ds);

    SUBCASE("exact match, no likelihood block") {
        const auto result =
            classify(PatientRecord{"NEW", {0, 2, 0, 4, 0, 6, 7, 0, 0, 0, 0}}, clusters, ds);
        const auto back = classification_from_json(to_json(result));
        CHECK(back.patient_id == result.patient_id);
        CHECK(back.path == result.path);
        CHECK(back.cluster_id == result.cluster_id);
        CHECK(back.category == result.category);
        CHECK(back.matched_patient_ids == result.matched_patient_ids);
        CHECK_FALSE(back.log_likelihoods.has_value());
        CHECK(back.recommendation == result.recommendation);
    }
    SUBCASE("max likelihood carries the per-cluster values") {
        const auto result =
            classify(PatientRecord{"NEW", {0, 2, 0, 4, 5, 6, 7, 0, 0, 0, 0}}, clusters, ds);
        const auto back = classification_from_json(to_json(result));
        REQUIRE(back.log_likelihoods.has_value());
        REQUIRE(back.log_likelihoods->size() == result.log_likelihoods->size());
        for (std::size_t i = 0; i < back.log_likelihoods->size(); ++i) {
            CHECK((*back.log_likelihoods)[i].cluster_id ==
                  (*result.log_likelihoods)[i].cluster_id);
            CHECK(close((*back.log_likelihoods)[i].log_likelihood,
                        (*result.log_likelihoods)[i].log_likelihood));
        }
        CHECK(to_json(back) == to_json(result));
    }
}

TEST_CASE("report payload round trips") {
    const Dataset ds = testsup::table1();

    SUBCASE("symptom couplings") {
        const auto rows = single_symptom_coupling(ds);
        const auto back = symptom_couplings_from_json(to_json(rows));
        REQUIRE(back.size() == rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(back[i].symptom_index == rows[i].symptom_index);
            CHECK(back[i].count == rows[i].count);
            CHECK(back[i].patient_ids == rows[i].patient_ids);
        }
    }
    SUBCASE("coupling groups") {
        const auto groups = prefix_coupling(ds, 4);
        const auto back = coupling_groups_from_json(to_json(groups));
        REQUIRE(back.size() == groups.size());
        for (std::size_t i = 0; i < groups.size(); ++i) {
            CHECK(back[i].key == groups[i].key);
            CHECK(back[i].member_ids == groups[i].member_ids);
        }
    }
    SUBCASE("cbo table and histogram") {
        const auto table = cbo(ds);
        const auto back = cbo_table_from_json(to_json(table));
        REQUIRE(back.entries.size() == table.entries.size());
        for (std::size_t i = 0; i < table.entries.size(); ++i) {
            CHECK(back.entries[i].id == table.entries[i].id);
            CHECK(back.entries[i].associated_ids == table.entries[i].associated_ids);
            CHECK(back.entries[i].cbo == table.entries[i].cbo);
        }
        const auto hist = cbo_histogram(table);
        CHECK(histogram_from_json(to_json(hist)) == hist);
    }
    SUBCASE("clusters") {
        const auto clusters = build_clusters(ds);
        const auto back = clusters_from_json(to_json(clusters));
        REQUIRE(back.size() == clusters.size());
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            CHECK(back[i].cluster_id == clusters[i].cluster_id);
            CHECK(back[i].member_ids == clusters[i].member_ids);
            CHECK(back[i].category == clusters[i].category);
            CHECK(back[i].fitted() == clusters[i].fitted());
            if (clusters[i].fitted()) {
                CHECK(close(back[i].model->a0_norm, clusters[i].model->a0_norm));
            } else {
                CHECK(back[i].fit_error == clusters[i].fit_error);
            }
        }
    }
}

TEST_CASE("category names") {
    CHECK(category_name(Category::normal) == "normal");
    CHECK(category_name(Category::pro_cardiac) == "pro-cardiac");
    CHECK(category_name(Category::cardiac) == "cardiac");
    CHECK(category_from_name("cardiac") == Category::cardiac);
    CHECK_THROWS(category_from_name("unknown"));
}
