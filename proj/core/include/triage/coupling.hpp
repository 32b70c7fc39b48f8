#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triage/model.hpp"

namespace triage {

/// Patients exhibiting one particular symptom.
struct SymptomCoupling {
    int symptom_index = 0;  // 1-based
    std::size_t count = 0;
    std::vector<std::string> patient_ids;  // dataset order
};

/// Patients sharing one code sub-vector (prefix or full profile).
struct CouplingGroup {
    std::vector<int> key;
    std::vector<std::string> member_ids;  // dataset order
};

struct CboEntry {
    std::string id;
    std::vector<std::string> associated_ids;
    std::size_t cbo = 0;
};

struct CboTable {
    std::vector<CboEntry> entries;  // dataset order
};

enum class Category { normal, pro_cardiac, cardiac };

std::string_view to_string(Category c);

struct CategoryThresholds {
    std::size_t normal_max = 0;  // cbo <= normal_max   -> normal
    std::size_t cardiac_min = 3; // cbo >= cardiac_min  -> cardiac
};

/// Per-symptom presence statistics, ascending by count then symptom index;
/// symptoms nobody exhibits are omitted.  Throws on an empty dataset.
std::vector<SymptomCoupling> single_symptom_coupling(const Dataset& ds);

/// Partition by equality of the first k code slots, k in 1..11.  Groups are
/// ordered by ascending size, ties by the earliest member's dataset position.
/// Throws std::out_of_range on bad k, std::invalid_argument when empty.
std::vector<CouplingGroup> prefix_coupling(const Dataset& ds, int k);

/// Partition by full-profile equality, same ordering as prefix_coupling.
/// Singleton groups are included.
std::vector<CouplingGroup> profile_groups(const Dataset& ds);

/// Per-patient coupling count: the number of other patients with an
/// identical symptom profile.
CboTable cbo(const Dataset& ds);

/// (cbo value, number of patients) pairs, descending by cbo value.
std::vector<std::pair<std::size_t, std::size_t>> cbo_histogram(const CboTable& t);

/// Threshold rule; throws std::invalid_argument when normal_max >= cardiac_min.
Category categorize(std::size_t cbo_value, const CategoryThresholds& t = {});

}  // namespace triage
