#include "triage/coupling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace triage {

std::string_view to_string(Category c) {
    switch (c) {
        case Category::normal: return "normal";
        case Category::pro_cardiac: return "pro-cardiac";
        case Category::cardiac: return "cardiac";
    }
    return "?";
}

std::vector<SymptomCoupling> single_symptom_coupling(const Dataset& ds) {
    if (ds.empty()) throw std::invalid_argument("single_symptom_coupling: empty dataset");
    std::vector<SymptomCoupling> out;
    for (std::size_t j = 0; j < kSymptomCount; ++j) {
        SymptomCoupling sc;
        sc.symptom_index = static_cast<int>(j + 1);
        for (const auto& r : ds.records) {
            if (r.codes[j] != 0) sc.patient_ids.push_back(r.id);
        }
        sc.count = sc.patient_ids.size();
        if (sc.count > 0) out.push_back(std::move(sc));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const SymptomCoupling& a, const SymptomCoupling& b) {
                         if (a.count != b.count) return a.count < b.count;
                         return a.symptom_index < b.symptom_index;
                     });
    return out;
}

namespace {

std::vector<CouplingGroup> group_by_key(const Dataset& ds, std::size_t key_len) {
    // first-seen order, then sorted by (size, earliest member position)
    std::vector<CouplingGroup> groups;
    std::vector<std::size_t> first_pos;
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        std::vector<int> key(ds.records[i].codes.begin(),
                             ds.records[i].codes.begin() + key_len);
        auto [it, inserted] = index.try_emplace(std::move(key), groups.size());
        if (inserted) {
            groups.push_back({it->first, {}});
            first_pos.push_back(i);
        }
        groups[it->second].member_ids.push_back(ds.records[i].id);
    }
    std::vector<std::size_t> order(groups.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (groups[a].member_ids.size() != groups[b].member_ids.size())
            return groups[a].member_ids.size() < groups[b].member_ids.size();
        return first_pos[a] < first_pos[b];
    });
    std::vector<CouplingGroup> out;
    out.reserve(groups.size());
    for (std::size_t i : order) out.push_back(std::move(groups[i]));
    return out;
}

}  // namespace

std::vector<CouplingGroup> prefix_coupling(const Dataset& ds, int k) {
    if (k < 1 || k > static_cast<int>(kSymptomCount))
        throw std::out_of_range("prefix_coupling: k must be in 1.." +
                                std::to_string(kSymptomCount));
    if (ds.empty()) throw std::invalid_argument("prefix_coupling: empty dataset");
    return group_by_key(ds, static_cast<std::size_t>(k));
}

std::vector<CouplingGroup> profile_groups(const Dataset& ds) {
    if (ds.empty()) throw std::invalid_argument("profile_groups: empty dataset");
    return group_by_key(ds, kSymptomCount);
}

CboTable cbo(const Dataset& ds) {
    if (ds.empty()) throw std::invalid_argument("cbo: empty dataset");
    const auto groups = profile_groups(ds);
    std::map<std::string_view, const CouplingGroup*> group_of;
    for (const auto& g : groups) {
        for (const auto& id : g.member_ids) group_of[id] = &g;
    }
    CboTable table;
    table.entries.reserve(ds.size());
    for (const auto& r : ds.records) {
        CboEntry e;
        e.id = r.id;
        for (const auto& id : group_of.at(r.id)->member_ids) {
            if (id != r.id) e.associated_ids.push_back(id);
        }
        e.cbo = e.associated_ids.size();
        table.entries.push_back(std::move(e));
    }
    return table;
}

std::vector<std::pair<std::size_t, std::size_t>> cbo_histogram(const CboTable& t) {
    std::map<std::size_t, std::size_t, std::greater<>> counts;
    for (const auto& e : t.entries) ++counts[e.cbo];
    return {counts.begin(), counts.end()};
}

Category categorize(std::size_t cbo_value, const CategoryThresholds& t) {
    if (t.normal_max >= t.cardiac_min)
        throw std::invalid_argument("categorize: normal_max must be < cardiac_min");
    if (cbo_value <= t.normal_max) return Category::normal;
    if (cbo_value >= t.cardiac_min) return Category::cardiac;
    return Category::pro_cardiac;
}

}  // namespace triage
