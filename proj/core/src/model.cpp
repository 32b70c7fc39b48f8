#include "triage/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace triage {

namespace {

constexpr std::array<std::string_view, kSymptomCount> kKeys = {
    "bp",         "hb",      "pr",         "ecg",
    "left_shoulder", "sweating", "vomiting", "overweight",
    "chest_pain", "breathlessness", "obesity"};

constexpr std::array<std::string_view, kSymptomCount> kNames = {
    "BP",         "HB",       "PR",       "ECG",
    "LeftShoulderPain", "Sweating", "Vomiting", "OverWeight",
    "ChestPain",  "Breathlessness",  "Obesity"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    }
    return true;
}

int parse_cell(std::string_view cell, std::size_t line, std::size_t column) {
    int value = 0;
    const char* first = cell.data();
    const char* last = first + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || cell.empty()) {
        std::ostringstream os;
        os << "line " << line << ": column '" << kKeys[column - 1]
           << "': cell '" << cell << "' is not an integer";
        throw ParseError(line, os.str());
    }
    return value;
}

}  // namespace

const std::array<std::string_view, kSymptomCount>& symptom_keys() { return kKeys; }
const std::array<std::string_view, kSymptomCount>& symptom_names() { return kNames; }

std::optional<std::size_t> Dataset::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].id == id) return i;
    }
    return std::nullopt;
}

Dataset parse_dataset(std::string_view text, ParseMode mode) {
    Dataset ds;
    std::unordered_set<std::string> seen_ids;
    std::size_t line_no = 0;
    std::size_t start = 0;
    bool header_done = false;

    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = (end == std::string_view::npos)
                                    ? text.substr(start)
                                    : text.substr(start, end - start);
        start = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
        ++line_no;
        if (trim(line).empty()) continue;

        auto fields = split_fields(line);
        if (!header_done) {
            if (fields.size() != kSymptomCount + 1 || !iequals(fields[0], "id")) {
                throw ParseError(line_no, "header must be '" + csv_header() + "'");
            }
            for (std::size_t j = 0; j < kSymptomCount; ++j) {
                if (!iequals(fields[j + 1], kKeys[j])) {
                    std::ostringstream os;
                    os << "line " << line_no << ": header column " << j + 2
                       << " is '" << fields[j + 1] << "', expected '" << kKeys[j] << "'";
                    throw ParseError(line_no, os.str());
                }
            }
            header_done = true;
            continue;
        }

        if (fields.size() != kSymptomCount + 1) {
            std::ostringstream os;
            os << "line " << line_no << ": expected " << kSymptomCount + 1
               << " fields, got " << fields.size();
            throw ParseError(line_no, os.str());
        }
        PatientRecord r;
        r.id = std::string(fields[0]);
        if (r.id.empty()) throw ParseError(line_no, "line " + std::to_string(line_no) + ": empty id");
        if (!seen_ids.insert(r.id).second) {
            throw ParseError(line_no,
                             "line " + std::to_string(line_no) + ": duplicate id " + r.id);
        }
        for (std::size_t j = 1; j <= kSymptomCount; ++j) {
            int v = parse_cell(fields[j], line_no, j);
            if (mode == ParseMode::boolean) {
                if (v != 0 && v != 1) {
                    std::ostringstream os;
                    os << "line " << line_no << ": column '" << kKeys[j - 1]
                       << "': boolean cell must be 0 or 1, got " << v;
                    throw ParseError(line_no, os.str());
                }
                r.codes[j - 1] = v == 1 ? static_cast<int>(j) : 0;
            } else {
                if (v != 0 && v != static_cast<int>(j)) {
                    std::ostringstream os;
                    os << "line " << line_no << ": column '" << kKeys[j - 1]
                       << "': code must be 0 or " << j << ", got " << v;
                    throw ParseError(line_no, os.str());
                }
                r.codes[j - 1] = v;
            }
        }
        ds.records.push_back(std::move(r));
    }
    if (!header_done) throw ParseError(0, "missing header row");
    return ds;
}

std::optional<std::string> validate_record(const PatientRecord& r) {
    if (r.id.empty()) return "empty id";
    for (std::size_t j = 0; j < kSymptomCount; ++j) {
        int v = r.codes[j];
        if (v != 0 && v != static_cast<int>(j + 1)) {
            std::ostringstream os;
            os << "code at position " << j + 1 << " must be 0 or " << j + 1
               << ", got " << v;
            return os.str();
        }
    }
    return std::nullopt;
}

SymptomProfile presence_vector(const PatientRecord& r) {
    SymptomProfile p;
    for (std::size_t j = 0; j < kSymptomCount; ++j) p.present[j] = r.codes[j] != 0;
    return p;
}

std::array<int, kSymptomCount> encode_profile(const SymptomProfile& p) {
    std::array<int, kSymptomCount> codes{};
    for (std::size_t j = 0; j < kSymptomCount; ++j)
        codes[j] = p.present[j] ? static_cast<int>(j + 1) : 0;
    return codes;
}

int dissimilarity(const PatientRecord& a, const PatientRecord& b) {
    int d = 0;
    for (std::size_t j = 0; j < kSymptomCount; ++j)
        d += (a.codes[j] != 0) != (b.codes[j] != 0);
    return d;
}

DissimilarityMatrix dissimilarity_matrix(const Dataset& ds) {
    if (ds.empty()) throw std::invalid_argument("dissimilarity_matrix: empty dataset");
    DissimilarityMatrix m;
    m.n = ds.size();
    m.values.assign(m.n * m.n, 0);
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = i + 1; j < m.n; ++j) {
            int d = dissimilarity(ds.records[i], ds.records[j]);
            m.values[i * m.n + j] = d;
            m.values[j * m.n + i] = d;
        }
    }
    return m;
}

std::string csv_header() {
    std::string s = "id";
    for (auto key : kKeys) {
        s += ',';
        s += key;
    }
    return s;
}

std::string csv_row(const PatientRecord& r) {
    std::string s = r.id;
    for (int c : r.codes) {
        s += ',';
        s += std::to_string(c);
    }
    return s;
}

std::string to_csv(const Dataset& ds) {
    std::string s = csv_header();
    s += '\n';
    for (const auto& r : ds.records) {
        s += csv_row(r);
        s += '\n';
    }
    return s;
}

}  // namespace triage
