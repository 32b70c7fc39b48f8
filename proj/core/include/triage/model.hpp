#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace triage {

inline constexpr std::size_t kSymptomCount = 11;

/// Canonical CSV column keys, in the normative column order.
const std::array<std::string_view, kSymptomCount>& symptom_keys();

/// Human-readable symptom names, same order as symptom_keys().
const std::array<std::string_view, kSymptomCount>& symptom_names();

/// One patient: an identifier plus an 11-slot code vector.  Slot j (1-based)
/// holds 0 when the symptom is absent and the canonical code j when present.
struct PatientRecord {
    std::string id;
    std::array<int, kSymptomCount> codes{};

    bool operator==(const PatientRecord&) const = default;
};

/// Presence pattern derived from a PatientRecord.
struct SymptomProfile {
    std::array<bool, kSymptomCount> present{};

    bool operator==(const SymptomProfile&) const = default;
};

struct Dataset {
    std::vector<PatientRecord> records;

    std::size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }
    const PatientRecord& at(std::size_t i) const { return records.at(i); }

    /// Dataset position of the given id, if present.
    std::optional<std::size_t> index_of(std::string_view id) const;

    bool operator==(const Dataset&) const = default;
};

/// Symmetric matrix of pairwise Hamming distances, dataset order.
struct DissimilarityMatrix {
    std::size_t n = 0;
    std::vector<int> values;  // row-major n*n

    int at(std::size_t i, std::size_t j) const { return values.at(i * n + j); }
};

enum class ParseMode {
    strict,   // cell j must be 0 or the canonical code j
    boolean,  // cell j must be 0 or 1; 1 is re-encoded to code j
};

/// Validation failure with the 1-based CSV line it occurred on (0 = header/global).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Parses the canonical CSV format (header + one row per patient).
/// Throws ParseError on malformed headers, cells, or duplicate ids.
Dataset parse_dataset(std::string_view text, ParseMode mode = ParseMode::strict);

/// Validates a single record against the code invariants.  Returns an error
/// message, or nullopt when the record is well formed.
std::optional<std::string> validate_record(const PatientRecord& r);

SymptomProfile presence_vector(const PatientRecord& r);

/// Inverse of presence_vector: true at slot j maps to code j.
std::array<int, kSymptomCount> encode_profile(const SymptomProfile& p);

/// Hamming distance between the two presence vectors.
int dissimilarity(const PatientRecord& a, const PatientRecord& b);

/// Throws std::invalid_argument on an empty dataset.
DissimilarityMatrix dissimilarity_matrix(const Dataset& ds);

/// Canonical CSV header line (no trailing newline).
std::string csv_header();

/// Canonical CSV row for one record (no trailing newline).
std::string csv_row(const PatientRecord& r);

/// Whole dataset in canonical CSV form, trailing newline included.
std::string to_csv(const Dataset& ds);

}  // namespace triage
