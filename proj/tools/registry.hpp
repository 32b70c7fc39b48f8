#pragma once

#include <filesystem>
#include <string>

#include "triage/model.hpp"

namespace triage::cli {

/// Patient registry: the canonical CSV file of module `model`, used as the
/// tool's persistent store.

/// Loads and parses the registry.  IoError when unreadable, DataError when
/// malformed.
Dataset load_registry(const std::filesystem::path& path);

/// Appends the given records atomically (write temp file, then rename).
/// Existing rows are preserved byte-identically; a missing registry is
/// created with the canonical header.  DataError on duplicate ids, with the
/// registry left untouched.  Returns the number of rows appended.
std::size_t append_records(const std::filesystem::path& path, const Dataset& incoming);

}  // namespace triage::cli
