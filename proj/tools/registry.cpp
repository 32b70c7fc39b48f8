#include "registry.hpp"

#include <fstream>
#include <sstream>
#include <system_error>
#include <unordered_set>

#include "errors.hpp"

namespace triage::cli {

namespace {

std::string read_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

Dataset load_registry(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec)
        throw IoError("registry not found: " + path.string());
    try {
        return parse_dataset(read_bytes(path));
    } catch (const ParseError& e) {
        throw DataError("registry " + path.string() + ": " + e.what());
    }
}

std::size_t append_records(const std::filesystem::path& path, const Dataset& incoming) {
    std::string existing_bytes;
    std::unordered_set<std::string> existing_ids;

    std::error_code ec;
    if (std::filesystem::exists(path, ec) && !ec) {
        existing_bytes = read_bytes(path);
        Dataset existing;
        try {
            existing = parse_dataset(existing_bytes);
        } catch (const ParseError& e) {
            throw DataError("registry " + path.string() + ": " + e.what());
        }
        for (const auto& r : existing.records) existing_ids.insert(r.id);
        if (!existing_bytes.empty() && existing_bytes.back() != '\n')
            existing_bytes += '\n';
    } else {
        existing_bytes = csv_header() + "\n";
    }

    for (const auto& r : incoming.records) {
        if (existing_ids.count(r.id))
            throw DataError("duplicate id " + r.id + ", registry unchanged");
    }

    std::string out = existing_bytes;
    for (const auto& r : incoming.records) {
        out += csv_row(r);
        out += '\n';
    }

    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot write " + tmp.string());
        f << out;
        if (!f.good()) throw IoError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot replace " + path.string() + ": " + ec.message());
    }
    return incoming.size();
}

}  // namespace triage::cli
