#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace adhdx {

// Insertion-ordered JSON keeps artifact layouts stable across runs.
using json = nlohmann::ordered_json;

// Shortest round-trip decimal form (std::to_chars); locale-free and
// deterministic, so CSV/SVG artifacts are byte-reproducible.
std::string fmt_double(double v);

// Strict full-token parse; nullopt when the token is not a plain number.
std::optional<double> parse_double(const std::string& token);

// FNV-1a 64-bit, used for config hashes and artifact checksums.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string trim(const std::string& s);

}  // namespace adhdx
