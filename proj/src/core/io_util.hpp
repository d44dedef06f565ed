#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace scg {

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temp file and renames into place, so consumers never
// observe a partially written artifact.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// Splits on '\n', tolerating '\r\n'; a trailing newline does not produce an
// empty last element.
std::vector<std::string> split_lines(std::string_view text);

// Replaces invalid UTF-8 bytes with '?'; valid input passes through unchanged.
std::string sanitize_utf8(std::string_view text);

// FNV-1a 64-bit content digests, used for provenance stamps.
uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(uint64_t digest);
std::string digest_file(const std::filesystem::path& path);

// Shortest round-trip decimal representation.
std::string format_double(double value);

double parse_double(std::string_view text, const std::string& context);
int64_t parse_int(std::string_view text, const std::string& context);

}  // namespace scg
