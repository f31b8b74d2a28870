#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace eimq::text {

/// Shortest decimal form that parses back to the same double (to_chars);
/// locale-independent, byte-deterministic.
std::string fmt_double(double v);

double parse_double(std::string_view s);

/// FNV-1a over the bytes, as a fixed-width hex string.
std::string fnv1a64_hex(std::string_view bytes);

/// Write-temp-then-rename so readers never observe a partial file.
void atomic_write(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

} // namespace eimq::text
