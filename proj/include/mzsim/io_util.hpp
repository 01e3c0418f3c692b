#pragma once

#include <filesystem>
#include <string>

namespace mzsim {

// Shortest text form that round-trips a double exactly (%.17g).
std::string format_g17(double v);

// Write-temp-then-rename so readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace mzsim
