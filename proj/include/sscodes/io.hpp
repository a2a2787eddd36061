#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace sscodes
{
    auto read_file(const std::filesystem::path & path) -> std::string;

    /// Writes to a sibling temporary file, then renames it over `path`.
    auto write_file_atomic(const std::filesystem::path & path, std::string_view content) -> void;
}
