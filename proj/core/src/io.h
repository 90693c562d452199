#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace stylo::detail {

// Whole file as bytes; throws InputError if it cannot be read.
std::string read_file(const std::filesystem::path& path);

std::string_view trim(std::string_view s);

// Non-blank, non-comment ('#') lines, trimmed.
std::vector<std::string> list_entries(std::string_view contents);

}  // namespace stylo::detail
