#include "io.h"

#include <fstream>
#include <sstream>

#include "stylo/error.h"

namespace stylo::detail {

std::string read_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw InputError("no such file: " + path.string());
  }
  if (std::filesystem::is_directory(path, ec)) {
    throw InputError("expected a file, found a directory: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw InputError("error reading " + path.string());
  return std::move(buffer).str();
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string> list_entries(std::string_view contents) {
  std::vector<std::string> entries;
  while (!contents.empty()) {
    const auto eol = contents.find('\n');
    const auto line = trim(contents.substr(0, eol));
    contents.remove_prefix(eol == std::string_view::npos ? contents.size()
                                                         : eol + 1);
    if (line.empty() || line.front() == '#') continue;
    entries.emplace_back(line);
  }
  return entries;
}

}  // namespace stylo::detail
