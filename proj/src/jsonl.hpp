#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "csgen/errors.hpp"

namespace csgen::detail {

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return in;
}

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  return out;
}

// Calls fn(line_number, json) for every non-blank line. Parse failures and
// exceptions thrown by fn are reported with the 1-based line number.
inline void for_each_jsonl_record(
    const std::filesystem::path& path,
    const std::function<void(std::size_t, const nlohmann::json&)>& fn) {
  std::ifstream in = open_input(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded()) {
      throw ValidationError(path.string() + ": line " + std::to_string(line_no) +
                            ": invalid JSON");
    }
    try {
      fn(line_no, record);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw ValidationError(path.string() + ": line " + std::to_string(line_no) + ": " +
                            e.what());
    }
  }
}

inline ValidationError record_error(const std::filesystem::path& path, std::size_t line_no,
                                    const std::string& what) {
  return ValidationError(path.string() + ": line " + std::to_string(line_no) + ": " + what);
}

}  // namespace csgen::detail
