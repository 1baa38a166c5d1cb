#pragma once

// Case-file dispatch, reports, and the corpus runner behind the CLI.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "ialex/laurent.hpp"
#include "json.hpp"

namespace ialex::cli {

using nlohmann::json;

struct RunOptions {
  std::size_t degree_cap = kDefaultDegreeCap;
  bool assume_zero_kernel = false;
  bool parallel = true;  // corpus only
};

struct ReportError {
  std::string code;
  std::string message;
  std::string path;
};

struct Report {
  std::string kind;
  std::string status = "pass";  // pass | fail | error
  json values = json::object();
  std::optional<json> certificates;
  std::optional<ReportError> error;
};

// Case file: {"kind": ..., "payload": {...}}.
Report run(const json& case_file, const RunOptions& options = {});
Report run_kind(const std::string& kind, const json& payload, const RunOptions& options = {});

// 0 pass, 1 fail or validation error, 2 computational cap.
int exit_code(const Report& report);

json to_json(const Report& report);
// Byte-stable: sorted keys, two-space indent, trailing newline.
std::string render_json(const Report& report);
std::string render_text(const Report& report);

// Runs every *.json file in dir (sorted by name). Throws IoError when the
// directory cannot be read.
Report corpus(const std::filesystem::path& dir, const RunOptions& options = {});

// Reads and parses a JSON file; throws IoError or ParseError.
json load_json(const std::filesystem::path& file);

}  // namespace ialex::cli
