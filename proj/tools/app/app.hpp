#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace idiag::cli {

using nlohmann::json;

enum class Command { Diagram, Lelong, Sum, Homothetic, Decompose, Classify, NewtonNumber, Substitute, Indicator };

std::optional<Command> command_from_string(std::string_view name);
std::string_view to_string(Command c);

enum class Format { Json, Text };

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitInternal = 4;

/// One analysis. The payload holds the already-loaded JSON documents:
///   diagram, classify:   {"input": U}
///   lelong:              {"input": U, "weight": "1,1" | [...]}
///   sum, homothetic:     {"left": G, "right": G}
///   decompose,
///   newton-number:       {"diagram": G}
///   substitute:          {"matrix": M, "input": U}
///   indicator:           {"diagram": G, "t": "-1,-1" | [...]}
struct Request {
  Command command;
  json payload;
};

/// `result` is the command output, or {"error": {...}} when exit_code is 2 or 4.
struct Response {
  int exit_code = kExitOk;
  json result;
};

Response run(const Request& request);

struct BatchEntry {
  std::string id;
  std::optional<Request> request;  // empty if the entry itself is malformed
  json error;                      // the reason, when request is empty
};

struct BatchManifest {
  std::vector<BatchEntry> entries;
  std::size_t jobs = 1;
};

/// {"jobs": N?, "requests": [{"id", "command", "payload"}, ...]}. String
/// values of input/left/right/diagram/matrix are file paths relative to
/// `base_dir`. Throws Error(InvalidInput) for a malformed manifest (missing
/// list, duplicate ids); a malformed entry only poisons that entry.
BatchManifest manifest_from_json(const json& manifest, const std::filesystem::path& base_dir);

struct BatchResult {
  int exit_code = kExitOk;  // max over entries
  json result;              // {"results": {id: {...}}}
};

/// Runs entries on up to `jobs` threads; output does not depend on jobs.
BatchResult run_batch(const BatchManifest& manifest, std::size_t jobs);

/// Throws Error(InvalidInput) with the path in the message.
json load_json_file(const std::filesystem::path& path);

/// Canonical JSON text (two-space indent, sorted keys, trailing newline).
std::string render_json(const json& value);

/// Human-readable rendering. Verdicts are colored when `color` is set.
std::string render_text(Command command, const Response& response, bool color);
std::string render_batch_text(const BatchResult& batch, bool color);

}  // namespace idiag::cli
