// Command dispatch for the command-line tool: each command turns an input
// document into a structured result plus a human-readable rendering.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qmod/dsl.hpp"

namespace qmod {

inline constexpr const char* kVersion = "0.1.0";

struct CommandOptions {
  std::string field;  // overrides the document's field when nonempty
  std::uint64_t seed = 1;
  std::uint64_t max_sweep = 1u << 16;
  std::vector<std::vector<DslVector>> candidates;
  bool have_candidates = false;
};

struct Report {
  std::string command;
  std::uint64_t seed = 1;
  nlohmann::ordered_json result;
  std::vector<std::string> lines;  // human rendering
};

const std::vector<std::string>& command_names();
/// Throws Error on domain failures (and on missing input blocks).
Report run_command(const InputDocument& doc, const std::string& command, const CommandOptions& opts);
std::string render_text(const Report& r);
std::string render_json(const Report& r);

/// Parses a candidates file against the quiver and algebra of `doc`.
std::vector<std::vector<DslVector>> parse_candidates(const InputDocument& doc, const std::string& text);

}  // namespace qmod
