#pragma once

#include "seqbound/state.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace seqbound {

// State file: {"x_min": a, "x_max": b, "samples": [[re, im], ...]},
// numbers written with 17 significant digits. A carrier, if any, is
// multiplied into the samples on write.
std::string serialize_state(const StateGrid& state);

// IoError (with line and column) on malformed text; ArgumentError if the
// content violates StateGrid invariants.
StateGrid parse_state(std::string_view text);

StateGrid read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const StateGrid& state);

// Writes `text` to `path`, or to stdout when path is "-". IoError on failure.
void write_text(const std::filesystem::path& path, std::string_view text);

} // namespace seqbound
