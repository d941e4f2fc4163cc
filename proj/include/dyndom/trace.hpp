#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dyndom/graph.hpp"

namespace dyndom {

/// A replayable event sequence over a fixed vertex universe. Valid traces
/// never violate edge-update preconditions when replayed from the empty graph.
struct UpdateTrace {
  int n = 0;
  std::vector<UpdateEvent> events;

  bool operator==(const UpdateTrace&) const = default;
};

/// Text form, one token group per line:
///   n <count>
///   + <u> <v>
///   - <u> <v>
/// '#' starts a comment line. Tokens are separated by single spaces and the
/// final line carries a newline. parse/serialize round-trip byte-for-byte on
/// comment-free input.
UpdateTrace parse_trace(std::istream& in);
UpdateTrace parse_trace_file(const std::string& path);
std::string serialize_trace(const UpdateTrace& t);
void write_trace_file(const std::string& path, const UpdateTrace& t);

/// Deterministic random trace: each step deletes a uniformly random present
/// edge with probability p_delete, otherwise inserts a uniformly random
/// absent edge. An empty graph forces insertion; a saturated graph forces
/// deletion.
UpdateTrace generate_trace(int n, int steps, double p_delete, std::uint64_t seed);

}  // namespace dyndom
