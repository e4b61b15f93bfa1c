#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "zeck/engine.hpp"

namespace zeck {

// Line-delimited JSON trace format, one complete game per stream:
//
//   {"schema":"zeck-trace/1","n":4,"strategy":"split-smallest","seed":0}
//   {"step":1,"kind":"C1","index":1,"after":[[1,2],[2,1]]}
//   ...
//   {"length":3,"mc":[[1,2]],"ms":[[2,1]]}
//
// "after" is the post-move board as ascending [index, count] pairs with
// zero counts omitted, and mc/ms are the final tallies in the same sparse
// form.  A reader must be able to replay the moves and land on each
// "after" state exactly.

inline constexpr const char* kTraceSchema = "zeck-trace/1";

struct TraceMeta {
  std::string strategy;
  std::uint64_t seed = 0;
};

// Writes the trace; the start must be the all-ones board (the only start
// the format can express).
void write_trace(std::ostream& os, const Trace& t, const TraceMeta& meta);

struct ReadTrace {
  Trace trace;
  TraceMeta meta;
};

// Parses and replays a trace, checking every "after" state and the final
// tallies.  Throws std::runtime_error on schema, parse, or replay mismatch,
// naming the offending step.
ReadTrace read_trace(std::istream& is);

}  // namespace zeck
