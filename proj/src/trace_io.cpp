#include "zeck/trace_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace zeck {

namespace {

void write_sparse(std::ostream& os, const GameState& s) {
  os << "[";
  bool first = true;
  for (int i = 1; i <= s.top_index(); ++i) {
    if (s.counts[i] == 0) continue;
    if (!first) os << ",";
    first = false;
    os << "[" << i << "," << s.counts[i] << "]";
  }
  os << "]";
}

void write_sparse(std::ostream& os, const std::map<int, std::int64_t>& m) {
  os << "[";
  bool first = true;
  for (const auto& [i, c] : m) {
    if (c == 0) continue;
    if (!first) os << ",";
    first = false;
    os << "[" << i << "," << c << "]";
  }
  os << "]";
}

const char* kind_label(const Move& m) {
  switch (m.kind) {
    case MoveKind::Combine1: return "C1";
    case MoveKind::Combine: return "C";
    case MoveKind::Split: return "S";
  }
  return "?";
}

GameState state_of_sparse(const nlohmann::json& pairs, std::int64_t value) {
  GameState s;
  s.counts = {0};
  for (const auto& pr : pairs) {
    if (!pr.is_array() || pr.size() != 2)
      throw std::runtime_error("trace: malformed [index,count] pair");
    const int i = pr[0].get<int>();
    const std::int64_t c = pr[1].get<std::int64_t>();
    if (i < 1 || c < 1) throw std::runtime_error("trace: bad sparse entry");
    if (i >= static_cast<int>(s.counts.size()))
      s.counts.resize(static_cast<std::size_t>(i) + 1, 0);
    s.counts[i] = c;
  }
  s.value = value;
  return s;
}

std::map<int, std::int64_t> map_of_sparse(const nlohmann::json& pairs) {
  std::map<int, std::int64_t> m;
  for (const auto& pr : pairs) m[pr[0].get<int>()] = pr[1].get<std::int64_t>();
  return m;
}

}  // namespace

void write_trace(std::ostream& os, const Trace& t, const TraceMeta& meta) {
  if (t.start != initial_state(t.start.value))
    throw std::invalid_argument(
        "write_trace: only all-ones starts can be serialized");
  os << "{\"schema\":\"" << kTraceSchema << "\",\"n\":" << t.start.value
     << ",\"strategy\":\"" << meta.strategy << "\",\"seed\":" << meta.seed
     << "}\n";
  GameState cur = t.start;
  for (std::size_t k = 0; k < t.moves.size(); ++k) {
    const Move& m = t.moves[k];
    cur = apply_move(cur, m);
    os << "{\"step\":" << (k + 1) << ",\"kind\":\"" << kind_label(m)
       << "\",\"index\":" << m.index << ",\"after\":";
    write_sparse(os, cur);
    os << "}\n";
  }
  os << "{\"length\":" << t.length << ",\"mc\":";
  write_sparse(os, t.tallies.mc);
  os << ",\"ms\":";
  write_sparse(os, t.tallies.ms);
  os << "}\n";
}

ReadTrace read_trace(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("trace: empty stream");
  nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.contains("schema"))
    throw std::runtime_error("trace: bad header line");
  if (header["schema"].get<std::string>() != kTraceSchema)
    throw std::runtime_error("trace: unsupported schema '" +
                             header["schema"].get<std::string>() + "'");
  ReadTrace out;
  const std::int64_t n = header.at("n").get<std::int64_t>();
  out.meta.strategy = header.at("strategy").get<std::string>();
  out.meta.seed = header.at("seed").get<std::uint64_t>();
  out.trace.start = initial_state(n);

  GameState cur = out.trace.start;
  bool saw_footer = false;
  std::size_t step = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw std::runtime_error("trace: parse failure after step " +
                               std::to_string(step));
    if (j.contains("length")) {
      // Footer: cross-check length and tallies against the replay.
      if (j["length"].get<std::int64_t>() !=
          static_cast<std::int64_t>(out.trace.moves.size()))
        throw std::runtime_error("trace: footer length mismatch");
      MoveTally replayed = tally(out.trace);
      if (map_of_sparse(j.at("mc")) != replayed.mc ||
          map_of_sparse(j.at("ms")) != replayed.ms)
        throw std::runtime_error("trace: footer tallies mismatch");
      out.trace.tallies = replayed;
      out.trace.length = static_cast<std::int64_t>(out.trace.moves.size());
      saw_footer = true;
      break;
    }
    ++step;
    if (j.at("step").get<std::size_t>() != step)
      throw std::runtime_error("trace: step numbering broken at step " +
                               std::to_string(step));
    const std::string kind = j.at("kind").get<std::string>();
    const int index = j.at("index").get<int>();
    Move m;
    if (kind == "C1" && index == 1)
      m = combine1();
    else if (kind == "C")
      m = combine_at(index);
    else if (kind == "S")
      m = split_at(index);
    else
      throw std::runtime_error("trace: unknown move kind at step " +
                               std::to_string(step));
    try {
      cur = apply_move(cur, m);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("trace: replay error at step " +
                               std::to_string(step) + ": " + e.what());
    }
    const GameState recorded = state_of_sparse(j.at("after"), cur.value);
    if (recorded != cur)
      throw std::runtime_error("trace: replay error at step " +
                               std::to_string(step) +
                               ": recorded state differs from replay");
    out.trace.moves.push_back(m);
  }
  if (!saw_footer) throw std::runtime_error("trace: missing footer line");
  return out;
}

}  // namespace zeck
