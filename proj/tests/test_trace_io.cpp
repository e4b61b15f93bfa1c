#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "zeck/strategies.hpp"
#include "zeck/trace_io.hpp"

using namespace zeck;

namespace {

std::string serialize(const Trace& tr, const TraceMeta& meta) {
  std::ostringstream os;
  write_trace(os, tr, meta);
  return os.str();
}

}  // namespace

TEST_CASE("written traces carry the documented line layout") {
  const Trace tr = simulate(initial_state(4), {StrategyKind::SplitSmallest});
  const std::string text = serialize(tr, {"split-smallest", 0});
  std::istringstream lines(text);
  std::string header, first_move;
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, first_move));
  CHECK(header ==
        R"({"schema":"zeck-trace/1","n":4,"strategy":"split-smallest","seed":0})");
  CHECK(first_move == R"({"step":1,"kind":"C1","index":1,"after":[[1,2],[2,1]]})");
  // header + one line per move + footer
  int line_count = 2;
  std::string line;
  while (std::getline(lines, line)) ++line_count;
  CHECK(line_count == 2 + tr.length);
  CHECK(text.find(R"("length":3)") != std::string::npos);
  CHECK(text.find(R"("mc":[[1,2]])") != std::string::npos);
  CHECK(text.find(R"("ms":[[2,1]])") != std::string::npos);
}

TEST_CASE("round trip preserves moves, tallies, and metadata") {
  for (StrategyKind k :
       {StrategyKind::CombineLargest, StrategyKind::SplitLargest,
        StrategyKind::SplitSmallest, StrategyKind::GreedyLongest,
        StrategyKind::GreedyLongestSeeded}) {
    const std::uint64_t seed = k == StrategyKind::GreedyLongestSeeded ? 99 : 0;
    const Trace tr = simulate(initial_state(33), {k, seed});
    std::stringstream buf;
    write_trace(buf, tr, {std::string(strategy_name(k)), seed});
    const ReadTrace rt = read_trace(buf);
    CHECK(rt.trace.start == tr.start);
    CHECK(rt.trace.moves == tr.moves);
    CHECK(rt.trace.tallies == tr.tallies);
    CHECK(rt.trace.length == tr.length);
    CHECK(rt.meta.strategy == strategy_name(k));
    CHECK(rt.meta.seed == seed);
  }
}

TEST_CASE("the zero-move game round-trips") {
  Trace tr;
  tr.start = initial_state(1);
  std::stringstream buf;
  write_trace(buf, tr, {"greedy", 0});
  const ReadTrace rt = read_trace(buf);
  CHECK(rt.trace.length == 0);
  CHECK(rt.trace.moves.empty());
}

TEST_CASE("tampered traces are rejected on replay") {
  const Trace tr = simulate(initial_state(12), {StrategyKind::GreedyLongest});
  const std::string good = serialize(tr, {"greedy", 0});

  SUBCASE("corrupted after state") {
    std::string bad = good;
    const auto pos = bad.find("\"after\":[[1,");
    REQUIRE(pos != std::string::npos);
    bad[pos + 12] = '9';  // wrong count for index 1
    std::istringstream is(bad);
    CHECK_THROWS_AS(read_trace(is), std::runtime_error);
  }
  SUBCASE("wrong schema") {
    std::string bad = good;
    const auto pos = bad.find("zeck-trace/1");
    bad.replace(pos, 12, "zeck-trace/9");
    std::istringstream is(bad);
    CHECK_THROWS_AS(read_trace(is), std::runtime_error);
  }
  SUBCASE("wrong footer length") {
    std::string bad = good;
    const auto pos = bad.find("\"length\":");
    REQUIRE(pos != std::string::npos);
    bad[pos + 9] = '1';
    bad[pos + 10] = '9';  // still digits, now a different number
    std::istringstream is(bad);
    CHECK_THROWS_AS(read_trace(is), std::runtime_error);
  }
  SUBCASE("truncated stream") {
    const std::string bad = good.substr(0, good.rfind("{\"length\""));
    std::istringstream is(bad);
    CHECK_THROWS_AS(read_trace(is), std::runtime_error);
  }
  SUBCASE("the untouched trace still reads") {
    std::istringstream is(good);
    CHECK_NOTHROW(read_trace(is));
  }
}

TEST_CASE("writer refuses starts it cannot express") {
  Trace tr;
  tr.start = state_from_counts({0, 2});
  std::ostringstream os;
  CHECK_THROWS_AS(write_trace(os, tr, {"greedy", 0}), std::invalid_argument);
}
