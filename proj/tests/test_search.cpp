#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "trisect/pairmap.hpp"
#include "trisect/search.hpp"

using namespace trisect;

namespace {

PairState root_state(const StandardPair& p) {
  PairState st;
  st.alpha = p.alpha;
  st.beta = p.beta;
  st.key = pair_key(p.surface, st.alpha, st.beta);
  return st;
}

bool same_move(const SlideMove& a, const SlideMove& b) {
  return a.family == b.family && a.i == b.i && a.j == b.j &&
         a.band.from.chord == b.band.from.chord &&
         a.band.from.side == b.band.from.side &&
         a.band.to.chord == b.band.to.chord && a.band.to.side == b.band.to.side;
}

}  // namespace

TEST_CASE("slide enumeration is deterministic and in-family") {
  StandardPair sp = standard_pair(2, 1, false);
  auto moves = enumerate_slides(sp.surface, sp.alpha, sp.beta);
  CHECK(!moves.empty());
  auto again = enumerate_slides(sp.surface, sp.alpha, sp.beta);
  REQUIRE(moves.size() == again.size());
  for (std::size_t i = 0; i < moves.size(); ++i)
    CHECK(same_move(moves[i], again[i]));
  for (const SlideMove& m : moves) {
    CHECK(m.i != m.j);
    CHECK((m.family == 0 || m.family == 1));
    int n = static_cast<int>(m.family == 0 ? sp.alpha.size() : sp.beta.size());
    CHECK(m.i < n);
    CHECK(m.j < n);
    CHECK(m.band.from.curve == m.i);
    CHECK(m.band.to.curve == m.j);
  }
}

TEST_CASE("parallel frontier expansion equals the serial reference") {
  StandardPair sp = standard_pair(2, 1, false);
  std::vector<PairState> states{root_state(sp)};

  Expansion s = expand_frontier_serial(sp.surface, states, 0, 1);
  Expansion p = expand_frontier_parallel(sp.surface, states, 0, 1);
  REQUIRE(s.per_state.size() == 1);
  REQUIRE(p.per_state.size() == 1);
  REQUIRE(s.per_state[0].size() == p.per_state[0].size());
  CHECK(!s.per_state[0].empty());
  for (std::size_t i = 0; i < s.per_state[0].size(); ++i) {
    const PairState& a = s.per_state[0][i];
    const PairState& b = p.per_state[0][i];
    CHECK(a.key == b.key);
    CHECK(a.parent == b.parent);
    CHECK(same_move(a.via, b.via));
  }

  // Two layers deep: expand everything the first layer produced.
  for (auto& child : s.per_state[0]) states.push_back(child);
  Expansion s2 = expand_frontier_serial(sp.surface, states, 1, states.size());
  Expansion p2 = expand_frontier_parallel(sp.surface, states, 1, states.size());
  REQUIRE(s2.per_state.size() == p2.per_state.size());
  for (std::size_t j = 0; j < s2.per_state.size(); ++j) {
    REQUIRE(s2.per_state[j].size() == p2.per_state[j].size());
    for (std::size_t i = 0; i < s2.per_state[j].size(); ++i)
      CHECK(s2.per_state[j][i].key == p2.per_state[j][i].key);
  }
}

TEST_CASE("core search is kernel-independent") {
  StandardPair sp = standard_pair(2, 1, false);
  std::vector<PairState> states{root_state(sp)};
  Expansion layer = expand_frontier_serial(sp.surface, states, 0, 1);
  REQUIRE(!layer.per_state[0].empty());
  const PairState& slid = layer.per_state[0][0];

  std::vector<std::string> accepted{standard_pair_key(2, 1, false)};
  RecognitionResult serial = recognize_pair(sp.surface, slid.alpha, slid.beta,
                                            accepted, 3000, false);
  RecognitionResult parallel = recognize_pair(sp.surface, slid.alpha, slid.beta,
                                              accepted, 3000, true);
  CHECK(serial.verdict == parallel.verdict);
  CHECK(serial.k == parallel.k);
  CHECK(serial.states == parallel.states);
  REQUIRE(serial.script.size() == parallel.script.size());
  for (std::size_t i = 0; i < serial.script.size(); ++i)
    CHECK(same_move(serial.script[i], parallel.script[i]));
}

TEST_CASE("search rejects a non-positive budget") {
  StandardPair sp = standard_pair(1, 0, true);
  std::vector<std::string> accepted{standard_pair_key(1, 0, true)};
  CHECK_THROWS_AS(
      recognize_pair(sp.surface, sp.alpha, sp.beta, accepted, 0, false),
      std::invalid_argument);
}

TEST_CASE("matched key index is reported") {
  StandardPair sp = standard_pair(1, 1, false);
  std::vector<std::string> accepted{"not-a-key", standard_pair_key(1, 1, false)};
  RecognitionResult r =
      recognize_pair(sp.surface, sp.alpha, sp.beta, accepted, 10, false);
  CHECK(r.verdict == Verdict::Verified);
  CHECK(r.k == 1);
  CHECK(r.script.empty());
}
