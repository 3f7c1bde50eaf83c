// Compares the serial and OpenMP frontier-expansion kernels on the slide
// search: builds a breadth-first frontier from a reference pair, expands it
// with both kernels, checks they agree, and reports timings.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trisect/pairmap.hpp"
#include "trisect/search.hpp"

using namespace trisect;

namespace {

double ms(std::chrono::steady_clock::time_point a,
          std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  bool smoke = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--smoke") == 0) smoke = true;

  int genus = smoke ? 2 : 3;
  std::size_t frontier_cap = smoke ? 8 : 24;
  StandardPair sp = standard_pair(genus, 1, false);

  std::vector<PairState> states(1);
  states[0].alpha = sp.alpha;
  states[0].beta = sp.beta;
  states[0].key = pair_key(sp.surface, states[0].alpha, states[0].beta);

  // Grow a frontier of distinct states breadth-first.
  std::size_t lo = 0, hi = 1;
  while (states.size() < frontier_cap && lo < hi) {
    Expansion e = expand_frontier_serial(sp.surface, states, lo, hi);
    lo = hi;
    for (auto& group : e.per_state)
      for (auto& child : group) {
        bool dup = false;
        for (const auto& st : states) dup = dup || st.key == child.key;
        if (!dup) states.push_back(std::move(child));
        if (states.size() >= frontier_cap) break;
      }
    hi = states.size();
  }
  std::printf("frontier: %zu states (genus %d)\n", states.size(), genus);

  auto t0 = std::chrono::steady_clock::now();
  Expansion serial = expand_frontier_serial(sp.surface, states, 0, states.size());
  auto t1 = std::chrono::steady_clock::now();
  Expansion parallel =
      expand_frontier_parallel(sp.surface, states, 0, states.size());
  auto t2 = std::chrono::steady_clock::now();

  std::size_t children = 0;
  for (const auto& g : serial.per_state) children += g.size();
  if (serial.per_state.size() != parallel.per_state.size()) {
    std::fprintf(stderr, "kernel mismatch: slot counts differ\n");
    return 1;
  }
  for (std::size_t s = 0; s < serial.per_state.size(); ++s) {
    if (serial.per_state[s].size() != parallel.per_state[s].size()) {
      std::fprintf(stderr, "kernel mismatch: children of state %zu\n", s);
      return 1;
    }
    for (std::size_t i = 0; i < serial.per_state[s].size(); ++i)
      if (serial.per_state[s][i].key != parallel.per_state[s][i].key) {
        std::fprintf(stderr, "kernel mismatch: key at state %zu child %zu\n", s,
                     i);
        return 1;
      }
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  double ts = ms(t0, t1), tp = ms(t1, t2);
  std::printf("children: %zu\n", children);
  std::printf("serial:   %8.1f ms\n", ts);
  std::printf("parallel: %8.1f ms  (%d thread%s, speedup %.2fx)\n", tp, threads,
              threads == 1 ? "" : "s", tp > 0 ? ts / tp : 0.0);
  std::puts("kernels agree");
  return 0;
}
