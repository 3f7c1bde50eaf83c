#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trisect/heegaard.hpp"

namespace trisect {

// Every single-corridor slide available from this position: bands routed
// inside one polygon between two distinct curves of the same family, one
// candidate per (chord, side) pair sharing that polygon. Sorted; applying an
// entry through the slide primitive either succeeds or is skipped by the
// search as blocked.
std::vector<SlideMove> enumerate_slides(const SurfaceComplex& S,
                                        std::span<const Curve> A,
                                        std::span<const Curve> B);

// One node of the slide search: a pair of families plus the breadcrumb that
// produced it.
struct PairState {
  std::vector<Curve> alpha, beta;
  std::string key;
  int parent = -1;  // index into the search's state list, -1 at the root
  SlideMove via;    // the move applied to the parent (meaningful if parent >= 0)
};

// Children of states [lo, hi), grouped per source state in enumeration order.
// Blocked moves are dropped. The parallel kernel distributes source states
// across threads and returns exactly the serial result.
struct Expansion {
  std::vector<std::vector<PairState>> per_state;
};
Expansion expand_frontier_serial(const SurfaceComplex& S,
                                 const std::vector<PairState>& states,
                                 std::size_t lo, std::size_t hi);
Expansion expand_frontier_parallel(const SurfaceComplex& S,
                                   const std::vector<PairState>& states,
                                   std::size_t lo, std::size_t hi);

// Breadth-first search from (A, B) over slides of either family until a
// state's canonical key lands in `accepted`. On Verified, k holds the index
// of the matched accepted key and the script is the lexicographically least
// at minimal depth; callers map k to their own notion of the target's
// parameters. Budget bounds deduplicated states; throws on budget <= 0.
RecognitionResult recognize_pair(const SurfaceComplex& S,
                                 std::span<const Curve> A,
                                 std::span<const Curve> B,
                                 const std::vector<std::string>& accepted,
                                 long long budget, bool parallel = true);

// Bidirectional variant: breadth-first slide searches from (A, B) on S and
// from (A2, B2) on S2 grow toward each other until a canonical key appears
// on both sides, expanding whichever side holds fewer states ((A2, B2) on
// ties, so a cheap reference diagram carries more of the work). Verified
// means the two pairs are slide-equivalent up to homeomorphism; the script
// replays the (A, B) half only, landing on a configuration that shares the
// rendezvous key. k is left at -1. The (A2, B2) seed rides free; the budget
// bounds deduplicated states across both searches combined.
RecognitionResult meet_pair(const SurfaceComplex& S, std::span<const Curve> A,
                            std::span<const Curve> B,
                            const SurfaceComplex& S2,
                            std::span<const Curve> A2,
                            std::span<const Curve> B2, long long budget,
                            bool parallel = true);

}  // namespace trisect
