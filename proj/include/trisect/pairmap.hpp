#pragma once
#include <span>
#include <string>
#include <vector>

#include "trisect/curves.hpp"
#include "trisect/surface.hpp"

namespace trisect {

// Reference configuration on a one-polygon surface: for an orientable surface
// g four-sided torus blocks, otherwise k Klein blocks followed by g-k torus
// blocks. In the first k blocks the two families run parallel; in the rest
// they form a dual pair crossing once.
struct StandardPair {
  SurfaceComplex surface;
  std::vector<Curve> alpha, beta;
};
StandardPair standard_pair(int g, int k, bool orientable);

// Position-free key of (Sigma, A, B): equal keys certify that a homeomorphism
// of the surface carries one configuration to the other (family labels kept,
// curves within a family interchangeable). Built from the crossing graph of
// the two families (rotations, orientation twists) plus the topology of the
// complement regions. Strictly finer than homeomorphism only in degenerate
// tie cases, never coarser.
std::string pair_key(const SurfaceComplex& S, std::span<const Curve> A,
                     std::span<const Curve> B);

std::string standard_pair_key(int g, int k, bool orientable);

}  // namespace trisect
