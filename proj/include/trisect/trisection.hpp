#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "trisect/curves.hpp"
#include "trisect/heegaard.hpp"
#include "trisect/snf.hpp"
#include "trisect/surface.hpp"
#include "trisect/words.hpp"

namespace trisect {

// A closed trisection diagram: three cut systems on one closed surface whose
// three pairs (alpha,beta), (beta,gamma), (gamma,alpha) are each slide
// equivalent to the reference pair of some k. Verification is recorded in the
// report; operations that state facts about the encoded 4-manifold demand a
// fully verified diagram, while transformations also accept candidates (all
// structural checks pass but some pair search was inconclusive).

struct TrisectionReport {
  Validation alpha, beta, gamma;  // per-family cut-system checks
  Validation layout;              // cross-family point hygiene on shared edges
  bool pairs_checked = false;     // recognitions ran (all structure passed)
  std::array<RecognitionResult, 3> pairs;  // (a,b), (b,g), (g,a)
  int g = -1;
  std::array<int, 3> k{{-1, -1, -1}};  // filled when valid
  bool valid = false;      // structure passed and all three pairs Verified
  bool candidate = false;  // structure passed, no pair Refuted, some search hit its budget
  std::string witness() const;  // aggregated failure lines (empty when valid)
};

struct TrisectionDiagram {
  SurfaceComplex surface;
  std::vector<Curve> alpha, beta, gamma;
  TrisectionReport report;
};

// Runs every structural check and, when those pass, the three pair
// recognitions (merged in (alpha,beta), (beta,gamma), (gamma,alpha) order;
// they may run concurrently). Throws std::invalid_argument on budget <= 0.
TrisectionReport validate_trisection(const SurfaceComplex& S,
                                     std::span<const Curve> alpha,
                                     std::span<const Curve> beta,
                                     std::span<const Curve> gamma,
                                     long long budget = 100000);

// Bundles the pieces and validates them.
TrisectionDiagram trisection_diagram(SurfaceComplex S, std::vector<Curve> alpha,
                                     std::vector<Curve> beta,
                                     std::vector<Curve> gamma,
                                     long long budget = 100000);

// Euler characteristic of the encoded closed 4-manifold: 2 + g - (k1+k2+k3).
// Throws std::logic_error unless the diagram is verified.
int euler_characteristic_4mfd(const TrisectionDiagram& t);

// Fundamental group of a closed connected surface complex, presented on the
// crossing loops of its edges: crossing edge e out of its second occurrence
// is the positive generator; a spanning tree of the polygon adjacency graph
// is contracted and one relator walks the link of each vertex.
Presentation surface_group(const SurfaceComplex& S);

// Fundamental group of the encoded 4-manifold: the surface group modulo one
// relator per curve of all three families (its edge-crossing word). The
// result is simplified deterministically within the budget. Throws
// std::logic_error unless the diagram is verified.
Presentation fundamental_group(const TrisectionDiagram& t, int budget = 4096);

// First homology of the encoded 4-manifold: the abelianized relator lattice
// of the group presentation, with its Smith form. Throws std::logic_error
// unless the diagram is verified.
HomologyPresentation first_homology(const TrisectionDiagram& t);

// The genus-one diagram whose sector of the given index (1, 2 or 3) carries
// the parallel pair; the other two pairs are dual. Connect-summing it is the
// elementary stabilization of that sector.
TrisectionDiagram standard_stabilizer(int sector);

// Interior connected sum at corner 0 of polygon p1 of a and p2 of b: genera
// and sector counts add. Inputs must be verified or candidate; the result is
// re-validated with the given budget.
TrisectionDiagram connected_sum(const TrisectionDiagram& a,
                                const TrisectionDiagram& b, int p1, int p2,
                                long long budget = 100000);

// connected_sum with standard_stabilizer(sector) at corner 0 of polygon 0.
TrisectionDiagram stabilize(const TrisectionDiagram& t, int sector,
                            long long budget = 100000);

// Lifts a verified diagram on a non-orientable surface to the orientation
// double cover: every curve lifts to its two disjoint copies, and in each
// family one redundant lift is discarded — the first copy, scanning curves in
// input order, whose removal leaves a cut system. The lifted diagram is
// re-validated with the given budget. Throws std::invalid_argument on an
// orientable surface, std::logic_error on an unverified input, and
// std::runtime_error if some family has no discardable lift.
TrisectionDiagram orientation_double_cover_diagram(const TrisectionDiagram& t,
                                                   long long budget = 100000);

}  // namespace trisect
