#pragma once

#include <span>
#include <string>
#include <vector>

#include "trisect/curves.hpp"
#include "trisect/pairmap.hpp"
#include "trisect/snf.hpp"
#include "trisect/surface.hpp"
#include "trisect/words.hpp"

namespace trisect {

// Outcome of a structural check. Every failed sub-check contributes one
// human-readable line; an empty list means the object passed.
struct Validation {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  // all failure lines joined with "; " (empty when ok)
  std::string witness() const;
};

// A genus-g splitting diagram: two cut systems on one closed surface.
struct HeegaardDiagram {
  SurfaceComplex surface;
  std::vector<Curve> alpha, beta;
};

// Checks that F cuts S to a planar connected piece: |F| equals half the
// doubled genus, curves are pairwise disjoint simple two-sided closed curves,
// and cutting yields one component with unchanged Euler characteristic,
// 2|F| boundary circles and genus zero.
Validation validate_cut_system(const SurfaceComplex& S,
                               std::span<const Curve> F);

// Both families of the diagram, each as a cut system.
Validation validate_heegaard(const HeegaardDiagram& d);

// Signed crossing counts: entry (i, j) sums the signs of crossings of B[j]
// with A[i]. The sign at a crossing compares B's direction with the
// transported local side of A, so rows are well-defined for two-sided A
// whether or not the surface is orientable. Requires every curve of A to be
// two-sided; B is not restricted.
Mat intersection_matrix(const SurfaceComplex& S, std::span<const Curve> A,
                        std::span<const Curve> B);

// Rank of the matrix over the field with two elements.
int mod2_rank(const Mat& m);

// First homology of the split 3-manifold, presented on the handle basis of
// the alpha side: relation columns are the beta curves' signed crossing
// vectors. Throws std::invalid_argument on an invalid diagram.
struct HomologyPresentation {
  Mat relations;       // g rows, one column per beta curve
  SmithResult smith;
  AbelianGroup group;
};
HomologyPresentation homology_presentation(const HeegaardDiagram& d);

// Fundamental group of the split 3-manifold: one generator per alpha handle,
// one relator per beta curve spelling its crossing sequence. The result is
// simplified deterministically within the budget. Throws
// std::invalid_argument on an invalid diagram.
Presentation pi1_presentation(const HeegaardDiagram& d, int budget = 4096);

// One handle slide: within the given family (0 = alpha, 1 = beta), curve i is
// slid over curve j along the band.
struct SlideMove {
  int family = 0;
  int i = -1;
  int j = -1;
  Band band;
};
using MoveScript = std::vector<SlideMove>;

// Joint normal position: isotopes the two families until no pair of curves
// bounds an empty bigon, then renormalizes positions. Search states and
// script replay both settle through this, so a replayed script lands on the
// exact configurations the search visited.
void reduce_pair(const SurfaceComplex& S, std::vector<Curve>& alpha,
                 std::vector<Curve>& beta);

// Replays a script of slides on a pair of families; each move is validated by
// the slide primitive and the state is settled with reduce_pair after every
// step. Throws on an inapplicable move.
void apply_moves(const SurfaceComplex& S, std::vector<Curve>& alpha,
                 std::vector<Curve>& beta, const MoveScript& script);
HeegaardDiagram apply_moves(HeegaardDiagram d, const MoveScript& script);

enum class Verdict { Verified, Refuted, Inconclusive };

struct RecognitionResult {
  Verdict verdict = Verdict::Inconclusive;
  int k = -1;           // parallel classes of the reference pair (Verified)
  MoveScript script;    // replayable slides reaching the reference pair
  std::string witness;  // Refuted: the invariant mismatch; else a note
  long long states = 0; // deduplicated family states examined
};

// Decides whether (A, B) is slide-equivalent to the reference pair of some
// k on this surface. Refuted rests on computable invariants (homology and
// mod-2 crossing rank). Verified comes from two breadth-first searches over
// slides meeting in the middle: a neighborhood of canonical keys grown
// around the reference pair, then a forward search from (A, B) that stops on
// any key in it; the script replays the forward half, landing on a
// configuration homeomorphic to a slide-image of the reference pair. Budget
// bounds the total number of deduplicated states across both searches;
// exhausting it yields Inconclusive. Throws std::invalid_argument on
// budget <= 0 or invalid cut systems.
RecognitionResult recognize_standard_pair(const SurfaceComplex& S,
                                          std::span<const Curve> A,
                                          std::span<const Curve> B,
                                          long long budget = 100000);

// Connect-sums a one-handle block carrying a crossing pair of curves at
// corner 0 of the chosen base polygon: genus rises by one, the homology
// presentation's Smith form is unchanged.
HeegaardDiagram stabilize_heegaard(const HeegaardDiagram& d, int at_poly = 0);

}  // namespace trisect
