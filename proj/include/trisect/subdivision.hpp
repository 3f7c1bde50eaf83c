#pragma once
#include <array>
#include <span>
#include <vector>

#include "trisect/curves.hpp"
#include "trisect/surface.hpp"

namespace trisect {

// Where an edge of a cut-open surface came from.
struct EdgeSrc {
  int orig = -1;  // >= 0: the subinterval [lo,hi] of that original edge
  Rat lo, hi;
  int curve = -1;  // >= 0: a piece of this cutting curve
  int chord = -1;  // chord index along the curve
  int piece = -1;  // piece index along the chord (chords split at crossings)
  int side = -1;   // 0: the adjacent region lies left of the curve, 1: right
  // the cut edge's reference direction (set by its first occurrence) runs
  // against increasing t, resp. against the curve direction
  bool flipped = false;
  bool from_curve() const { return curve >= 0; }
};

// Result of cutting a surface open along curves and arcs. Curve points
// subdivide the original edges (subinterval k of edge e keeps its own
// id and a reference direction of increasing t); every curve piece turns
// into one boundary edge per side.
struct CutResult {
  SurfaceComplex cut;
  std::vector<EdgeSrc> edge_src;             // by cut edge id
  std::vector<std::vector<Rat>> cut_ts;      // by original edge: split positions
  std::vector<std::vector<int>> piece_edge;  // [orig edge][interval] -> cut edge
  // occurrence slot of piece (e, interval) in `cut` corresponding to original
  // occurrence slot 0/1 of edge e; -1 when e is a boundary edge
  std::vector<std::vector<std::array<int, 2>>> piece_slot;
};

// Cut along embedded curves/arcs. Arcs must be anchored on boundary edges.
// Distinct curves may cross transversally; the crossings become corners of
// the cut boundary.
CutResult cut_along(const SurfaceComplex& S, std::span<const Curve> curves);

// Re-express a curve disjoint from the cutting family on the cut surface.
Curve transfer_curve(const CutResult& cr, const SurfaceComplex& orig, const Curve& c);

// Connected pieces of the complement of the curves.
struct RegionInfo {
  int chi = 0;
  bool orientable = true;
  int boundary_circles = 0;
  std::vector<int> polys;  // polygons of the cut surface in this piece
};
std::vector<RegionInfo> complement_regions(const SurfaceComplex& S,
                                           std::span<const Curve> curves);

// Surgery: cut along closed curves, then cap every boundary circle the cut
// introduced with a disk. The transfer tables of `cut` stay valid on
// `surface` (capping appends polygons without renaming edges).
struct CompressResult {
  SurfaceComplex surface;
  CutResult cut;
  int caps = 0;
};
CompressResult compress_along(const SurfaceComplex& S, std::span<const Curve> curves);

}  // namespace trisect
