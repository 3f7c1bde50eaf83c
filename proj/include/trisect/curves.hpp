#pragma once
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trisect/rat.hpp"
#include "trisect/surface.hpp"

namespace trisect {

// A curve is a cyclic (closed) or linear (arc) sequence of edge points.
// Each point sits on an edge at parameter t in (0,1) along the edge's
// reference direction. `leave` names the occurrence slot of the polygon the
// outgoing segment runs through; the incoming segment runs through the other
// slot. Arc endpoints are anchors (on a boundary edge, or at a marked point
// of an interior edge); an anchor's `leave` names the single polygon its
// segment uses, and anchors on boundary edges must have leave = 0.
//
// Between consecutive points the curve runs as one chord of the polygon both
// points flank. Chords are realized minimally: two chords in a polygon cross
// exactly when their endpoint pairs interleave along the polygon boundary.
struct CurvePoint {
  int edge = -1;
  Rat t;
  int leave = 0;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct Curve {
  bool closed = true;
  std::vector<CurvePoint> pts;
  friend bool operator==(const Curve&, const Curve&) = default;
};

// position on a polygon boundary: along side `side` at s in (0,1) measured in
// the side's own traversal direction
struct BPos {
  int side = -1;
  Rat s;
};
bool bpos_less(const BPos& a, const BPos& b);
// true when walking the boundary forward from a meets x strictly before b
bool bpos_between(const BPos& a, const BPos& x, const BPos& b);

// one polygon-traversal segment of a curve
struct ChordSpec {
  int poly = -1;
  BPos a, b;          // a: where the segment enters the polygon, b: where it exits
  int pt_a = -1, pt_b = -1;  // indices into Curve::pts
};

// Segment list of a curve; throws std::runtime_error when consecutive points
// do not flank a common polygon. For a closed curve with m points there are m
// chords (chord k runs from point k to point k+1 mod m); for an arc, m-1.
std::vector<ChordSpec> curve_chords(const SurfaceComplex& S, const Curve& c);

// s-position of a curve point as seen from occurrence slot `which` of its edge
Rat side_param(const SurfaceComplex& S, const CurvePoint& p, int which);

bool chords_cross(const ChordSpec& x, const ChordSpec& y);

struct CrossingRef {
  int ci = -1, ka = -1;  // chord ka of curve ci ...
  int cj = -1, kb = -1;  // ... crosses chord kb of curve cj
};

// All pairwise chord crossings among the given curves (self-crossings
// included when i == j, each unordered chord pair reported once).
std::vector<CrossingRef> curve_crossings(const SurfaceComplex& S,
                                         std::span<const Curve> curves);

int crossing_count(const SurfaceComplex& S, const Curve& a, const Curve& b);

// Crossings bucketed per (curve, chord) and sorted along the chord's
// direction. Entries are (crossing index, leg): leg 0 when the bucket's chord
// is the (ci, ka) leg of the crossing. Requires that chords crossing a common
// chord do not cross each other (disjoint families against one curve).
std::vector<std::vector<std::vector<std::pair<int, int>>>> crossing_order(
    const SurfaceComplex& S, std::span<const Curve> curves,
    std::span<const CrossingRef> crossings);

// parity of reversing gluings crossed along the full point sequence
int w1_parity(const SurfaceComplex& S, const Curve& c);
bool is_two_sided(const SurfaceComplex& S, const Curve& c);  // closed curves only

// Structural and positional validation: consistent chaining, t in (0,1),
// distinct t per edge within the listed curves, anchors only at the ends of
// arcs, interior points on interior edges. Throws with a witness message.
void validate_curves(const SurfaceComplex& S, std::span<const Curve> curves);

// Additionally require the curves pairwise disjoint and each closed member
// two-sided (the cut-system family shape).
void validate_family(const SurfaceComplex& S, std::span<const Curve> curves);

// Remove bigons the curve makes with the 1-skeleton (consecutive points on
// the same edge with a same-polygon segment between them and no blocking
// point of the curve in between). Returns number of bigons removed. Closed
// curves may not reduce to nothing (throws if they would).
int reduce_against_skeleton(const SurfaceComplex& S, Curve& c);

// Canonical representative string of a skeleton-reduced curve: the cyclic
// (or linear) sequence of (edge, entering occurrence) records, minimized
// over rotation (closed) and reversal. Chart-dependent but stable.
std::string curve_key(const SurfaceComplex& S, const Curve& c);

// Per-edge sorted occupancy of points of the given curves.
struct EdgePoint {
  Rat t;
  int curve = -1, pt = -1;
};
std::vector<std::vector<EdgePoint>> edge_occupancy(const SurfaceComplex& S,
                                                   std::span<const Curve> curves);

// Re-space every point so that the m points of an edge sit at k/(m+1),
// preserving order. Apply to all curves living on the surface at once.
void renormalize_positions(const SurfaceComplex& S, std::span<Curve*> curves);

// parity of the left/right transport flip accumulated before segment k
std::vector<int> side_flips(const SurfaceComplex& S, const Curve& c);

// Push-off of a two-sided closed curve to the given side (0 = local left of
// segment 0 in its polygon, transported along the curve). `ambient` lists
// every curve whose points constrain the free space (include c itself).
Curve parallel_copy(const SurfaceComplex& S, const Curve& c, int side,
                    std::span<const Curve> ambient);

// A slide band: runs from a point on one curve to a point on another.
// The attachment sits on segment `chord` of its curve, on local side `side`
// of that segment's direction (in the segment polygon's boundary order).
// `pts` lists the edge crossings of the band between the two attachments
// (possibly empty when both attach inside one polygon).
struct BandAttach {
  int curve = -1;
  int chord = -1;
  int side = 0;
};
struct Band {
  BandAttach from, to;
  std::vector<CurvePoint> pts;
};

// Replace family[i] by its band sum over family[j] along the band. The band
// must attach from curve i to curve j (i != j), stay interior-disjoint from
// the whole family, and produce a simple curve disjoint from the rest;
// violations throw. `others` holds curves of other families whose points
// share edges (kept clear of new points, but crossings with them may change).
std::vector<Curve> slide(const SurfaceComplex& S, std::vector<Curve> family,
                         int i, int j, const Band& band,
                         std::span<const Curve> others = {});

// Band sum primitive on explicit curves: reroute `moving` over `target`.
// `ambient` constrains free positions; the result must not cross any curve in
// `must_avoid` (pass the family minus the moving member).
Curve band_sum(const SurfaceComplex& S, const Curve& moving, const Curve& target,
               const Band& band, std::span<const Curve> ambient,
               std::span<const Curve> must_avoid = {});

// Both lifts of a two-sided closed curve to the orientation double cover,
// exchanged by the deck transformation.
std::array<Curve, 2> lift_curve(const CoverResult& cov, const SurfaceComplex& base,
                                const Curve& c);

// Isotope both curves to minimal position by innermost-bigon removal; returns
// the final crossing count.
struct MinimalPositionResult {
  Curve a, b;
  int crossings = 0;
  int bigons_removed = 0;
};
MinimalPositionResult minimal_position(const SurfaceComplex& S, Curve a, Curve b);

// Family version: removes empty bigons between members (cutting along the
// whole family, so a found bigon contains no third curve) until none remain.
// Mutates the curves in place; returns the number of bigons removed.
int family_minimal_position(const SurfaceComplex& S, std::vector<Curve>& fam);

}  // namespace trisect
