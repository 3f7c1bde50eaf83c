#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trisect {

// A compact 2-complex: polygons with edges glued in pairs.
//
// Each polygon is a cyclic word of directed edge labels. A label that appears
// twice (in either direction, in one polygon or two) is an interior edge; a
// label that appears once is a boundary edge. The gluing of an interior edge
// is "reversing" when its two occurrences traverse the edge in the same
// direction (the `a ... a` pattern); such gluings flip local orientation.
//
// Everything downstream (curves, diagrams, covers) measures positions along
// an edge by a parameter t in (0,1) taken along the edge's reference
// direction, which is the direction of its first occurrence.

struct SideRef {
  int edge = -1;
  int sign = +1;  // +1: traversed along the stored label direction
};

struct Occ {
  int poly = -1;
  int side = -1;
  friend bool operator==(const Occ&, const Occ&) = default;
};

struct EdgeInfo {
  std::string name;
  Occ occ[2];
  int nocc = 0;          // 1 = boundary edge, 2 = interior
  bool reversing = false;  // interior only: both occurrences run the same way
  bool boundary() const { return nocc == 1; }
};

// One segment of a boundary circle: an unglued side and the direction the
// circle traverses it (relative to the side's own direction in its polygon).
struct BoundaryStep {
  Occ occ;
  bool forward = true;
  int edge = -1;
};

// A closed walk recorded as the sequence of interior edges it crosses;
// enough to evaluate the orientation character.
struct LoopWord {
  std::vector<int> edges;
};

class SurfaceComplex {
 public:
  // polygon words; entries reference edges_
  std::vector<std::vector<SideRef>> polys;
  std::vector<EdgeInfo> edges;

  // Build from labeled words, e.g. {{"a","b","-a","-b"}}. A leading '-'
  // inverts the direction. Throws std::runtime_error on malformed input
  // (label used more than twice, empty polygon).
  static SurfaceComplex build(const std::vector<std::vector<std::string>>& words);

  // Build from explicit structure; edge ids in `polys` index `edge_names`.
  static SurfaceComplex from_structure(std::vector<std::vector<SideRef>> polys,
                                       std::vector<std::string> edge_names);

  int num_polys() const { return static_cast<int>(polys.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int sides(int p) const { return static_cast<int>(polys[p].size()); }

  int edge_id(const std::string& name) const;  // -1 if absent

  // Occurrence bookkeeping. occ_index(o) is 0 or 1: which slot of its edge.
  int occ_index(const Occ& o) const;
  Occ partner(const Occ& o) const;  // other occurrence of an interior edge
  bool occ_fwd(const Occ& o) const;  // does o traverse its edge along reference?

  // corners: corner i of polygon p precedes side i; side i runs corner i ->
  // corner i+1. vertex_class maps corners to vertex ids.
  int corner_class(int p, int c) const { return corner_class_[p][c]; }
  int num_vertices() const { return num_vertices_; }

  int euler_characteristic() const { return chi_; }
  bool orientable() const { return orientable_; }
  bool connected() const { return connected_; }
  int boundary_count() const { return static_cast<int>(boundary_circles_.size()); }
  const std::vector<std::vector<BoundaryStep>>& boundary_circles() const { return boundary_circles_; }
  // 2*genus = 2 - chi - #boundary (integer; may be odd for odd non-orientable types)
  int genus2x() const { return 2 - chi_ - boundary_count(); }

  // Orientation character of a closed walk: parity of reversing gluings crossed.
  int w1(const LoopWord& w) const;

  // Canonical relabeling key: minimum over traversal seeds of a breadth-first
  // serialization. Equal keys iff the complexes are isomorphic as labeled-free
  // polygon complexes.
  std::string canonical_key() const;

  std::vector<std::vector<std::string>> words() const;

 private:
  std::vector<std::vector<int>> corner_class_;
  int num_vertices_ = 0;
  int chi_ = 0;
  bool orientable_ = true;
  bool connected_ = true;
  std::vector<std::vector<BoundaryStep>> boundary_circles_;

  void derive();
};

// Orientation double cover. The cover is connected iff the base is
// non-orientable; for orientable bases it is the disjoint union of two copies
// (flagged trivial).
struct CoverResult {
  SurfaceComplex cover;
  bool trivial = false;                      // base was orientable
  std::vector<std::array<int, 2>> edge_lift;  // base edge, sheet -> cover edge
  // cover reference direction of edge_lift[e][s] agrees with base reference?
  std::vector<std::array<bool, 2>> edge_lift_fwd;
  std::vector<std::array<int, 2>> poly_lift;  // base poly, sheet -> cover poly
  std::vector<int> deck_edge;                 // cover edge -> cover edge (sheet swap)
  std::vector<int> proj_edge;                 // cover edge -> base edge
  std::vector<int> cover_poly_base;           // cover poly -> base poly
  std::vector<int> cover_poly_sheet;          // cover poly -> sheet
};
CoverResult orientation_double_cover(const SurfaceComplex& s);

// Interior connected sum: opens a disk at corner 0 of polygon p1/p2 and
// splices the complexes along two fresh edges. Polygon and edge ids of s1 are
// preserved; those of s2 are appended (edge offset = s1.num_edges()+2,
// polygon offset = s1.num_polys()).
struct ConnectSumResult {
  SurfaceComplex sum;
  int edge_offset2 = 0;
  int poly_offset2 = 0;
};
ConnectSumResult connect_sum(const SurfaceComplex& s1, const SurfaceComplex& s2,
                             int p1, int p2);

}  // namespace trisect
