#include "trisect/subdivision.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace trisect {
namespace {

// -------- per-polygon planar map ---------------------------------------
//
// Each polygon is overlaid with the chord segments that run through it and
// walked as a combinatorial map. Vertices are polygon corners, subdivision
// points on the sides and chord crossings; map edges carry their provenance.
// Dart 2*m runs u -> v of map edge m, dart 2*m+1 runs v -> u.

struct MEdge {
  int u = -1, v = -1;
  bool curve = false;
  int side = -1, sint = -1;             // boundary piece: side, s-interval
  int ci = -1, chord = -1, piece = -1;  // curve piece
};

struct PolyMap {
  std::vector<std::vector<int>> rot;  // vertex -> outgoing darts, ccw order
  std::vector<MEdge> medges;

  int add_vertex() {
    rot.emplace_back();
    return static_cast<int>(rot.size()) - 1;
  }
  int add_medge(const MEdge& m) {
    medges.push_back(m);
    return static_cast<int>(medges.size()) - 1;
  }
};

// Face orbits: the dart after d continues the face at the head of d, taking
// the rotation predecessor of d's twin there. Interior faces come out
// counterclockwise, the outer face clockwise.
std::vector<std::vector<int>> map_faces(const PolyMap& pm) {
  int nd = 2 * static_cast<int>(pm.medges.size());
  std::vector<int> vert(nd, -1), pos(nd, -1);
  for (int v = 0; v < static_cast<int>(pm.rot.size()); ++v)
    for (int i = 0; i < static_cast<int>(pm.rot[v].size()); ++i) {
      vert[pm.rot[v][i]] = v;
      pos[pm.rot[v][i]] = i;
    }
  for (int d = 0; d < nd; ++d)
    if (vert[d] < 0) throw std::logic_error("overlay: dart missing from rotation");
  std::vector<std::vector<int>> faces;
  std::vector<char> seen(nd, 0);
  for (int d0 = 0; d0 < nd; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> cyc;
    int d = d0;
    do {
      seen[d] = 1;
      cyc.push_back(d);
      int tw = d ^ 1;
      int v = vert[tw];
      int deg = static_cast<int>(pm.rot[v].size());
      d = pm.rot[v][(pos[tw] - 1 + deg) % deg];
    } while (d != d0);
    faces.push_back(std::move(cyc));
  }
  return faces;
}

std::string piece_label(int edge, int interval) {
  return "e" + std::to_string(edge) + "." + std::to_string(interval);
}

std::string chord_label(int ci, int chord, int piece, int side) {
  return "x" + std::to_string(ci) + "." + std::to_string(chord) + "." +
         std::to_string(piece) + (side ? "r" : "l");
}

struct Entry {
  std::string label;
  bool fwd = true;  // face traverses the new edge along its reference
  EdgeSrc src;
  int orig_occ = -1;  // boundary pieces: occurrence slot in the original
  int interval = -1;  // boundary pieces: t-interval index
};

struct LocalChord {
  int ci = -1, k = -1;  // chord k of curve ci
  ChordSpec spec;
};

}  // namespace

CutResult cut_along(const SurfaceComplex& S, std::span<const Curve> curves) {
  validate_curves(S, curves);

  std::vector<std::vector<ChordSpec>> chords(curves.size());
  int narcs = 0;
  for (size_t ci = 0; ci < curves.size(); ++ci) {
    chords[ci] = curve_chords(S, curves[ci]);
    if (!curves[ci].closed) {
      ++narcs;
      const auto& pts = curves[ci].pts;
      if (!S.edges[pts.front().edge].boundary() || !S.edges[pts.back().edge].boundary())
        throw std::runtime_error("cut_along: arc anchored on an interior edge");
    }
  }

  // split positions per original edge
  auto occ = edge_occupancy(S, curves);
  std::vector<std::vector<Rat>> cut_ts(S.num_edges());
  for (int e = 0; e < S.num_edges(); ++e)
    for (const auto& ep : occ[e]) cut_ts[e].push_back(ep.t);

  std::vector<std::vector<Entry>> faces_out;
  int ncross = 0;

  for (int p = 0; p < S.num_polys(); ++p) {
    int n = S.sides(p);
    PolyMap pm;

    // chords running through this polygon
    std::vector<LocalChord> loc;
    for (size_t ci = 0; ci < chords.size(); ++ci)
      for (size_t k = 0; k < chords[ci].size(); ++k)
        if (chords[ci][k].poly == p)
          loc.push_back({static_cast<int>(ci), static_cast<int>(k), chords[ci][k]});

    // crossings among them
    std::vector<std::vector<int>> crossers(loc.size());
    for (size_t i = 0; i < loc.size(); ++i)
      for (size_t j = i + 1; j < loc.size(); ++j)
        if (chords_cross(loc[i].spec, loc[j].spec)) {
          crossers[i].push_back(static_cast<int>(j));
          crossers[j].push_back(static_cast<int>(i));
        }
    for (size_t i = 0; i < loc.size(); ++i)
      for (size_t x = 0; x < crossers[i].size(); ++x)
        for (size_t y = x + 1; y < crossers[i].size(); ++y)
          if (chords_cross(loc[crossers[i][x]].spec, loc[crossers[i][y]].spec))
            throw std::runtime_error(
                "cut_along: segments crossing a common segment cross each other");

    // corners and side subdivision points
    std::vector<int> corner(n);
    for (int i = 0; i < n; ++i) corner[i] = pm.add_vertex();

    std::vector<std::vector<Rat>> side_s(n);   // ascending s per side
    std::vector<std::vector<int>> spv(n);      // their vertices
    for (int i = 0; i < n; ++i) {
      int e = S.polys[p][i].edge;
      bool fwd = S.occ_fwd({p, i});
      int m = static_cast<int>(cut_ts[e].size());
      for (int j = 0; j < m; ++j) {
        Rat t = cut_ts[e][fwd ? j : m - 1 - j];
        side_s[i].push_back(fwd ? t : Rat(1, 1) - t);
        spv[i].push_back(pm.add_vertex());
      }
    }

    // boundary pieces: side i splits into |points|+1 intervals
    std::vector<std::vector<int>> bm(n);
    for (int i = 0; i < n; ++i) {
      int m = static_cast<int>(spv[i].size());
      for (int j = 0; j <= m; ++j) {
        MEdge me;
        me.u = (j == 0) ? corner[i] : spv[i][j - 1];
        me.v = (j == m) ? corner[(i + 1) % n] : spv[i][j];
        me.side = i;
        me.sint = j;
        bm[i].push_back(pm.add_medge(me));
      }
    }

    auto sp_vertex = [&](const BPos& bp) {
      const auto& ss = side_s[bp.side];
      for (size_t j = 0; j < ss.size(); ++j)
        if (!(ss[j] < bp.s) && !(bp.s < ss[j])) return spv[bp.side][j];
      throw std::logic_error("overlay: chord endpoint is not a subdivision point");
    };

    // lay chord pieces; crossings become degree-4 vertices
    std::map<std::pair<int, int>, int> xvert;
    std::vector<int> sp_chord_dart;
    auto note_sp_dart = [&](int vtx, int dart) {
      if (vtx >= static_cast<int>(sp_chord_dart.size()))
        sp_chord_dart.resize(vtx + 1, -1);
      if (sp_chord_dart[vtx] != -1)
        throw std::logic_error("overlay: two chords at one subdivision point");
      sp_chord_dart[vtx] = dart;
    };
    // crossing vertex -> (local chord, outgoing dart ahead, outgoing dart back)
    std::map<int, std::vector<std::array<int, 3>>> xdarts;

    for (size_t gi = 0; gi < loc.size(); ++gi) {
      const ChordSpec& g = loc[gi].spec;
      auto xs = crossers[gi];
      std::sort(xs.begin(), xs.end(), [&](int x, int y) {
        const ChordSpec& cx = loc[x].spec;
        const ChordSpec& cy = loc[y].spec;
        BPos px = bpos_between(g.a, cx.a, g.b) ? cx.a : cx.b;
        BPos py = bpos_between(g.a, cy.a, g.b) ? cy.a : cy.b;
        return bpos_between(g.a, px, py);
      });

      std::vector<int> vseq;
      vseq.push_back(sp_vertex(g.a));
      for (int x : xs) {
        auto key = std::make_pair(std::min<int>(gi, x), std::max<int>(gi, x));
        auto it = xvert.find(key);
        if (it == xvert.end()) it = xvert.emplace(key, pm.add_vertex()).first;
        vseq.push_back(it->second);
      }
      vseq.push_back(sp_vertex(g.b));

      std::vector<int> pieces;
      for (size_t t = 0; t + 1 < vseq.size(); ++t) {
        MEdge me;
        me.u = vseq[t];
        me.v = vseq[t + 1];
        me.curve = true;
        me.ci = loc[gi].ci;
        me.chord = loc[gi].k;
        me.piece = static_cast<int>(t);
        pieces.push_back(pm.add_medge(me));
      }
      note_sp_dart(vseq.front(), 2 * pieces.front());
      note_sp_dart(vseq.back(), 2 * pieces.back() + 1);
      for (size_t t = 1; t + 1 < vseq.size(); ++t)
        xdarts[vseq[t]].push_back({static_cast<int>(gi), 2 * pieces[t],
                                   2 * pieces[t - 1] + 1});
    }

    // rotations: corners see their two incident boundary darts
    for (int i = 0; i < n; ++i) {
      int prev = (i - 1 + n) % n;
      pm.rot[corner[i]] = {2 * bm[i][0], 2 * bm[prev].back() + 1};
    }
    // side points: onward along the boundary, then the chord, then back
    for (int i = 0; i < n; ++i)
      for (size_t j = 0; j < spv[i].size(); ++j) {
        int vtx = spv[i][j];
        int d_fwd = 2 * bm[i][j + 1];
        int d_back = 2 * bm[i][j] + 1;
        int dc = vtx < static_cast<int>(sp_chord_dart.size()) ? sp_chord_dart[vtx] : -1;
        if (dc >= 0)
          pm.rot[vtx] = {d_fwd, dc, d_back};
        else
          pm.rot[vtx] = {d_fwd, d_back};
      }
    // crossings: the later chord enters between head and tail of the earlier
    // one according to which side it comes from
    for (auto& [vtx, ds] : xdarts) {
      if (ds.size() != 2) throw std::logic_error("overlay: bad crossing degree");
      const ChordSpec& A = loc[ds[0][0]].spec;
      const ChordSpec& B = loc[ds[1][0]].spec;
      bool rtl = bpos_between(A.a, B.a, A.b);
      if (rtl)
        pm.rot[vtx] = {ds[0][1], ds[1][1], ds[0][2], ds[1][2]};
      else
        pm.rot[vtx] = {ds[0][1], ds[1][2], ds[0][2], ds[1][1]};
    }

    // walk the faces; the clockwise orbit through the first boundary piece is
    // the outside of the polygon
    auto faces = map_faces(pm);
    int outer_dart = 2 * bm[0][0] + 1;
    size_t nboundary = 0;
    for (int i = 0; i < n; ++i) nboundary += bm[i].size();
    bool outer_seen = false;

    for (const auto& f : faces) {
      if (std::find(f.begin(), f.end(), outer_dart) != f.end()) {
        if (f.size() != nboundary)
          throw std::logic_error("overlay: outer walk does not close up");
        outer_seen = true;
        continue;
      }
      std::vector<Entry> word;
      for (int d : f) {
        const MEdge& me = pm.medges[d >> 1];
        bool dirv = (d & 1) == 0;  // runs u -> v
        Entry en;
        if (!me.curve) {
          int e = S.polys[p][me.side].edge;
          bool fwd = S.occ_fwd({p, me.side});
          int m = static_cast<int>(cut_ts[e].size());
          int k = fwd ? me.sint : m - me.sint;
          en.label = piece_label(e, k);
          en.fwd = (dirv == fwd);  // reference points toward increasing t
          en.src.orig = e;
          en.src.lo = (k == 0) ? Rat(0, 1) : cut_ts[e][k - 1];
          en.src.hi = (k == m) ? Rat(1, 1) : cut_ts[e][k];
          en.orig_occ = S.occ_index({p, me.side});
          en.interval = k;
        } else {
          en.label = chord_label(me.ci, me.chord, me.piece, dirv ? 0 : 1);
          en.fwd = dirv;  // reference runs along the chord on both sides
          en.src.curve = me.ci;
          en.src.chord = me.chord;
          en.src.piece = me.piece;
          en.src.side = dirv ? 0 : 1;
        }
        word.push_back(std::move(en));
      }
      faces_out.push_back(std::move(word));
    }
    if (!outer_seen) throw std::logic_error("overlay: lost the outer face");
    ncross += static_cast<int>(xvert.size());
  }

  // assemble the cut surface and the transfer tables
  CutResult out;
  out.cut_ts = cut_ts;
  std::vector<std::vector<std::string>> words;
  for (const auto& f : faces_out) {
    std::vector<std::string> w;
    for (const auto& en : f) w.push_back((en.fwd ? "" : "-") + en.label);
    words.push_back(std::move(w));
  }
  out.cut = SurfaceComplex::build(words);

  out.edge_src.resize(out.cut.num_edges());
  out.piece_edge.resize(S.num_edges());
  out.piece_slot.resize(S.num_edges());
  for (int e = 0; e < S.num_edges(); ++e) {
    out.piece_edge[e].assign(cut_ts[e].size() + 1, -1);
    out.piece_slot[e].assign(cut_ts[e].size() + 1, {-1, -1});
  }
  std::map<std::string, int> emitted;
  for (const auto& f : faces_out)
    for (const auto& en : f) {
      int id = out.cut.edge_id(en.label);
      if (id < 0) throw std::logic_error("overlay: emitted label lost");
      int slot = emitted[en.label]++;
      if (slot == 0) {
        out.edge_src[id] = en.src;
        out.edge_src[id].flipped = !en.fwd;  // occ0 defines the reference
      }
      if (en.orig_occ >= 0) {
        out.piece_edge[en.src.orig][en.interval] = id;
        out.piece_slot[en.src.orig][en.interval][en.orig_occ] = slot;
      }
    }

  // each cut circle or chain preserves chi; every transverse crossing and
  // every opened arc raises it by one
  int expect_chi = S.euler_characteristic() + narcs + ncross;
  if (out.cut.euler_characteristic() != expect_chi)
    throw std::logic_error("cut_along: cut surface has the wrong characteristic");
  return out;
}

Curve transfer_curve(const CutResult& cr, const SurfaceComplex& orig, const Curve& c) {
  Curve out;
  out.closed = c.closed;
  for (const auto& p : c.pts) {
    if (p.edge < 0 || p.edge >= static_cast<int>(cr.cut_ts.size()))
      throw std::runtime_error("transfer_curve: point off the original surface");
    const auto& ts = cr.cut_ts[p.edge];
    int k = 0;
    for (const auto& t : ts) {
      if (t == p.t)
        throw std::runtime_error("transfer_curve: curve touches the cutting family");
      if (t < p.t) ++k;
    }
    Rat lo = (k == 0) ? Rat(0, 1) : ts[k - 1];
    Rat hi = (k == static_cast<int>(ts.size())) ? Rat(1, 1) : ts[k];
    int id = cr.piece_edge[p.edge][k];
    int leave = cr.piece_slot[p.edge][k][p.leave];
    if (id < 0 || leave < 0)
      throw std::runtime_error("transfer_curve: piece has no such occurrence");
    Rat nt = (p.t - lo) / (hi - lo);
    if (cr.edge_src[id].flipped) nt = Rat(1, 1) - nt;
    out.pts.push_back({id, nt, leave});
  }
  std::vector<Curve> one{out};
  validate_curves(cr.cut, one);  // crossing the family breaks the chaining
  (void)orig;
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> par;
  explicit UnionFind(int n) : par(n) {
    for (int i = 0; i < n; ++i) par[i] = i;
  }
  int find(int x) {
    while (par[x] != x) x = par[x] = par[par[x]];
    return x;
  }
  void unite(int a, int b) { par[find(a)] = find(b); }
};

UnionFind components_of_cut(const SurfaceComplex& cut) {
  UnionFind uf(cut.num_polys());
  for (int e = 0; e < cut.num_edges(); ++e)
    if (!cut.edges[e].boundary())
      uf.unite(cut.edges[e].occ[0].poly, cut.edges[e].occ[1].poly);
  return uf;
}

}  // namespace

std::vector<RegionInfo> complement_regions(const SurfaceComplex& S,
                                           std::span<const Curve> curves) {
  CutResult cr = cut_along(S, curves);
  UnionFind uf = components_of_cut(cr.cut);
  std::map<int, std::vector<int>> groups;
  for (int p = 0; p < cr.cut.num_polys(); ++p) groups[uf.find(p)].push_back(p);

  auto all_words = cr.cut.words();
  std::vector<RegionInfo> out;
  for (auto& [root, polys] : groups) {
    std::vector<std::vector<std::string>> words;
    for (int p : polys) words.push_back(all_words[p]);
    SurfaceComplex piece = SurfaceComplex::build(words);
    RegionInfo ri;
    ri.chi = piece.euler_characteristic();
    ri.orientable = piece.orientable();
    ri.boundary_circles = piece.boundary_count();
    ri.polys = polys;
    out.push_back(std::move(ri));
  }
  std::sort(out.begin(), out.end(),
            [](const RegionInfo& a, const RegionInfo& b) { return a.polys[0] < b.polys[0]; });
  return out;
}

CompressResult compress_along(const SurfaceComplex& S, std::span<const Curve> curves) {
  for (const auto& c : curves)
    if (!c.closed) throw std::runtime_error("compress_along: curves must be closed");
  CompressResult res;
  res.cut = cut_along(S, curves);
  const SurfaceComplex& cut = res.cut.cut;

  auto words = cut.words();
  for (const auto& circle : cut.boundary_circles()) {
    bool curve_born = true;
    for (const auto& st : circle)
      if (!res.cut.edge_src[st.edge].from_curve()) {
        curve_born = false;
        break;
      }
    if (!curve_born) continue;
    // the cap repeats the circle walk; a cap side matches the direction of
    // the existing occurrence exactly when the walk runs the side forward
    std::vector<std::string> cap;
    for (const auto& st : circle) {
      bool plus = (cut.polys[st.occ.poly][st.occ.side].sign > 0) == st.forward;
      cap.push_back((plus ? "" : "-") + cut.edges[st.edge].name);
    }
    words.push_back(std::move(cap));
    ++res.caps;
  }
  res.surface = SurfaceComplex::build(words);
  if (res.surface.euler_characteristic() != cut.euler_characteristic() + res.caps)
    throw std::logic_error("compress_along: capping went wrong");
  // capping only appends polygons, so edge ids agree with the cut surface
  for (int e = 0; e < cut.num_edges(); ++e)
    if (res.surface.edge_id(cut.edges[e].name) != e)
      throw std::logic_error("compress_along: edge ids shifted");
  return res;
}

// -------- bigon removal -------------------------------------------------

namespace {

// nearest occupied parameter strictly beyond t in direction dir, else the wall
Rat wall_or_neighbor(const std::vector<Rat>& ts, const Rat& t, int dir) {
  if (dir < 0) {
    Rat best(0, 1);
    for (const auto& x : ts)
      if (x < t && best < x) best = x;
    return best;
  }
  Rat best(1, 1);
  for (const auto& x : ts)
    if (t < x && x < best) best = x;
  return best;
}

struct BigonStep {
  int ci = -1, chord = -1, piece = -1, side = -1;
  bool fwd = true;  // along the chord direction
};

// A complement region is a bigon when it is a disk whose boundary consists of
// curve pieces with exactly two provenance changes (the two crossings).
std::optional<std::vector<BigonStep>> find_bigon(const CutResult& cr) {
  const SurfaceComplex& cut = cr.cut;
  UnionFind uf = components_of_cut(cut);

  std::map<int, int> comp_faces, comp_edges, comp_verts, comp_circles;
  for (int p = 0; p < cut.num_polys(); ++p) comp_faces[uf.find(p)]++;
  for (int e = 0; e < cut.num_edges(); ++e)
    comp_edges[uf.find(cut.edges[e].occ[0].poly)]++;
  std::vector<char> vseen(cut.num_vertices(), 0);
  for (int p = 0; p < cut.num_polys(); ++p)
    for (int c = 0; c < cut.sides(p); ++c) {
      int vid = cut.corner_class(p, c);
      if (!vseen[vid]) {
        vseen[vid] = 1;
        comp_verts[uf.find(p)]++;
      }
    }
  for (const auto& circle : cut.boundary_circles())
    comp_circles[uf.find(circle[0].occ.poly)]++;

  for (const auto& circle : cut.boundary_circles()) {
    std::vector<BigonStep> steps;
    bool curve_born = true;
    for (const auto& st : circle) {
      const EdgeSrc& src = cr.edge_src[st.edge];
      if (!src.from_curve()) {
        curve_born = false;
        break;
      }
      BigonStep bs;
      bs.ci = src.curve;
      bs.chord = src.chord;
      bs.piece = src.piece;
      bs.side = src.side;
      // along the curve direction, not the edge reference
      bs.fwd = (st.forward == cut.occ_fwd(st.occ)) != src.flipped;
      steps.push_back(bs);
    }
    if (!curve_born) continue;
    int L = static_cast<int>(steps.size());
    int transitions = 0;
    for (int i = 0; i < L; ++i)
      if (steps[i].ci != steps[(i - 1 + L) % L].ci) ++transitions;
    if (transitions != 2) continue;
    int root = uf.find(circle[0].occ.poly);
    int chi = comp_verts[root] - comp_edges[root] + comp_faces[root];
    if (chi != 1 || comp_circles[root] != 1) continue;
    return steps;
  }
  return std::nullopt;
}

int total_crossings(const SurfaceComplex& S, const std::vector<Curve>& fam) {
  int total = 0;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      total += crossing_count(S, fam[i], fam[j]);
  return total;
}

// Reroutes one side of the bigon across the other. The run of the
// lower-indexed curve is moved; the bigon is a complement region of the whole
// family, so it contains no third curve and only the moved pair's two
// crossings cancel.
void remove_bigon(const SurfaceComplex& S, std::vector<Curve>& fam,
                  std::vector<BigonStep> steps) {
  int L = static_cast<int>(steps.size());
  int u = steps[0].ci, v = -1;
  for (const auto& st : steps)
    if (st.ci != u) v = st.ci;
  if (v < 0) throw std::logic_error("minimal_position: bigon has one side");
  if (v < u) std::swap(u, v);

  int m_u = static_cast<int>(fam[u].pts.size());
  int m_v = static_cast<int>(fam[v].pts.size());

  // rotate so the run of the moved curve starts the list
  auto rotate_to_run = [&]() {
    for (int i = 0; i < L; ++i)
      if (steps[i].ci == u && steps[(i - 1 + L) % L].ci != u) {
        std::rotate(steps.begin(), steps.begin() + i, steps.end());
        return;
      }
    throw std::logic_error("minimal_position: bigon has no run boundary");
  };
  rotate_to_run();
  // orient the walk so that it follows the moved curve forward
  if (!steps[0].fwd) {
    std::reverse(steps.begin(), steps.end());
    for (auto& st : steps) st.fwd = !st.fwd;
    rotate_to_run();
  }

  int r = 0;
  while (r < L && steps[r].ci == u) ++r;
  for (int i = r; i < L; ++i)
    if (steps[i].ci != v) throw std::logic_error("minimal_position: torn run");
  for (int i = 0; i < r; ++i)
    if (!steps[i].fwd) throw std::logic_error("minimal_position: run direction flips");
  for (int i = 1; i < r; ++i)
    if (steps[i].chord != (steps[i - 1].chord + 1) % m_u)
      throw std::logic_error("minimal_position: run skips a segment");
  if (r - 1 > m_u) throw std::logic_error("minimal_position: run overruns the curve");

  int cc = crossing_count(S, fam[u], fam[v]);
  int before = total_crossings(S, fam);

  // points of the moved curve interior to its run are dropped
  int ka1 = steps[0].chord;
  int kept_count = m_u - (r - 1);
  int kept_start = (ka1 + r) % m_u;

  // the stationary run is walked from the far crossing back to the near one
  bool g = steps[r].fwd;
  for (int i = r; i < L; ++i)
    if (steps[i].fwd != g) throw std::logic_error("minimal_position: run direction flips");

  // occupancy for fresh positions: surviving points only
  std::map<int, std::vector<Rat>> occupied;
  for (int i = 0; i < kept_count; ++i) {
    const auto& p = fam[u].pts[(kept_start + i) % m_u];
    occupied[p.edge].push_back(p.t);
  }
  for (int w = 0; w < static_cast<int>(fam.size()); ++w) {
    if (w == u) continue;
    for (const auto& p : fam[w].pts) occupied[p.edge].push_back(p.t);
  }

  // replacement points: copies of the stationary run's points, pushed off
  // away from the collapsed bigon, in the direction the rerouted curve travels
  std::vector<CurvePoint> copies;
  for (int t = L - 2; t >= r; --t) {
    int q = g ? (steps[t].chord + 1) % m_v : steps[t].chord;
    const CurvePoint& bp = fam[v].pts[q];
    int push = (g ? steps[t + 1].side : steps[t].side) ^ 1;
    Occ o = S.edges[bp.edge].occ[bp.leave];
    int dir = ((push == 0) == S.occ_fwd(o)) ? -1 : +1;
    Rat nb = wall_or_neighbor(occupied[bp.edge], bp.t, dir);
    Rat nt = (bp.t * Rat(3, 1) + nb) / Rat(4, 1);
    occupied[bp.edge].push_back(nt);
    CurvePoint np;
    np.edge = bp.edge;
    np.t = nt;
    np.leave = g ? (bp.leave ^ 1) : bp.leave;
    copies.push_back(np);
  }

  Curve na;
  na.closed = true;
  for (int i = 0; i < kept_count; ++i)
    na.pts.push_back(fam[u].pts[(kept_start + i) % m_u]);
  for (const auto& p : copies) na.pts.push_back(p);
  if (na.pts.empty())
    throw std::runtime_error("minimal_position: curve shrinks to nothing");

  std::vector<Curve> next = fam;
  next[u] = std::move(na);
  validate_curves(S, next);
  if (crossing_count(S, next[u], next[v]) != cc - 2)
    throw std::logic_error("minimal_position: removal did not cancel");
  if (total_crossings(S, next) != before - 2)
    throw std::logic_error("minimal_position: removal disturbed another pair");
  fam = std::move(next);
  std::vector<Curve*> ptrs;
  for (auto& c : fam) ptrs.push_back(&c);
  renormalize_positions(S, ptrs);
}

}  // namespace

int family_minimal_position(const SurfaceComplex& S, std::vector<Curve>& fam) {
  for (const auto& c : fam)
    if (!c.closed)
      throw std::runtime_error("minimal_position: closed curves only");
  validate_curves(S, fam);
  int removed = 0;
  for (;;) {
    if (total_crossings(S, fam) == 0) break;
    CutResult cr = cut_along(S, fam);
    auto bg = find_bigon(cr);
    if (!bg) break;
    remove_bigon(S, fam, std::move(*bg));
    ++removed;
  }
  return removed;
}

MinimalPositionResult minimal_position(const SurfaceComplex& S, Curve a, Curve b) {
  if (!a.closed || !b.closed)
    throw std::runtime_error("minimal_position: closed curves only");
  std::vector<Curve> fam{std::move(a), std::move(b)};
  int removed = family_minimal_position(S, fam);

  MinimalPositionResult res;
  res.crossings = crossing_count(S, fam[0], fam[1]);
  res.bigons_removed = removed;
  res.a = std::move(fam[0]);
  res.b = std::move(fam[1]);
  return res;
}

}  // namespace trisect
