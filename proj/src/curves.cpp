#include "trisect/curves.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace trisect {

bool bpos_less(const BPos& a, const BPos& b) {
  if (a.side != b.side) return a.side < b.side;
  return a.s < b.s;
}

bool bpos_between(const BPos& a, const BPos& x, const BPos& b) {
  if (bpos_less(a, b)) return bpos_less(a, x) && bpos_less(x, b);
  return bpos_less(a, x) || bpos_less(x, b);
}

namespace {

int enter_slot(const Curve& c, int i) {
  if (!c.closed && i == static_cast<int>(c.pts.size()) - 1) return c.pts[i].leave;
  return c.pts[i].leave ^ 1;
}

void check_point(const SurfaceComplex& S, const Curve& c, int i) {
  const CurvePoint& p = c.pts[i];
  if (p.edge < 0 || p.edge >= S.num_edges())
    throw std::runtime_error("curve: point on unknown edge");
  const EdgeInfo& e = S.edges[p.edge];
  bool anchor = !c.closed && (i == 0 || i == static_cast<int>(c.pts.size()) - 1);
  if (p.leave < 0 || p.leave >= e.nocc)
    throw std::runtime_error("curve: bad occurrence slot on edge '" + e.name + "'");
  if (!anchor && e.nocc != 2)
    throw std::runtime_error("curve: interior point on boundary edge '" + e.name + "'");
  Rat zero(0), one(1);
  if (!(zero < p.t) || !(p.t < one))
    throw std::runtime_error("curve: point parameter outside (0,1) on edge '" + e.name + "'");
}

}  // namespace

Rat side_param(const SurfaceComplex& S, const CurvePoint& p, int which) {
  const Occ& o = S.edges[p.edge].occ[which];
  return S.occ_fwd(o) ? p.t : Rat(1) - p.t;
}

std::vector<ChordSpec> curve_chords(const SurfaceComplex& S, const Curve& c) {
  int m = static_cast<int>(c.pts.size());
  if (c.closed && m < 1) throw std::runtime_error("curve: empty closed curve");
  if (!c.closed && m < 2) throw std::runtime_error("curve: arc needs two endpoints");
  for (int i = 0; i < m; ++i) check_point(S, c, i);
  int K = c.closed ? m : m - 1;
  std::vector<ChordSpec> out;
  out.reserve(K);
  for (int k = 0; k < K; ++k) {
    int ia = k, ib = c.closed ? (k + 1) % m : k + 1;
    const CurvePoint& pa = c.pts[ia];
    const CurvePoint& pb = c.pts[ib];
    const Occ& oa = S.edges[pa.edge].occ[pa.leave];
    const Occ& ob = S.edges[pb.edge].occ[enter_slot(c, ib)];
    if (oa.poly != ob.poly)
      throw std::runtime_error("curve: consecutive points do not flank one polygon");
    ChordSpec ch;
    ch.poly = oa.poly;
    ch.a = BPos{oa.side, side_param(S, pa, pa.leave)};
    ch.b = BPos{ob.side, side_param(S, pb, enter_slot(c, ib))};
    ch.pt_a = ia;
    ch.pt_b = ib;
    out.push_back(ch);
  }
  return out;
}

bool chords_cross(const ChordSpec& x, const ChordSpec& y) {
  if (x.poly != y.poly) return false;
  int inside = 0;
  if (bpos_between(x.a, y.a, x.b)) ++inside;
  if (bpos_between(x.a, y.b, x.b)) ++inside;
  return inside == 1;
}

std::vector<CrossingRef> curve_crossings(const SurfaceComplex& S,
                                         std::span<const Curve> curves) {
  std::vector<std::vector<ChordSpec>> chords;
  chords.reserve(curves.size());
  for (const auto& c : curves) chords.push_back(curve_chords(S, c));
  std::vector<CrossingRef> out;
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = i; j < curves.size(); ++j)
      for (size_t ka = 0; ka < chords[i].size(); ++ka) {
        size_t kb0 = (i == j) ? ka + 1 : 0;
        for (size_t kb = kb0; kb < chords[j].size(); ++kb)
          if (chords_cross(chords[i][ka], chords[j][kb]))
            out.push_back(CrossingRef{static_cast<int>(i), static_cast<int>(ka),
                                      static_cast<int>(j), static_cast<int>(kb)});
      }
  return out;
}

int crossing_count(const SurfaceComplex& S, const Curve& a, const Curve& b) {
  auto ca = curve_chords(S, a);
  auto cb = curve_chords(S, b);
  int n = 0;
  for (const auto& x : ca)
    for (const auto& y : cb)
      if (chords_cross(x, y)) ++n;
  return n;
}

std::vector<std::vector<std::vector<std::pair<int, int>>>> crossing_order(
    const SurfaceComplex& S, std::span<const Curve> curves,
    std::span<const CrossingRef> crossings) {
  std::vector<std::vector<ChordSpec>> chords;
  chords.reserve(curves.size());
  for (const auto& c : curves) chords.push_back(curve_chords(S, c));
  std::vector<std::vector<std::vector<std::pair<int, int>>>> at(curves.size());
  for (size_t i = 0; i < curves.size(); ++i) at[i].resize(chords[i].size());
  for (size_t x = 0; x < crossings.size(); ++x) {
    const CrossingRef& cr = crossings[x];
    at[cr.ci][cr.ka].push_back({static_cast<int>(x), 0});
    at[cr.cj][cr.kb].push_back({static_cast<int>(x), 1});
  }
  // Where the other chord enters the span of this one: exactly one of its
  // endpoints lies strictly inside, and that endpoint orders the crossing.
  auto entry = [&](const ChordSpec& mine, int x, int leg) -> BPos {
    const CrossingRef& cr = crossings[x];
    const ChordSpec& other =
        leg == 0 ? chords[cr.cj][cr.kb] : chords[cr.ci][cr.ka];
    return bpos_between(mine.a, other.a, mine.b) ? other.a : other.b;
  };
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t k = 0; k < chords[i].size(); ++k) {
      const ChordSpec& mine = chords[i][k];
      std::sort(at[i][k].begin(), at[i][k].end(),
                [&](const std::pair<int, int>& u, const std::pair<int, int>& v) {
                  BPos eu = entry(mine, u.first, u.second);
                  BPos ev = entry(mine, v.first, v.second);
                  return bpos_between(mine.a, eu, ev);
                });
    }
  return at;
}

int w1_parity(const SurfaceComplex& S, const Curve& c) {
  int par = 0;
  int m = static_cast<int>(c.pts.size());
  for (int i = 0; i < m; ++i) {
    bool anchor = !c.closed && (i == 0 || i == m - 1);
    if (anchor) continue;  // anchors are not transverse crossings
    par ^= S.edges[c.pts[i].edge].reversing ? 1 : 0;
  }
  return par;
}

bool is_two_sided(const SurfaceComplex& S, const Curve& c) {
  if (!c.closed) throw std::runtime_error("is_two_sided: arc input");
  return w1_parity(S, c) == 0;
}

void validate_curves(const SurfaceComplex& S, std::span<const Curve> curves) {
  std::map<int, std::vector<Rat>> per_edge;
  for (const auto& c : curves) {
    auto chords = curve_chords(S, c);  // structural checks
    for (size_t k = 0; k < chords.size(); ++k)
      for (size_t l = k + 1; l < chords.size(); ++l)
        if (chords_cross(chords[k], chords[l]))
          throw std::runtime_error("curve: not simple (self-crossing segments)");
    for (const auto& p : c.pts) per_edge[p.edge].push_back(p.t);
  }
  for (auto& [e, ts] : per_edge) {
    std::sort(ts.begin(), ts.end());
    for (size_t i = 1; i < ts.size(); ++i)
      if (ts[i - 1] == ts[i])
        throw std::runtime_error("curve: coincident points on edge '" + S.edges[e].name + "'");
  }
}

void validate_family(const SurfaceComplex& S, std::span<const Curve> curves) {
  validate_curves(S, curves);
  for (size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].closed && w1_parity(S, curves[i]) != 0)
      throw std::runtime_error("family: member " + std::to_string(i) + " is one-sided");
    for (size_t j = i + 1; j < curves.size(); ++j)
      if (crossing_count(S, curves[i], curves[j]) != 0)
        throw std::runtime_error("family: members " + std::to_string(i) + " and " +
                                 std::to_string(j) + " intersect");
  }
}

int reduce_against_skeleton(const SurfaceComplex& S, Curve& c) {
  int removed = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    int m = static_cast<int>(c.pts.size());
    int K = c.closed ? m : m - 1;
    for (int k = 0; k < K && !changed; ++k) {
      int ia = k, ib = c.closed ? (k + 1) % m : k + 1;
      if (!c.closed && (ia == 0 || ib == m - 1)) continue;  // anchors stay
      const CurvePoint& pa = c.pts[ia];
      const CurvePoint& pb = c.pts[ib];
      if (pa.edge != pb.edge) continue;
      if (pb.leave != (pa.leave ^ 1)) continue;  // segment must return through the same side
      Rat lo = std::min(pa.t, pb.t), hi = std::max(pa.t, pb.t);
      bool blocked = false;
      for (int i = 0; i < m && !blocked; ++i) {
        if (i == ia || i == ib) continue;
        if (c.pts[i].edge == pa.edge && lo < c.pts[i].t && c.pts[i].t < hi) blocked = true;
      }
      if (blocked) continue;
      if (c.closed && m == 2) throw std::runtime_error("reduce: curve is nullhomotopic");
      // erase the larger index first
      int hi_i = std::max(ia, ib), lo_i = std::min(ia, ib);
      c.pts.erase(c.pts.begin() + hi_i);
      c.pts.erase(c.pts.begin() + lo_i);
      if (c.closed && c.pts.empty()) throw std::runtime_error("reduce: curve is nullhomotopic");
      ++removed;
      changed = true;
    }
  }
  curve_chords(S, c);  // re-check chaining
  return removed;
}

std::string curve_key(const SurfaceComplex& S, const Curve& c) {
  curve_chords(S, c);  // reject curves that do not chain up
  // serialize the segment itinerary: each segment as the pair of
  // (edge, occurrence) records it connects
  struct Tok {
    int ea, sa, eb, sb;
  };
  std::vector<Tok> toks;
  int m = static_cast<int>(c.pts.size());
  int K = c.closed ? m : m - 1;
  for (int k = 0; k < K; ++k) {
    int ia = k, ib = c.closed ? (k + 1) % m : k + 1;
    toks.push_back(Tok{c.pts[ia].edge, c.pts[ia].leave, c.pts[ib].edge, enter_slot(c, ib)});
  }
  auto serialize = [&](bool rev, int rot) {
    std::ostringstream os;
    int n = static_cast<int>(toks.size());
    for (int k = 0; k < n; ++k) {
      int i = rev ? (rot - k + 2 * n) % n : (rot + k) % n;
      const Tok& t = toks[i];
      if (rev)
        os << t.eb << ":" << t.sb << "-" << t.ea << ":" << t.sa << ";";
      else
        os << t.ea << ":" << t.sa << "-" << t.eb << ":" << t.sb << ";";
    }
    return os.str();
  };
  std::string best;
  if (c.closed) {
    for (int rot = 0; rot < K; ++rot)
      for (bool rev : {false, true}) {
        std::string s = serialize(rev, rot);
        if (best.empty() || s < best) best = std::move(s);
      }
    return "c|" + best;
  }
  std::string f = serialize(false, 0);
  std::string r = serialize(true, K - 1);
  best = std::min(f, r);
  return "a|" + best;
}

std::vector<std::vector<EdgePoint>> edge_occupancy(const SurfaceComplex& S,
                                                   std::span<const Curve> curves) {
  std::vector<std::vector<EdgePoint>> occ(S.num_edges());
  for (size_t ci = 0; ci < curves.size(); ++ci)
    for (size_t pi = 0; pi < curves[ci].pts.size(); ++pi) {
      const CurvePoint& p = curves[ci].pts[pi];
      occ[p.edge].push_back(EdgePoint{p.t, static_cast<int>(ci), static_cast<int>(pi)});
    }
  for (auto& v : occ)
    std::sort(v.begin(), v.end(), [](const EdgePoint& a, const EdgePoint& b) { return a.t < b.t; });
  return occ;
}

void renormalize_positions(const SurfaceComplex& S, std::span<Curve*> curves) {
  std::vector<std::vector<EdgePoint>> occ(S.num_edges());
  for (size_t ci = 0; ci < curves.size(); ++ci)
    for (size_t pi = 0; pi < curves[ci]->pts.size(); ++pi) {
      const CurvePoint& p = curves[ci]->pts[pi];
      occ[p.edge].push_back(EdgePoint{p.t, static_cast<int>(ci), static_cast<int>(pi)});
    }
  for (int e = 0; e < S.num_edges(); ++e) {
    auto& v = occ[e];
    std::sort(v.begin(), v.end(), [](const EdgePoint& a, const EdgePoint& b) { return a.t < b.t; });
    std::int64_t den = static_cast<std::int64_t>(v.size()) + 1;
    for (size_t i = 0; i < v.size(); ++i)
      curves[v[i].curve]->pts[v[i].pt].t = Rat(static_cast<std::int64_t>(i) + 1, den);
  }
}

std::vector<int> side_flips(const SurfaceComplex& S, const Curve& c) {
  int m = static_cast<int>(c.pts.size());
  int K = c.closed ? m : m - 1;
  std::vector<int> flips(std::max(K, 1), 0);
  for (int k = 1; k < K; ++k)
    flips[k] = flips[k - 1] ^ (S.edges[c.pts[k].edge].reversing ? 1 : 0);
  return flips;
}

namespace {

// sorted free-position tracker used when placing push-off points
struct Occupancy {
  std::vector<std::vector<Rat>> ts;
  explicit Occupancy(const SurfaceComplex& S, std::span<const Curve> curves)
      : ts(S.num_edges()) {
    for (const auto& c : curves)
      for (const auto& p : c.pts) insert(p.edge, p.t);
  }
  void insert(int e, const Rat& t) {
    auto& v = ts[e];
    v.insert(std::upper_bound(v.begin(), v.end(), t), t);
  }
  // nearest occupied position (or interval bound) on the given side of t
  Rat neighbor(int e, const Rat& t, int dir) const {
    const auto& v = ts[e];
    if (dir > 0) {
      auto it = std::upper_bound(v.begin(), v.end(), t);
      return it == v.end() ? Rat(1) : *it;
    }
    auto it = std::lower_bound(v.begin(), v.end(), t);
    return it == v.begin() ? Rat(0) : *(it - 1);
  }
};

// Push a point path off itself: same edges and polygons, fresh positions a
// quarter-gap toward the transported side. `side` is measured at segment 0.
std::vector<CurvePoint> nudge_path(const SurfaceComplex& S,
                                   const std::vector<CurvePoint>& pts, int side,
                                   Occupancy& occ) {
  std::vector<CurvePoint> out;
  out.reserve(pts.size());
  int flip = 0;
  for (size_t k = 0; k < pts.size(); ++k) {
    if (k > 0) flip ^= S.edges[pts[k].edge].reversing ? 1 : 0;
    const CurvePoint& p = pts[k];
    const Occ& o = S.edges[p.edge].occ[p.leave];
    int sigma = side ^ flip;
    // local left of the crossing direction runs toward smaller side-parameter
    int dir = ((sigma == 0) == S.occ_fwd(o)) ? -1 : +1;
    Rat nb = occ.neighbor(p.edge, p.t, dir);
    Rat t2 = (p.t * Rat(3) + nb) / Rat(4);
    occ.insert(p.edge, t2);
    out.push_back(CurvePoint{p.edge, t2, p.leave});
  }
  return out;
}

}  // namespace

Curve parallel_copy(const SurfaceComplex& S, const Curve& c, int side,
                    std::span<const Curve> ambient) {
  if (!c.closed) throw std::runtime_error("parallel_copy: arc input");
  if (w1_parity(S, c) != 0) throw std::runtime_error("parallel_copy: one-sided curve");
  Occupancy occ(S, ambient);
  Curve out;
  out.closed = true;
  out.pts = nudge_path(S, c.pts, side, occ);
  return out;
}

Curve band_sum(const SurfaceComplex& S, const Curve& moving, const Curve& target,
               const Band& band, std::span<const Curve> ambient,
               std::span<const Curve> must_avoid) {
  if (!target.closed) throw std::runtime_error("band_sum: target must be a closed curve");
  if (w1_parity(S, target) != 0) throw std::runtime_error("band_sum: target is one-sided");
  int m = static_cast<int>(moving.pts.size());
  int mt = static_cast<int>(target.pts.size());
  int Km = moving.closed ? m : m - 1;
  if (band.from.chord < 0 || band.from.chord >= Km)
    throw std::runtime_error("band_sum: bad attachment segment on the moving curve");
  if (band.to.chord < 0 || band.to.chord >= mt)
    throw std::runtime_error("band_sum: bad attachment segment on the target curve");
  int k = band.from.chord;
  int l = band.to.chord;

  // The push-off of the target may be listed in either traversal direction,
  // and the return strand may hug either side of the band; which listings
  // admit a crossing-free chord realization depends on how the junction
  // segments swing past the attachments, so try them all.
  for (int loop_dir : {0, 1})
    for (int try_side : {0, 1}) {
      Occupancy occ(S, ambient);
      for (const auto& p : band.pts) occ.insert(p.edge, p.t);

      std::vector<CurvePoint> rotated(mt);
      if (loop_dir == 0) {
        for (int i = 0; i < mt; ++i) rotated[i] = target.pts[(l + 1 + i) % mt];
      } else {
        for (int i = 0; i < mt; ++i) {
          rotated[i] = target.pts[(l - i + mt) % mt];
          rotated[i].leave ^= 1;
        }
      }
      // side label transported across the first crossing; reversing the
      // traversal also reverses what "left" means
      int start_side = band.to.side ^ loop_dir ^ (S.edges[rotated[0].edge].reversing ? 1 : 0);
      std::vector<CurvePoint> loop = nudge_path(S, rotated, start_side, occ);

      std::vector<CurvePoint> back = nudge_path(S, band.pts, try_side, occ);
      std::reverse(back.begin(), back.end());
      for (auto& p : back) p.leave ^= 1;

      Curve cand;
      cand.closed = moving.closed;
      cand.pts.assign(moving.pts.begin(), moving.pts.begin() + k + 1);
      cand.pts.insert(cand.pts.end(), band.pts.begin(), band.pts.end());
      cand.pts.insert(cand.pts.end(), loop.begin(), loop.end());
      cand.pts.insert(cand.pts.end(), back.begin(), back.end());
      cand.pts.insert(cand.pts.end(), moving.pts.begin() + k + 1, moving.pts.end());

      try {
        validate_curves(S, std::span<const Curve>(&cand, 1));
        for (const auto& av : must_avoid)
          if (crossing_count(S, cand, av) != 0)
            throw std::runtime_error("band_sum: result crosses its family");
        return cand;
      } catch (const std::runtime_error&) {
        // next listing
      }
    }
  throw std::runtime_error("band_sum: band sum is not simple");
}

std::vector<Curve> slide(const SurfaceComplex& S, std::vector<Curve> family,
                         int i, int j, const Band& band,
                         std::span<const Curve> others) {
  int n = static_cast<int>(family.size());
  if (i < 0 || i >= n || j < 0 || j >= n || i == j)
    throw std::runtime_error("slide: bad member indices");

  // the band's own segments must stay clear of the family
  if (!band.pts.empty()) {
    Curve probe;
    probe.closed = false;
    probe.pts = band.pts;
    if (band.pts.size() == 1) {
      probe.pts.push_back(band.pts[0]);  // degenerate: nothing to check
    } else {
      auto pchords = curve_chords(S, probe);
      for (int f = 0; f < n; ++f) {
        auto fchords = curve_chords(S, family[f]);
        for (const auto& x : pchords)
          for (const auto& y : fchords)
            if (chords_cross(x, y))
              throw std::runtime_error("slide: band crosses the family");
      }
    }
  }

  std::vector<Curve> ambient = family;
  ambient.insert(ambient.end(), others.begin(), others.end());
  std::vector<Curve> rest;
  for (int f = 0; f < n; ++f)
    if (f != i) rest.push_back(family[f]);
  Curve moved = band_sum(S, family[i], family[j], band, ambient, rest);

  std::vector<Curve> out = family;
  out[i] = std::move(moved);
  validate_family(S, out);
  return out;
}

std::array<Curve, 2> lift_curve(const CoverResult& cov, const SurfaceComplex& base,
                                const Curve& c) {
  if (!c.closed) throw std::runtime_error("lift_curve: arc input");
  if (w1_parity(base, c) != 0) throw std::runtime_error("lift_curve: one-sided curve");
  int m = static_cast<int>(c.pts.size());

  auto lift_slot = [&](const Occ& o, int sheet) {
    // cover edge holding the lift of base occurrence o seen from `sheet`
    int e = base.polys[o.poly][o.side].edge;
    int r = base.edges[e].reversing ? 1 : 0;
    int idx = (base.occ_index(o) == 0) ? sheet : (sheet ^ r);
    return cov.edge_lift[e][idx];
  };

  auto one_lift = [&](int sheet0) {
    Curve out;
    out.closed = true;
    out.pts.reserve(m);
    // sheet of the segment arriving at point k
    int sheet = sheet0;
    for (int k = 0; k < m; ++k) {
      const CurvePoint& p = c.pts[k];
      const EdgeInfo& e = base.edges[p.edge];
      const Occ& oin = e.occ[p.leave ^ 1];
      int le = lift_slot(oin, sheet);
      int slot_in_lift = (cov.edge_lift[p.edge][0] == le) ? 0 : 1;
      Rat t2 = cov.edge_lift_fwd[p.edge][slot_in_lift] ? p.t : Rat(1) - p.t;
      int sheet_out = sheet ^ (e.reversing ? 1 : 0);
      // occurrence slot (in the cover edge) of the outgoing polygon
      const Occ& oout = e.occ[p.leave];
      int cp = cov.poly_lift[oout.poly][sheet_out];
      int nside = base.sides(oout.poly);
      int cside = (sheet_out == 0) ? oout.side : (nside - 1 - oout.side);
      const EdgeInfo& ce = cov.cover.edges[le];
      int leave2 = (ce.occ[0] == Occ{cp, cside}) ? 0 : 1;
      if (!(ce.occ[leave2] == Occ{cp, cside}))
        throw std::runtime_error("lift_curve: inconsistent cover data");
      out.pts.push_back(CurvePoint{le, t2, leave2});
      sheet = sheet_out;
    }
    if (sheet != sheet0) throw std::runtime_error("lift_curve: monodromy is nontrivial");
    return out;
  };

  return {one_lift(0), one_lift(1)};
}

}  // namespace trisect
