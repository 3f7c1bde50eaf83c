#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trisect/subdivision.hpp"

#include <stdexcept>
#include <vector>

using namespace trisect;

namespace {

Curve closed_curve(std::vector<CurvePoint> pts) {
  Curve c;
  c.closed = true;
  c.pts = std::move(pts);
  return c;
}

Curve arc_curve(std::vector<CurvePoint> pts) {
  Curve c;
  c.closed = false;
  c.pts = std::move(pts);
  return c;
}

SurfaceComplex torus() { return SurfaceComplex::build({{"a", "b", "-a", "-b"}}); }
SurfaceComplex klein() { return SurfaceComplex::build({{"a", "b", "a", "-b"}}); }
SurfaceComplex mobius() { return SurfaceComplex::build({{"a", "a", "d"}}); }
SurfaceComplex genus2() {
  return SurfaceComplex::build({{"a", "b", "-a", "-b", "c", "d", "-c", "-d"}});
}
SurfaceComplex nonor4() {
  return SurfaceComplex::build({{"a", "b", "a", "-b", "c", "d", "c", "-d"}});
}

}  // namespace

TEST_CASE("cutting along nothing relabels the surface") {
  auto T = torus();
  auto cr = cut_along(T, std::vector<Curve>{});
  CHECK(cr.cut.canonical_key() == T.canonical_key());
}

TEST_CASE("cutting the torus along its core leaves an annulus") {
  auto T = torus();
  Curve core = closed_curve({{T.edge_id("a"), Rat(1, 2), 0}});
  auto cr = cut_along(T, std::vector<Curve>{core});

  CHECK(cr.cut.connected());
  CHECK(cr.cut.euler_characteristic() == 0);
  CHECK(cr.cut.orientable());
  CHECK(cr.cut.boundary_count() == 2);

  REQUIRE(cr.cut_ts[0].size() == 1);
  CHECK(cr.cut_ts[0][0] == Rat(1, 2));
  CHECK(cr.cut_ts[1].empty());
  REQUIRE(cr.piece_edge[0].size() == 2);

  // a parallel curve transfers into the matching subinterval
  Curve par = closed_curve({{0, Rat(1, 4), 0}});
  Curve moved = transfer_curve(cr, T, par);
  REQUIRE(moved.pts.size() == 1);
  CHECK(moved.pts[0].edge == cr.piece_edge[0][0]);
  CHECK(moved.pts[0].t == Rat(1, 2));
  CHECK(moved.pts[0].leave == 0);

  Curve par2 = closed_curve({{0, Rat(3, 4), 1}});
  Curve moved2 = transfer_curve(cr, T, par2);
  CHECK(moved2.pts[0].edge == cr.piece_edge[0][1]);
  CHECK(moved2.pts[0].t == Rat(1, 2));
  CHECK(moved2.pts[0].leave == 1);

  // touching the cutting family or crossing it both fail
  CHECK_THROWS(transfer_curve(cr, T, closed_curve({{0, Rat(1, 2), 0}})));
  CHECK_THROWS(transfer_curve(cr, T, closed_curve({{1, Rat(1, 2), 0}})));
}

TEST_CASE("cutting the Klein bottle along the two-sided horizontal") {
  auto K = klein();
  CHECK(!K.orientable());
  Curve horiz = closed_curve({{K.edge_id("b"), Rat(1, 2), 0}});
  auto cr = cut_along(K, std::vector<Curve>{horiz});
  CHECK(cr.cut.connected());
  CHECK(cr.cut.euler_characteristic() == 0);
  CHECK(cr.cut.orientable());  // the annulus between the two crosscap walls
  CHECK(cr.cut.boundary_count() == 2);
}

TEST_CASE("cutting a Mobius band along its one-sided core") {
  auto M = mobius();
  CHECK(!M.orientable());
  CHECK(M.boundary_count() == 1);
  Curve core = closed_curve({{M.edge_id("a"), Rat(1, 2), 0}});
  auto cr = cut_along(M, std::vector<Curve>{core});
  CHECK(cr.cut.connected());
  CHECK(cr.cut.euler_characteristic() == 0);
  CHECK(cr.cut.orientable());
  CHECK(cr.cut.boundary_count() == 2);

  // the cut runs around the core twice: one new circle holds both copies
  int curve_born = 0;
  for (const auto& circle : cr.cut.boundary_circles()) {
    bool all = true;
    for (const auto& st : circle)
      if (!cr.edge_src[st.edge].from_curve()) all = false;
    if (all) {
      ++curve_born;
      CHECK(circle.size() == 2);
    }
  }
  CHECK(curve_born == 1);
}

TEST_CASE("cutting the genus-2 surface along a full disjoint system") {
  auto G = genus2();
  Curve c1 = closed_curve({{G.edge_id("a"), Rat(1, 2), 0}});
  Curve c2 = closed_curve({{G.edge_id("c"), Rat(1, 2), 0}});
  auto cr = cut_along(G, std::vector<Curve>{c1, c2});
  CHECK(cr.cut.connected());
  CHECK(cr.cut.euler_characteristic() == -2);
  CHECK(cr.cut.orientable());
  CHECK(cr.cut.boundary_count() == 4);
}

TEST_CASE("cutting the genus-4 non-orientable surface along two-sided walls") {
  auto N = nonor4();
  CHECK(!N.orientable());
  CHECK(N.euler_characteristic() == -2);
  Curve c1 = closed_curve({{N.edge_id("b"), Rat(1, 2), 0}});
  Curve c2 = closed_curve({{N.edge_id("d"), Rat(1, 2), 0}});
  auto cr = cut_along(N, std::vector<Curve>{c1, c2});
  CHECK(cr.cut.connected());
  CHECK(cr.cut.euler_characteristic() == -2);
  CHECK(cr.cut.orientable());
  CHECK(cr.cut.boundary_count() == 4);
}

TEST_CASE("capping the new boundary compresses the surface") {
  auto T = torus();
  Curve ta = closed_curve({{T.edge_id("a"), Rat(1, 2), 0}});
  auto res = compress_along(T, std::vector<Curve>{ta});
  CHECK(res.caps == 2);
  CHECK(res.surface.euler_characteristic() == 2);
  CHECK(res.surface.boundary_count() == 0);
  CHECK(res.surface.orientable());

  auto K = klein();
  Curve kh = closed_curve({{K.edge_id("b"), Rat(1, 2), 0}});
  auto kres = compress_along(K, std::vector<Curve>{kh});
  CHECK(kres.caps == 2);
  CHECK(kres.surface.euler_characteristic() == 2);
  CHECK(kres.surface.orientable());

  auto G = genus2();
  Curve ga = closed_curve({{G.edge_id("a"), Rat(1, 2), 0}});
  auto gres = compress_along(G, std::vector<Curve>{ga});
  CHECK(gres.caps == 2);
  CHECK(gres.surface.euler_characteristic() == 0);
  CHECK(gres.surface.orientable());
  CHECK(gres.surface.boundary_count() == 0);
  CHECK(gres.surface.genus2x() == 2);

  auto M = mobius();
  Curve mc = closed_curve({{M.edge_id("a"), Rat(1, 2), 0}});
  auto mres = compress_along(M, std::vector<Curve>{mc});
  CHECK(mres.caps == 1);
  CHECK(mres.surface.euler_characteristic() == 1);
  CHECK(mres.surface.boundary_count() == 1);
  CHECK(mres.surface.orientable());

  auto N = nonor4();
  Curve nb = closed_curve({{N.edge_id("b"), Rat(1, 2), 0}});
  Curve nd = closed_curve({{N.edge_id("d"), Rat(1, 2), 0}});
  auto nres = compress_along(N, std::vector<Curve>{nb, nd});
  CHECK(nres.caps == 4);
  CHECK(nres.surface.euler_characteristic() == 2);
  CHECK(nres.surface.orientable());
  CHECK(nres.surface.boundary_count() == 0);
}

TEST_CASE("complement regions") {
  auto T = torus();
  Curve ta = closed_curve({{T.edge_id("a"), Rat(1, 2), 0}});
  Curve tb = closed_curve({{T.edge_id("b"), Rat(1, 2), 0}});

  auto one = complement_regions(T, std::vector<Curve>{ta});
  REQUIRE(one.size() == 1);
  CHECK(one[0].chi == 0);
  CHECK(one[0].orientable);
  CHECK(one[0].boundary_circles == 2);

  // the dual pair meets once; the complement is a single square
  auto sq = complement_regions(T, std::vector<Curve>{ta, tb});
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].chi == 1);
  CHECK(sq[0].orientable);
  CHECK(sq[0].boundary_circles == 1);

  // an equator separates the sphere
  auto S2 = SurfaceComplex::build({{"a", "-a"}});
  CHECK(S2.euler_characteristic() == 2);
  Curve eq = closed_curve({{0, Rat(1, 2), 0}});
  auto halves = complement_regions(S2, std::vector<Curve>{eq});
  REQUIRE(halves.size() == 2);
  for (const auto& h : halves) {
    CHECK(h.chi == 1);
    CHECK(h.boundary_circles == 1);
  }
}

TEST_CASE("cutting along a spanning arc opens the annulus") {
  auto A = SurfaceComplex::build({{"a", "b", "-a", "c"}});
  CHECK(A.euler_characteristic() == 0);
  CHECK(A.boundary_count() == 2);
  Curve span_arc = arc_curve({{A.edge_id("b"), Rat(1, 2), 0},
                              {A.edge_id("a"), Rat(1, 2), 0},
                              {A.edge_id("c"), Rat(1, 2), 0}});
  auto cr = cut_along(A, std::vector<Curve>{span_arc});
  CHECK(cr.cut.connected());
  CHECK(cr.cut.euler_characteristic() == 1);
  CHECK(cr.cut.orientable());
  CHECK(cr.cut.boundary_count() == 1);

  // arcs may only be cut open at the actual boundary
  Curve bad = arc_curve({{A.edge_id("b"), Rat(1, 3), 0}, {A.edge_id("a"), Rat(1, 3), 1}});
  CHECK_THROWS(cut_along(A, std::vector<Curve>{bad}));
}

TEST_CASE("segments crossing a common segment must stay disjoint") {
  auto T = torus();
  Curve c1 = closed_curve({{0, Rat(1, 2), 0}});
  Curve c2 = closed_curve({{1, Rat(1, 2), 0}});
  Curve c3 = closed_curve({{0, Rat(1, 4), 0}, {1, Rat(1, 4), 0}});
  CHECK_THROWS(cut_along(T, std::vector<Curve>{c1, c2, c3}));
}

TEST_CASE("parallel curves are already in minimal position") {
  auto T = torus();
  Curve c1 = closed_curve({{0, Rat(1, 3), 0}});
  Curve c2 = closed_curve({{0, Rat(2, 3), 0}});
  auto mp = minimal_position(T, c1, c2);
  CHECK(mp.crossings == 0);
  CHECK(mp.bigons_removed == 0);
  CHECK(mp.a == c1);
  CHECK(mp.b == c2);
}

TEST_CASE("dual curves on the torus keep their single crossing") {
  auto T = torus();
  Curve ta = closed_curve({{0, Rat(1, 2), 0}});
  Curve tb = closed_curve({{1, Rat(1, 2), 0}});
  auto mp = minimal_position(T, ta, tb);
  CHECK(mp.crossings == 1);
  CHECK(mp.bigons_removed == 0);
}

TEST_CASE("a cancelling pair loses its bigon") {
  auto T = torus();
  int b = T.edge_id("b");
  Curve beta = closed_curve({{b, Rat(1, 2), 0}});
  Curve delta = closed_curve({{b, Rat(1, 3), 0}, {b, Rat(2, 3), 1}});
  REQUIRE(crossing_count(T, beta, delta) == 2);

  auto mp = minimal_position(T, beta, delta);
  CHECK(mp.crossings == 0);
  CHECK(mp.bigons_removed == 1);
  REQUIRE(mp.a.pts.size() == 1);
  CHECK(mp.a.pts[0].edge == b);
  CHECK(crossing_count(T, mp.a, mp.b) == 0);
  CHECK(curve_key(T, mp.a) == curve_key(T, beta));
  {
    std::vector<Curve> fam{mp.a, mp.b};
    validate_curves(T, fam);
  }

  // rerouting the other curve instead
  auto mp2 = minimal_position(T, delta, beta);
  CHECK(mp2.crossings == 0);
  CHECK(mp2.bigons_removed == 1);
  CHECK(mp2.a.pts.size() == 2);
  CHECK(curve_key(T, mp2.a) == curve_key(T, delta));
}

TEST_CASE("an essential single crossing survives") {
  auto K = klein();
  Curve core = closed_curve({{K.edge_id("a"), Rat(1, 2), 0}});
  Curve horiz = closed_curve({{K.edge_id("b"), Rat(1, 2), 0}});
  auto mp = minimal_position(K, core, horiz);
  CHECK(mp.crossings == 1);
  CHECK(mp.bigons_removed == 0);
}
