#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trisect/surface.hpp"

#include <set>
#include <stdexcept>

using trisect::SurfaceComplex;
using trisect::LoopWord;
using trisect::Occ;

TEST_CASE("closed surfaces from one-polygon words") {
  auto sphere = SurfaceComplex::build({{"x", "-x"}});
  CHECK(sphere.euler_characteristic() == 2);
  CHECK(sphere.orientable());
  CHECK(sphere.connected());
  CHECK(sphere.boundary_count() == 0);
  CHECK(sphere.num_vertices() == 2);

  auto rp2 = SurfaceComplex::build({{"a", "a"}});
  CHECK(rp2.euler_characteristic() == 1);
  CHECK_FALSE(rp2.orientable());
  CHECK(rp2.boundary_count() == 0);
  CHECK(rp2.num_vertices() == 1);

  auto torus = SurfaceComplex::build({{"a", "b", "-a", "-b"}});
  CHECK(torus.euler_characteristic() == 0);
  CHECK(torus.orientable());
  CHECK(torus.num_vertices() == 1);

  auto klein = SurfaceComplex::build({{"a", "b", "a", "-b"}});
  CHECK(klein.euler_characteristic() == 0);
  CHECK_FALSE(klein.orientable());
  CHECK(klein.num_vertices() == 1);
  CHECK(klein.edges[klein.edge_id("a")].reversing);
  CHECK_FALSE(klein.edges[klein.edge_id("b")].reversing);
}

TEST_CASE("surfaces with boundary") {
  auto disk = SurfaceComplex::build({{"d"}});
  CHECK(disk.euler_characteristic() == 1);
  CHECK(disk.orientable());
  CHECK(disk.boundary_count() == 1);
  CHECK(disk.boundary_circles()[0].size() == 1);

  auto annulus = SurfaceComplex::build({{"u", "d", "-u", "e"}});
  CHECK(annulus.euler_characteristic() == 0);
  CHECK(annulus.orientable());
  CHECK(annulus.boundary_count() == 2);
  CHECK(annulus.num_vertices() == 2);

  auto mobius = SurfaceComplex::build({{"a", "a", "d"}});
  CHECK(mobius.euler_characteristic() == 0);
  CHECK_FALSE(mobius.orientable());
  CHECK(mobius.boundary_count() == 1);
  CHECK(mobius.genus2x() == 1);

  // N3 minus a disk
  auto n3d = SurfaceComplex::build({{"a", "a", "b", "b", "c", "c", "d"}});
  CHECK(n3d.euler_characteristic() == -2);
  CHECK_FALSE(n3d.orientable());
  CHECK(n3d.boundary_count() == 1);
  CHECK(n3d.num_vertices() == 1);
  CHECK(n3d.genus2x() == 3);
}

TEST_CASE("two-polygon sphere and disconnected complexes") {
  auto sphere2 = SurfaceComplex::build({{"a", "b"}, {"-b", "-a"}});
  CHECK(sphere2.euler_characteristic() == 2);
  CHECK(sphere2.orientable());
  CHECK(sphere2.connected());
  CHECK(sphere2.num_vertices() == 2);

  auto two = SurfaceComplex::build({{"a", "a"}, {"b", "b"}});
  CHECK_FALSE(two.connected());
  CHECK(two.euler_characteristic() == 2);
  CHECK_FALSE(two.orientable());
}

TEST_CASE("malformed words are rejected") {
  CHECK_THROWS_AS(SurfaceComplex::build({{"a", "a", "a"}}), std::runtime_error);
  CHECK_THROWS_AS(SurfaceComplex::build({{}}), std::runtime_error);
  CHECK_THROWS_AS(SurfaceComplex::build({{"-"}}), std::runtime_error);
}

TEST_CASE("occurrence bookkeeping") {
  auto klein = SurfaceComplex::build({{"a", "b", "a", "-b"}});
  int a = klein.edge_id("a");
  Occ o0 = klein.edges[a].occ[0];
  Occ o1 = klein.edges[a].occ[1];
  CHECK(klein.occ_index(o0) == 0);
  CHECK(klein.occ_index(o1) == 1);
  CHECK(klein.partner(o0) == o1);
  CHECK(klein.partner(o1) == o0);
  CHECK(klein.occ_fwd(o0));
  CHECK(klein.occ_fwd(o1));  // same sign: second copy also runs along reference
  int b = klein.edge_id("b");
  CHECK(klein.occ_fwd(klein.edges[b].occ[0]));
  CHECK_FALSE(klein.occ_fwd(klein.edges[b].occ[1]));
}

TEST_CASE("orientation character of walks") {
  auto klein = SurfaceComplex::build({{"a", "b", "a", "-b"}});
  int a = klein.edge_id("a");
  int b = klein.edge_id("b");
  CHECK(klein.w1(LoopWord{{a}}) == 1);
  CHECK(klein.w1(LoopWord{{b}}) == 0);
  CHECK(klein.w1(LoopWord{{a, a}}) == 0);
  CHECK(klein.w1(LoopWord{{a, b, a}}) == 0);
  auto torus = SurfaceComplex::build({{"a", "b", "-a", "-b"}});
  CHECK(torus.w1(LoopWord{{0, 1}}) == 0);
}

TEST_CASE("canonical key ignores labels, rotation, and reading direction") {
  auto k1 = SurfaceComplex::build({{"a", "b", "-a", "-b"}}).canonical_key();
  auto k2 = SurfaceComplex::build({{"p", "q", "-p", "-q"}}).canonical_key();
  auto k3 = SurfaceComplex::build({{"b", "-a", "-b", "a"}}).canonical_key();
  auto k4 = SurfaceComplex::build({{"b", "a", "-b", "-a"}}).canonical_key();  // reversed word
  CHECK(k1 == k2);
  CHECK(k1 == k3);
  CHECK(k1 == k4);
  auto klein = SurfaceComplex::build({{"a", "b", "a", "-b"}}).canonical_key();
  CHECK(k1 != klein);

  auto d1 = SurfaceComplex::build({{"d"}}).canonical_key();
  auto d2 = SurfaceComplex::build({{"e"}}).canonical_key();
  CHECK(d1 == d2);
  auto ann = SurfaceComplex::build({{"u", "d", "-u", "e"}}).canonical_key();
  auto mob = SurfaceComplex::build({{"a", "a", "d"}}).canonical_key();
  CHECK(ann != mob);

  auto pair1 = SurfaceComplex::build({{"a", "a"}, {"c", "c"}}).canonical_key();
  auto pair2 = SurfaceComplex::build({{"p", "p"}, {"q", "q"}}).canonical_key();
  CHECK(pair1 == pair2);
  CHECK(pair1 != SurfaceComplex::build({{"a", "a"}}).canonical_key());

  // multi-polygon relabeling with polygons listed in a different order
  auto m1 = SurfaceComplex::build({{"a", "b"}, {"-b", "-a"}}).canonical_key();
  auto m2 = SurfaceComplex::build({{"-q", "-p"}, {"p", "q"}}).canonical_key();
  CHECK(m1 == m2);
}

TEST_CASE("orientation double cover") {
  auto rp2 = SurfaceComplex::build({{"a", "a"}});
  auto c1 = trisect::orientation_double_cover(rp2);
  CHECK_FALSE(c1.trivial);
  CHECK(c1.cover.connected());
  CHECK(c1.cover.orientable());
  CHECK(c1.cover.euler_characteristic() == 2);  // sphere

  auto klein = SurfaceComplex::build({{"a", "b", "a", "-b"}});
  auto c2 = trisect::orientation_double_cover(klein);
  CHECK(c2.cover.connected());
  CHECK(c2.cover.orientable());
  CHECK(c2.cover.euler_characteristic() == 0);  // torus
  CHECK(c2.cover.boundary_count() == 0);

  auto mobius = SurfaceComplex::build({{"a", "a", "d"}});
  auto c3 = trisect::orientation_double_cover(mobius);
  CHECK(c3.cover.connected());
  CHECK(c3.cover.orientable());
  CHECK(c3.cover.euler_characteristic() == 0);  // annulus
  CHECK(c3.cover.boundary_count() == 2);

  auto torus = SurfaceComplex::build({{"a", "b", "-a", "-b"}});
  auto c4 = trisect::orientation_double_cover(torus);
  CHECK(c4.trivial);
  CHECK_FALSE(c4.cover.connected());
  CHECK(c4.cover.euler_characteristic() == 0);
  CHECK(c4.cover.orientable());

  // deck involution is a fixed-point-free pairing compatible with projection
  for (int e = 0; e < c2.cover.num_edges(); ++e) {
    CHECK(c2.deck_edge[c2.deck_edge[e]] == e);
    CHECK(c2.deck_edge[e] != e);
    CHECK(c2.proj_edge[c2.deck_edge[e]] == c2.proj_edge[e]);
  }
  for (int e = 0; e < klein.num_edges(); ++e) {
    CHECK(c2.proj_edge[c2.edge_lift[e][0]] == e);
    CHECK(c2.proj_edge[c2.edge_lift[e][1]] == e);
    CHECK(c2.deck_edge[c2.edge_lift[e][0]] == c2.edge_lift[e][1]);
  }
  for (int p = 0; p < klein.num_polys(); ++p) {
    CHECK(c2.cover_poly_base[c2.poly_lift[p][0]] == p);
    CHECK(c2.cover_poly_base[c2.poly_lift[p][1]] == p);
    CHECK(c2.cover_poly_sheet[c2.poly_lift[p][0]] == 0);
    CHECK(c2.cover_poly_sheet[c2.poly_lift[p][1]] == 1);
    CHECK(c2.cover.sides(c2.poly_lift[p][0]) == klein.sides(p));
  }
}

TEST_CASE("connected sum") {
  auto s = SurfaceComplex::build({{"x", "-x"}});
  auto t = SurfaceComplex::build({{"a", "b", "-a", "-b"}});
  auto k = SurfaceComplex::build({{"a", "b", "a", "-b"}});
  auto rp = SurfaceComplex::build({{"a", "a"}});

  auto ss = trisect::connect_sum(s, s, 0, 0);
  CHECK(ss.sum.euler_characteristic() == 2);
  CHECK(ss.sum.orientable());
  CHECK(ss.sum.connected());
  CHECK(ss.edge_offset2 == s.num_edges() + 2);
  CHECK(ss.poly_offset2 == s.num_polys());

  auto tt = trisect::connect_sum(t, t, 0, 0);
  CHECK(tt.sum.euler_characteristic() == -2);
  CHECK(tt.sum.orientable());

  auto rr = trisect::connect_sum(rp, rp, 0, 0);
  CHECK(rr.sum.euler_characteristic() == 0);
  CHECK_FALSE(rr.sum.orientable());
  CHECK(rr.sum.boundary_count() == 0);

  auto kt = trisect::connect_sum(k, t, 0, 0);
  CHECK(kt.sum.euler_characteristic() == -2);
  CHECK_FALSE(kt.sum.orientable());

  auto st = trisect::connect_sum(s, t, 0, 0);
  CHECK(st.sum.euler_characteristic() == 0);
  CHECK(st.sum.orientable());
  CHECK(st.sum.num_vertices() == t.num_vertices() + s.num_vertices());
}

TEST_CASE("words round-trip through build") {
  std::vector<std::vector<std::string>> w = {{"a", "b", "a", "-b"}, {"c"}};
  auto s = SurfaceComplex::build(w);
  CHECK(s.words() == w);
  auto again = SurfaceComplex::build(s.words());
  CHECK(again.canonical_key() == s.canonical_key());
}
