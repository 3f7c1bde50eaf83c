#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "trisect/curves.hpp"
#include "trisect/pairmap.hpp"
#include "trisect/surface.hpp"

using namespace trisect;

namespace {

Curve one_point(const SurfaceComplex& S, const std::string& edge, Rat t) {
  return Curve{true, {{S.edge_id(edge), t, 0}}};
}

}  // namespace

TEST_CASE("standard pairs are valid transverse configurations") {
  for (auto [g, k, ori] : std::vector<std::tuple<int, int, bool>>{
           {1, 0, true},
           {1, 1, true},
           {2, 1, true},
           {1, 1, false},
           {2, 1, false},
           {2, 2, false},
           {3, 1, false}}) {
    StandardPair sp = standard_pair(g, k, ori);
    CHECK(sp.surface.euler_characteristic() == 2 - 2 * g);
    CHECK(sp.surface.orientable() == ori);
    CHECK(static_cast<int>(sp.alpha.size()) == g);
    CHECK(static_cast<int>(sp.beta.size()) == g);
    validate_family(sp.surface, sp.alpha);
    validate_family(sp.surface, sp.beta);
    std::vector<Curve> cat = sp.alpha;
    cat.insert(cat.end(), sp.beta.begin(), sp.beta.end());
    CHECK(static_cast<int>(curve_crossings(sp.surface, cat).size()) == g - k);
  }
  CHECK_THROWS_AS(standard_pair(2, 3, true), std::invalid_argument);
  CHECK_THROWS_AS(standard_pair(2, 0, false), std::invalid_argument);
}

TEST_CASE("key ignores labels, rotation, and reflection") {
  std::string std10 = standard_pair_key(1, 0, true);

  SurfaceComplex t1 = SurfaceComplex::build({{"x", "y", "-x", "-y"}});
  CHECK(pair_key(t1, {{one_point(t1, "y", Rat(1, 2))}},
                 {{one_point(t1, "x", Rat(1, 2))}}) == std10);

  // rotated word
  SurfaceComplex t2 = SurfaceComplex::build({{"y", "-x", "-y", "x"}});
  CHECK(pair_key(t2, {{one_point(t2, "y", Rat(1, 2))}},
                 {{one_point(t2, "x", Rat(1, 2))}}) == std10);

  // reflected word
  SurfaceComplex t3 = SurfaceComplex::build({{"y", "x", "-y", "-x"}});
  CHECK(pair_key(t3, {{one_point(t3, "x", Rat(1, 2))}},
                 {{one_point(t3, "y", Rat(1, 2))}}) == std10);
}

TEST_CASE("key is symmetric in the two families for the dual block") {
  StandardPair sp = standard_pair(1, 0, true);
  CHECK(pair_key(sp.surface, sp.beta, sp.alpha) ==
        pair_key(sp.surface, sp.alpha, sp.beta));
}

TEST_CASE("parallel pair keys ignore which side the copy took") {
  StandardPair sp = standard_pair(1, 1, true);
  std::vector<Curve> other_side{one_point(sp.surface, "q0", Rat(3, 4))};
  CHECK(pair_key(sp.surface, sp.alpha, other_side) ==
        standard_pair_key(1, 1, true));
}

TEST_CASE("block order does not change the key") {
  // Klein block then torus block vs torus block then Klein block.
  SurfaceComplex s1 =
      SurfaceComplex::build({{"p", "q", "p", "-q", "c", "d", "-c", "-d"}});
  std::vector<Curve> a1{one_point(s1, "q", Rat(1, 2)),
                        one_point(s1, "d", Rat(1, 2))};
  std::vector<Curve> b1{one_point(s1, "q", Rat(1, 4)),
                        one_point(s1, "c", Rat(1, 2))};
  SurfaceComplex s2 =
      SurfaceComplex::build({{"c", "d", "-c", "-d", "p", "q", "p", "-q"}});
  std::vector<Curve> a2{one_point(s2, "q", Rat(1, 2)),
                        one_point(s2, "d", Rat(1, 2))};
  std::vector<Curve> b2{one_point(s2, "q", Rat(1, 4)),
                        one_point(s2, "c", Rat(1, 2))};
  CHECK(pair_key(s1, a1, b1) == pair_key(s2, a2, b2));
  CHECK(pair_key(s1, a1, b1) == standard_pair_key(2, 1, false));
}

TEST_CASE("standard keys are pairwise distinct") {
  std::vector<std::string> keys{
      standard_pair_key(1, 0, true),  standard_pair_key(1, 1, true),
      standard_pair_key(1, 1, false), standard_pair_key(2, 0, true),
      standard_pair_key(2, 1, true),  standard_pair_key(2, 2, true),
      standard_pair_key(2, 1, false), standard_pair_key(2, 2, false),
  };
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j) CHECK(keys[i] != keys[j]);
}

TEST_CASE("same counts, different shape: split vs parallel free curves") {
  SurfaceComplex g2 = SurfaceComplex::build(
      {{"p0", "q0", "-p0", "-q0", "p1", "q1", "-p1", "-q1"}});
  std::vector<Curve> a{one_point(g2, "q0", Rat(1, 2))};
  std::vector<Curve> b_split{one_point(g2, "q1", Rat(1, 2))};
  std::vector<Curve> b_par{one_point(g2, "q0", Rat(1, 4))};
  CHECK(pair_key(g2, a, b_split) != pair_key(g2, a, b_par));
}

TEST_CASE("empty families reduce to the topology of the surface") {
  SurfaceComplex s1 = SurfaceComplex::build({{"a", "-a"}});
  SurfaceComplex s2 = SurfaceComplex::build({{"a", "b", "-b", "-a"}});
  SurfaceComplex torus = SurfaceComplex::build({{"a", "b", "-a", "-b"}});
  CHECK(pair_key(s1, {}, {}) == pair_key(s2, {}, {}));
  CHECK(pair_key(s1, {}, {}) != pair_key(torus, {}, {}));
  CHECK(standard_pair_key(0, 0, true) == pair_key(s1, {}, {}));
}
