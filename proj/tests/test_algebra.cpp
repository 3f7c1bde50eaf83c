#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "trisect/snf.hpp"
#include "trisect/words.hpp"

using namespace trisect;

TEST_CASE("smith normal form on small matrices") {
  CHECK(smith_normal_form({{2, 4}, {6, 8}}).divisors ==
        std::vector<std::int64_t>{2, 4});
  CHECK(smith_normal_form({{1, 2, 3}, {4, 5, 6}}).divisors ==
        std::vector<std::int64_t>{1, 3});
  CHECK(smith_normal_form({{0, 0}, {0, 0}}).divisors.empty());
  CHECK(smith_normal_form({}).divisors.empty());
  CHECK(smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).divisors ==
        std::vector<std::int64_t>{1, 1, 1});
  // Diagonal input still needs the divisibility chain enforced.
  CHECK(smith_normal_form({{6, 0}, {0, 4}}).divisors ==
        std::vector<std::int64_t>{2, 12});
  CHECK(smith_normal_form({{2, 0}, {0, 3}}).divisors ==
        std::vector<std::int64_t>{1, 6});
  CHECK(smith_normal_form({{-5}}).divisors == std::vector<std::int64_t>{5});
  Mat ragged{{1, 2}, {3}};
  CHECK_THROWS_AS(smith_normal_form(ragged), std::invalid_argument);
  Mat huge{{std::int64_t{1} << 61}};
  CHECK_THROWS_AS(smith_normal_form(huge), std::overflow_error);
}

TEST_CASE("cokernel and group printing") {
  AbelianGroup z2{2, {}};
  CHECK(cokernel({{0}, {0}}, 2) == z2);       // torus relator abelianized
  CHECK(cokernel({{2}, {0}}, 2).str() == "Z + Z/2");  // Klein bottle
  CHECK(cokernel({{2}}, 1).str() == "Z/2");           // projective plane
  CHECK(cokernel({{6, 0}, {0, 4}}, 2).str() == "Z/2 + Z/12");
  CHECK(cokernel({}, 3).str() == "Z^3");
  CHECK(cokernel({{1}}, 1).str() == "0");
  CHECK(cokernel({{1, 0}, {0, 1}, {0, 0}}, 3).str() == "Z");
  Mat one{{1}};
  CHECK_THROWS_AS(cokernel(one, 2), std::invalid_argument);
}

TEST_CASE("free word arithmetic") {
  CHECK(reduced({1, 2, -2, -1}).empty());
  CHECK(reduced({1, -2, 2, 2}) == Word{1, 2});
  CHECK(cyclically_reduced({1, 2, -1}) == Word{2});
  CHECK(cyclically_reduced({1, 2, -2, -1}).empty());
  CHECK(inverse_word({1, 2, -3}) == Word{3, -2, -1});
  CHECK(concat({1, 2}, {-2, 3}) == Word{1, 3});
  Word zero{1, 0};
  CHECK_THROWS_AS(reduced(zero), std::invalid_argument);
}

TEST_CASE("word and presentation printing") {
  CHECK(word_str({1, 2, -1}, 2) == "abA");
  CHECK(word_str({}, 2) == "1");
  CHECK(word_str({1, -27}, 27) == "x0 X26");
  Presentation p{2, {{1, 2, -1, -2}}};
  CHECK(p.str() == "< a, b | abAB >");
  CHECK(Presentation{0, {}}.str() == "<  |  >");
}

TEST_CASE("simplify eliminates single-occurrence generators") {
  Presentation p{2, {{1, 2}}};  // < a, b | ab >
  Presentation q = simplify(p);
  CHECK(q.ngens == 1);
  CHECK(q.rels.empty());

  CHECK(simplify(Presentation{1, {{1}}}).ngens == 0);
  CHECK(obviously_trivial(Presentation{1, {{1}}}));
  CHECK_FALSE(obviously_trivial(Presentation{1, {{1, 1}}}));

  Presentation r{2, {{2}}};  // < a, b | b >
  Presentation rs = simplify(r);
  CHECK(rs.ngens == 1);
  CHECK(rs.rels.empty());
}

TEST_CASE("simplify substitutes through other relators") {
  // < a, b | aB, aab >  --a=b-->  < b | bbb >
  Presentation p{2, {{1, -2}, {1, 1, 2}}};
  Presentation q = simplify(p);
  CHECK(q.ngens == 1);
  REQUIRE(q.rels.size() == 1);
  CHECK(q.rels[0].size() == 3);
  AbelianGroup g = abelianized_group(q);
  CHECK(g.betti == 0);
  CHECK(g.torsion == std::vector<std::int64_t>{3});
}

TEST_CASE("simplify leaves the trefoil group alone") {
  Presentation p{2, {{1, 2, 1, -2, -1, -2}}};
  Presentation q = simplify(p);
  CHECK(q.ngens == 2);
  CHECK(q.rels.size() == 1);
  CHECK(abelianized_group(q).str() == "Z");
}

TEST_CASE("duplicate relators up to rotation and inversion collapse") {
  Presentation p{2, {{1, 2, -1, -2}, {-2, -1, 2, 1}}};
  Presentation q = simplify(p);
  CHECK(q.rels.size() == 1);
}

TEST_CASE("length budget blocks explosive substitutions") {
  Presentation p{2, {{1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1}}};
  Presentation stuck = simplify(p, 0);
  CHECK(stuck.ngens == 2);
  CHECK(stuck.rels.size() == 2);
  Presentation q = simplify(p);  // default budget lets it through
  CHECK(q.ngens == 1);
  AbelianGroup g = abelianized_group(q);
  CHECK(g.torsion == std::vector<std::int64_t>{50});
}

TEST_CASE("abelianization matrix layout") {
  Presentation p{2, {{1, 2, 1, -2, -1, -2}, {2, 2}}};
  Mat m = abelianization(p);
  REQUIRE(m.size() == 2);
  REQUIRE(m[0].size() == 2);
  CHECK(m[0][0] == 1);   // a-exponent of first relator
  CHECK(m[1][0] == -1);  // b-exponent of first relator
  CHECK(m[0][1] == 0);
  CHECK(m[1][1] == 2);
}
