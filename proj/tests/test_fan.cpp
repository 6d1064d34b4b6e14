#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "kring/fan.hpp"

#include <doctest.h>

#include "kring/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace kring;

namespace {

LatticeVector lv(std::vector<long> v) { return LatticeVector(v.begin(), v.end()); }

Fan p1_fan() { return Fan{1, {lv({1}), lv({-1})}, {{0}, {1}}}; }

Fan p2_fan() {
  return Fan{2, {lv({1, 0}), lv({0, 1}), lv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}}};
}

Fan orthant_fan() { return Fan{2, {lv({1, 0}), lv({0, 1})}, {{0, 1}}}; }

Fan singular_fan2() {
  return Fan{2, {lv({1, 0}), lv({1, 2}), lv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}}};
}

}  // namespace

TEST_CASE("face enumeration") {
  auto fs = enumerate_faces(p1_fan());
  CHECK(fs == std::vector<std::vector<int>>{{}, {0}, {1}});

  CHECK(enumerate_faces(p2_fan()).size() == 7);  // empty + 3 rays + 3 walls... 2-cones

  Fan single{3, {lv({1, 0, 0}), lv({0, 1, 0}), lv({0, 0, 1})}, {{0, 1, 2}}};
  CHECK(enumerate_faces(single).size() == 8);  // power set of one maximal cone
}

TEST_CASE("faces are closed under subsets") {
  auto fs = enumerate_faces(p2_fan());
  std::set<std::vector<int>> fset(fs.begin(), fs.end());
  for (const auto& f : fs)
    for (size_t drop = 0; drop < f.size(); ++drop) {
      auto sub = f;
      sub.erase(sub.begin() + ptrdiff_t(drop));
      CHECK(fset.count(sub) == 1);
    }
}

TEST_CASE("P2 fan is a smooth complete fan") {
  FanReport rep = validate_fan(p2_fan());
  CHECK(rep.is_fan);
  CHECK(rep.is_smooth == true);
  CHECK(rep.is_complete == true);
  CHECK(rep.witnesses.empty());
}

TEST_CASE("orthant is smooth but not complete") {
  FanReport rep = validate_fan(orthant_fan());
  CHECK(rep.is_fan);
  CHECK(rep.is_smooth == true);
  CHECK(rep.is_complete == false);
  bool found = false;
  for (const auto& w : rep.witnesses)
    if (w.find("lies in 1 maximal cone") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("determinant-2 cone is flagged singular") {
  FanReport rep = validate_fan(singular_fan2());
  CHECK(rep.is_fan);
  CHECK(rep.is_smooth == false);
  CHECK(rep.is_complete == true);
  REQUIRE(!rep.witnesses.empty());
  CHECK(rep.witnesses[0].find("singular") != std::string::npos);
}

TEST_CASE("overlapping cones violate the fan axiom") {
  // cone((1,0),(0,1)) and cone((1,0),(1,1)) overlap in a 2-dimensional set
  Fan bad{2, {lv({1, 0}), lv({0, 1}), lv({1, 1})}, {{0, 1}, {0, 2}}};
  FanReport rep = validate_fan(bad);
  CHECK(!rep.is_fan);
  CHECK(!rep.is_smooth.has_value());
  CHECK(!rep.is_complete.has_value());
  REQUIRE(!rep.witnesses.empty());
  CHECK(rep.witnesses[0].find("intersect beyond") != std::string::npos);
}

TEST_CASE("mirrored cone pair passes the fan axiom") {
  Fan f{2, {lv({1, 0}), lv({0, 1}), lv({-1, 0}), lv({0, -1})},
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  FanReport rep = validate_fan(f);
  CHECK(rep.ok());
}

TEST_CASE("disjoint cones with no common rays pass the fan axiom") {
  // a supporting hyperplane of one cone does not separate the other; only
  // the exact intersection test recognizes this pair as compatible
  Fan f{2, {lv({1, 0}), lv({1, 1}), lv({-1, 2}), lv({-2, 1})}, {{0, 1}, {2, 3}}};
  FanReport rep = validate_fan(f);
  CHECK(rep.is_fan);
  CHECK(rep.is_complete == false);  // gaps, but no axiom violation
}

TEST_CASE("structural defects") {
  Fan dup{2, {lv({1, 0}), lv({1, 0}), lv({0, 1})}, {{0, 2}}};
  CHECK(!validate_fan(dup).is_fan);

  Fan imprim{2, {lv({2, 4}), lv({0, 1})}, {{0, 1}}};
  FanReport rep = validate_fan(imprim);
  CHECK(!rep.is_fan);
  CHECK(rep.witnesses[0].find("not primitive") != std::string::npos);

  Fan degenerate{2, {lv({1, 0}), lv({-1, 0})}, {{0, 1}}};
  rep = validate_fan(degenerate);
  CHECK(!rep.is_fan);
  CHECK(rep.witnesses[0].find("degenerate") != std::string::npos);

  Fan badsize{2, {lv({1, 0}), lv({0, 1}), lv({-1, -1})}, {{0, 1, 2}}};
  CHECK(!validate_fan(badsize).is_fan);

  Fan unused{2, {lv({1, 0}), lv({0, 1}), lv({1, 1})}, {{0, 1}}};
  rep = validate_fan(unused);
  CHECK(!rep.is_fan);
  CHECK(rep.witnesses[0].find("lies in no maximal cone") != std::string::npos);
}

TEST_CASE("P1 fan is complete; lone ray is not") {
  CHECK(validate_fan(p1_fan()).ok());
  Fan half{1, {lv({1})}, {{0}}};
  FanReport rep = validate_fan(half);
  CHECK(rep.is_fan);
  CHECK(rep.is_complete == false);
}

TEST_CASE("wall count matches n * |max cones| / 2 on complete corpus fans") {
  std::vector<Fan> fans = {p1_fan(), p2_fan()};
  for (const auto& e : kring::corpus::entries())
    if (e.kind == "fan" && e.positive) fans.push_back(std::get<Fan>(e.data));
  for (const Fan& f : fans) {
    FanReport rep = validate_fan(f);
    REQUIRE(rep.ok());
    std::set<std::vector<int>> walls;
    for (const auto& cone : f.max_cones)
      for (size_t drop = 0; drop < cone.size(); ++drop) {
        auto wall = cone;
        wall.erase(wall.begin() + ptrdiff_t(drop));
        std::sort(wall.begin(), wall.end());
        walls.insert(wall);
      }
    CHECK(2 * walls.size() == size_t(f.dim) * f.max_cones.size());
  }
}

TEST_CASE("to_char_pair translation") {
  CharPair cp = to_char_pair(p1_fan());
  CHECK(cp.dim == 1);
  CHECK(cp.facets == 2);
  CHECK(cp.maximal_faces == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(cp.lambda == std::vector<LatticeVector>{lv({1}), lv({-1})});

  CharPair p2 = to_char_pair(p2_fan());
  CHECK(p2.facets == 3);
  CHECK(euler_characteristic(p2) == 3);
  CHECK(validate_char_pair(p2).ok());

  CHECK_THROWS_AS((void)to_char_pair(orthant_fan()), FanValidationError);
  try {
    (void)to_char_pair(orthant_fan());
  } catch (const FanValidationError& e) {
    CHECK(e.report.is_complete == false);
  }
}

TEST_CASE("nonfaces of the fan transfer to the nerve") {
  Fan f = p2_fan();
  CharPair cp = to_char_pair(f);
  auto mnf = minimal_nonfaces(cp);
  REQUIRE(mnf.size() == 1);
  CHECK(mnf[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("validation invariant under ray permutation and basis change") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    Fan f = p2_fan();
    std::vector<int> perm(f.rays.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Fan g;
    g.dim = f.dim;
    g.rays.resize(f.rays.size());
    for (size_t i = 0; i < f.rays.size(); ++i) g.rays[size_t(perm[i])] = f.rays[i];
    for (const auto& cone : f.max_cones) {
      std::vector<int> c2;
      for (int i : cone) c2.push_back(perm[size_t(i)]);
      g.max_cones.push_back(c2);
    }
    std::uniform_int_distribution<int> shear(-2, 2);
    for (int step = 0; step < 6; ++step) {
      int i = int(rng() % 2), j = 1 - i;
      Int q(shear(rng));
      for (auto& v : g.rays) v[size_t(i)] += q * v[size_t(j)];
    }
    CHECK(validate_fan(g).ok());
  }
}
