#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "kring/charpair.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace kring;

namespace {

LatticeVector lv(std::vector<long> v) { return LatticeVector(v.begin(), v.end()); }

CharPair square_pair() {
  CharPair cp;
  cp.dim = 2;
  cp.facets = 4;
  cp.maximal_faces = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  cp.lambda = {lv({1, 0}), lv({0, 1}), lv({1, 2}), lv({0, -1})};
  return cp;
}

CharPair p1_pair() {
  CharPair cp;
  cp.dim = 1;
  cp.facets = 2;
  cp.maximal_faces = {{0}, {1}};
  cp.lambda = {lv({1}), lv({-1})};
  return cp;
}

CharPair p2_pair() {
  CharPair cp;
  cp.dim = 2;
  cp.facets = 3;
  cp.maximal_faces = {{0, 1}, {1, 2}, {0, 2}};
  cp.lambda = {lv({1, 0}), lv({0, 1}), lv({-1, -1})};
  return cp;
}

}  // namespace

TEST_CASE("square quasitoric pair validates") {
  ValidationReport rep = validate_char_pair(square_pair());
  CHECK(rep.is_pure);
  CHECK(rep.is_locally_standard);
  CHECK(rep.witnesses.empty());
}

TEST_CASE("imprimitive lambda breaks local standardness") {
  CharPair cp = square_pair();
  cp.lambda[2] = lv({2, 0});
  ValidationReport rep = validate_char_pair(cp);
  CHECK(rep.is_pure);
  CHECK(!rep.is_locally_standard);
  REQUIRE(!rep.witnesses.empty());
  CHECK(rep.witnesses[0].find("Z-basis") != std::string::npos);
}

TEST_CASE("impure pair is reported") {
  CharPair cp = square_pair();
  cp.maximal_faces.push_back({1});
  ValidationReport rep = validate_char_pair(cp);
  CHECK(!rep.is_pure);
}

TEST_CASE("uncovered facet is reported") {
  CharPair cp = square_pair();
  cp.facets = 5;
  cp.lambda.push_back(lv({1, 1}));
  ValidationReport rep = validate_char_pair(cp);
  CHECK(!rep.is_pure);
  REQUIRE(!rep.witnesses.empty());
  CHECK(rep.witnesses[0].find("facet 4") != std::string::npos);
}

TEST_CASE("faces of the square nerve") {
  auto fs = faces(square_pair());
  CHECK(fs.size() == 9);  // empty + 4 vertices + 4 edges
  CHECK(fs.front().empty());
}

TEST_CASE("faces of P1 pair") {
  auto fs = faces(p1_pair());
  std::vector<std::vector<int>> expect = {{}, {0}, {1}};
  CHECK(fs == expect);
}

TEST_CASE("simplex nerve missing only the full set") {
  // P^n pattern: maximal faces are all n-subsets of {0..n}
  const int n = 3;
  CharPair cp;
  cp.dim = n;
  cp.facets = n + 1;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> f;
    for (int i = 0; i <= n; ++i)
      if (i != skip) f.push_back(i);
    cp.maximal_faces.push_back(f);
  }
  for (int i = 0; i <= n; ++i) cp.lambda.push_back(lv({i == 0, i == 1, i == 2}));
  auto fs = faces(cp);
  CHECK(fs.size() == (1u << (n + 1)) - 1);  // all proper subsets
}

TEST_CASE("minimal nonfaces") {
  auto mnf = minimal_nonfaces(p1_pair());
  CHECK(mnf == std::vector<std::vector<int>>{{0, 1}});

  mnf = minimal_nonfaces(p2_pair());
  CHECK(mnf == std::vector<std::vector<int>>{{0, 1, 2}});

  mnf = minimal_nonfaces(square_pair());
  CHECK(mnf == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(p2_pair()) == 3);
  CHECK(euler_characteristic(square_pair()) == 4);
  CharPair bad = square_pair();
  bad.maximal_faces.push_back({0});
  CHECK_THROWS_AS((void)euler_characteristic(bad), std::invalid_argument);
}

TEST_CASE("face family is closed under subsets and separates from nonfaces") {
  CharPair cp = square_pair();
  auto fs = faces(cp);
  std::set<std::vector<int>> face_set(fs.begin(), fs.end());
  for (const auto& f : fs)
    for (size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub = f;
      sub.erase(sub.begin() + ptrdiff_t(drop));
      CHECK(face_set.count(sub) == 1);
    }
  auto mnf = minimal_nonfaces(cp);
  for (const auto& s : mnf) CHECK(face_set.count(s) == 0);
  // every non-face contains a minimal non-face
  for (uint64_t mask = 0; mask < (uint64_t(1) << cp.facets); ++mask) {
    auto s = mask_to_set(mask);
    if (face_set.count(s)) continue;
    bool contains = false;
    for (const auto& m : mnf) {
      uint64_t mm = index_mask(m);
      if ((mask & mm) == mm) contains = true;
    }
    CHECK(contains);
  }
}

TEST_CASE("validation invariant under relabeling and unimodular change") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    CharPair cp = square_pair();
    // relabel facets
    std::vector<int> perm(size_t(cp.facets));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CharPair rl;
    rl.dim = cp.dim;
    rl.facets = cp.facets;
    rl.lambda.resize(size_t(cp.facets));
    for (int i = 0; i < cp.facets; ++i) rl.lambda[size_t(perm[size_t(i)])] = cp.lambda[size_t(i)];
    for (const auto& f : cp.maximal_faces) {
      std::vector<int> g;
      for (int i : f) g.push_back(perm[size_t(i)]);
      rl.maximal_faces.push_back(g);
    }
    // random unimodular change of coordinates: a few shear/swap steps
    std::uniform_int_distribution<int> shear(-2, 2);
    for (int step = 0; step < 6; ++step) {
      int i = int(rng() % 2), j = 1 - i;
      Int q(shear(rng));
      for (auto& v : rl.lambda) v[size_t(i)] += q * v[size_t(j)];
    }
    ValidationReport rep = validate_char_pair(rl);
    CHECK(rep.is_pure);
    CHECK(rep.is_locally_standard);
    CHECK(euler_characteristic(rl) == 4);
    CHECK(minimal_nonfaces(rl).size() == 2);
  }
}
