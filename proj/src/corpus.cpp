#include "kring/corpus.hpp"

#include <stdexcept>

namespace kring::corpus {

namespace {

LatticeVector lv(std::vector<long> v) { return LatticeVector(v.begin(), v.end()); }

}  // namespace

Fan projective_space(int n) {
  if (n < 1) throw std::invalid_argument("projective_space: n must be positive");
  Fan f;
  f.dim = n;
  for (int i = 0; i < n; ++i) {
    LatticeVector e(size_t(n), 0);
    e[size_t(i)] = 1;
    f.rays.push_back(e);
  }
  f.rays.push_back(LatticeVector(size_t(n), Int(-1)));
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> cone;
    for (int i = 0; i <= n; ++i)
      if (i != skip) cone.push_back(i);
    f.max_cones.push_back(cone);
  }
  return f;
}

Fan p1_power(int k) {
  if (k < 1) throw std::invalid_argument("p1_power: k must be positive");
  Fan f;
  f.dim = k;
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < k; ++i) {
      LatticeVector e(size_t(k), 0);
      e[size_t(i)] = s == 0 ? 1 : -1;
      f.rays.push_back(e);
    }
  for (int choice = 0; choice < (1 << k); ++choice) {
    std::vector<int> cone;
    for (int i = 0; i < k; ++i) cone.push_back(((choice >> i) & 1) ? k + i : i);
    f.max_cones.push_back(cone);
  }
  return f;
}

Fan hirzebruch(int a) {
  Fan f;
  f.dim = 2;
  f.rays = {lv({1, 0}), lv({0, 1}), lv({-1, a}), lv({0, -1})};
  f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return f;
}

Fan blowup_p2(int points) {
  if (points < 1 || points > 3) throw std::invalid_argument("blowup_p2: 1..3 points");
  // exceptional rays sit at the sums of the adjacent P^2 rays
  Fan f;
  f.dim = 2;
  f.rays = {lv({1, 0}), lv({0, 1}), lv({-1, -1})};
  switch (points) {
    case 1:
      f.rays.push_back(lv({1, 1}));
      f.max_cones = {{0, 3}, {3, 1}, {1, 2}, {2, 0}};
      break;
    case 2:
      f.rays.push_back(lv({1, 1}));
      f.rays.push_back(lv({-1, 0}));
      f.max_cones = {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 0}};
      break;
    default:
      f.rays.push_back(lv({1, 1}));
      f.rays.push_back(lv({-1, 0}));
      f.rays.push_back(lv({0, -1}));
      f.max_cones = {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}};
      break;
  }
  return f;
}

Fan halfplane() {
  Fan f;
  f.dim = 2;
  f.rays = {lv({1, 0}), lv({0, 1}), lv({-1, 0})};
  f.max_cones = {{0, 1}, {1, 2}};
  return f;
}

Fan singular() {
  Fan f;
  f.dim = 2;
  f.rays = {lv({1, 0}), lv({1, 2}), lv({-1, -1})};
  f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  return f;
}

CharPair square_quasitoric() {
  CharPair cp;
  cp.dim = 2;
  cp.facets = 4;
  cp.maximal_faces = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  cp.lambda = {lv({1, 0}), lv({0, 1}), lv({1, 2}), lv({0, -1})};
  return cp;
}

CharPair square_nonstandard() {
  CharPair cp = square_quasitoric();
  cp.lambda[2] = lv({2, 0});
  return cp;
}

CharPair p2_nerve() {
  CharPair cp;
  cp.dim = 2;
  cp.facets = 3;
  cp.maximal_faces = {{0, 1}, {1, 2}, {0, 2}};
  cp.lambda = {lv({1, 0}), lv({0, 1}), lv({-1, -1})};
  return cp;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    t.push_back({"p1", "p1.fan.json", "fan", true, 2, "projective line", projective_space(1)});
    t.push_back({"p2", "p2.fan.json", "fan", true, 3, "projective plane", projective_space(2)});
    t.push_back({"p3", "p3.fan.json", "fan", true, 4, "projective 3-space", projective_space(3)});
    t.push_back({"p4", "p4.fan.json", "fan", true, 5, "projective 4-space", projective_space(4)});
    t.push_back({"p1xp1", "p1xp1.fan.json", "fan", true, 4, "product of two lines", p1_power(2)});
    t.push_back({"p1xp1xp1", "p1xp1xp1.fan.json", "fan", true, 8, "product of three lines",
                 p1_power(3)});
    for (int a = 0; a <= 3; ++a)
      t.push_back({"hirzebruch-" + std::to_string(a),
                   "hirzebruch-" + std::to_string(a) + ".fan.json", "fan", true, 4,
                   "Hirzebruch surface, twist " + std::to_string(a), hirzebruch(a)});
    for (int k = 1; k <= 3; ++k)
      t.push_back({"blp2-" + std::to_string(k), "blp2-" + std::to_string(k) + ".fan.json", "fan",
                   true, 3 + k,
                   "plane blown up at " + std::to_string(k) + " fixed point" + (k > 1 ? "s" : ""),
                   blowup_p2(k)});
    t.push_back({"square-quasitoric", "square-quasitoric.cp.json", "charpair", true, 4,
                 "quasitoric manifold over the square", square_quasitoric()});
    t.push_back({"p2-nerve", "p2-nerve.cp.json", "charpair", true, 3,
                 "characteristic pair of the projective plane", p2_nerve()});
    t.push_back({"halfplane", "halfplane.fan.json", "fan", false, 0,
                 "negative: incomplete fan (boundary walls)", halfplane()});
    t.push_back({"singular", "singular.fan.json", "fan", false, 0,
                 "negative: cone of determinant 2", singular()});
    t.push_back({"square-nonstandard", "square-nonstandard.cp.json", "charpair", false, 0,
                 "negative: labeling is not locally standard", square_nonstandard()});
    return t;
  }();
  return table;
}

}  // namespace kring::corpus
