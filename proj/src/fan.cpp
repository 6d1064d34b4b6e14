#include "kring/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace kring {

FanValidationError::FanValidationError(FanReport r)
    : std::runtime_error("invalid fan: " +
                         (r.witnesses.empty() ? std::string("unspecified") : r.witnesses[0])),
      report(std::move(r)) {}

std::vector<std::vector<int>> enumerate_faces(const Fan& fan) {
  return sorted_sets(face_mask_closure(fan.max_cones));
}

namespace {

std::string vec_to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ')';
  return os.str();
}

// Enumerate the extreme rays of {x >= 0 : A x = 0} and hand each to `emit`
// as a primitive integer vector.  An extreme ray is recovered from its
// support T: the kernel of A restricted to the T-columns is 1-dimensional
// and its generator is sign-definite.  Supports larger than rank(A)+1 cannot
// carry a 1-dimensional kernel, so the search is capped there.
template <typename Emit>
void for_each_extreme_ray(const IntMatrix& a, Emit&& emit) {
  const int cols = a.cols;
  const int cap = std::min(cols, a.rows + 1);
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (!pick.empty()) {
      IntMatrix sub(a.rows, int(pick.size()));
      for (int r = 0; r < a.rows; ++r)
        for (size_t c = 0; c < pick.size(); ++c) sub.at(r, int(c)) = a.at(r, pick[c]);
      auto ker = kernel_lattice_basis(sub);
      if (ker.size() == 1) {
        const LatticeVector& g = ker[0];
        bool nonneg = true, nonpos = true;
        for (const Int& e : g) {
          if (e > 0) nonpos = false;
          if (e < 0) nonneg = false;
        }
        if (nonneg || nonpos) {
          LatticeVector full(cols, 0);
          for (size_t c = 0; c < pick.size(); ++c) full[pick[c]] = nonneg ? g[c] : -g[c];
          emit(full);
        }
      }
    }
    if (int(pick.size()) == cap) return;
    for (int i = start; i < cols; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

FanReport validate_fan(const Fan& fan) {
  FanReport rep;
  std::vector<std::string>& w = rep.witnesses;
  const int n = fan.dim;
  const int d = int(fan.rays.size());

  bool structural = true;
  if (n < 1) {
    w.push_back("dimension must be at least 1");
    structural = false;
  }
  for (int i = 0; i < d && structural; ++i) {
    if (int(fan.rays[i].size()) != n) {
      w.push_back("ray " + std::to_string(i) + " has length " +
                  std::to_string(fan.rays[i].size()) + ", expected " + std::to_string(n));
      structural = false;
      break;
    }
    bool zero = std::all_of(fan.rays[i].begin(), fan.rays[i].end(),
                            [](const Int& c) { return c == 0; });
    if (zero) {
      w.push_back("ray " + std::to_string(i) + " is zero");
      structural = false;
    } else if (!is_primitive(fan.rays[i])) {
      w.push_back("ray " + std::to_string(i) + " = " + vec_to_string(fan.rays[i]) +
                  " is not primitive");
      structural = false;
    }
  }
  for (int i = 0; i < d && structural; ++i)
    for (int j = i + 1; j < d; ++j)
      if (fan.rays[i] == fan.rays[j]) {
        w.push_back("duplicate ray: indices " + std::to_string(i) + " and " + std::to_string(j));
        structural = false;
      }
  if (fan.max_cones.empty()) {
    w.push_back("no maximal cones");
    structural = false;
  }
  std::vector<uint64_t> cone_masks;
  for (const auto& cone : fan.max_cones) {
    if (!structural) break;
    for (int i : cone)
      if (i < 0 || i >= d) {
        w.push_back("max cone " + set_to_string(cone) + " has ray index " + std::to_string(i) +
                    " out of range");
        structural = false;
      }
    if (!structural) break;
    if (int(cone.size()) != n) {
      w.push_back("max cone " + set_to_string(cone) + " has size " + std::to_string(cone.size()) +
                  ", expected " + std::to_string(n));
      structural = false;
      break;
    }
    uint64_t m = index_mask(cone);
    if (std::count(cone_masks.begin(), cone_masks.end(), m)) {
      w.push_back("duplicate max cone " + set_to_string(cone));
      structural = false;
    }
    cone_masks.push_back(m);
  }
  if (structural) {
    std::vector<bool> used(size_t(d), false);
    for (const auto& cone : fan.max_cones)
      for (int i : cone) used[size_t(i)] = true;
    for (int i = 0; i < d; ++i)
      if (!used[size_t(i)]) {
        w.push_back("ray " + std::to_string(i) + " lies in no maximal cone");
        structural = false;
      }
  }
  if (!structural) return rep;

  // (b) simplicial: the n rays of each maximal cone are linearly independent
  std::vector<std::vector<LatticeVector>> gens(fan.max_cones.size());
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    for (int i : fan.max_cones[c]) gens[c].push_back(fan.rays[size_t(i)]);
    SnfResult s = smith_normal_form(IntMatrix::from_rows(gens[c], n));
    if (s.rank != n) {
      w.push_back("max cone " + set_to_string(fan.max_cones[c]) +
                  " is degenerate: rays span rank " + std::to_string(s.rank));
      return rep;
    }
  }

  // (c) fan axiom: every pair of maximal cones meets in the cone on their
  // common rays.  Writing points of the intersection as B*l = B'*m with
  // l,m >= 0, each extreme ray of the solution cone must be supported on the
  // common ray positions of both cones.
  for (size_t c1 = 0; c1 < fan.max_cones.size() && rep.witnesses.empty(); ++c1)
    for (size_t c2 = c1 + 1; c2 < fan.max_cones.size() && rep.witnesses.empty(); ++c2) {
      const auto& s1 = fan.max_cones[c1];
      const auto& s2 = fan.max_cones[c2];
      std::vector<bool> common1(s1.size(), false), common2(s2.size(), false);
      std::vector<int> shared;
      for (size_t i = 0; i < s1.size(); ++i)
        for (size_t j = 0; j < s2.size(); ++j)
          if (s1[i] == s2[j]) {
            common1[i] = common2[j] = true;
            shared.push_back(s1[i]);
          }
      IntMatrix a(n, 2 * n);
      for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
          a.at(r, k) = gens[c1][size_t(k)][size_t(r)];
          a.at(r, n + k) = -gens[c2][size_t(k)][size_t(r)];
        }
      for_each_extreme_ray(a, [&](const LatticeVector& ray) {
        if (!rep.witnesses.empty()) return;
        for (int k = 0; k < n; ++k)
          if ((ray[size_t(k)] != 0 && !common1[size_t(k)]) ||
              (ray[size_t(n + k)] != 0 && !common2[size_t(k)])) {
            std::sort(shared.begin(), shared.end());
            w.push_back("max cones " + set_to_string(s1) + " and " + set_to_string(s2) +
                        " intersect beyond the cone on their common rays " +
                        set_to_string(shared));
            return;
          }
      });
    }
  if (!rep.witnesses.empty()) return rep;
  rep.is_fan = true;

  // (d) smoothness: every maximal cone generated by part of a Z-basis
  rep.is_smooth = true;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    if (!is_unimodular_set(gens[c])) {
      SnfResult s = smith_normal_form(IntMatrix::from_rows(gens[c], n));
      std::ostringstream os;
      os << "cone " << set_to_string(fan.max_cones[c]) << " is singular: invariant factors [";
      for (size_t k = 0; k < s.invariant_factors.size(); ++k)
        os << (k ? ", " : "") << s.invariant_factors[k].get_str();
      os << "]";
      w.push_back(os.str());
      rep.is_smooth = false;
    }
  }

  // (e) completeness: every wall lies in exactly two maximal cones and the
  // wall-adjacency graph on maximal cones is connected
  rep.is_complete = true;
  std::map<uint64_t, std::vector<int>> wall_owners;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    uint64_t m = cone_masks[c];
    for (int i : fan.max_cones[c]) wall_owners[m & ~(uint64_t(1) << i)].push_back(int(c));
  }
  for (const auto& [wall, owners] : wall_owners)
    if (owners.size() != 2) {
      w.push_back("wall " + set_to_string(mask_to_set(wall)) + " lies in " +
                  std::to_string(owners.size()) + " maximal cone" +
                  (owners.size() == 1 ? "" : "s"));
      rep.is_complete = false;
    }
  std::vector<int> comp(fan.max_cones.size());
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[size_t(x)] != x) x = comp[size_t(x)] = comp[size_t(comp[size_t(x)])];
    return x;
  };
  for (const auto& [wall, owners] : wall_owners)
    for (size_t k = 1; k < owners.size(); ++k) comp[size_t(find(owners[k]))] = find(owners[0]);
  int ncomp = 0;
  for (size_t c = 0; c < comp.size(); ++c)
    if (find(int(c)) == int(c)) ++ncomp;
  if (ncomp > 1) {
    w.push_back("maximal cones split into " + std::to_string(ncomp) +
                " wall-connected components");
    rep.is_complete = false;
  }
  return rep;
}

CharPair to_char_pair(const Fan& fan) {
  FanReport rep = validate_fan(fan);
  if (!rep.ok()) throw FanValidationError(std::move(rep));
  CharPair cp;
  cp.dim = fan.dim;
  cp.facets = int(fan.rays.size());
  cp.maximal_faces = fan.max_cones;
  cp.lambda = fan.rays;
  return cp;
}

}  // namespace kring
