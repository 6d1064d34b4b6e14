#include "kring/charpair.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kring {

uint64_t index_mask(const std::vector<int>& set) {
  uint64_t m = 0;
  for (int i : set) {
    if (i < 0 || i >= 63) throw std::invalid_argument("index_mask: index out of range");
    m |= uint64_t(1) << i;
  }
  return m;
}

std::vector<int> mask_to_set(uint64_t mask) {
  std::vector<int> s;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) s.push_back(i);
  return s;
}

std::unordered_set<uint64_t> face_mask_closure(const std::vector<std::vector<int>>& tops) {
  std::unordered_set<uint64_t> out;
  out.insert(0);
  for (const auto& top : tops) {
    uint64_t m = index_mask(top);
    // enumerate submasks
    uint64_t sub = m;
    while (true) {
      out.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  return out;
}

std::vector<std::vector<int>> sorted_sets(const std::unordered_set<uint64_t>& masks) {
  std::vector<std::vector<int>> sets;
  sets.reserve(masks.size());
  for (uint64_t m : masks) sets.push_back(mask_to_set(m));
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return sets;
}

std::string set_to_string(const std::vector<int>& set) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < set.size(); ++i) {
    if (i) os << ", ";
    os << set[i];
  }
  os << '}';
  return os.str();
}

ValidationReport validate_char_pair(const CharPair& cp) {
  ValidationReport rep;
  rep.is_pure = true;
  rep.is_locally_standard = true;
  auto fail_pure = [&](std::string w) {
    rep.is_pure = false;
    rep.witnesses.push_back(std::move(w));
  };
  auto fail_std = [&](std::string w) {
    rep.is_locally_standard = false;
    rep.witnesses.push_back(std::move(w));
  };

  if (cp.dim < 1) fail_pure("dimension must be at least 1");
  if (int(cp.lambda.size()) != cp.facets)
    fail_std("lambda has " + std::to_string(cp.lambda.size()) + " entries, expected " +
             std::to_string(cp.facets));
  for (int i = 0; i < int(cp.lambda.size()); ++i)
    if (int(cp.lambda[i].size()) != cp.dim)
      fail_std("lambda[" + std::to_string(i) + "] has length " +
               std::to_string(cp.lambda[i].size()) + ", expected " + std::to_string(cp.dim));

  std::vector<bool> covered(size_t(std::max(cp.facets, 0)), false);
  std::vector<uint64_t> seen;
  bool indices_ok = true;
  for (const auto& f : cp.maximal_faces) {
    for (int i : f) {
      if (i < 0 || i >= cp.facets) {
        fail_pure("maximal face " + set_to_string(f) + " has facet index " + std::to_string(i) +
                  " out of range");
        indices_ok = false;
      } else {
        covered[size_t(i)] = true;
      }
    }
    if (!indices_ok) break;
    uint64_t m = index_mask(f);
    if (std::count(seen.begin(), seen.end(), m))
      fail_pure("duplicate maximal face " + set_to_string(f));
    seen.push_back(m);
    if (int(f.size()) != cp.dim)
      fail_pure("maximal face " + set_to_string(f) + " has size " + std::to_string(f.size()) +
                ", expected " + std::to_string(cp.dim));
  }
  if (cp.maximal_faces.empty()) fail_pure("no maximal faces");
  if (indices_ok)
    for (int i = 0; i < cp.facets; ++i)
      if (!covered[size_t(i)]) fail_pure("facet " + std::to_string(i) + " lies in no maximal face");

  if (!rep.is_locally_standard || !indices_ok) return rep;  // lambda shape broken, stop here

  for (const auto& f : cp.maximal_faces) {
    std::vector<LatticeVector> vs;
    for (int i : f) vs.push_back(cp.lambda[size_t(i)]);
    if (!is_unimodular_set(vs)) {
      SnfResult s = smith_normal_form(IntMatrix::from_rows(vs, cp.dim));
      std::ostringstream os;
      os << "face " << set_to_string(f) << ": lambda vectors are not part of a Z-basis"
         << " (rank " << s.rank << " of " << f.size() << ", invariant factors [";
      for (size_t k = 0; k < s.invariant_factors.size(); ++k)
        os << (k ? ", " : "") << s.invariant_factors[k].get_str();
      os << "])";
      fail_std(os.str());
    }
  }
  return rep;
}

std::vector<std::vector<int>> faces(const CharPair& cp) {
  return sorted_sets(face_mask_closure(cp.maximal_faces));
}

std::vector<std::vector<int>> minimal_nonfaces(const CharPair& cp) {
  if (cp.facets >= 63) throw std::invalid_argument("minimal_nonfaces: too many facets");
  const auto face_set = face_mask_closure(cp.maximal_faces);
  size_t max_face = 0;
  for (const auto& f : cp.maximal_faces) max_face = std::max(max_face, f.size());

  // A minimal non-face has all proper subsets faces, so its size is at most
  // (largest face) + 1; search by size so minimality is one subset check.
  std::unordered_set<uint64_t> result;
  std::vector<int> cur;
  auto is_face = [&](uint64_t m) { return face_set.count(m) != 0; };
  for (size_t k = 1; k <= max_face + 1 && int(k) <= cp.facets; ++k) {
    cur.assign(k, 0);
    auto rec = [&](auto&& self, int start, size_t depth, uint64_t mask) -> void {
      if (depth == k) {
        if (is_face(mask)) return;
        for (size_t j = 0; j < k; ++j)
          if (!is_face(mask & ~(uint64_t(1) << cur[j]))) return;
        result.insert(mask);
        return;
      }
      for (int i = start; i < cp.facets; ++i) {
        cur[depth] = i;
        self(self, i + 1, depth + 1, mask | (uint64_t(1) << i));
      }
    };
    rec(rec, 0, 0, 0);
  }
  return sorted_sets(result);
}

int euler_characteristic(const CharPair& cp) {
  ValidationReport rep = validate_char_pair(cp);
  if (!rep.is_pure)
    throw std::invalid_argument("euler_characteristic: non-pure characteristic pair: " +
                                (rep.witnesses.empty() ? std::string("unknown") : rep.witnesses[0]));
  return int(cp.maximal_faces.size());
}

}  // namespace kring
