#ifndef KRING_CHARPAIR_HPP
#define KRING_CHARPAIR_HPP

#include "kring/lattice.hpp"

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace kring {

// Characteristic pair: the nerve of the facet covering of the orbit space
// (faces are the index sets with nonempty facet intersection) together with
// the facet labeling by primitive circle directions.
struct CharPair {
  int dim = 0;     // n
  int facets = 0;  // d
  std::vector<std::vector<int>> maximal_faces;  // index sets over 0..d-1
  std::vector<LatticeVector> lambda;            // d vectors in Z^n

  bool operator==(const CharPair&) const = default;
};

struct ValidationReport {
  bool is_pure = false;
  bool is_locally_standard = false;
  std::vector<std::string> witnesses;

  bool ok() const { return is_pure && is_locally_standard; }
};

// Pure: every maximal face has size exactly n (a vertex under each of them).
// Locally standard: the lambda vectors of every face extend to a Z-basis;
// by heredity it is enough to test the maximal faces.
ValidationReport validate_char_pair(const CharPair& cp);

// All subsets of the maximal faces, deduplicated, including the empty set.
// Result is sorted by size, then lexicographically.
std::vector<std::vector<int>> faces(const CharPair& cp);

// Inclusion-minimal index sets that are not faces.  These generate the
// Stanley-Reisner monomial ideal; their size never exceeds n+1.
std::vector<std::vector<int>> minimal_nonfaces(const CharPair& cp);

// Number of maximal faces = number of vertices of the orbit space = chi of
// the torus manifold.  Throws std::invalid_argument on non-pure input.
int euler_characteristic(const CharPair& cp);

// Shared nerve helpers.
uint64_t index_mask(const std::vector<int>& set);
std::vector<int> mask_to_set(uint64_t mask);
// Subset closure of the given top sets as masks (includes the empty set).
std::unordered_set<uint64_t> face_mask_closure(const std::vector<std::vector<int>>& tops);
// Canonical listing of a mask family: by size, then lexicographic.
std::vector<std::vector<int>> sorted_sets(const std::unordered_set<uint64_t>& masks);
std::string set_to_string(const std::vector<int>& set);

}  // namespace kring

#endif
