#ifndef KRING_FAN_HPP
#define KRING_FAN_HPP

#include "kring/charpair.hpp"
#include "kring/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kring {

// Rational simplicial fan, maximal cones given by ray indices.  Maximal cones
// are expected to be full-dimensional (size n), which covers every complete
// simplicial fan.
struct Fan {
  int dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<int>> max_cones;  // 0-based ray indices

  bool operator==(const Fan&) const = default;
};

struct FanReport {
  bool is_fan = false;
  std::optional<bool> is_smooth;    // set only when is_fan
  std::optional<bool> is_complete;  // set only when is_fan
  std::vector<std::string> witnesses;

  bool ok() const { return is_fan && is_smooth.value_or(false) && is_complete.value_or(false); }
};

struct FanValidationError : std::runtime_error {
  FanReport report;
  explicit FanValidationError(FanReport r);
};

// Every subset of every maximal cone, deduplicated, including the zero cone.
// For a simplicial fan these are exactly the cones.
std::vector<std::vector<int>> enumerate_faces(const Fan& fan);

// Checks, in order: rays primitive and distinct, maximal cones simplicial and
// full-dimensional, pairwise intersections equal to the cone on the shared
// rays (the fan axiom), smoothness of every maximal cone, and completeness by
// the wall criterion (every wall in exactly two maximal cones, wall-adjacency
// graph connected).
FanReport validate_fan(const Fan& fan);

// Translate a complete smooth fan into the characteristic pair of the
// corresponding toric variety: facets = rays, nerve = cones, labeling = ray
// vectors.  Throws FanValidationError unless validate_fan fully passes.
CharPair to_char_pair(const Fan& fan);

}  // namespace kring

#endif
