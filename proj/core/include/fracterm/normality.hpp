#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fracterm/shape.hpp"

namespace fracterm {

struct NormalityReport {
  bool normal = true;
  /// First pair found with i ≡_L j but not i =_S j (or the reverse).
  std::optional<std::pair<Instance, Instance>> witness;
  std::size_t instances = 0;
};

/// Instances of `shape` whose decoded magnitude is at most `bound`. For rational
/// shapes both pair components are bounded; nat.dec additionally enumerates
/// zero-padded spellings up to digits(bound) + 2 characters.
std::vector<Instance> enumerate_instances(ShapeId shape, unsigned bound);

/// Exhaustive pairwise check of i =_S j ⇔ i ≡_L j over enumerate_instances.
NormalityReport check_normality(ShapeId shape, unsigned bound);

inline bool is_normal(ShapeId shape, unsigned bound) {
  return check_normality(shape, bound).normal;
}

/// True when (i, j) separates the two equalities.
bool is_normality_witness(const Instance& i, const Instance& j);

struct ShapeDescriptor {
  Label label;
  ShapeId shape_id;
  bool normal;
};

/// `normal` is computed by check_normality at the given bound.
ShapeDescriptor describe(ShapeId shape, unsigned bound = 10);

}  // namespace fracterm
