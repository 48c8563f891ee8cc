#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "moea/random.hpp"

namespace moea {

/// m-tuple of integer objective values, maximized componentwise.
using ObjectiveVector = std::vector<std::int32_t>;

struct ObjectiveVectorHash {
  std::size_t operator()(const ObjectiveVector& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
    for (std::int32_t x : v) {
      h = mix64(h ^ static_cast<std::uint32_t>(x));
    }
    return static_cast<std::size_t>(h);
  }
};

using ObjectiveSet = std::unordered_set<ObjectiveVector, ObjectiveVectorHash>;

/// Squared Euclidean distance in objective space. Exact: objective values are
/// integers, so equal distances compare equal with no epsilon.
inline std::int64_t squared_distance(const ObjectiveVector& a, const ObjectiveVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(a[i]) - b[i];
    s += d * d;
  }
  return s;
}

inline double distance(const ObjectiveVector& a, const ObjectiveVector& b) {
  return std::sqrt(static_cast<double>(squared_distance(a, b)));
}

}  // namespace moea
