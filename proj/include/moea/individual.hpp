#pragma once

#include <utility>

#include "moea/bitstring.hpp"
#include "moea/objective.hpp"
#include "moea/problems.hpp"

namespace moea {

/// A candidate solution with its objective vector cached at creation; the
/// vector is computed exactly once per created individual, which is the unit
/// of the evaluation counter.
struct Individual {
  Bitstring genotype;
  ObjectiveVector objectives;
};

inline Individual make_individual(const ProblemSpec& spec, Bitstring genotype) {
  ObjectiveVector f = evaluate(spec, genotype);
  return Individual{std::move(genotype), std::move(f)};
}

}  // namespace moea
