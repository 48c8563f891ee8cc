#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "moea/bitstring.hpp"
#include "moea/objective.hpp"

namespace moea {

enum class ProblemFamily { OneMinMax, LeadingOnesTrailingZeroes, OneJumpZeroJump };

inline const char* family_name(ProblemFamily f) {
  switch (f) {
    case ProblemFamily::OneMinMax: return "omm";
    case ProblemFamily::LeadingOnesTrailingZeroes: return "lotz";
    case ProblemFamily::OneJumpZeroJump: return "ojzj";
  }
  return "?";
}

/// Benchmark instance: family, objective count m (even), bit length n
/// (a multiple of m/2) and, for OneJumpZeroJump, the jump gap k.
///
/// All three families split a solution into m/2 contiguous blocks of length
/// n' = 2n/m; objectives 2j-1 and 2j are a maximization pair on block j.
struct ProblemSpec {
  ProblemFamily family = ProblemFamily::OneMinMax;
  std::int32_t m = 2;
  std::int32_t n = 1;
  std::int32_t k = 0;  // OneJumpZeroJump only

  std::int32_t block_size() const { return 2 * n / m; }  // n'
  std::int32_t block_count() const { return m / 2; }
};

inline void validate_spec(const ProblemSpec& spec) {
  if (spec.m < 2 || spec.m % 2 != 0) {
    throw std::invalid_argument("ProblemSpec: m must be an even integer >= 2");
  }
  if (spec.n < 1) throw std::invalid_argument("ProblemSpec: n must be positive");
  if (spec.n % (spec.m / 2) != 0) {
    throw std::invalid_argument("ProblemSpec: n must be a multiple of m/2");
  }
  if (spec.family == ProblemFamily::OneJumpZeroJump) {
    const std::int32_t np = 2 * spec.n / spec.m;
    if (spec.k < 2 || 2 * spec.k > np) {
      throw std::invalid_argument(
          "ProblemSpec: OneJumpZeroJump needs 2 <= k <= n'/2 (n' = 2n/m), got k=" +
          std::to_string(spec.k) + " with n'=" + std::to_string(np));
    }
  } else if (spec.k != 0) {
    throw std::invalid_argument("ProblemSpec: k is only meaningful for OneJumpZeroJump");
  }
}

/// Jump value of a block with `ones` 1-bits: k + ones on the plateau
/// (ones <= n'-k) and at the all-ones point, n' - ones inside the valley.
inline std::int32_t jump_value(std::int32_t ones, std::int32_t n_prime, std::int32_t k) {
  if (k < 2 || k > n_prime - 1) {
    throw std::invalid_argument("jump_value: requires 2 <= k <= n'-1");
  }
  if (ones < 0 || ones > n_prime) {
    throw std::invalid_argument("jump_value: ones out of [0, n']");
  }
  if (ones <= n_prime - k || ones == n_prime) return k + ones;
  return n_prime - ones;
}

/// Objective vector of x under the given benchmark family.
/// The spec is assumed valid (validated once at the configuration boundary).
inline ObjectiveVector evaluate(const ProblemSpec& spec, const Bitstring& x) {
  assert(spec.m >= 2 && spec.m % 2 == 0);
  if (static_cast<std::int32_t>(x.size()) != spec.n) {
    throw std::invalid_argument("evaluate: bitstring length does not match spec.n");
  }
  const std::int32_t np = spec.block_size();
  ObjectiveVector f(static_cast<std::size_t>(spec.m));
  for (std::int32_t j = 0; j < spec.block_count(); ++j) {
    const std::size_t lo = static_cast<std::size_t>(j) * np;
    const std::size_t len = static_cast<std::size_t>(np);
    switch (spec.family) {
      case ProblemFamily::OneMinMax: {
        const auto ones = static_cast<std::int32_t>(x.count_ones(lo, len));
        f[2 * j] = ones;
        f[2 * j + 1] = np - ones;
        break;
      }
      case ProblemFamily::LeadingOnesTrailingZeroes: {
        f[2 * j] = static_cast<std::int32_t>(x.run_of_ones(lo, len));
        f[2 * j + 1] = static_cast<std::int32_t>(x.run_of_trailing_zeros(lo, len));
        break;
      }
      case ProblemFamily::OneJumpZeroJump: {
        const auto ones = static_cast<std::int32_t>(x.count_ones(lo, len));
        f[2 * j] = jump_value(ones, np, spec.k);
        f[2 * j + 1] = jump_value(np - ones, np, spec.k);
        break;
      }
    }
  }
  return f;
}

namespace detail {

/// Per-block objective values attained on the Pareto front, ascending.
/// OMM/LOTZ: [0..n']. OJZJ: {k} U [2k..n'] U {n'+k}.
inline std::vector<std::int32_t> front_block_values(const ProblemSpec& spec) {
  const std::int32_t np = spec.block_size();
  std::vector<std::int32_t> vals;
  if (spec.family == ProblemFamily::OneJumpZeroJump) {
    vals.push_back(spec.k);
    for (std::int32_t v = 2 * spec.k; v <= np; ++v) vals.push_back(v);
    vals.push_back(np + spec.k);
  } else {
    for (std::int32_t v = 0; v <= np; ++v) vals.push_back(v);
  }
  return vals;
}

/// Constant pair sum on the front: f_{2j-1} + f_{2j} = C for every block.
inline std::int32_t front_pair_sum(const ProblemSpec& spec) {
  const std::int32_t np = spec.block_size();
  return spec.family == ProblemFamily::OneJumpZeroJump ? np + 2 * spec.k : np;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) {
      throw std::overflow_error("pareto front size exceeds 64 bits");
    }
    r *= base;
  }
  return r;
}

}  // namespace detail

/// Exact Pareto front size: (2n/m+1)^{m/2} for OMM and LOTZ,
/// (2n/m-2k+3)^{m/2} for OJZJ.
inline std::uint64_t pareto_front_size(const ProblemSpec& spec) {
  validate_spec(spec);
  const auto per_block = static_cast<std::uint64_t>(detail::front_block_values(spec).size());
  return detail::checked_pow(per_block, static_cast<std::uint32_t>(spec.m / 2));
}

/// Archive capacity at which SPEA2 provably preserves the non-dominated set:
/// the maximum number of distinct non-dominated objective vectors.
/// OMM: (2n/m+1)^{m/2}; LOTZ: (2n/m+1)^{m-1}; OJZJ: (2n/m-2k+3)^{m/2}.
inline std::uint64_t required_archive_size(const ProblemSpec& spec) {
  validate_spec(spec);
  if (spec.family == ProblemFamily::LeadingOnesTrailingZeroes) {
    return detail::checked_pow(static_cast<std::uint64_t>(spec.block_size()) + 1,
                               static_cast<std::uint32_t>(spec.m - 1));
  }
  return pareto_front_size(spec);
}

/// Lazily iterable closed-form Pareto front: the product of per-block value
/// sets, each block contributing the pair (v, C - v).
class ParetoFront {
 public:
  explicit ParetoFront(const ProblemSpec& spec) : spec_(spec) {
    validate_spec(spec);
    block_values_ = detail::front_block_values(spec);
    pair_sum_ = detail::front_pair_sum(spec);
  }

  const ProblemSpec& spec() const { return spec_; }
  const std::vector<std::int32_t>& block_values() const { return block_values_; }
  std::int32_t pair_sum() const { return pair_sum_; }

  std::uint64_t size() const {
    return detail::checked_pow(block_values_.size(),
                               static_cast<std::uint32_t>(spec_.m / 2));
  }

  /// Membership test without materialization.
  bool contains(const ObjectiveVector& v) const {
    if (v.size() != static_cast<std::size_t>(spec_.m)) return false;
    for (std::int32_t j = 0; j < spec_.block_count(); ++j) {
      const std::int32_t a = v[2 * j];
      if (!std::binary_search(block_values_.begin(), block_values_.end(), a)) return false;
      if (v[2 * j + 1] != pair_sum_ - a) return false;
    }
    return true;
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ObjectiveVector;
    using difference_type = std::ptrdiff_t;
    using pointer = const ObjectiveVector*;
    using reference = const ObjectiveVector&;

    iterator() = default;
    iterator(const ParetoFront* front, bool at_end)
        : front_(front), done_(at_end) {
      if (front_ == nullptr || done_) return;
      odometer_.assign(static_cast<std::size_t>(front_->spec_.m / 2), 0);
      current_.resize(static_cast<std::size_t>(front_->spec_.m));
      refresh();
    }

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      const auto blocks = odometer_.size();
      const auto radix = front_->block_values_.size();
      std::size_t j = blocks;
      while (j > 0) {
        --j;
        if (++odometer_[j] < radix) {
          refresh();
          return *this;
        }
        odometer_[j] = 0;
      }
      done_ = true;
      return *this;
    }

    iterator operator++(int) {
      iterator tmp = *this;
      ++(*this);
      return tmp;
    }

    bool operator==(const iterator& other) const {
      return done_ == other.done_ && (done_ || odometer_ == other.odometer_);
    }

   private:
    void refresh() {
      for (std::size_t j = 0; j < odometer_.size(); ++j) {
        const std::int32_t v = front_->block_values_[odometer_[j]];
        current_[2 * j] = v;
        current_[2 * j + 1] = front_->pair_sum_ - v;
      }
    }

    const ParetoFront* front_ = nullptr;
    bool done_ = true;
    std::vector<std::size_t> odometer_;
    ObjectiveVector current_;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

 private:
  ProblemSpec spec_;
  std::vector<std::int32_t> block_values_;
  std::int32_t pair_sum_;
};

inline ParetoFront pareto_front(const ProblemSpec& spec) { return ParetoFront(spec); }

inline constexpr std::uint64_t kFrontMaterializationLimit = 10'000'000;

/// Hash-set form of the front, for coverage checks. Refuses to materialize
/// more than kFrontMaterializationLimit points.
inline ObjectiveSet pareto_front_set(const ProblemSpec& spec) {
  const ParetoFront front(spec);
  const std::uint64_t size = front.size();
  if (size > kFrontMaterializationLimit) {
    throw std::length_error("pareto_front_set: front of " + std::to_string(size) +
                            " points exceeds the materialization limit");
  }
  ObjectiveSet set;
  set.reserve(static_cast<std::size_t>(size));
  for (const ObjectiveVector& v : front) set.insert(v);
  return set;
}

enum class OjzjClass { NotParetoOptimal, Internal, Extreme };

/// OneJumpZeroJump solutions are Pareto optimal iff every block's ones-count
/// lies in {0, n'} U [k..n'-k]; internal optima keep every block inside
/// [k..n'-k], extreme optima have some block at 0 or n' ones.
inline OjzjClass classify_ojzj_solution(const ProblemSpec& spec, const Bitstring& x) {
  if (spec.family != ProblemFamily::OneJumpZeroJump) {
    throw std::invalid_argument("classify_ojzj_solution: spec must be OneJumpZeroJump");
  }
  validate_spec(spec);
  if (static_cast<std::int32_t>(x.size()) != spec.n) {
    throw std::invalid_argument("classify_ojzj_solution: bitstring length mismatch");
  }
  const std::int32_t np = spec.block_size();
  bool has_extreme_block = false;
  for (std::int32_t j = 0; j < spec.block_count(); ++j) {
    const auto ones = static_cast<std::int32_t>(
        x.count_ones(static_cast<std::size_t>(j) * np, static_cast<std::size_t>(np)));
    if (ones == 0 || ones == np) {
      has_extreme_block = true;
    } else if (ones < spec.k || ones > np - spec.k) {
      return OjzjClass::NotParetoOptimal;
    }
  }
  return has_extreme_block ? OjzjClass::Extreme : OjzjClass::Internal;
}

}  // namespace moea
