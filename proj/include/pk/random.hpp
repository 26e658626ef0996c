#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "pk/automorphic.hpp"
#include "pk/hodge.hpp"

namespace pk {

/// Seeded generator for the verification suites. Only the raw mt19937_64
/// stream is used (its output is fixed by the standard), so instances are
/// identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Independent sub-seed for (stream, index), so parallel trials are
/// reproducible regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index);

/// Rank-n motive with weight in [-spread, spread] and distinct Hodge indices
/// drawn from [-spread - n, spread + n].
RegularMotiveData random_motive(Rng& rng, std::string label, int rank, int spread = 4);

/// Redraws until R(M (x) M') has no (p,p) class.
std::pair<RegularMotiveData, RegularMotiveData> random_hyp1_pair(Rng& rng, int n, int np,
                                                                 int spread = 4);

/// Swap-closed Hodge multiset without a (p,p) class.
HodgeMultiset random_swap_closed(Rng& rng, int max_pairs = 5, int spread = 6);

/// Regular algebraic infinity type of rank n.
InfinityTypeData random_rep(Rng& rng, std::string label, int n, int spread = 5);

/// Redraws until the pair is critical.
std::pair<InfinityTypeData, InfinityTypeData> random_critical_rep_pair(Rng& rng, int n, int np,
                                                                       int spread = 5);

}  // namespace pk
