#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "pk/half_int.hpp"
#include "pk/hodge.hpp"

namespace pk {

/// L_inf(s) = prod Gamma_C(s - p)^{mult} over the listed shifts.
struct GammaFactor {
  std::map<std::int64_t, std::int64_t> shifts;  // p -> multiplicity

  /// True iff the factor has a pole at the integer s.
  bool has_pole_at(std::int64_t s) const;

  friend bool operator==(const GammaFactor&, const GammaFactor&) = default;
};

/// Inclusive integer interval [lo, hi]; empty when lo > hi.
struct CriticalInterval {
  std::int64_t lo = 1;
  std::int64_t hi = 0;

  bool empty() const { return lo > hi; }
  bool contains(std::int64_t m) const { return lo <= m && m <= hi; }

  friend bool operator==(const CriticalInterval&, const CriticalInterval&) = default;
};

/// Inclusive interval of half-integers lying on a fixed lattice Z + offset.
struct HalfIntInterval {
  HalfInt lo = 1;
  HalfInt hi = 0;

  bool empty() const { return lo > hi; }
  bool contains(HalfInt m) const {
    return lo <= m && m <= hi && ((m - lo).is_integer());
  }

  friend bool operator==(const HalfIntInterval&, const HalfIntInterval&) = default;
};

/// Throws PpClassError if `h` has a (p,p) class.
GammaFactor gamma_factor(const HodgeMultiset& h);

/// Closed form: [1 + max p, min q] over pairs with p < q.
CriticalInterval critical_interval(const HodgeMultiset& h);

/// Scans integers for poles of L_inf(s, M) and L_inf(1 - s, dual M) directly.
/// Throws std::logic_error if the surviving set is not an interval.
CriticalInterval critical_interval_via_poles(const HodgeMultiset& h);

/// Hodge type of the dual motive: (-p, -q), weight -w.
HodgeMultiset dual_hodge(const HodgeMultiset& h);

}  // namespace pk
