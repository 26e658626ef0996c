#pragma once

#include <string>
#include <vector>

#include "pk/combinatorics.hpp"
#include "pk/half_int.hpp"
#include "pk/hodge.hpp"
#include "pk/lfactor.hpp"
#include "pk/period_algebra.hpp"

namespace pk {

/// Infinity type (z^{a_i} zbar^{b_i}) of a regular algebraic cuspidal
/// representation of GL_n over K, with b_i = -w - a_i.
class InfinityTypeData {
 public:
  /// Throws InvalidDataError unless a has n strictly decreasing entries, and
  /// AlgebraicityError unless every a_i lies in Z + (n-1)/2.
  InfinityTypeData(std::string label, int n, std::int64_t w, std::vector<HalfInt> a,
                   bool conjugate_self_dual = false,
                   bool discrete_series_split_place = false);

  const std::string& label() const { return label_; }
  int n() const { return n_; }
  std::int64_t w() const { return w_; }
  const std::vector<HalfInt>& a() const { return a_; }
  HalfInt a(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
  HalfInt b(int i) const { return HalfInt(-w_) - a(i); }
  bool conjugate_self_dual() const { return conjugate_self_dual_; }
  bool discrete_series_split_place() const { return discrete_series_split_place_; }

  /// a_i - a_{i+1} >= 3 for every i.
  bool very_regular() const;

  friend bool operator==(const InfinityTypeData&, const InfinityTypeData&) = default;

 private:
  std::string label_;
  int n_;
  std::int64_t w_;
  std::vector<HalfInt> a_;
  bool conjugate_self_dual_;
  bool discrete_series_split_place_;
};

/// Motive predicted for Pi: rank n, weight w + n - 1, p_i = -a_{n+1-i} + (n-1)/2.
RegularMotiveData dict_to_motive(const InfinityTypeData& pi);

/// Tag of dict_to_motive(pi), carrying the conjugate self-dual flag.
MotiveTag motive_tag(const InfinityTypeData& pi);

/// a_i + a'_j != -(w + w')/2 for all i, j (a'_j being the z-exponents of Pi').
bool pair_is_critical(const InfinityTypeData& pi, const InfinityTypeData& pip);

/// Critical m in Z + (n+n')/2 from the two-sided inequalities on a_i + a'_j.
/// Throws NotCriticalPairError when the pair is not critical.
HalfIntInterval pair_critical_points(const InfinityTypeData& pi,
                                     const InfinityTypeData& pip);

/// sp(j, Pi; Pi'): parts of a'_1 > ... > a'_{n'} cut by -a_n - W/2 > ... > -a_1 - W/2.
SplitIndices split_indices_auto(const InfinityTypeData& pi, const InfinityTypeData& pip);

/// (2 pi i)^{nn'm} prod P^(j)(Pi)^{sp(j)} prod P^(k)(Pi')^{sp'(k)}.
PeriodMonomial conjecture_rhs_automorphic(const InfinityTypeData& pi,
                                          const InfinityTypeData& pip, HalfInt m);

/// Replaces every P^(j)[X] by Q^(j)[X].
PeriodMonomial substitute_automorphic_periods(const PeriodMonomial& x);

enum class KnownCase { Case1, Case2, Case3, Unknown };

std::string to_string(KnownCase c);

struct CaseReport {
  bool very_regular_pi = false;
  bool very_regular_pip = false;
  KnownCase known_case = KnownCase::Unknown;
  std::vector<std::string> failed_conditions;
  /// True when the roles of the two representations were exchanged so that n >= n'.
  bool swapped = false;
};

/// Which case of the known-results theorem (if any) covers (Pi x Pi', m).
CaseReport classify_known_case(const InfinityTypeData& pi, const InfinityTypeData& pip,
                               HalfInt m);

}  // namespace pk
