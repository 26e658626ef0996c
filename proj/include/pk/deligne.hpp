#pragma once

#include "pk/combinatorics.hpp"
#include "pk/half_int.hpp"
#include "pk/hodge.hpp"
#include "pk/lfactor.hpp"
#include "pk/period_algebra.hpp"

namespace pk {

/// A pair (M, M') satisfying the no-(w/2,w/2)-class hypothesis, with its
/// index sets and split indices computed once.
class PairContext {
 public:
  /// Throws PpClassError if R(M (x) M') has a (p,p) class. Labels may coincide
  /// only if the two motives are identical.
  PairContext(RegularMotiveData m, RegularMotiveData mp);

  const RegularMotiveData& m() const { return m_; }
  const RegularMotiveData& mp() const { return mp_; }
  const IndexPairSet& A() const { return a_; }
  const IndexPairSet& T() const { return t_; }
  /// sp(j, M; M'), 0 <= j <= n.
  const SplitIndices& sp() const { return sp_; }
  /// sp(k, M'; M), 0 <= k <= n'.
  const SplitIndices& sp_sym() const { return sp_sym_; }

  MotiveTag tag() const { return MotiveTag::of(m_); }
  MotiveTag tag_p() const { return MotiveTag::of(mp_); }

  /// Critical interval of R(M (x) M').
  CriticalInterval critical() const;

  /// Checks the cached data against a fresh recomputation.
  bool consistent() const;

 private:
  RegularMotiveData m_;
  RegularMotiveData mp_;
  IndexPairSet a_;
  IndexPairSet t_;
  SplitIndices sp_;
  SplitIndices sp_sym_;
};

/// (prod_{(t,u) in A} Q_t(M) Q_u(M')) delta(M)^{n'} delta(M')^{n}.
PeriodMonomial deligne_period_raw(const PairContext& ctx);

/// (2 pi i)^{-nn'(n+n'-2)/2} prod_j Q^(j)(M)^{sp(j)} prod_k Q^(k)(M')^{sp'(k)}.
PeriodMonomial deligne_period_simplified(const PairContext& ctx);

/// Right-hand side of the Deligne conjecture at the shifted point
/// m + (n+n'-2)/2. Throws NotCriticalError when that point is not critical.
PeriodMonomial conjecture_rhs_motivic(const PairContext& ctx, HalfInt m);

/// The points m in Z + (n+n')/2 accepted by conjecture_rhs_motivic.
HalfIntInterval shifted_critical_points(const PairContext& ctx);

}  // namespace pk
