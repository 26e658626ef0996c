#include "pk/deligne.hpp"

#include "pk/errors.hpp"

namespace pk {

PairContext::PairContext(RegularMotiveData m, RegularMotiveData mp)
    : m_(std::move(m)), mp_(std::move(mp)) {
  if (m_.label() == mp_.label() && !(m_ == mp_)) {
    throw InvalidDataError("two different motives share the label " + m_.label());
  }
  require_no_pp_class(m_, mp_);
  a_ = set_A(m_, mp_);
  t_ = set_T(m_, mp_);
  sp_ = split_indices(m_, mp_);
  sp_sym_ = split_indices(mp_, m_);
}

CriticalInterval PairContext::critical() const {
  return critical_interval(restriction_tensor(m_, mp_));
}

bool PairContext::consistent() const {
  return a_ == set_A(m_, mp_) && t_ == set_T(m_, mp_) && sp_ == split_indices(m_, mp_) &&
         sp_sym_ == split_indices(mp_, m_);
}

PeriodMonomial deligne_period_raw(const PairContext& ctx) {
  const auto tag = ctx.tag();
  const auto tag_p = ctx.tag_p();
  PeriodMonomial x("EE'");
  for (const auto& [t, u] : ctx.A().members) {
    x.multiply(PeriodSymbol::q(t, tag), 1);
    x.multiply(PeriodSymbol::q(u, tag_p), 1);
  }
  // delta(M (x) M') ~ delta(M)^{n'} delta(M')^{n}
  x.multiply(PeriodSymbol::delta(tag), ctx.mp().rank());
  x.multiply(PeriodSymbol::delta(tag_p), ctx.m().rank());
  return x;
}

namespace {

PeriodMonomial period_core(const PairContext& ctx) {
  const auto tag = ctx.tag();
  const auto tag_p = ctx.tag_p();
  PeriodMonomial x("EE'");
  for (int j = 0; j <= ctx.m().rank(); ++j) {
    x.multiply(PeriodSymbol::q_upper(j, tag), ctx.sp()[static_cast<std::size_t>(j)]);
  }
  for (int k = 0; k <= ctx.mp().rank(); ++k) {
    x.multiply(PeriodSymbol::q_upper(k, tag_p), ctx.sp_sym()[static_cast<std::size_t>(k)]);
  }
  return x;
}

}  // namespace

PeriodMonomial deligne_period_simplified(const PairContext& ctx) {
  const std::int64_t n = ctx.m().rank();
  const std::int64_t np = ctx.mp().rank();
  // n n' (n + n' - 2) is always even.
  auto x = period_core(ctx);
  x.multiply(PeriodSymbol::two_pi_i(), -n * np * (n + np - 2) / 2);
  return x;
}

HalfIntInterval shifted_critical_points(const PairContext& ctx) {
  const auto crit = ctx.critical();
  const auto shift = half_of(ctx.m().rank() + ctx.mp().rank() - 2);
  return {HalfInt(crit.lo) - shift, HalfInt(crit.hi) - shift};
}

PeriodMonomial conjecture_rhs_motivic(const PairContext& ctx, HalfInt m) {
  const std::int64_t n = ctx.m().rank();
  const std::int64_t np = ctx.mp().rank();
  const auto point = m + half_of(n + np - 2);
  const auto crit = ctx.critical();
  if (!point.is_integer() || !crit.contains(point.to_integer())) {
    const auto legal = shifted_critical_points(ctx);
    throw NotCriticalError("m = " + m.str() + " is not critical; critical m are " +
                           legal.lo.str() + " .. " + legal.hi.str() + " (step 1)");
  }
  const auto twice_exponent = n * np * m.twice();
  if (twice_exponent % 2 != 0) {
    throw NonIntegerExponentError("exponent n n' m = " + std::to_string(twice_exponent) +
                                  "/2 is not an integer");
  }
  auto x = period_core(ctx);
  x.multiply(PeriodSymbol::two_pi_i(), twice_exponent / 2);
  return x;
}

}  // namespace pk
