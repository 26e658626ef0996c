#include "pk/automorphic.hpp"

#include <algorithm>

#include "pk/errors.hpp"

namespace pk {

InfinityTypeData::InfinityTypeData(std::string label, int n, std::int64_t w,
                                   std::vector<HalfInt> a, bool conjugate_self_dual,
                                   bool discrete_series_split_place)
    : label_(std::move(label)),
      n_(n),
      w_(w),
      a_(std::move(a)),
      conjugate_self_dual_(conjugate_self_dual),
      discrete_series_split_place_(discrete_series_split_place) {
  if (n_ < 1) throw InvalidDataError("representation " + label_ + ": n must be positive");
  if (a_.size() != static_cast<std::size_t>(n_)) {
    throw InvalidDataError("representation " + label_ + ": expected " + std::to_string(n_) +
                           " exponents, got " + std::to_string(a_.size()));
  }
  for (std::size_t i = 1; i < a_.size(); ++i) {
    if (a_[i - 1] <= a_[i]) {
      throw InvalidDataError("representation " + label_ +
                             ": exponents a_i must be strictly decreasing (regularity)");
    }
  }
  const auto offset = half_of(n_ - 1);
  for (const auto& x : a_) {
    if (!(x - offset).is_integer()) {
      throw AlgebraicityError("representation " + label_ + ": a_i = " + x.str() +
                              " is not in Z + (n-1)/2");
    }
  }
}

bool InfinityTypeData::very_regular() const {
  for (int i = 1; i < n_; ++i) {
    if (a(i) - a(i + 1) < HalfInt(3)) return false;
  }
  return true;
}

RegularMotiveData dict_to_motive(const InfinityTypeData& pi) {
  const int n = pi.n();
  const auto offset = half_of(n - 1);
  std::vector<std::int64_t> p(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto value = offset - pi.a(n + 1 - i);
    if (!value.is_integer()) {
      throw AlgebraicityError("Hodge index " + value.str() + " of " + pi.label() +
                              " is not an integer");
    }
    p[static_cast<std::size_t>(i - 1)] = value.to_integer();
  }
  return {pi.label(), n, pi.w() + n - 1, std::move(p)};
}

MotiveTag motive_tag(const InfinityTypeData& pi) {
  return MotiveTag::named(pi.label(), pi.n(), pi.conjugate_self_dual());
}

namespace {

// Twice the forbidden value -(w + w')/2.
std::int64_t twice_center(const InfinityTypeData& pi, const InfinityTypeData& pip) {
  return -(pi.w() + pip.w());
}

void require_critical_pair(const InfinityTypeData& pi, const InfinityTypeData& pip) {
  const auto center = twice_center(pi, pip);
  for (int i = 1; i <= pi.n(); ++i) {
    for (int j = 1; j <= pip.n(); ++j) {
      if ((pi.a(i) + pip.a(j)).twice() == center) {
        throw NotCriticalPairError("a_" + std::to_string(i) + " + b_" + std::to_string(j) +
                                   " = -(w + w')/2; the pair has no critical values");
      }
    }
  }
}

}  // namespace

bool pair_is_critical(const InfinityTypeData& pi, const InfinityTypeData& pip) {
  const auto center = twice_center(pi, pip);
  for (int i = 1; i <= pi.n(); ++i) {
    for (int j = 1; j <= pip.n(); ++j) {
      if ((pi.a(i) + pip.a(j)).twice() == center) return false;
    }
  }
  return true;
}

HalfIntInterval pair_critical_points(const InfinityTypeData& pi, const InfinityTypeData& pip) {
  require_critical_pair(pi, pip);
  const HalfInt ww(pi.w() + pip.w());
  // Strict bounds lower < m < upper; every bound lies on the lattice Z + (n+n')/2.
  bool first = true;
  HalfInt lower;
  HalfInt upper;
  for (int i = 1; i <= pi.n(); ++i) {
    for (int j = 1; j <= pip.n(); ++j) {
      const auto s = pi.a(i) + pip.a(j);
      HalfInt lo;
      HalfInt hi;
      if (s.twice() > twice_center(pi, pip)) {
        lo = -s;
        hi = s + ww + HalfInt(1);
      } else {
        lo = s + ww;
        hi = -s + HalfInt(1);
      }
      if (first || lo > lower) lower = lo;
      if (first || hi < upper) upper = hi;
      first = false;
    }
  }
  return {lower + HalfInt(1), upper - HalfInt(1)};
}

SplitIndices split_indices_auto(const InfinityTypeData& pi, const InfinityTypeData& pip) {
  require_critical_pair(pi, pip);
  const int n = pi.n();
  SplitIndices sp{std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
  const auto center_twice = twice_center(pi, pip);
  for (int j = 1; j <= pip.n(); ++j) {
    // Number of cuts -a_i - W/2 above a'_j, i.e. a_i + a'_j < -W/2.
    int k = 0;
    for (int i = 1; i <= n; ++i) {
      if ((pi.a(i) + pip.a(j)).twice() < center_twice) ++k;
    }
    ++sp.values[static_cast<std::size_t>(k)];
  }
  return sp;
}

PeriodMonomial conjecture_rhs_automorphic(const InfinityTypeData& pi,
                                          const InfinityTypeData& pip, HalfInt m) {
  const auto legal = pair_critical_points(pi, pip);
  if (!legal.contains(m)) {
    throw NotCriticalError("m = " + m.str() + " is not critical for " + pi.label() + " x " +
                           pip.label() + "; critical m are " + legal.lo.str() + " .. " +
                           legal.hi.str() + " (step 1)");
  }
  const std::int64_t n = pi.n();
  const std::int64_t np = pip.n();
  const auto twice_exponent = n * np * m.twice();
  if (twice_exponent % 2 != 0) {
    throw NonIntegerExponentError("exponent n n' m is not an integer");
  }
  const auto sp = split_indices_auto(pi, pip);
  const auto sp_sym = split_indices_auto(pip, pi);
  const auto tag = motive_tag(pi);
  const auto tag_p = motive_tag(pip);
  PeriodMonomial x("E(Π)E(Π');K");
  x.multiply(PeriodSymbol::two_pi_i(), twice_exponent / 2);
  for (int j = 0; j <= pi.n(); ++j) {
    x.multiply(PeriodSymbol::automorphic(j, tag), sp[static_cast<std::size_t>(j)]);
  }
  for (int k = 0; k <= pip.n(); ++k) {
    x.multiply(PeriodSymbol::automorphic(k, tag_p), sp_sym[static_cast<std::size_t>(k)]);
  }
  return x;
}

PeriodMonomial substitute_automorphic_periods(const PeriodMonomial& x) {
  PeriodMonomial out(x.field());
  for (const auto& [s, e] : x.factors()) {
    if (s.kind == SymbolKind::PAuto) {
      auto tag = s.tag;
      tag.conjugate_self_dual = false;
      out.multiply(PeriodSymbol::q_upper(s.index, tag), e);
    } else {
      out.multiply(s, e);
    }
  }
  return out;
}

std::string to_string(KnownCase c) {
  switch (c) {
    case KnownCase::Case1: return "Case1";
    case KnownCase::Case2: return "Case2";
    case KnownCase::Case3: return "Case3";
    case KnownCase::Unknown: return "Unknown";
  }
  return "Unknown";
}

CaseReport classify_known_case(const InfinityTypeData& pi_in, const InfinityTypeData& pip_in,
                               HalfInt m) {
  CaseReport report;
  report.swapped = pi_in.n() < pip_in.n();
  const auto& pi = report.swapped ? pip_in : pi_in;
  const auto& pip = report.swapped ? pi_in : pip_in;
  const int n = pi.n();
  const int np = pip.n();

  report.very_regular_pi = pi.very_regular();
  report.very_regular_pip = pip.very_regular();

  std::vector<std::string> common;
  auto gap_failures = [&common](const InfinityTypeData& x) {
    for (int i = 1; i < x.n(); ++i) {
      const auto gap = x.a(i) - x.a(i + 1);
      if (gap < HalfInt(3)) {
        common.push_back(x.label() + " not very regular: a_" + std::to_string(i) + " - a_" +
                         std::to_string(i + 1) + " = " + gap.str() + " < 3");
      }
    }
  };
  gap_failures(pi);
  gap_failures(pip);

  if (!pair_is_critical(pi, pip)) {
    common.push_back("pair is not critical");
  } else if (!pair_critical_points(pi, pip).contains(m)) {
    common.push_back("m = " + m.str() + " is not critical");
  }
  if (!pi.conjugate_self_dual()) common.push_back(pi.label() + " not conjugate self-dual");
  if (n % 2 == 0 && !pi.discrete_series_split_place()) {
    common.push_back(pi.label() + " has even rank and lacks the split-place discrete series hypothesis");
  }

  // Conditions on Pi' that every case except n' = 1 imposes.
  std::vector<std::string> pip_conditions;
  if (!pip.conjugate_self_dual()) pip_conditions.push_back(pip.label() + " not conjugate self-dual");
  if (np % 2 == 0 && !pip.discrete_series_split_place()) {
    pip_conditions.push_back(pip.label() +
                             " has even rank and lacks the split-place discrete series hypothesis");
  }

  auto finish = [&](KnownCase c, std::vector<std::string> extra) {
    if (common.empty() && extra.empty()) {
      report.known_case = c;
      report.failed_conditions.clear();
      return true;
    }
    return false;
  };

  if (np == 1 && finish(KnownCase::Case1, {})) return report;

  std::vector<std::string> case2 = pip_conditions;
  if (!(n > np)) case2.push_back("case 2 needs n > n'");
  if ((n + np) % 2 == 0) case2.push_back("case 2 needs n and n' of different parity");
  if (pair_is_critical(pi, pip)) {
    const auto sp = split_indices_auto(pi, pip);
    for (int j = 0; j <= n; ++j) {
      if (sp[static_cast<std::size_t>(j)] > 1) {
        case2.push_back("case 2 needs the b_j in different gaps: sp(" + std::to_string(j) +
                        ") = " + std::to_string(sp[static_cast<std::size_t>(j)]));
      }
    }
  }
  if (finish(KnownCase::Case2, case2)) return report;

  std::vector<std::string> case3 = pip_conditions;
  if (m != HalfInt(1)) case3.push_back("case 3 needs m = 1");
  if ((n + np) % 2 != 0) case3.push_back("case 3 needs n and n' of the same parity");
  if (finish(KnownCase::Case3, case3)) return report;

  report.known_case = KnownCase::Unknown;
  report.failed_conditions = common;
  if (np != 1) report.failed_conditions.push_back("case 1 needs n' = 1");
  for (auto& c : case2) report.failed_conditions.push_back(std::move(c));
  for (auto& c : case3) {
    if (std::find(report.failed_conditions.begin(), report.failed_conditions.end(), c) ==
        report.failed_conditions.end()) {
      report.failed_conditions.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace pk
