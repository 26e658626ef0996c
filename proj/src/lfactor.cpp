#include "pk/lfactor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pk/errors.hpp"

namespace pk {

namespace {

void require_hyp1(const HodgeMultiset& h) {
  for (const auto& [pq, mult] : h.pairs()) {
    if (pq.first == pq.second) {
      throw PpClassError("Hodge type has a (" + std::to_string(pq.first) + "," +
                         std::to_string(pq.second) + ") class; L_inf is undefined");
    }
  }
  if (h.pairs().empty()) throw InvalidDataError("empty Hodge type");
}

}  // namespace

bool GammaFactor::has_pole_at(std::int64_t s) const {
  // Gamma_C(s - p) has poles where s - p is a non-positive integer.
  return std::any_of(shifts.begin(), shifts.end(),
                     [s](const auto& entry) { return s <= entry.first; });
}

GammaFactor gamma_factor(const HodgeMultiset& h) {
  require_hyp1(h);
  GammaFactor g;
  for (const auto& [pq, mult] : h.pairs()) {
    if (pq.first < pq.second) g.shifts[pq.first] += mult;
  }
  return g;
}

HodgeMultiset dual_hodge(const HodgeMultiset& h) {
  std::map<HodgeMultiset::Pair, std::int64_t> pairs;
  for (const auto& [pq, mult] : h.pairs()) pairs[{-pq.first, -pq.second}] = mult;
  return {-h.weight(), std::move(pairs)};
}

CriticalInterval critical_interval(const HodgeMultiset& h) {
  require_hyp1(h);
  auto max_p = std::numeric_limits<std::int64_t>::min();
  auto min_q = std::numeric_limits<std::int64_t>::max();
  for (const auto& [pq, mult] : h.pairs()) {
    if (pq.first < pq.second) {
      max_p = std::max(max_p, pq.first);
      min_q = std::min(min_q, pq.second);
    }
  }
  return {max_p + 1, min_q};
}

CriticalInterval critical_interval_via_poles(const HodgeMultiset& h) {
  const auto direct = gamma_factor(h);
  const auto dual = gamma_factor(dual_hodge(h));

  auto lo = std::numeric_limits<std::int64_t>::max();
  auto hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& [pq, mult] : h.pairs()) {
    lo = std::min({lo, pq.first, pq.second});
    hi = std::max({hi, pq.first, pq.second});
  }

  std::vector<std::int64_t> kept;
  for (auto m = lo - 1; m <= hi + 1; ++m) {
    if (!direct.has_pole_at(m) && !dual.has_pole_at(1 - m)) kept.push_back(m);
  }
  if (kept.empty()) return {};
  for (std::size_t i = 1; i < kept.size(); ++i) {
    if (kept[i] != kept[i - 1] + 1) {
      throw std::logic_error("critical points do not form an interval");
    }
  }
  return {kept.front(), kept.back()};
}

}  // namespace pk
