#include "pk/random.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pk {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
  return lo + static_cast<std::int64_t>(next() % span);
}

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

// Distinct integers drawn from [lo, hi], sorted decreasingly.
std::vector<std::int64_t> distinct_decreasing(Rng& rng, int count, std::int64_t lo,
                                              std::int64_t hi) {
  std::set<std::int64_t, std::greater<>> picked;
  while (static_cast<int>(picked.size()) < count) picked.insert(rng.uniform(lo, hi));
  return {picked.begin(), picked.end()};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  // FNV-1a over the stream name, then splitmix finalization.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix(mix(seed ^ h) + index);
}

RegularMotiveData random_motive(Rng& rng, std::string label, int rank, int spread) {
  const auto weight = rng.uniform(-spread, spread);
  auto p = distinct_decreasing(rng, rank, -spread - rank, spread + rank);
  return RegularMotiveData(std::move(label), rank, weight, std::move(p));
}

std::pair<RegularMotiveData, RegularMotiveData> random_hyp1_pair(Rng& rng, int n, int np,
                                                                 int spread) {
  for (;;) {
    auto m = random_motive(rng, "M", n, spread);
    auto mp = random_motive(rng, "M'", np, spread);
    if (has_no_pp_class(restriction_tensor(m, mp))) return {std::move(m), std::move(mp)};
  }
}

HodgeMultiset random_swap_closed(Rng& rng, int max_pairs, int spread) {
  const auto weight = rng.uniform(-spread, spread);
  const auto pairs = rng.uniform(1, max_pairs);
  std::map<HodgeMultiset::Pair, std::int64_t> mult;
  for (std::int64_t k = 0; k < pairs; ++k) {
    std::int64_t p = 0;
    do {
      p = rng.uniform(-spread, spread);
    } while (2 * p == weight);
    const auto times = rng.uniform(1, 2);
    mult[{p, weight - p}] += times;
    mult[{weight - p, p}] += times;
  }
  return HodgeMultiset(weight, std::move(mult));
}

InfinityTypeData random_rep(Rng& rng, std::string label, int n, int spread) {
  const auto w = rng.uniform(-spread, spread);
  const auto k = distinct_decreasing(rng, n, -spread - n, spread + n);
  std::vector<HalfInt> a;
  for (auto v : k) a.push_back(HalfInt::from_twice(2 * v + (n - 1)));
  return InfinityTypeData(std::move(label), n, w, std::move(a));
}

std::pair<InfinityTypeData, InfinityTypeData> random_critical_rep_pair(Rng& rng, int n, int np,
                                                                       int spread) {
  for (;;) {
    auto pi = random_rep(rng, "Pi", n, spread);
    auto pip = random_rep(rng, "Pi'", np, spread);
    if (pair_is_critical(pi, pip)) return {std::move(pi), std::move(pip)};
  }
}

}  // namespace pk
