#include "pk/hodge.hpp"

#include <algorithm>

#include "pk/errors.hpp"

namespace pk {

RegularMotiveData::RegularMotiveData(std::string label, int rank, std::int64_t weight,
                                     std::vector<std::int64_t> hodge_p)
    : label_(std::move(label)), rank_(rank), weight_(weight), hodge_p_(std::move(hodge_p)) {
  if (rank_ < 1) throw InvalidDataError("motive " + label_ + ": rank must be positive");
  if (hodge_p_.size() != static_cast<std::size_t>(rank_)) {
    throw InvalidDataError("motive " + label_ + ": expected " + std::to_string(rank_) +
                           " Hodge indices, got " + std::to_string(hodge_p_.size()));
  }
  for (std::size_t i = 1; i < hodge_p_.size(); ++i) {
    if (hodge_p_[i - 1] <= hodge_p_[i]) {
      throw InvalidDataError("motive " + label_ +
                             ": Hodge indices must be strictly decreasing (regularity)");
    }
  }
}

HodgeMultiset::HodgeMultiset(std::int64_t weight, std::map<Pair, std::int64_t> multiplicities)
    : weight_(weight), pairs_(std::move(multiplicities)) {
  for (const auto& [pq, h] : pairs_) {
    if (h <= 0) throw InvalidDataError("Hodge multiplicities must be positive");
    if (pq.first + pq.second != weight_) {
      throw InvalidDataError("Hodge pair (" + std::to_string(pq.first) + "," +
                             std::to_string(pq.second) + ") is not of weight " +
                             std::to_string(weight_));
    }
  }
  for (const auto& [pq, h] : pairs_) {
    if (multiplicity(pq.second, pq.first) != h) {
      throw InvalidDataError("Hodge type is not closed under (p,q) -> (q,p)");
    }
  }
}

std::int64_t HodgeMultiset::multiplicity(std::int64_t p, std::int64_t q) const {
  auto it = pairs_.find({p, q});
  return it == pairs_.end() ? 0 : it->second;
}

std::int64_t HodgeMultiset::total_multiplicity() const {
  std::int64_t total = 0;
  for (const auto& [pq, h] : pairs_) total += h;
  return total;
}

namespace {

// Toggles a trailing "^c" / "^v" decoration, keeping the order "^c^v".
std::string toggle_decoration(const std::string& label, char which) {
  std::string base = label;
  bool conj = false;
  bool dual = false;
  for (;;) {
    if (base.size() > 2 && base.ends_with("^v") && !dual) {
      dual = true;
    } else if (base.size() > 2 && base.ends_with("^c") && !conj) {
      conj = true;
    } else {
      break;
    }
    base.resize(base.size() - 2);
  }
  if (which == 'c') conj = !conj;
  if (which == 'v') dual = !dual;
  return base + (conj ? "^c" : "") + (dual ? "^v" : "");
}

}  // namespace

RegularMotiveData conjugate(const RegularMotiveData& m) {
  const int n = m.rank();
  std::vector<std::int64_t> p(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i - 1)] = m.weight() - m.p(n + 1 - i);
  return {toggle_decoration(m.label(), 'c'), n, m.weight(), std::move(p)};
}

RegularMotiveData dual(const RegularMotiveData& m) {
  const int n = m.rank();
  std::vector<std::int64_t> p(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i - 1)] = -m.p(n + 1 - i);
  return {toggle_decoration(m.label(), 'v'), n, -m.weight(), std::move(p)};
}

RegularMotiveData tate_twist(const RegularMotiveData& m, std::int64_t k) {
  if (k == 0) return m;
  auto p = m.hodge_p();
  for (auto& x : p) x -= k;
  return {m.label() + "(" + std::to_string(k) + ")", m.rank(), m.weight() - 2 * k,
          std::move(p)};
}

RegularMotiveData determinant_motive(const RegularMotiveData& m) {
  if (m.rank() == 1) return m;
  std::int64_t sum = 0;
  for (auto x : m.hodge_p()) sum += x;
  return {"det(" + m.label() + ")", 1, m.rank() * m.weight(), {sum}};
}

HodgeMultiset restriction_tensor(const RegularMotiveData& m, const RegularMotiveData& mp) {
  const std::int64_t w = m.weight() + mp.weight();
  const auto mc = conjugate(m);
  const auto mpc = conjugate(mp);
  std::map<HodgeMultiset::Pair, std::int64_t> pairs;
  for (int a = 1; a <= m.rank(); ++a) {
    for (int b = 1; b <= mp.rank(); ++b) {
      const auto p = m.p(a) + mp.p(b);
      ++pairs[{p, w - p}];
      const auto pc = mc.p(a) + mpc.p(b);
      ++pairs[{pc, w - pc}];
    }
  }
  return {w, std::move(pairs)};
}

HodgeMultiset restriction(const RegularMotiveData& m) {
  return restriction_tensor(m, RegularMotiveData("1", 1, 0, {0}));
}

bool has_no_pp_class(const HodgeMultiset& h) {
  return std::none_of(h.pairs().begin(), h.pairs().end(),
                      [](const auto& entry) { return entry.first.first == entry.first.second; });
}

}  // namespace pk
