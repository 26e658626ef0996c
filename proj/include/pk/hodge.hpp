#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pk {

/// Hodge combinatorics of a regular pure motive over a quadratic imaginary
/// field: rank n, weight w and Hodge indices p_1 > ... > p_n, q_i = w - p_i.
class RegularMotiveData {
 public:
  /// Throws InvalidDataError unless rank == hodge_p.size() >= 1 and the
  /// indices are strictly decreasing.
  RegularMotiveData(std::string label, int rank, std::int64_t weight,
                    std::vector<std::int64_t> hodge_p);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  std::int64_t weight() const { return weight_; }
  const std::vector<std::int64_t>& hodge_p() const { return hodge_p_; }

  /// 1-based accessors matching the usual indexing.
  std::int64_t p(int i) const { return hodge_p_[static_cast<std::size_t>(i - 1)]; }
  std::int64_t q(int i) const { return weight_ - p(i); }

  friend bool operator==(const RegularMotiveData&, const RegularMotiveData&) = default;

 private:
  std::string label_;
  int rank_;
  std::int64_t weight_;
  std::vector<std::int64_t> hodge_p_;
};

/// Hodge type of a possibly non-regular pure motive: (p,q) -> h_{p,q}.
class HodgeMultiset {
 public:
  using Pair = std::pair<std::int64_t, std::int64_t>;

  /// Throws InvalidDataError if some p + q != weight, a multiplicity is not
  /// positive, or the multiset is not closed under (p,q) -> (q,p).
  HodgeMultiset(std::int64_t weight, std::map<Pair, std::int64_t> multiplicities);

  std::int64_t weight() const { return weight_; }
  const std::map<Pair, std::int64_t>& pairs() const { return pairs_; }
  std::int64_t multiplicity(std::int64_t p, std::int64_t q) const;
  std::int64_t total_multiplicity() const;

  friend bool operator==(const HodgeMultiset&, const HodgeMultiset&) = default;

 private:
  std::int64_t weight_;
  std::map<Pair, std::int64_t> pairs_;
};

/// M^c: p^c_i = w - p_{n+1-i}.
RegularMotiveData conjugate(const RegularMotiveData& m);
/// M^v: weight -w, p_i = -p_{n+1-i}.
RegularMotiveData dual(const RegularMotiveData& m);
/// M(k): weight w - 2k, p_i - k.
RegularMotiveData tate_twist(const RegularMotiveData& m, std::int64_t k);
/// det(M): rank 1, weight n*w, p = sum of p_i.
RegularMotiveData determinant_motive(const RegularMotiveData& m);

/// Hodge type of R_{K/Q}(M (x) M').
HodgeMultiset restriction_tensor(const RegularMotiveData& m, const RegularMotiveData& mp);

/// True iff no (w/2, w/2) class occurs.
bool has_no_pp_class(const HodgeMultiset& h);

/// Hodge type of R_{K/Q}(M) (the pairs of M and of M^c).
HodgeMultiset restriction(const RegularMotiveData& m);

}  // namespace pk
