#pragma once

#include <set>
#include <utility>
#include <vector>

#include "pk/hodge.hpp"

namespace pk {

/// A subset of {1..n} x {1..np}.
struct IndexPairSet {
  int n = 0;
  int np = 0;
  std::set<std::pair<int, int>> members;

  bool contains(int a, int b) const { return members.count({a, b}) != 0; }
  std::size_t size() const { return members.size(); }

  friend bool operator==(const IndexPairSet&, const IndexPairSet&) = default;
};

/// sp(0..n): lengths of the parts of -r_{n'} > ... > -r_1 cut by p_i - w/2.
struct SplitIndices {
  std::vector<int> values;

  int operator[](std::size_t i) const { return values[i]; }
  int sum() const;

  friend bool operator==(const SplitIndices&, const SplitIndices&) = default;
};

/// Throws PpClassError naming the first (a,b) with p_a + r_b == w/2.
void require_no_pp_class(const RegularMotiveData& m, const RegularMotiveData& mp);

/// A = {(a,b) | p_a + r_b > w/2}.
IndexPairSet set_A(const RegularMotiveData& m, const RegularMotiveData& mp);
/// T = {(t,u) | p^c_t + r^c_u > w/2}.
IndexPairSet set_T(const RegularMotiveData& m, const RegularMotiveData& mp);

SplitIndices split_indices(const RegularMotiveData& m, const RegularMotiveData& mp);

/// (t,u) in A and t' <= t, u' <= u imply (t',u') in A.
bool is_tableau(const IndexPairSet& a);

/// (t,u) in T iff (n+1-t, n'+1-u) not in A, for every pair.
bool duality_holds(const IndexPairSet& a, const IndexPairSet& t);

/// #{u | (t,u) in A} == sp(t) + ... + sp(n) for every t.
bool cardinality_lemma_holds(const IndexPairSet& a, const SplitIndices& sp);

bool verify_cardinality_lemma(const RegularMotiveData& m, const RegularMotiveData& mp);

}  // namespace pk
