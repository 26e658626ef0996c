#include "pk/combinatorics.hpp"

#include <numeric>

#include "pk/errors.hpp"

namespace pk {

namespace {

// Compare 2 * (x + y) with w in integers; ties are exactly the (p,p) classes.
int compare_to_half_weight(std::int64_t x, std::int64_t y, std::int64_t w, int a, int b) {
  const auto doubled = 2 * (x + y);
  if (doubled == w) {
    throw PpClassError("R(M(x)M') has a (w/2,w/2) class at (a,b) = (" + std::to_string(a) +
                           "," + std::to_string(b) + ")",
                       a, b);
  }
  return doubled > w ? 1 : -1;
}

}  // namespace

int SplitIndices::sum() const { return std::accumulate(values.begin(), values.end(), 0); }

void require_no_pp_class(const RegularMotiveData& m, const RegularMotiveData& mp) {
  const auto w = m.weight() + mp.weight();
  for (int a = 1; a <= m.rank(); ++a) {
    for (int b = 1; b <= mp.rank(); ++b) compare_to_half_weight(m.p(a), mp.p(b), w, a, b);
  }
}

IndexPairSet set_A(const RegularMotiveData& m, const RegularMotiveData& mp) {
  const auto w = m.weight() + mp.weight();
  IndexPairSet s{m.rank(), mp.rank(), {}};
  for (int a = 1; a <= m.rank(); ++a) {
    for (int b = 1; b <= mp.rank(); ++b) {
      if (compare_to_half_weight(m.p(a), mp.p(b), w, a, b) > 0) s.members.insert({a, b});
    }
  }
  return s;
}

IndexPairSet set_T(const RegularMotiveData& m, const RegularMotiveData& mp) {
  const auto w = m.weight() + mp.weight();
  const auto mc = conjugate(m);
  const auto mpc = conjugate(mp);
  IndexPairSet s{m.rank(), mp.rank(), {}};
  for (int t = 1; t <= m.rank(); ++t) {
    for (int u = 1; u <= mp.rank(); ++u) {
      // p^c_t + r^c_u = w - p_{n+1-t} - r_{n'+1-u}; name the underlying (a,b) on ties.
      const int a = m.rank() + 1 - t;
      const int b = mp.rank() + 1 - u;
      if (compare_to_half_weight(mc.p(t), mpc.p(u), w, a, b) > 0) s.members.insert({t, u});
    }
  }
  return s;
}

SplitIndices split_indices(const RegularMotiveData& m, const RegularMotiveData& mp) {
  const auto w = m.weight() + mp.weight();
  const int n = m.rank();
  SplitIndices sp{std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
  for (int b = 1; b <= mp.rank(); ++b) {
    // -r_b lies in part k, where k is the number of cuts p_i - w/2 above it.
    int k = 0;
    for (int i = 1; i <= n; ++i) {
      if (compare_to_half_weight(m.p(i), mp.p(b), w, i, b) > 0) ++k;
    }
    ++sp.values[static_cast<std::size_t>(k)];
  }
  return sp;
}

bool is_tableau(const IndexPairSet& a) {
  for (const auto& [t, u] : a.members) {
    for (int t2 = 1; t2 <= t; ++t2) {
      for (int u2 = 1; u2 <= u; ++u2) {
        if (!a.contains(t2, u2)) return false;
      }
    }
  }
  return true;
}

bool duality_holds(const IndexPairSet& a, const IndexPairSet& t) {
  if (a.n != t.n || a.np != t.np) return false;
  for (int i = 1; i <= a.n; ++i) {
    for (int j = 1; j <= a.np; ++j) {
      if (t.contains(i, j) == a.contains(a.n + 1 - i, a.np + 1 - j)) return false;
    }
  }
  return true;
}

bool cardinality_lemma_holds(const IndexPairSet& a, const SplitIndices& sp) {
  if (sp.values.size() != static_cast<std::size_t>(a.n + 1)) return false;
  for (int t = 1; t <= a.n; ++t) {
    int row = 0;
    for (int u = 1; u <= a.np; ++u) row += a.contains(t, u) ? 1 : 0;
    int tail = 0;
    for (int j = t; j <= a.n; ++j) tail += sp[static_cast<std::size_t>(j)];
    if (row != tail) return false;
  }
  return true;
}

bool verify_cardinality_lemma(const RegularMotiveData& m, const RegularMotiveData& mp) {
  return cardinality_lemma_holds(set_A(m, mp), split_indices(m, mp));
}

}  // namespace pk
