#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pk/automorphic.hpp"
#include "pk/hodge.hpp"
#include "pk/random.hpp"

namespace pk::testing {

inline RegularMotiveData motive(std::string label, std::int64_t weight,
                                std::vector<std::int64_t> p) {
  const int n = static_cast<int>(p.size());
  return RegularMotiveData(std::move(label), n, weight, std::move(p));
}

// The running example: elliptic-curve shape against a rank-one motive.
inline RegularMotiveData example_m() { return motive("M", 1, {1, 0}); }
inline RegularMotiveData example_mp() { return motive("M'", 0, {1}); }

inline Rng rng_for(const char* stream, std::uint64_t index = 0) {
  return Rng(derive_seed(7, stream, index));
}

}  // namespace pk::testing
