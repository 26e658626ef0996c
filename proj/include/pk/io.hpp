#pragma once

#include <filesystem>

#include <json.hpp>

#include "pk/automorphic.hpp"
#include "pk/combinatorics.hpp"
#include "pk/half_int.hpp"
#include "pk/hodge.hpp"
#include "pk/lfactor.hpp"
#include "pk/period_algebra.hpp"

namespace pk {

using json = nlohmann::json;

/// Reads and parses a JSON document; throws ParseError on I/O or syntax errors.
json read_json_file(const std::filesystem::path& path);

/// Integers or strings "k" / "k/2". Floating point is rejected.
HalfInt half_int_from_json(const json& j);
json to_json(HalfInt h);

/// {"label", "rank", "weight", "hodge_p"}. Throws ParseError on any schema or
/// invariant violation.
RegularMotiveData motive_from_json(const json& j);
json to_json(const RegularMotiveData& m);

/// {"label", "n", "w", "a", "conjugate_self_dual"?, "discrete_series_split_place"?}.
InfinityTypeData rep_from_json(const json& j);
json to_json(const InfinityTypeData& pi);

json to_json(const HodgeMultiset& h);
json to_json(const GammaFactor& g);
json to_json(const CriticalInterval& c);
json to_json(const HalfIntInterval& c);
json to_json(const IndexPairSet& s);
json to_json(const SplitIndices& s);
json to_json(const PeriodMonomial& x);
json to_json(const CaseReport& r);

}  // namespace pk
