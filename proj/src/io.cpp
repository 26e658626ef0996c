#include "pk/io.hpp"

#include <fstream>
#include <sstream>

#include "pk/errors.hpp"

namespace pk {

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

HalfInt half_int_from_json(const json& j) {
  if (j.is_number_integer()) return HalfInt(j.get<std::int64_t>());
  if (j.is_string()) return HalfInt::parse(j.get<std::string>());
  throw ParseError("expected an integer or a string \"k/2\", got " + j.dump());
}

json to_json(HalfInt h) {
  if (h.is_integer()) return h.to_integer();
  return h.str();
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object, got " + j.dump());
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::string string_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

bool optional_bool(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return false;
  if (!it->is_boolean()) throw ParseError(std::string("field \"") + key + "\" must be a boolean");
  return it->get<bool>();
}

const json& array_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  return v;
}

int rank_field(const json& j, const char* key) {
  const auto v = integer_field(j, key);
  if (v < 1 || v > 1000) throw ParseError(std::string("field \"") + key + "\" out of range");
  return static_cast<int>(v);
}

}  // namespace

RegularMotiveData motive_from_json(const json& j) {
  auto label = string_field(j, "label");
  const int rank = rank_field(j, "rank");
  const auto weight = integer_field(j, "weight");
  std::vector<std::int64_t> p;
  for (const auto& v : array_field(j, "hodge_p")) {
    if (!v.is_number_integer()) throw ParseError("hodge_p entries must be integers");
    p.push_back(v.get<std::int64_t>());
  }
  try {
    return RegularMotiveData(std::move(label), rank, weight, std::move(p));
  } catch (const InvalidDataError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const RegularMotiveData& m) {
  return json{{"label", m.label()},
              {"rank", m.rank()},
              {"weight", m.weight()},
              {"hodge_p", m.hodge_p()}};
}

InfinityTypeData rep_from_json(const json& j) {
  auto label = string_field(j, "label");
  const int n = rank_field(j, "n");
  const auto w = integer_field(j, "w");
  std::vector<HalfInt> a;
  for (const auto& v : array_field(j, "a")) a.push_back(half_int_from_json(v));
  const bool csd = optional_bool(j, "conjugate_self_dual");
  const bool hyp2 = optional_bool(j, "discrete_series_split_place");
  try {
    return InfinityTypeData(std::move(label), n, w, std::move(a), csd, hyp2);
  } catch (const InvalidDataError& e) {
    throw ParseError(e.what());
  } catch (const AlgebraicityError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const InfinityTypeData& pi) {
  json a = json::array();
  for (auto v : pi.a()) a.push_back(to_json(v));
  return json{{"label", pi.label()},
              {"n", pi.n()},
              {"w", pi.w()},
              {"a", a},
              {"conjugate_self_dual", pi.conjugate_self_dual()},
              {"discrete_series_split_place", pi.discrete_series_split_place()}};
}

json to_json(const HodgeMultiset& h) {
  json pairs = json::array();
  for (const auto& [pq, mult] : h.pairs()) {
    pairs.push_back(json{{"p", pq.first}, {"q", pq.second}, {"multiplicity", mult}});
  }
  return json{{"weight", h.weight()}, {"pairs", pairs}};
}

json to_json(const GammaFactor& g) {
  json shifts = json::array();
  for (const auto& [p, mult] : g.shifts) shifts.push_back(json{{"p", p}, {"multiplicity", mult}});
  return json{{"shifts", shifts}};
}

json to_json(const CriticalInterval& c) {
  return json{{"lo", c.lo}, {"hi", c.hi}, {"empty", c.empty()}};
}

json to_json(const HalfIntInterval& c) {
  return json{{"lo", to_json(c.lo)}, {"hi", to_json(c.hi)}, {"empty", c.empty()}};
}

json to_json(const IndexPairSet& s) {
  json members = json::array();
  for (const auto& [a, b] : s.members) members.push_back(json::array({a, b}));
  return json{{"n", s.n}, {"np", s.np}, {"members", members}};
}

json to_json(const SplitIndices& s) { return s.values; }

json to_json(const PeriodMonomial& x) {
  json factors = json::array();
  for (const auto& [sym, e] : x.factors()) {
    factors.push_back(json{{"symbol", sym.str()}, {"exponent", e}});
  }
  return json{{"text", x.str()}, {"field", x.field()}, {"factors", factors}};
}

json to_json(const CaseReport& r) {
  return json{{"very_regular_pi", r.very_regular_pi},
              {"very_regular_pip", r.very_regular_pip},
              {"case", to_string(r.known_case)},
              {"failed_conditions", r.failed_conditions},
              {"swapped", r.swapped}};
}

}  // namespace pk
