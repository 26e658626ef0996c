#include "pk/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>

#include "pk/automorphic.hpp"
#include "pk/combinatorics.hpp"
#include "pk/deligne.hpp"
#include "pk/errors.hpp"
#include "pk/lfactor.hpp"
#include "pk/random.hpp"

namespace pk {

bool SuiteResult::ok() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.ok(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"combinatorics", "oracle",   "rewrite",
                                              "critical",      "periods",  "automorphic"};
  return names;
}

namespace {

// A check returns nullopt on success and a description of the instance on failure.
using Check = std::function<std::optional<std::string>(Rng&)>;

unsigned worker_count(const VerifyOptions& opts) {
  if (opts.threads != 0) return opts.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string describe(const RegularMotiveData& m) {
  std::string out = m.label() + "(n=" + std::to_string(m.rank()) +
                    ",w=" + std::to_string(m.weight()) + ",p=[";
  for (std::size_t i = 0; i < m.hodge_p().size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(m.hodge_p()[i]);
  }
  return out + "])";
}

std::string describe(const InfinityTypeData& pi) {
  std::string out = pi.label() + "(n=" + std::to_string(pi.n()) +
                    ",w=" + std::to_string(pi.w()) + ",a=[";
  for (std::size_t i = 0; i < pi.a().size(); ++i) {
    if (i != 0) out += ",";
    out += pi.a()[i].str();
  }
  return out + "])";
}

std::string describe(const HodgeMultiset& h) {
  std::string out = "H(w=" + std::to_string(h.weight()) + ",{";
  bool first = true;
  for (const auto& [pq, mult] : h.pairs()) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")x" +
           std::to_string(mult);
  }
  return out + "})";
}

// Runs `trials` instances of a check, each on its own seed-derived stream.
PropertyResult run_property(const std::string& name, const VerifyOptions& opts, int trials,
                            const Check& check) {
  const auto count = static_cast<std::size_t>(std::max(trials, 0));
  std::vector<std::optional<std::string>> outcome(count);
  auto one = [&](std::size_t idx) {
    Rng rng(derive_seed(opts.seed, name, idx));
    try {
      outcome[idx] = check(rng);
    } catch (const std::exception& e) {
      outcome[idx] = std::string("exception: ") + e.what();
    }
  };
  const unsigned workers = std::min<std::size_t>(worker_count(opts), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) one(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers) one(i);
      });
    }
  }
  PropertyResult r{name, count, 0, {}};
  for (std::size_t i = 0; i < count; ++i) {
    if (!outcome[i]) continue;
    if (r.failures == 0) r.first_failure = "trial " + std::to_string(i) + ": " + *outcome[i];
    ++r.failures;
  }
  return r;
}

// Deterministic checks over a fixed list of cases.
PropertyResult run_cases(const std::string& name, std::size_t count,
                         const std::function<std::optional<std::string>(std::size_t)>& check) {
  PropertyResult r{name, count, 0, {}};
  for (std::size_t i = 0; i < count; ++i) {
    std::optional<std::string> failure;
    try {
      failure = check(i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure) continue;
    if (r.failures == 0) r.first_failure = *failure;
    ++r.failures;
  }
  return r;
}

std::pair<int, int> random_shape(Rng& rng, int max_rank) {
  const auto n = static_cast<int>(rng.uniform(1, max_rank));
  const auto np = static_cast<int>(rng.uniform(1, max_rank));
  return {n, np};
}

std::optional<std::string> fail_pair(const std::string& what, const RegularMotiveData& m,
                                     const RegularMotiveData& mp) {
  return what + " for " + describe(m) + " x " + describe(mp);
}

SuiteResult combinatorics_suite(const VerifyOptions& opts) {
  SuiteResult s{"combinatorics", {}};
  const int k = opts.max_rank;
  s.properties.push_back(run_property("split_sum", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [m, mp] = random_hyp1_pair(rng, n, np);
    if (split_indices(m, mp).sum() != np) return fail_pair("sum of sp != n'", m, mp);
    if (split_indices(mp, m).sum() != n) return fail_pair("sum of sp' != n", m, mp);
    return std::optional<std::string>{};
  }));
  s.properties.push_back(run_property("split_conjugation_symmetry", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [m, mp] = random_hyp1_pair(rng, n, np);
    const auto sp = split_indices(m, mp);
    const auto spc = split_indices(conjugate(m), conjugate(mp));
    for (int i = 0; i <= n; ++i) {
      if (sp[static_cast<std::size_t>(i)] != spc[static_cast<std::size_t>(n - i)]) {
        return fail_pair("sp(" + std::to_string(i) + ") mismatch", m, mp);
      }
    }
    return std::optional<std::string>{};
  }));
  s.properties.push_back(run_property("cardinality_lemma", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [m, mp] = random_hyp1_pair(rng, n, np);
    if (!verify_cardinality_lemma(m, mp)) return fail_pair("cardinality lemma", m, mp);
    if (!verify_cardinality_lemma(mp, m)) return fail_pair("symmetric cardinality lemma", m, mp);
    return std::optional<std::string>{};
  }));
  s.properties.push_back(run_property("tableau", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [m, mp] = random_hyp1_pair(rng, n, np);
    if (!is_tableau(set_A(m, mp))) return fail_pair("A is not a tableau", m, mp);
    return std::optional<std::string>{};
  }));
  s.properties.push_back(run_property("a_t_duality", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [m, mp] = random_hyp1_pair(rng, n, np);
    if (!duality_holds(set_A(m, mp), set_T(m, mp))) return fail_pair("A/T duality", m, mp);
    return std::optional<std::string>{};
  }));
  return s;
}

SuiteResult oracle_suite(const VerifyOptions& opts) {
  SuiteResult s{"oracle", {}};
  for (int n = 1; n <= opts.max_rank; ++n) {
    for (int np = 1; np <= opts.max_rank; ++np) {
      if (n * np > opts.oracle_bound) continue;
      const auto name = "determinant_identity_" + std::to_string(n) + "x" + std::to_string(np);
      s.properties.push_back(run_property(name, opts, opts.trials, [n, np](Rng& rng) {
        auto [m, mp] = random_hyp1_pair(rng, n, np);
        const PairContext ctx(m, mp);
        const auto report = verify_proposition(ctx, n * np, 1);
        if (!report.ok) return fail_pair("det(Mat1) mismatch", m, mp);
        // Q-part of the raw period: prod over A, reindexed from the complement of T.
        PeriodMonomial q_raw;
        const auto raw = deligne_period_raw(ctx);
        for (const auto& [sym, e] : raw.factors()) {
          if (sym.kind == SymbolKind::Q) q_raw.multiply(sym, e);
        }
        if (!(q_raw == report.q_part)) return fail_pair("Q-part mismatch", m, mp);
        return std::optional<std::string>{};
      }));
    }
  }
  return s;
}

SuiteResult rewrite_suite(const VerifyOptions& opts) {
  SuiteResult s{"rewrite", {}};
  constexpr int kMaxN = 8;
  s.properties.push_back(run_cases("determinant_lemma", kMaxN, [](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    const auto d = derive_lemma_127(n);
    if (d.ok) return std::optional<std::string>{};
    return std::optional<std::string>("n=" + std::to_string(n) + ": " + d.lhs.str() + " vs " +
                                      d.rhs.str());
  }));
  std::vector<std::pair<int, int>> cases;
  for (int n = 1; n <= kMaxN; ++n) {
    for (int sv = 0; sv <= n; ++sv) cases.emplace_back(n, sv);
  }
  s.properties.push_back(run_cases("comparison_prop", cases.size(), [&cases](std::size_t i) {
    const auto [n, sv] = cases[i];
    const auto d = derive_comparison_prop(n, sv);
    if (d.ok) return std::optional<std::string>{};
    return std::optional<std::string>("n=" + std::to_string(n) + ", s=" + std::to_string(sv) +
                                      ": " + d.lhs.str() + " vs " + d.rhs.str());
  }));
  const int k = std::max(opts.max_rank, 1);
  s.properties.push_back(run_property("r1_involution", opts, opts.trials, [k](Rng& rng) {
    const int n = static_cast<int>(rng.uniform(1, k + 2));
    const int i = static_cast<int>(rng.uniform(1, n));
    const auto tag = MotiveTag::named("M", n);
    const auto x = PeriodMonomial::of(PeriodSymbol::q(i, tag.conjugated()));
    // Q_i(M^c) -> Q_{n+1-i}(M)^-1; conjugating back must recover the start.
    const auto once = apply_rule(x, RuleId::R1);
    const auto back = apply_rule(PeriodMonomial::of(PeriodSymbol::q(n + 1 - i, tag.conjugated()), 1),
                                 RuleId::R1);
    const auto expected_once = PeriodMonomial::of(PeriodSymbol::q(n + 1 - i, tag), -1);
    if (!(once == expected_once) || !(back == PeriodMonomial::of(PeriodSymbol::q(i, tag), -1))) {
      return std::optional<std::string>("R1 not an involution at n=" + std::to_string(n) +
                                        ", i=" + std::to_string(i));
    }
    return std::optional<std::string>{};
  }));
  s.properties.push_back(run_property("expand_homomorphism", opts, opts.trials, [k](Rng& rng) {
    auto random_mono = [&](const MotiveTag& tag, int n) {
      PeriodMonomial x;
      const auto factors = rng.uniform(1, 4);
      for (std::int64_t f = 0; f < factors; ++f) {
        const auto e = rng.uniform(-3, 3);
        switch (rng.uniform(0, 5)) {
          case 0: x.multiply(PeriodSymbol::two_pi_i(), e); break;
          case 1: x.multiply(PeriodSymbol::q(static_cast<int>(rng.uniform(1, n)), tag), e); break;
          case 2: x.multiply(PeriodSymbol::delta(tag), e); break;
          case 3: x.multiply(PeriodSymbol::big_delta(tag), e); break;
          case 4: x.multiply(PeriodSymbol::q_partial(static_cast<int>(rng.uniform(0, n)), tag), e); break;
          default: x.multiply(PeriodSymbol::q_upper(static_cast<int>(rng.uniform(0, n)), tag), e); break;
        }
      }
      return x;
    };
    const int n = static_cast<int>(rng.uniform(1, k + 1));
    const auto tag = MotiveTag::named("M", n);
    const auto x = random_mono(tag, n);
    const auto y = random_mono(tag, n);
    if (!(expand(x * y) == expand(x) * expand(y))) {
      return std::optional<std::string>("expand(xy) != expand(x)expand(y) for " + x.str() +
                                        " and " + y.str());
    }
    if (!(expand(expand(x)) == expand(x))) {
      return std::optional<std::string>("expand not idempotent on " + x.str());
    }
    return std::optional<std::string>{};
  }));
  return s;
}

SuiteResult critical_suite(const VerifyOptions& opts) {
  SuiteResult s{"critical", {}};
  s.properties.push_back(run_property("interval_vs_poles", opts, opts.trials, [](Rng& rng) {
    const auto h = random_swap_closed(rng);
    const auto closed = critical_interval(h);
    const auto scanned = critical_interval_via_poles(h);
    if (!(closed == scanned)) return std::optional<std::string>("mismatch on " + describe(h));
    if (closed.empty()) return std::optional<std::string>("empty interval on " + describe(h));
    if (closed.lo + closed.hi != h.weight() + 1) {
      return std::optional<std::string>("lo + hi != w + 1 on " + describe(h));
    }
    return std::optional<std::string>{};
  }));
  const int k = opts.max_rank;
  s.properties.push_back(run_property("tensor_interval_vs_poles", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [m, mp] = random_hyp1_pair(rng, n, np);
    const auto h = restriction_tensor(m, mp);
    if (!(critical_interval(h) == critical_interval_via_poles(h))) {
      return fail_pair("critical interval mismatch", m, mp);
    }
    return std::optional<std::string>{};
  }));
  return s;
}

SuiteResult periods_suite(const VerifyOptions& opts) {
  SuiteResult s{"periods", {}};
  const int k = opts.max_rank + 1;
  s.properties.push_back(run_property("simplification_identity", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [m, mp] = random_hyp1_pair(rng, n, np);
    const PairContext ctx(m, mp);
    if (!(expand(deligne_period_simplified(ctx)) == expand(deligne_period_raw(ctx)))) {
      return fail_pair("simplified != raw", m, mp);
    }
    return std::optional<std::string>{};
  }));
  s.properties.push_back(run_property("conjecture_exponent_integral", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [m, mp] = random_hyp1_pair(rng, n, np);
    const PairContext ctx(m, mp);
    const auto legal = shifted_critical_points(ctx);
    const auto simplified = deligne_period_simplified(ctx);
    for (auto x = legal.lo; x <= legal.hi; x += HalfInt(1)) {
      const auto rhs = conjecture_rhs_motivic(ctx, x);
      // rhs / simplified is a pure power of 2 pi i.
      const auto ratio = rhs * simplified.inverse();
      const auto expected_twice = static_cast<std::int64_t>(n) * np * (x.twice() + (n + np - 2));
      if (ratio.factors().size() > 1 || expected_twice % 2 != 0 ||
          ratio.exponent(PeriodSymbol::two_pi_i()) != expected_twice / 2) {
        return fail_pair("conjecture/period ratio at m = " + x.str(), m, mp);
      }
    }
    return std::optional<std::string>{};
  }));
  s.properties.push_back(run_property("raw_symmetry", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [m, mp] = random_hyp1_pair(rng, n, np);
    if (!(deligne_period_raw(PairContext(m, mp)) == deligne_period_raw(PairContext(mp, m)))) {
      return fail_pair("raw period not symmetric", m, mp);
    }
    return std::optional<std::string>{};
  }));
  return s;
}

SuiteResult automorphic_suite(const VerifyOptions& opts) {
  SuiteResult s{"automorphic", {}};
  const int k = opts.max_rank;
  s.properties.push_back(run_cases("dictionary_example", 1, [](std::size_t) {
    const InfinityTypeData pi("Pi", 2, 0, {half_of(1), half_of(-1)});
    const auto m = dict_to_motive(pi);
    if (m.rank() == 2 && m.weight() == 1 && m.hodge_p() == std::vector<std::int64_t>{1, 0}) {
      return std::optional<std::string>{};
    }
    return std::optional<std::string>("dictionary image " + describe(m));
  }));
  s.properties.push_back(run_property("criticality_vs_hodge", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    const auto pi = random_rep(rng, "Pi", n, 3);
    const auto pip = random_rep(rng, "Pi'", np, 3);
    const bool hodge = has_no_pp_class(restriction_tensor(dict_to_motive(pi), dict_to_motive(pip)));
    if (pair_is_critical(pi, pip) != hodge) {
      return std::optional<std::string>("criticality mismatch for " + describe(pi) + " x " +
                                        describe(pip));
    }
    return std::optional<std::string>{};
  }));
  s.properties.push_back(run_property("split_indices_dictionary", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [pi, pip] = random_critical_rep_pair(rng, n, np);
    if (!(split_indices_auto(pi, pip) == split_indices(dict_to_motive(pi), dict_to_motive(pip)))) {
      return std::optional<std::string>("split indices differ for " + describe(pi) + " x " +
                                        describe(pip));
    }
    return std::optional<std::string>{};
  }));
  s.properties.push_back(run_property("critical_points_dictionary", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [pi, pip] = random_critical_rep_pair(rng, n, np);
    const PairContext ctx(dict_to_motive(pi), dict_to_motive(pip));
    if (!(pair_critical_points(pi, pip) == shifted_critical_points(ctx))) {
      return std::optional<std::string>("critical points differ for " + describe(pi) + " x " +
                                        describe(pip));
    }
    return std::optional<std::string>{};
  }));
  s.properties.push_back(run_property("p_to_q_substitution", opts, opts.trials, [k](Rng& rng) {
    auto [n, np] = random_shape(rng, k);
    auto [pi, pip] = random_critical_rep_pair(rng, n, np);
    const PairContext ctx(dict_to_motive(pi), dict_to_motive(pip));
    const auto legal = pair_critical_points(pi, pip);
    for (auto x = legal.lo; x <= legal.hi; x += HalfInt(1)) {
      const auto automorphic = substitute_automorphic_periods(conjecture_rhs_automorphic(pi, pip, x));
      if (!(automorphic == conjecture_rhs_motivic(ctx, x))) {
        return std::optional<std::string>("substitution mismatch at m = " + x.str() + " for " +
                                          describe(pi) + " x " + describe(pip));
      }
    }
    return std::optional<std::string>{};
  }));
  return s;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& opts) {
  if (opts.max_rank < 1) throw std::invalid_argument("max rank must be positive");
  if (opts.trials < 0) throw std::invalid_argument("trial count must be non-negative");
  std::vector<std::string> selected;
  if (opts.suite == "all") {
    selected = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), opts.suite) !=
             suite_names().end()) {
    selected.push_back(opts.suite);
  } else {
    throw std::invalid_argument("unknown suite: " + opts.suite);
  }
  std::vector<SuiteResult> out;
  for (const auto& name : selected) {
    if (name == "combinatorics") out.push_back(combinatorics_suite(opts));
    if (name == "oracle") out.push_back(oracle_suite(opts));
    if (name == "rewrite") out.push_back(rewrite_suite(opts));
    if (name == "critical") out.push_back(critical_suite(opts));
    if (name == "periods") out.push_back(periods_suite(opts));
    if (name == "automorphic") out.push_back(automorphic_suite(opts));
  }
  return out;
}

nlohmann::json summary_json(const VerifyOptions& opts, const std::vector<SuiteResult>& results) {
  nlohmann::json suites = nlohmann::json::array();
  bool all_ok = true;
  for (const auto& suite : results) {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : suite.properties) {
      nlohmann::json entry{{"name", p.name},
                           {"instances", p.instances},
                           {"failures", p.failures},
                           {"ok", p.ok()}};
      if (!p.ok()) entry["first_failure"] = p.first_failure;
      props.push_back(std::move(entry));
    }
    all_ok = all_ok && suite.ok();
    suites.push_back({{"suite", suite.name}, {"ok", suite.ok()}, {"properties", props}});
  }
  return {{"seed", opts.seed},
          {"max_rank", opts.max_rank},
          {"trials", opts.trials},
          {"oracle_bound", opts.oracle_bound},
          {"ok", all_ok},
          {"suites", suites}};
}

}  // namespace pk
