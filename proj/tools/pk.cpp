#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pk/automorphic.hpp"
#include "pk/combinatorics.hpp"
#include "pk/deligne.hpp"
#include "pk/errors.hpp"
#include "pk/io.hpp"
#include "pk/lfactor.hpp"
#include "pk/verify.hpp"

namespace {

using pk::json;

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kParse = 2,
  kPpClass = 3,
  kNotCritical = 4,
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// One file holding either a single object or a pair {"M": .., "Mp": ..} /
// {"Pi": .., "Pip": ..} / [x, y]; or two files holding one object each.
std::vector<json> load_objects(const std::vector<std::string>& files, bool automorphic) {
  std::vector<json> out;
  for (const auto& f : files) {
    auto j = pk::read_json_file(f);
    const char* first = automorphic ? "Pi" : "M";
    const char* second = automorphic ? "Pip" : "Mp";
    if (j.is_array()) {
      for (auto& x : j) out.push_back(std::move(x));
    } else if (j.is_object() && j.contains(first) && j.contains(second)) {
      out.push_back(j[first]);
      out.push_back(j[second]);
    } else {
      out.push_back(std::move(j));
    }
  }
  if (out.empty() || out.size() > 2) {
    throw pk::ParseError("expected one or two objects, got " + std::to_string(out.size()));
  }
  return out;
}

std::vector<pk::RegularMotiveData> load_motives(const std::vector<std::string>& files) {
  std::vector<pk::RegularMotiveData> out;
  for (const auto& j : load_objects(files, false)) out.push_back(pk::motive_from_json(j));
  return out;
}

std::vector<pk::InfinityTypeData> load_reps(const std::vector<std::string>& files) {
  std::vector<pk::InfinityTypeData> out;
  for (const auto& j : load_objects(files, true)) out.push_back(pk::rep_from_json(j));
  return out;
}

template <typename T>
const T& require_pair(const std::vector<T>& xs, std::size_t i) {
  if (xs.size() != 2) throw pk::ParseError("this command needs a pair of inputs");
  return xs[i];
}

pk::HalfInt parse_point(const std::string& text) { return pk::HalfInt::parse(text); }

pk::HodgeMultiset hodge_of(const std::vector<pk::RegularMotiveData>& ms) {
  if (ms.size() == 1) return pk::restriction(ms[0]);
  pk::require_no_pp_class(ms[0], ms[1]);
  return pk::restriction_tensor(ms[0], ms[1]);
}

int cmd_critical(const std::vector<std::string>& files, bool automorphic) {
  if (automorphic) {
    const auto reps = load_reps(files);
    const auto& pi = require_pair(reps, 0);
    const auto& pip = require_pair(reps, 1);
    const auto points = pk::pair_critical_points(pi, pip);
    const pk::PairContext ctx(pk::dict_to_motive(pi), pk::dict_to_motive(pip));
    const auto motivic = pk::shifted_critical_points(ctx);
    const bool agree = points == motivic;
    emit({{"interval", pk::to_json(points)},
          {"via_dictionary", pk::to_json(motivic)},
          {"agree", agree}});
    return agree ? kOk : kPropertyFailure;
  }
  const auto h = hodge_of(load_motives(files));
  const auto closed = pk::critical_interval(h);
  const auto scanned = pk::critical_interval_via_poles(h);
  const bool agree = closed == scanned;
  emit({{"interval", pk::to_json(closed)}, {"via_poles", pk::to_json(scanned)}, {"agree", agree}});
  return agree ? kOk : kPropertyFailure;
}

int cmd_gamma(const std::vector<std::string>& files) {
  const auto h = hodge_of(load_motives(files));
  const auto g = pk::gamma_factor(h);
  emit({{"hodge", pk::to_json(h)}, {"gamma", pk::to_json(g)}});
  return kOk;
}

int cmd_sets(const std::vector<std::string>& files) {
  const auto ms = load_motives(files);
  const pk::PairContext ctx(require_pair(ms, 0), require_pair(ms, 1));
  const bool tableau = pk::is_tableau(ctx.A());
  const bool duality = pk::duality_holds(ctx.A(), ctx.T());
  emit({{"A", pk::to_json(ctx.A())},
        {"T", pk::to_json(ctx.T())},
        {"tableau", tableau},
        {"duality", duality}});
  return tableau && duality ? kOk : kPropertyFailure;
}

int cmd_split(const std::vector<std::string>& files, bool automorphic) {
  if (automorphic) {
    const auto reps = load_reps(files);
    const auto& pi = require_pair(reps, 0);
    const auto& pip = require_pair(reps, 1);
    const auto sp = pk::split_indices_auto(pi, pip);
    const auto sp_sym = pk::split_indices_auto(pip, pi);
    const auto via_dict = pk::split_indices(pk::dict_to_motive(pi), pk::dict_to_motive(pip));
    const bool agree = sp == via_dict;
    emit({{"sp", pk::to_json(sp)}, {"sp_sym", pk::to_json(sp_sym)}, {"agree", agree}});
    return agree ? kOk : kPropertyFailure;
  }
  const auto ms = load_motives(files);
  const pk::PairContext ctx(require_pair(ms, 0), require_pair(ms, 1));
  const bool lemma = pk::cardinality_lemma_holds(ctx.A(), ctx.sp());
  const bool sum_ok = ctx.sp().sum() == ctx.mp().rank();
  emit({{"sp", pk::to_json(ctx.sp())},
        {"sp_sym", pk::to_json(ctx.sp_sym())},
        {"sum_ok", sum_ok},
        {"cardinality_lemma", lemma}});
  return lemma && sum_ok ? kOk : kPropertyFailure;
}

int cmd_period(const std::vector<std::string>& files, const std::string& form) {
  const auto ms = load_motives(files);
  const pk::PairContext ctx(require_pair(ms, 0), require_pair(ms, 1));
  pk::PeriodMonomial x;
  if (form == "raw") {
    x = pk::deligne_period_raw(ctx);
  } else if (form == "simplified") {
    x = pk::deligne_period_simplified(ctx);
  } else {
    x = pk::expand(pk::deligne_period_simplified(ctx));
  }
  const bool consistent =
      pk::expand(pk::deligne_period_simplified(ctx)) == pk::expand(pk::deligne_period_raw(ctx));
  emit({{"form", form}, {"period", pk::to_json(x)}, {"consistent", consistent}});
  return consistent ? kOk : kPropertyFailure;
}

int cmd_conjecture(const std::vector<std::string>& files, const std::string& point,
                   bool automorphic, bool classify) {
  const auto m = parse_point(point);
  if (!automorphic) {
    const auto ms = load_motives(files);
    const pk::PairContext ctx(require_pair(ms, 0), require_pair(ms, 1));
    const auto rhs = pk::conjecture_rhs_motivic(ctx, m);
    emit({{"m", pk::to_json(m)}, {"rhs", pk::to_json(rhs)}});
    return kOk;
  }
  const auto reps = load_reps(files);
  const auto& pi = require_pair(reps, 0);
  const auto& pip = require_pair(reps, 1);
  const auto rhs = pk::conjecture_rhs_automorphic(pi, pip, m);
  const pk::PairContext ctx(pk::dict_to_motive(pi), pk::dict_to_motive(pip));
  const auto motivic = pk::conjecture_rhs_motivic(ctx, m);
  const bool ok = pk::substitute_automorphic_periods(rhs) == motivic;
  json out{{"m", pk::to_json(m)},
           {"rhs", pk::to_json(rhs)},
           {"motivic", pk::to_json(motivic)},
           {"crosscheck", ok ? "ok" : "mismatch"}};
  if (classify) out["classification"] = pk::to_json(pk::classify_known_case(pi, pip, m));
  emit(out);
  return ok ? kOk : kPropertyFailure;
}

int cmd_classify(const std::vector<std::string>& files, const std::string& point) {
  const auto m = parse_point(point);
  const auto reps = load_reps(files);
  const auto report = pk::classify_known_case(require_pair(reps, 0), require_pair(reps, 1), m);
  emit(pk::to_json(report));
  return kOk;
}

int cmd_verify(pk::VerifyOptions opts) {
  const auto results = pk::run_verification(opts);
  const auto summary = pk::summary_json(opts, results);
  emit(summary);
  for (const auto& suite : results) {
    for (const auto& p : suite.properties) {
      if (!p.ok()) std::cerr << suite.name << "/" << p.name << ": " << p.first_failure << '\n';
    }
  }
  return summary["ok"].get<bool>() ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical points and period formulas for tensor products of motives"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  bool automorphic = false;
  bool classify = false;
  std::string form = "simplified";
  std::string point;
  pk::VerifyOptions vopts;
  vopts.oracle_bound = pk::oracle_bound_from_env();

  auto* critical = app.add_subcommand("critical", "critical interval, closed form and pole scan");
  critical->add_option("files", files, "motive, pair, or two motive files")->required()->check(CLI::ExistingFile);
  critical->add_flag("--auto", automorphic, "inputs are infinity types");

  auto* gamma = app.add_subcommand("gamma", "archimedean gamma factor");
  gamma->add_option("files", files, "motive, pair, or two motive files")->required()->check(CLI::ExistingFile);

  auto* sets = app.add_subcommand("sets", "index sets A and T");
  sets->add_option("files", files, "pair or two motive files")->required()->check(CLI::ExistingFile);

  auto* split = app.add_subcommand("split", "split indices");
  split->add_option("files", files, "pair or two input files")->required()->check(CLI::ExistingFile);
  split->add_flag("--auto", automorphic, "inputs are infinity types");

  auto* period = app.add_subcommand("period", "Deligne period of R(M (x) M')");
  period->add_option("files", files, "pair or two motive files")->required()->check(CLI::ExistingFile);
  period->add_option("--form", form, "raw, simplified or expanded")
      ->check(CLI::IsMember({"raw", "simplified", "expanded"}));

  auto* conjecture = app.add_subcommand("conjecture", "right-hand side of the conjecture at m");
  conjecture->add_option("files", files, "pair or two input files")->required()->check(CLI::ExistingFile);
  conjecture->add_option("-m,--m", point, "point m, integer or k/2")->required();
  conjecture->add_flag("--auto", automorphic, "inputs are infinity types");
  conjecture->add_flag("--classify", classify, "embed the known-case report (with --auto)");

  auto* classify_cmd = app.add_subcommand("classify", "known-case classification");
  classify_cmd->add_option("files", files, "pair or two rep files")->required()->check(CLI::ExistingFile);
  classify_cmd->add_option("-m,--m", point, "point m, integer or k/2")->required();

  auto* verify = app.add_subcommand("verify", "run the randomized verification suites");
  verify->add_option("--suite", vopts.suite, "all or one suite name");
  verify->add_option("--max-rank", vopts.max_rank, "largest rank drawn")->check(CLI::Range(1, 8));
  verify->add_option("--trials", vopts.trials, "instances per property")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vopts.seed, "random seed");
  verify->add_option("--threads", vopts.threads, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*critical) return cmd_critical(files, automorphic);
    if (*gamma) return cmd_gamma(files);
    if (*sets) return cmd_sets(files);
    if (*split) return cmd_split(files, automorphic);
    if (*period) return cmd_period(files, form);
    if (*conjecture) return cmd_conjecture(files, point, automorphic, classify);
    if (*classify_cmd) return cmd_classify(files, point);
    if (*verify) return cmd_verify(vopts);
  } catch (const pk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const pk::PpClassError& e) {
    std::cerr << "no critical points: " << e.what() << '\n';
    return kPpClass;
  } catch (const pk::NotCriticalPairError& e) {
    std::cerr << "no critical points: " << e.what() << '\n';
    return kPpClass;
  } catch (const pk::NotCriticalError& e) {
    std::cerr << "not critical: " << e.what() << '\n';
    return kNotCritical;
  } catch (const pk::Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPropertyFailure;
  }
  return kOk;
}
