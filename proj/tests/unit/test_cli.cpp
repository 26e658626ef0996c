#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef PK_BINARY
#error "PK_BINARY must point at the pk executable"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("pk_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

Run pk(const std::string& args, const std::string& env = {}) {
  const auto out = scratch() / "stdout.txt";
  const auto err = scratch() / "stderr.txt";
  const std::string cmd = env + " \"" + PK_BINARY + "\" " + args + " > \"" +
                          out.string() + "\" 2> \"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

const char* kPair =
    R"({"M":{"label":"M","rank":2,"weight":1,"hodge_p":[1,0]},)"
    R"("Mp":{"label":"M'","rank":1,"weight":0,"hodge_p":[1]}})";

const char* kReps =
    R"({"Pi":{"label":"Pi","n":2,"w":0,"a":["1/2","-1/2"]},)"
    R"("Pip":{"label":"Pi'","n":1,"w":0,"a":[1]}})";

}  // namespace

TEST_CASE("critical interval of an elliptic-shape motive") {
  const auto f = write("elliptic.json", R"({"label":"E","rank":2,"weight":1,"hodge_p":[1,0]})");
  const auto r = pk("critical " + f.string());
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["interval"]["lo"] == 1);
  CHECK(j["interval"]["hi"] == 1);
  CHECK(j["agree"] == true);
}

TEST_CASE("critical, gamma, sets and split on a pair") {
  const auto f = write("pair.json", kPair);
  auto r = pk("critical " + f.string());
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["agree"] == true);
  r = pk("gamma " + f.string());
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["gamma"]["shifts"].size() == 2);
  r = pk("sets " + f.string());
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["A"]["members"] == json::parse("[[1,1],[2,1]]"));
  r = pk("split " + f.string());
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["sp"] == json::parse("[0,0,1]"));
}

TEST_CASE("two motive files are accepted in place of a pair file") {
  const auto a = write("m.json", R"({"label":"M","rank":2,"weight":1,"hodge_p":[1,0]})");
  const auto b = write("mp.json", R"({"label":"M'","rank":1,"weight":0,"hodge_p":[1]})");
  const auto r = pk("period " + a.string() + " " + b.string());
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["period"]["text"] == "(2πi)^-1 * Qs[2;M] * Qs[1;M']^2");
}

TEST_CASE("period forms") {
  const auto f = write("pair.json", kPair);
  const auto simplified = pk("period " + f.string());
  REQUIRE(simplified.code == 0);
  CHECK(json::parse(simplified.out)["period"]["text"] == "(2πi)^-1 * Qs[2;M] * Qs[1;M']^2");
  const auto expanded = pk("period --form expanded " + f.string());
  const auto raw = pk("period --form raw " + f.string());
  REQUIRE(expanded.code == 0);
  REQUIRE(raw.code == 0);
  CHECK(json::parse(expanded.out)["period"]["text"] == json::parse(raw.out)["period"]["text"]);
  CHECK(json::parse(raw.out)["period"]["text"] == "Q[1;M] * Q[2;M] * Q[1;M']^2 * d[M] * d[M']^2");
  const auto empty = write("empty_a.json",
                           R"({"M":{"label":"M","rank":2,"weight":0,"hodge_p":[-1,-2]},)"
                           R"("Mp":{"label":"M'","rank":3,"weight":0,"hodge_p":[-1,-3,-5]}})");
  const auto r = pk("period --form raw " + empty.string());
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["period"]["text"] == "d[M]^3 * d[M']^2");
}

TEST_CASE("conjecture, motivic and automorphic") {
  const auto f = write("pair.json", kPair);
  auto r = pk("conjecture " + f.string() + " --m 1/2");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["rhs"]["text"] == "(2πi)^1 * Qs[2;M] * Qs[1;M']^2");

  const auto reps = write("reps.json", kReps);
  r = pk("critical --auto " + reps.string());
  REQUIRE(r.code == 0);
  const auto lo = json::parse(r.out)["interval"]["lo"];
  r = pk("conjecture --auto --classify " + reps.string() + " --m " + lo.get<std::string>());
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["crosscheck"] == "ok");
  CHECK(j.contains("classification"));
  r = pk("split --auto " + reps.string());
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["agree"] == true);
  r = pk("classify " + reps.string() + " --m " + lo.get<std::string>());
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).contains("case"));
}

TEST_CASE("exit code 2 on malformed input") {
  const auto bad = write("bad.json", "{\"label\": \"M\", ");
  auto r = pk("critical " + bad.string());
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
  const auto unsorted = write("unsorted.json", R"({"label":"M","rank":2,"weight":1,"hodge_p":[0,1]})");
  CHECK(pk("critical " + unsorted.string()).code == 2);
  CHECK(pk("frobnicate").code == 2);
  CHECK(pk("verify --suite nonsense").code == 2);
  const auto f = write("pair.json", kPair);
  CHECK(pk("conjecture " + f.string() + " --m 1/3").code == 2);
}

TEST_CASE("exit code 3 on a (p,p) class") {
  const auto f = write("pp.json",
                       R"({"M":{"label":"M","rank":1,"weight":0,"hodge_p":[0]},)"
                       R"("Mp":{"label":"M'","rank":1,"weight":0,"hodge_p":[0]}})");
  const auto r = pk("critical " + f.string());
  CHECK(r.code == 3);
  CHECK(r.err.find("(a,b) = (1,1)") != std::string::npos);
  CHECK(pk("period " + f.string()).code == 3);
}

TEST_CASE("exit code 4 on a non-critical point") {
  const auto f = write("pair.json", kPair);
  const auto r = pk("conjecture " + f.string() + " --m 5/2");
  CHECK(r.code == 4);
  CHECK(r.err.find("1/2 .. 1/2") != std::string::npos);
}

TEST_CASE("verify suites") {
  auto r = pk("verify --suite rewrite --seed 42");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["suites"][0]["suite"] == "rewrite");
  const auto again = pk("verify --suite combinatorics --trials 30 --seed 9 --threads 1");
  const auto threaded = pk("verify --suite combinatorics --trials 30 --seed 9 --threads 4");
  CHECK(again.code == 0);
  CHECK(again.out == threaded.out);
}

TEST_CASE("oracle bound from the environment") {
  auto r = pk("verify --suite oracle --trials 1 --max-rank 3 --seed 1");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["oracle_bound"] == 12);
  CHECK(json::parse(r.out)["suites"][0]["properties"].size() == 9);
  r = pk("verify --suite oracle --trials 1 --max-rank 3 --seed 1", "PK_MAX_ORACLE_SIZE=4");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["oracle_bound"] == 4);
  CHECK(json::parse(r.out)["suites"][0]["properties"].size() == 6);
}
