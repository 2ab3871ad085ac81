#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::vector<std::string>& args, const std::string& redirect = "2>/dev/null") {
  std::string cmd = quote(BSG_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " " + redirect;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bsg_test_cli_" + name);
}

}  // namespace

TEST_CASE("golden corpus of invocations and exit codes") {
  std::ifstream in(std::string(BSG_GOLDEN_DIR) + "/cli_corpus.jsonl");
  REQUIRE(in);
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json c = json::parse(line);
    auto args = c["args"].get<std::vector<std::string>>();
    Run r = run(args);
    std::string shown;
    for (const auto& a : args) shown += a + " ";
    INFO("bsg " << shown << "\n" << r.out);
    CHECK(r.exit_code == c["exit"].get<int>());
    CHECK(r.out.find(c["stdout"].get<std::string>()) != std::string::npos);
    ++cases;
  }
  CHECK(cases >= 30);
}

TEST_CASE("usage errors print the word grammar") {
  Run r = run({"reduce", "2", "3", "a c"}, "2>&1");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("word grammar") != std::string::npos);
}

TEST_CASE("separate output always verifies") {
  std::vector<std::vector<std::string>> producers = {
      {"separate", "1", "2", "b^3"},
      {"separate", "1", "3", "a^2 b"},
      {"separate", "2", "2", "a^-1 b a b^-1"},
      {"separate", "3", "-3", "b"},
      {"separate", "1", "-2", "a b a^-1 b^-1"},
      {"separate", "3", "1", "a b a^-1"},
      {"separate-conj", "2", "b", "b^3"},
      {"separate-conj", "3", "a b", "a b^2"},
      {"separate-conj", "2", "a^2 b", "a^3 b"},
      {"separate-conj", "-2", "b", "b^-1"},
  };
  int i = 0;
  for (const auto& args : producers) {
    Run made = run(args);
    INFO(made.out);
    REQUIRE(made.exit_code == 0);
    auto path = temp_file(std::to_string(i++) + ".json");
    std::ofstream(path) << made.out;
    Run checked = run({"verify-witness", path.string()});
    CHECK(checked.exit_code == 0);
    CHECK(checked.out.rfind("witness verified", 0) == 0);
    std::filesystem::remove(path);
  }
}

TEST_CASE("verify-witness reads stdin and reports the failing check") {
  auto path = temp_file("bad.json");
  std::ofstream(path) << R"J({"source": {"m": 1, "n": 2},
    "target": {"type": "cyclic", "params": {"order": 3}},
    "claim": {"kind": "element_nontrivial", "words": ["b"]},
    "meta": {"theorem": "", "search_trace": []}})J";
  Run r = run({"verify-witness", "-"}, "< " + quote(path.string()) + " 2>/dev/null");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("(claim)") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("json output and trace") {
  Run r = run({"--json", "classify", "1", "2", "--pi", "2,7,29"});
  json j = json::parse(r.out);
  CHECK(j["value"] == "true");
  CHECK(j["witness_s"] == 29);
  CHECK(j["reason"]["citation"].get<std::string>().find("Theorem") == 0);

  Run t = run({"separate", "2", "2", "a^-1 b a b^-1", "--trace"}, "2>&1 >/dev/null");
  CHECK(t.out.find("trace: degree") != std::string::npos);

  Run q = run({"--json", "quotient", "2", "3", "7", "--list"});
  CHECK(json::parse(q.out)["elements"].size() == 21);
}
