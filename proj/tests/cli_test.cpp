#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "turanlab/io.hpp"
#include "turanlab/verify.hpp"

using namespace turanlab;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(TURANLAB_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST(Json, ExtremalResultSchema) {
  ExtremalResult r{5, "M2", "K2+P3", 3, {"DJ[", "D~{"}, 12};
  const Json j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "h_spec", "f_spec", "value", "extremal", "searched"}));
  const ExtremalResult back = extremal_result_from_json(j);
  EXPECT_EQ(back.extremal, r.extremal);
  EXPECT_EQ(back.value, 3U);
  EXPECT_THROW(extremal_result_from_json(Json{{"n", 1}}), MalformedEncoding);
}

TEST(Json, ReportSchema) {
  VerificationReport r;
  r.theorem = TheoremId::PATH_THM;
  r.params = {{"k", "4"}};
  r.status = Status::HOLDS_FROM;
  r.holds_from = 5;
  r.details.push_back({"n=4,t=2", 4, 0, 1, false, "CK", ""});
  const Json j = to_json(r);
  EXPECT_EQ(j["theorem_id"], "PATH_THM");
  EXPECT_EQ(j["status"], "HOLDS_FROM");
  EXPECT_EQ(j["holds_from"], 5);
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["details"][0]["witness"], "CK");
  EXPECT_EQ(j["details"][0]["oracle"], 1);
}

TEST(Csv, QuotesFields) {
  VerificationReport r;
  r.theorem = TheoremId::LEMMA2;
  r.params = {{"t", "2,3"}};
  r.details.push_back({"n=2,t=2", 2, 1, 1, true, "", "say \"hi\""});
  std::ostringstream os;
  write_csv(os, r);
  EXPECT_EQ(os.str(), "LEMMA2,\"t=2,3\",\"n=2,t=2\",2,1,1,true,,\"say \"\"hi\"\"\"\n");
}

TEST(Cli, Construct) {
  EXPECT_EQ(run("construct turan 5 2").out.substr(0, 4), "DFw\n");
  EXPECT_NE(run("construct splith 7 5 2").out.find("edges=11"), std::string::npos);
  EXPECT_NE(run("construct friendship 7").out.find("edges=9"), std::string::npos);
  const Json j = Json::parse(run("construct expr \"K2+P3\" --format json").out);
  EXPECT_EQ(j["edges"], 3);
  EXPECT_EQ(j["matching_number"], 2);
  EXPECT_EQ(run("construct splith 5 3 2").status, 2);
  EXPECT_EQ(run("construct bogus 3").status, 2);
}

TEST(Cli, Count) {
  EXPECT_EQ(run("count --h M2 --g K4").out, "3\n");
  EXPECT_EQ(run("count --h K2 --g 'Dhc'").out, "5\n");
  EXPECT_EQ(run("count --profile --g C9").out, "1,9,27,30,9\n");
  EXPECT_EQ(run("count --h 'K(' --g K3").status, 2);
  EXPECT_EQ(run("count --h K13 --g K13").status, 3);
}

TEST(Cli, ExBruteAndCache) {
  const auto dir = std::filesystem::temp_directory_path() / "turanlab-cli-test-cache";
  std::filesystem::remove_all(dir);
  const RunResult fresh = run("exbrute 5 --h M2 --f \"K2+P3\" --format json");
  const Json j = Json::parse(fresh.out);
  EXPECT_EQ(j["value"], 3);
  EXPECT_EQ(j["h_spec"], "M2");
  const std::string cached = "--cache-dir " + dir.string() + " exbrute 5 --h M2 --f \"K2+P3\" --format json";
  EXPECT_EQ(run(cached).out, fresh.out);
  EXPECT_FALSE(std::filesystem::is_empty(dir));
  EXPECT_EQ(run(cached).out, fresh.out);
  std::filesystem::remove_all(dir);
  EXPECT_EQ(run("exbrute 10 --h K2 --f S3").status, 3);
  EXPECT_EQ(run("exbrute 10 --h K2 --f S3 --max-n 10").status, 3);
  EXPECT_EQ(run("exbrute 10 --h K2 --f S3 --max-n 10 --allow-n10 --format json").status, 0);
}

TEST(Cli, VerifyExitStatus) {
  EXPECT_EQ(run("verify FAUDREE_SCHELP --nmax 7 --k 4").status, 0);
  EXPECT_EQ(run("verify PROP4_I --nmax 7 --tmax 3").status, 0);
  EXPECT_EQ(run("verify PROP4_I --nmax 8 --tmax 3").status, 1);
  EXPECT_EQ(run("verify NOPE").status, 2);
  EXPECT_EQ(run("verify PROP4_I --nmax 10").status, 3);
  const RunResult csv = run("verify PATH_THM --k 4 --t 2 --format csv");
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "theorem_id,params,case,n,expected,observed,holds,witness,note");
}

TEST(Cli, VerifyDeterministicAcrossWorkers) {
  const RunResult a = run("verify STAR_THM --format json --workers 1");
  const RunResult b = run("verify STAR_THM --format json --workers 4");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, BParamAndWitness) {
  EXPECT_EQ(run("bparam --h P3 --s 2").out, "tau=1 alpha=2 nu=1 b=2\n");
  const Json w = Json::parse(run("witness --g \"K3+K1\" --s 2 --format json").out);
  EXPECT_EQ(w["witness"]["value"], 1);
  EXPECT_TRUE(Json::parse(run("witness --g M2 --s 2 --format json").out)["witness"].is_null());
}

TEST(Cli, Enumerate) {
  const RunResult r = run("enumerate 5");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 34);
  const RunResult p = run("enumerate 6 --prune K3 --format json");
  EXPECT_EQ(Json::parse(p.out)["count"], 38);
  EXPECT_EQ(run("enumerate 10").status, 3);
}
