#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cardalg/cli.hpp"
#include "cardalg/corpus.hpp"

using namespace cardalg;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto p = std::filesystem::temp_directory_path() / ("cardalg_test_" + name);
  std::ofstream(p) << contents;
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

CorpusConfig small_config() {
  CorpusConfig c = CorpusConfig::empty();
  c.zmod_max = 12;
  c.extra_rings = {"idealize(Z/2, [2,2])"};
  c.group_max_order = 8;
  c.prufer_primes = {2};
  c.prufer_max_exponent = 2;
  c.group_spec_samples = 10;
  c.threads = 2;
  return c;
}

}  // namespace

TEST(Cli, EvalExamples) {
  const CliRun r = cli({"eval", "aleph(0) * aleph(0)", "--trace", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "aleph(0)"));
  EXPECT_TRUE(contains(r.out, "R-IDEM"));

  const CliRun ps = cli({"eval", "card_powser(2^aleph(0))"});
  EXPECT_EQ(ps.code, 0);
  EXPECT_EQ(ps.out, "2^aleph(0)\n");

  const CliRun gch = cli({"eval", "card_powser(aleph(w))", "--mode", "gch"});
  EXPECT_EQ(gch.out, "aleph(w+1)\n");

  const CliRun zfc = cli({"eval", "card_powser(aleph(w))", "--trace", "json"});
  EXPECT_EQ(zfc.code, 0);
  const auto j = nlohmann::json::parse(zfc.out);
  bool konig = false;
  for (const auto& s : j["steps"]) konig |= s["rule_id"] == "R-KONIG";
  EXPECT_TRUE(konig);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"eval", "aleph(0) +"}).code, 2);
  EXPECT_EQ(cli({"eval", "aleph(0)", "--mode", "ch"}).code, 2);
  EXPECT_EQ(cli({"eval", "card_powser(1)"}).code, 1);
  EXPECT_EQ(cli({"ring", "check", "Z/"}).code, 2);
  EXPECT_EQ(cli({"ring", "check", "Z/5000"}).code, 2);
  EXPECT_EQ(cli({"group", "witness", "fin(6) +"}).code, 2);
  EXPECT_EQ(cli({"bij", "unpair", "-3"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Cmp) {
  EXPECT_EQ(cli({"cmp", "aleph(0)", "2^aleph(0)"}).out, "less\n");
  EXPECT_EQ(cli({"cmp", "aleph(0)*aleph(0)", "aleph(0)"}).out, "equal\n");
  const CliRun u = cli({"cmp", "aleph(1)", "2^aleph(0)"});
  EXPECT_TRUE(contains(u.out, "unknown"));
  EXPECT_EQ(cli({"cmp", "aleph(1)", "2^aleph(0)", "--mode", "gch"}).out, "equal\n");
}

TEST(Cli, RingCheck) {
  const CliRun zz = cli({"ring", "check", "ZZ", "--balanced"});
  EXPECT_EQ(zz.code, 0);
  EXPECT_TRUE(contains(zz.out, "balanced: false (witness 2")) << zz.out;

  const CliRun z6 = cli({"ring", "check", "Z/6"});
  EXPECT_EQ(z6.code, 0);
  EXPECT_TRUE(contains(z6.out, "balanced: true"));

  const CliRun id = cli({"ring", "check", "idealize(Z/2, [2,2])", "--selfinj", "--json"});
  EXPECT_EQ(id.code, 0);
  const auto j = nlohmann::json::parse(id.out);
  EXPECT_EQ(j["self_injective"], false);
  EXPECT_TRUE(j.contains("baer_counterexample"));
}

TEST(Cli, GroupAndBij) {
  EXPECT_EQ(cli({"group", "classify", "prufer(3)"}).out.rfind("prufer", 0), 0u);
  const CliRun w = cli({"group", "witness", "free(1)"});
  EXPECT_EQ(w.code, 0);
  EXPECT_TRUE(contains(w.out, "valid:    true"));
  // no witness exists for finite groups; the answer says so instead of failing
  const CliRun f = cli({"group", "witness", "fin(6)"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out.rfind("finite", 0), 0u);
  EXPECT_TRUE(contains(cli({"group", "subgroups", "fin(2,4)"}).out, "8 subgroups"));
  EXPECT_EQ(cli({"bij", "pair", "1", "1"}).out, "4\n");
  EXPECT_EQ(cli({"bij", "unpair", "4"}).out, "1 1\n");
  EXPECT_EQ(cli({"bij", "finset-encode", "0,2,3"}).out, "13\n");
  EXPECT_EQ(cli({"bij", "finsupp-encode", "3:5"}).out, "74\n");
  EXPECT_EQ(cli({"bij", "roundtrip", "--limit", "50"}).code, 0);
}

TEST(Corpus, EmptyConfigGivesEmptyReport) {
  const CorpusReport rep = run_corpus(CorpusConfig::empty());
  EXPECT_EQ(rep.failures, 0u);
  EXPECT_TRUE(rep.json["rings"].empty());
  EXPECT_TRUE(rep.json["finite_groups"].empty());
  EXPECT_TRUE(rep.json["group_specs"].empty());

  const auto cfg = temp_file("empty.json", CorpusConfig::empty().to_json().dump());
  const auto out = std::filesystem::temp_directory_path() / "cardalg_test_empty_report.json";
  const CliRun r = cli({"corpus", "run", "--config", cfg.string(), "--out", out.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(slurp(out))["summary"]["rings"], 0);
}

TEST(Corpus, BaerCounterexampleIsAnExpectedNegative) {
  const CorpusReport rep = run_corpus(small_config());
  EXPECT_EQ(rep.failures, 0u) << rep.json["failures"].dump();
  EXPECT_EQ(rep.expected_negatives, 1u);
  const auto& last = rep.json["rings"].back();
  EXPECT_EQ(last["spec"], "idealize(Z/2, [2,2])");
  EXPECT_EQ(last["self_injective"], false);

  const auto cfg = temp_file("small.json", small_config().to_json().dump());
  EXPECT_EQ(cli({"corpus", "run", "--config", cfg.string()}).code, 0);
}

TEST(Corpus, Deterministic) {
  CorpusConfig a = small_config(), b = small_config();
  a.threads = 1;
  b.threads = 3;
  EXPECT_EQ(run_corpus(a).json["rings"].dump(), run_corpus(b).json["rings"].dump());
  const auto cfg = temp_file("det.json", small_config().to_json().dump());
  const auto tmp = std::filesystem::temp_directory_path();
  cli({"corpus", "run", "--config", cfg.string(), "--out", (tmp / "cardalg_test_r1.json").string()});
  cli({"corpus", "run", "--config", cfg.string(), "--out", (tmp / "cardalg_test_r2.json").string()});
  EXPECT_EQ(slurp(tmp / "cardalg_test_r1.json"), slurp(tmp / "cardalg_test_r2.json"));
}

TEST(Corpus, ConfigErrors) {
  EXPECT_THROW(CorpusConfig::from_json({{"zmod_maximum", 3}}), std::invalid_argument);
  EXPECT_THROW(CorpusConfig::from_json({{"ring_cap", 1}}), std::invalid_argument);
  EXPECT_THROW(CorpusConfig::from_json({{"baer_cap", 1000}}), std::invalid_argument);
  EXPECT_EQ(CorpusConfig::from_json(CorpusConfig().to_json()).to_json(), CorpusConfig().to_json());
  const auto bad = temp_file("bad.json", R"({"zmod_maximum": 3})");
  EXPECT_EQ(cli({"corpus", "run", "--config", bad.string()}).code, 2);
  const auto broken = temp_file("broken.json", "{");
  EXPECT_EQ(cli({"corpus", "run", "--config", broken.string()}).code, 2);
  EXPECT_EQ(cli({"corpus", "run", "--config", "/nonexistent/c.json"}).code, 2);
}

TEST(Corpus, DefaultRingListSize) {
  const auto specs = corpus_ring_specs(CorpusConfig());
  EXPECT_GE(specs.size(), 150u);
  EXPECT_EQ(std::set<std::string>(specs.begin(), specs.end()).size(), specs.size());
}
