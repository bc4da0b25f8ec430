#include <gtest/gtest.h>

#include "hkfun/errors.hpp"
#include "hkfun/report.hpp"
#include "json.hpp"

using namespace hkfun;
using Json = nlohmann::json;

namespace {

JobSpec job(Command command, std::string ring, std::string ideal) {
  JobSpec spec;
  spec.command = command;
  spec.ring_text = std::move(ring);
  spec.ideal_text = std::move(ideal);
  return spec;
}

JobSpec family(Command command) { return job(command, "ring p=2 vars=x,y", "x^2, x*y"); }

}  // namespace

TEST(InputDocument, ReadsRingAndIdeal) {
  JobSpec spec;
  parse_input_document("# comment\n\n  ring p=2 vars=x,y\nideal x^2, x*y\n", spec);
  EXPECT_EQ(spec.ring_text, "ring p=2 vars=x,y");
  EXPECT_EQ(spec.ideal_text, "x^2, x*y");
}

TEST(InputDocument, QuotientMayContainSpaces) {
  auto ring = parse_ring_header("ring p=3 vars=x,y,z quotient=x^2 + y*z; x*y*z");
  EXPECT_EQ(ring->characteristic(), 3u);
  ASSERT_EQ(ring->defining_ideal().size(), 2u);
  EXPECT_EQ(to_string(ring->defining_ideal()[0]), "x^2 + y*z");
  EXPECT_EQ(ring->header(), "ring p=3 vars=x,y,z quotient=x^2 + y*z;x*y*z");
}

TEST(InputDocument, ErrorsCarryDocumentOffsets) {
  JobSpec spec;
  try {
    parse_input_document("ring p=2 vars=x,y\nideal x^2, x*+y\n", spec);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 31u);
  }
  try {
    parse_input_document("ring p=2 vars=x,y quotient=x^^2\nideal x\n", spec);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 29u);
  }
  EXPECT_THROW(parse_input_document("ideal x\n", spec), ParseError);
  EXPECT_THROW(parse_input_document("ring p=2 vars=x\n", spec), ParseError);
  EXPECT_THROW(parse_input_document("ring p=2 vars=x\nideal x\nideal y\n", spec), ParseError);
  EXPECT_THROW(parse_input_document("ring p=2 vars=x\nfoo\n", spec), ParseError);
  EXPECT_THROW(parse_ring_header("ring vars=x"), ParseError);
  EXPECT_THROW(parse_ring_header("ring p=2 vars=1x"), ParseError);
  EXPECT_THROW(parse_ring_header("ring p=4 vars=x"), PreconditionError);
}

TEST(Report, GhkTableAndCsv) {
  auto spec = family(Command::kGhk);
  spec.n_max = 2;
  auto doc = run_job(spec);
  std::string csv = emit_report(doc, ReportFormat::kCsv);
  EXPECT_EQ(csv, "n,q,value\n0,1,1\n1,2,4\n2,4,16\n");
  std::string table = emit_report(doc, ReportFormat::kTable);
  EXPECT_NE(table.find("generalized series"), std::string::npos);
  auto j = Json::parse(emit_report(doc, ReportFormat::kJson));
  EXPECT_EQ(j["command"], "ghk");
  EXPECT_EQ(j["result"]["entries"][2]["value"], 16);
  EXPECT_EQ(j["params"]["q_list"], (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(j["tool"]["name"], "hkfun");
  EXPECT_FALSE(j.contains("timing"));
}

TEST(Report, SeriesOnExplicitQListWithRatios) {
  auto spec = job(Command::kHk, "ring p=3 vars=x,y,z quotient=x^2 + y*z", "x, y, z");
  spec.q_list = {9, 1, 3};
  spec.ratios = true;
  auto doc = run_job(spec);
  EXPECT_EQ(emit_report(doc, ReportFormat::kCsv),
            "n,q,value,ratio_num,ratio_den\n0,1,1,1,1\n1,3,13,13,9\n2,9,121,121,81\n");
}

TEST(Report, HkRejectsNonMPrimary) {
  try {
    run_job(family(Command::kHk));
    FAIL();
  } catch (const NotMPrimary& e) {
    EXPECT_NE(std::string(e.what()).find("not m-primary"), std::string::npos);
  }
}

TEST(Report, LcProbe) {
  auto doc = run_job(family(Command::kLcProbe));
  auto j = Json::parse(emit_report(doc, ReportFormat::kJson));
  EXPECT_EQ(j["result"]["inferred_n"], 2);
  EXPECT_EQ(j["result"]["verdict"], "consistent-with-LC");
  EXPECT_EQ(j["result"]["per_q"][3]["n_q"], 15);
  EXPECT_EQ(emit_report(doc, ReportFormat::kCsv).substr(0, 18), "q,n_q,ratio\n1,1,1\n");
}

TEST(Report, DecomposeJsonSchema) {
  auto spec = family(Command::kDecompose);
  spec.elements = {"y"};
  auto doc = run_job(spec);
  auto j = Json::parse(emit_report(doc, ReportFormat::kJson));
  for (const char* key : {"command", "ring", "ideal", "params", "result", "certificate", "tool"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["ring"]["p"], 2);
  EXPECT_TRUE(j["ring"]["quotient"].empty());
  for (const char* key : {"n_max", "q_list", "seed", "degree", "retries"}) EXPECT_TRUE(j["params"].contains(key));
  const auto& terms = j["result"]["terms"];
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0]["coefficient"], 2);
  EXPECT_EQ(terms[0]["ideal"], "x^2, y");
  EXPECT_EQ(terms[1]["coefficient"], -1);
  EXPECT_EQ(terms[1]["ideal"], "x^2, x*y, y^2");
  const auto& cert = j["certificate"];
  EXPECT_EQ(cert["seed"], 1);
  EXPECT_EQ(cert["q_list"], (std::vector<int>{1, 2, 4, 8}));
  ASSERT_EQ(cert["checks"].size(), 4u);
  for (const auto& c : cert["checks"]) EXPECT_TRUE(c["pass"].get<bool>());
  EXPECT_TRUE(cert["certified"].get<bool>());
  EXPECT_FALSE(cert["elements"].empty());
}

TEST(Report, EmptyCombinationJson) {
  auto doc = run_job(job(Command::kDecompose, "ring p=2 vars=x,y", "1"));
  auto j = Json::parse(emit_report(doc, ReportFormat::kJson));
  EXPECT_TRUE(j["result"]["terms"].is_array());
  EXPECT_TRUE(j["result"]["terms"].empty());
  EXPECT_TRUE(j["certificate"]["certified"].get<bool>());
}

TEST(Report, DecomposeIsByteStable) {
  auto spec = job(Command::kDecompose, "ring p=2 vars=x,y,z", "x^2, x*y, x*z");
  spec.seed = 11;
  std::string a = emit_report(run_job(spec), ReportFormat::kJson);
  std::string b = emit_report(run_job(spec), ReportFormat::kJson);
  EXPECT_EQ(a, b);
}

TEST(Report, RoundTripVerify) {
  for (const auto& [ring, ideal] : std::vector<std::pair<std::string, std::string>>{
           {"ring p=2 vars=x,y", "x^2, x*y"},
           {"ring p=2 vars=x,y,z", "x^2, x*y, x*z"},
           {"ring p=3 vars=x,y,z", "x*y, y*z"}}) {
    auto spec = job(Command::kDecompose, ring, ideal);
    spec.seed = 5;
    std::string report = emit_report(run_job(spec), ReportFormat::kJson);

    JobSpec verify;
    verify.command = Command::kVerify;
    verify.combination_text = report;
    auto doc = run_job(verify);
    auto original = Json::parse(report);
    auto j = Json::parse(emit_report(doc, ReportFormat::kJson));
    EXPECT_EQ(j["result"]["verdict"], "verified") << ideal;
    EXPECT_EQ(j["result"]["terms"], original["result"]["terms"]);
    EXPECT_EQ(j["certificate"]["q_list"], original["certificate"]["q_list"]);
    // evaluation values do not depend on the seed
    EXPECT_EQ(j["certificate"]["checks"], original["certificate"]["checks"]) << ideal;
    EXPECT_EQ(exit_status(doc), 0);
  }
}

TEST(Report, VerifyFailureIsData) {
  auto spec = family(Command::kDecompose);
  spec.elements = {"y"};
  auto j = Json::parse(emit_report(run_job(spec), ReportFormat::kJson));
  j["result"]["terms"][0]["coefficient"] = 3;
  JobSpec verify = family(Command::kVerify);
  verify.combination_text = j.dump();
  auto doc = run_job(verify);
  auto out = Json::parse(emit_report(doc, ReportFormat::kJson));
  EXPECT_EQ(out["result"]["verdict"], "failed");
  EXPECT_FALSE(out["certificate"]["checks"][1]["pass"].get<bool>());
  EXPECT_EQ(exit_status(doc), 0);
}

TEST(Report, VerifyInputErrors) {
  EXPECT_THROW(run_job(family(Command::kVerify)), PreconditionError);
  JobSpec verify = family(Command::kVerify);
  verify.combination_text = "{not json";
  EXPECT_THROW(run_job(verify), ParseError);
  verify.combination_text = R"({"result": {}})";
  EXPECT_THROW(run_job(verify), PreconditionError);
  verify.combination_text = R"({"result": {"terms": [{"coefficient": 1, "ideal": "x"}]}})";
  EXPECT_THROW(run_job(verify), NotMPrimary);
}

TEST(Report, BudgetSurfaces) {
  auto spec = job(Command::kGhk, "ring p=3 vars=x,y,z", "x^2+y*z+z^2, x*y+y^2, x*z - y*z");
  spec.budget = 2;
  EXPECT_THROW(run_job(spec), BudgetExceeded);
  spec.budget.reset();
  EXPECT_EQ(run_job(spec).q_list.size(), 4u);
}

TEST(Report, CommandAndFormatNames) {
  for (auto c : {Command::kHk, Command::kGhk, Command::kLcProbe, Command::kDecompose, Command::kVerify,
                 Command::kSelfcheck})
    EXPECT_EQ(parse_command(to_string(c)), c);
  EXPECT_THROW(parse_command("frob"), PreconditionError);
  EXPECT_EQ(parse_format("csv"), ReportFormat::kCsv);
  EXPECT_THROW(parse_format("xml"), PreconditionError);
  EXPECT_THROW(run_job(job(Command::kGhk, "", "")), PreconditionError);
}

TEST(Report, Selfcheck) {
  JobSpec spec;
  spec.command = Command::kSelfcheck;
  auto doc = run_job(spec);
  EXPECT_EQ(exit_status(doc), 0);
  auto j = Json::parse(emit_report(doc, ReportFormat::kJson));
  EXPECT_TRUE(j["result"]["all_pass"].get<bool>());
  EXPECT_FALSE(j.contains("ring"));
}
