#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "twmack/job.hpp"

using namespace twmack;
using Json = nlohmann::json;

namespace {

const char* kVerifyK0 = R"json({
  "group": {"kind": "cyclic", "n": 2},
  "ring": {"kind": "gf", "p": 5, "k": 1},
  "action": {"kind": "trivial"},
  "task": {"kind": "verify-mackey", "instance": "k0"}
})json";

} // namespace

TEST_CASE("verify-mackey k0 job passes with all seven axiom verdicts") {
  auto outcome = run_job_text(kVerifyK0);
  CHECK(outcome.exit_code == 0);
  auto j = Json::parse(outcome.json_report);
  CHECK(j.contains("spec_echo"));
  CHECK(j.contains("results"));
  CHECK(j.contains("verdicts"));
  CHECK(j.contains("timings"));
  const auto& per_axiom = j["results"]["axioms"]["per_axiom"];
  for (const char* axiom : {"MF0", "MF1", "MF2", "MF3", "MF4", "MF5", "MF6"}) {
    REQUIRE(per_axiom.contains(axiom));
    CHECK(per_axiom[axiom] == "pass");
  }
  // the values Z and Z^2 show up
  CHECK(j["results"]["mackey"]["values"][0]["free_rank"] == 1);
  CHECK(j["results"]["mackey"]["values"][1]["free_rank"] == 2);
  CHECK(!outcome.text_report.empty());
}

TEST_CASE("reports are byte-identical across runs") {
  auto a = run_job_text(kVerifyK0);
  auto b = run_job_text(kVerifyK0);
  CHECK(a.json_report == b.json_report);
  CHECK(a.text_report == b.text_report);
  // timings stay empty unless the job opts in
  auto j = Json::parse(a.json_report);
  CHECK(j["timings"].empty());
}

TEST_CASE("auslander task reports the isomorphism verdict and rank 4") {
  auto outcome = run_job_text(R"json({
    "group": {"kind": "cyclic", "n": 2},
    "ring": {"kind": "gf", "p": 3, "k": 2},
    "action": {"kind": "frobenius", "power": 1},
    "task": {"kind": "auslander"}
  })json");
  CHECK(outcome.exit_code == 0);
  auto j = Json::parse(outcome.json_report);
  CHECK(j["verdicts"]["isomorphism"] == "pass");
  const auto& full = j["results"]["auslander"][1];
  CHECK(full["verdict"] == "isomorphism");
  CHECK(full["image_rank"] == 4);
  CHECK(j["results"]["full_group_k0_blocks"] == 1);
}

TEST_CASE("double-cosets task validates containment") {
  auto bad = run_job_text(R"json({
    "group": {"kind": "symmetric", "n": 3},
    "task": {"kind": "double-cosets", "J": ["(12)"], "K": ["(13)"], "H": ["(123)"]}
  })json");
  CHECK(bad.exit_code == 2);

  auto good = run_job_text(R"json({
    "group": {"kind": "symmetric", "n": 3},
    "task": {"kind": "double-cosets", "J": ["(12)"], "K": ["(12)"], "H": ["(12)", "(123)"]}
  })json");
  CHECK(good.exit_code == 0);
  auto j = Json::parse(good.json_report);
  CHECK(j["results"]["double_cosets"].size() == 2);
  CHECK(j["verdicts"]["cardinality_identity"] == "pass");
}

TEST_CASE("parse errors exit with code 2 and carry position info") {
  auto outcome = run_job_text("{ not json");
  CHECK(outcome.exit_code == 2);
  auto j = Json::parse(outcome.json_report);
  std::string err = j["verdicts"]["error"].get<std::string>();
  CHECK(err.find("parse error") != std::string::npos);
}

TEST_CASE("gates and unsupported instances") {
  // |G| not invertible in the base ring: validation error, exit 2
  auto gate = run_job_text(R"json({
    "group": {"kind": "cyclic", "n": 2},
    "ring": {"kind": "gf", "p": 2, "k": 1},
    "action": {"kind": "trivial"},
    "task": {"kind": "k0"}
  })json");
  CHECK(gate.exit_code == 2);
  auto j = Json::parse(gate.json_report);
  std::string err = j["verdicts"]["error"].get<std::string>();
  CHECK(err.find("|G|^{-1}") != std::string::npos);

  // non-field base ring in the K0 pipeline: unsupported, exit 3
  auto zm = run_job_text(R"json({
    "group": {"kind": "cyclic", "n": 2},
    "ring": {"kind": "zmod", "n": 5},
    "action": {"kind": "trivial"},
    "task": {"kind": "k0"}
  })json");
  CHECK(zm.exit_code == 3);

  // external data instance is gated behind a flag
  auto quillen = run_job_text(R"json({
    "group": {"kind": "cyclic", "n": 2},
    "ring": {"kind": "gf", "p": 3, "k": 2},
    "action": {"kind": "frobenius"},
    "task": {"kind": "verify-mackey", "instance": "quillen", "i": 2}
  })json");
  CHECK(quillen.exit_code == 3);
  JobOptions allow;
  allow.allow_external_data = true;
  auto quillen_ok = run_job_text(R"json({
    "group": {"kind": "cyclic", "n": 2},
    "ring": {"kind": "gf", "p": 3, "k": 2},
    "action": {"kind": "frobenius"},
    "task": {"kind": "verify-mackey", "instance": "quillen", "i": 2}
  })json",
                                 allow);
  CHECK(quillen_ok.exit_code == 0);
}

TEST_CASE("k0, burnside, decompose and dress-kuku tasks run end to end") {
  auto k0 = run_job_text(R"json({
    "group": {"kind": "cyclic", "n": 2},
    "ring": {"kind": "gf", "p": 3, "k": 2},
    "action": {"kind": "frobenius"},
    "task": {"kind": "k0"}
  })json");
  CHECK(k0.exit_code == 0);
  auto jk = Json::parse(k0.json_report);
  CHECK(jk["results"]["k0"][1]["blocks"] == 1);
  CHECK(jk["results"]["k0"][1]["algebra_dim"] == 4);

  auto burn = run_job_text(R"json({
    "group": {"kind": "symmetric", "n": 3},
    "task": {"kind": "burnside"}
  })json");
  CHECK(burn.exit_code == 0);
  CHECK(Json::parse(burn.json_report)["verdicts"]["hom_rank"] == "pass");

  auto dec = run_job_text(R"json({
    "group": {"kind": "symmetric", "n": 3},
    "ring": {"kind": "gf", "p": 7, "k": 1},
    "action": {"kind": "trivial"},
    "task": {"kind": "decompose", "J": ["(12)"], "K": ["(12)"],
             "H": ["(12)", "(123)"]}
  })json");
  CHECK(dec.exit_code == 0);
  auto jd = Json::parse(dec.json_report);
  CHECK(jd["results"]["double_cosets"] == 2);
  CHECK(jd["verdicts"]["bimodule_squares"] == "pass");

  auto dk = run_job_text(R"json({
    "group": {"kind": "cyclic", "n": 2},
    "ring": {"kind": "gf", "p": 5, "k": 1},
    "action": {"kind": "trivial"},
    "task": {"kind": "verify-mackey", "instance": "dress-kuku"}
  })json");
  CHECK(dk.exit_code == 0);
  CHECK(Json::parse(dk.json_report)["results"]["pipelines_identical"] == true);
}

TEST_CASE("timings appear only on request") {
  auto with = run_job_text(R"json({
    "group": {"kind": "cyclic", "n": 2},
    "ring": {"kind": "gf", "p": 5, "k": 1},
    "action": {"kind": "trivial"},
    "task": {"kind": "k0"},
    "options": {"emit_timings": true}
  })json");
  CHECK(with.exit_code == 0);
  auto j = Json::parse(with.json_report);
  CHECK(j["timings"].contains("k0"));
}

TEST_CASE("group order bound is enforced") {
  JobOptions opts;
  opts.max_group_order = 5;
  auto outcome = run_job_text(R"json({
    "group": {"kind": "symmetric", "n": 3},
    "task": {"kind": "burnside"}
  })json",
                              opts);
  CHECK(outcome.exit_code == 2);
}
