#include <cstdio>
#include <filesystem>
#include <string>

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "fixtures.hpp"
#include "sposet/io.hpp"

#ifndef SPOSET_CLI_PATH
#error "SPOSET_CLI_PATH must point at the command-line binary"
#endif

using namespace sposet;
using Json = nlohmann::json;

namespace {

struct RunResult {
  int         code;
  std::string out;  // stdout and stderr, merged
};

RunResult run_cli(std::string const& args) {
  std::string const command = std::string("\"") + SPOSET_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char        buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  int const status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

//! Writes the shared fixture documents once per process and returns the
//! directory holding them.
std::filesystem::path fixture_dir() {
  static std::filesystem::path const dir = [] {
    auto d = std::filesystem::temp_directory_path() / "sposet-cli-tests";
    std::filesystem::create_directories(d);
    PomonoidPtr const S = fixtures::u2(-1);
    write_text_file((d / "mon.json").string(), to_text(*S));
    write_text_file((d / "right.json").string(), to_text(regular_act(S, Side::right)));
    write_text_file((d / "left.json").string(), to_text(regular_act(S, Side::left)));
    write_text_file((d / "chain2.json").string(), to_text(fixtures::chain2()));
    write_text_file((d / "broken.json").string(), "{ not json\n");
    write_text_file((d / "badorder.json").string(), R"({
      "kind": "pomonoid",
      "elements": ["1", "e"],
      "one": "1",
      "mul": [["1", "e"], ["e", "e"]],
      "leq": [["e", "1"], ["1", "e"]]
    })");
    return d;
  }();
  return dir;
}

std::string fx(std::string const& name) {
  return (fixture_dir() / name).string();
}

}  // namespace

TEST_CASE("cli validates documents with the exit-code contract") {
  RunResult const ok = run_cli("validate " + fx("mon.json"));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("valid pomonoid: 2 element(s), 2 idempotent(s)") != std::string::npos);

  RunResult const act = run_cli("validate " + fx("left.json"));
  CHECK(act.code == 0);
  CHECK(act.out.find("valid left s-poset: 2 element(s)") != std::string::npos);

  RunResult const invalid = run_cli("validate " + fx("badorder.json"));
  CHECK(invalid.code == 1);
  CHECK(invalid.out.find("invalid pomonoid:") != std::string::npos);

  CHECK(run_cli("validate " + fx("broken.json")).code == 2);
  CHECK(run_cli("validate " + fx("does-not-exist.json")).code == 2);
}

TEST_CASE("cli tensor reports classes and produces verifiable certificates") {
  std::string const factors = "--left " + fx("right.json") + " --right " + fx("left.json");

  RunResult const table = run_cli("tensor " + factors + " --table");
  CHECK(table.code == 0);
  CHECK(table.out.find("tensor product has 2 class(es)") != std::string::npos);
  CHECK(table.out.find("class order (row <= column):") != std::string::npos);

  SECTION("single certificate round-trips through verify") {
    RunResult const cert = run_cli("tensor " + factors + " --certify e,1 1,1");
    REQUIRE(cert.code == 0);
    CHECK(cert.out.find("\"kind\": \"tossing\"") != std::string::npos);
    write_text_file(fx("cert.json"), cert.out);

    RunResult const verify = run_cli("verify " + factors + " --cert " + fx("cert.json"));
    CHECK(verify.code == 0);
    CHECK(verify.out.find("certificate accepted") != std::string::npos);
  }

  SECTION("equal classes get a doubled certificate") {
    RunResult const cert = run_cli("tensor " + factors + " --certify e,1 e,e");
    REQUIRE(cert.code == 0);
    CHECK(cert.out.find("\"doubled\": true") != std::string::npos);
    write_text_file(fx("cert2.json"), cert.out);
    CHECK(run_cli("verify " + factors + " --cert " + fx("cert2.json")).code == 0);
  }

  SECTION("unrelated pairs exit 1") {
    RunResult const nope = run_cli("tensor " + factors + " --certify 1,1 e,1");
    CHECK(nope.code == 1);
    CHECK(nope.out.find("not related:") != std::string::npos);
  }

  SECTION("unknown elements exit 2") {
    CHECK(run_cli("tensor " + factors + " --certify zz,1 1,1").code == 2);
  }
}

TEST_CASE("cli check distinguishes holding and failing conditions") {
  RunResult const fails = run_cli("check --sposet " + fx("chain2.json") + " --condition P");
  CHECK(fails.code == 1);
  CHECK(fails.out.find("condition P: fails") != std::string::npos);
  CHECK(fails.out.find("counterexample premise:") != std::string::npos);

  RunResult const holds = run_cli("check --sposet " + fx("chain2.json") + " --condition Pw");
  CHECK(holds.code == 0);
  CHECK(holds.out.find("condition Pw: holds") != std::string::npos);
  CHECK(holds.out.find("witnessed premises:") != std::string::npos);

  RunResult const all = run_cli("check --sposet " + fx("chain2.json") + " --condition all");
  CHECK(all.code == 0);
  CHECK(all.out.find("P: fails") != std::string::npos);
  CHECK(all.out.find("Pw: holds") != std::string::npos);

  CHECK(run_cli("check --sposet " + fx("chain2.json") + " --condition XY").code == 2);
}

TEST_CASE("cli flat prints verdicts per variant") {
  RunResult const pwf = run_cli("flat --sposet " + fx("left.json") + " --variant pwf");
  CHECK(pwf.code == 0);
  CHECK(pwf.out.find("pwf: holds") != std::string::npos);

  RunResult const poflat =
      run_cli("flat --sposet " + fx("left.json") + " --variant poflat --bound 6");
  CHECK(poflat.code == 0);
  CHECK(poflat.out.find("poflat: holds up to the bound (flat-length bound 6)") !=
        std::string::npos);

  CHECK(run_cli("flat --sposet " + fx("left.json") + " --variant shiny").code == 2);
}

TEST_CASE("cli classify reports the decomposition") {
  RunResult const r = run_cli("classify --sposet " + fx("left.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("components: 1") != std::string::npos);
  CHECK(r.out.find("projective: yes") != std::string::npos);
  CHECK(r.out.find("free: yes (basis size 1)") != std::string::npos);
}

TEST_CASE("cli axioms emits sentences and evaluates models") {
  RunResult const emit = run_cli("axioms --monoid " + fx("mon.json") + " --class PiS --emit");
  CHECK(emit.code == 0);
  CHECK(emit.out.find("forall x. 1*x = x") != std::string::npos);

  RunResult const eval =
      run_cli("axioms --monoid " + fx("mon.json") + " --class Pw --eval " + fx("left.json"));
  CHECK(eval.code == 0);
  CHECK(eval.out.find("satisfies") != std::string::npos);

  // the act lives over a different monoid than the scheme
  CHECK(run_cli("axioms --monoid " + fx("mon.json") + " --class Pw --eval " +
                fx("chain2.json"))
            .code == 2);
}

TEST_CASE("cli relations and egood print witness data") {
  RunResult const rel =
      run_cli("relations --monoid " + fx("mon.json") + " --s e --t 1 --dominating pw");
  CHECK(rel.code == 0);
  CHECK(rel.out.find("R<=(e,1") != std::string::npos);
  CHECK(rel.out.find("r<=(e,1") != std::string::npos);
  CHECK(rel.out.find("dominating set") != std::string::npos);

  RunResult const eg = run_cli("egood --monoid " + fx("mon.json"));
  CHECK(eg.code == 0);
  CHECK(eg.out.find("minimal f = {1 e}") != std::string::npos);
  CHECK(eg.out.find("overall: holds") != std::string::npos);
}

TEST_CASE("cli enumerate prints census lines") {
  RunResult const pomonoids = run_cli("enumerate --pomonoids 2");
  CHECK(pomonoids.code == 0);
  CHECK(pomonoids.out.find("4 pomonoid(s) of order 2") != std::string::npos);

  RunResult const acts = run_cli("enumerate --monoid " + fx("mon.json") + " --size 2");
  CHECK(acts.code == 0);
  CHECK(acts.out.find("3 left s-poset(s) of size 2") != std::string::npos);

  RunResult const printed =
      run_cli("enumerate --monoid " + fx("mon.json") + " --size 2 --print");
  CHECK(printed.code == 0);
  CHECK(printed.out.find("\"kind\": \"sposet\"") != std::string::npos);

  CHECK(run_cli("enumerate --pomonoids 2 --seed 7").code == 0);
}

TEST_CASE("cli audit accepts global flags on either side of the subcommand") {
  RunResult const after = run_cli("audit --monoid " + fx("mon.json") + " --max-size 3");
  CHECK(after.code == 0);
  CHECK(after.out.find("instances checked: 15") != std::string::npos);
  CHECK(after.out.find("arrows audited: 72") != std::string::npos);
  CHECK(after.out.find("violations: 0") != std::string::npos);

  RunResult const before = run_cli("--max-size 3 audit --monoid " + fx("mon.json"));
  CHECK(before.code == 0);
  CHECK(before.out == after.out);
}

TEST_CASE("cli search exits 1 exactly when a separator is found") {
  RunResult const hit =
      run_cli("search --monoid " + fx("mon.json") + " --stronger P --weaker Pw");
  CHECK(hit.code == 1);
  CHECK(hit.out.find("found a structure in Pw but not P:") != std::string::npos);

  RunResult const miss =
      run_cli("search --monoid " + fx("mon.json") + " --stronger Pw --weaker P --max-size 3");
  CHECK(miss.code == 0);
  CHECK(miss.out.find("no counterexample up to size 3") != std::string::npos);
}

TEST_CASE("cli emits machine-readable reports with --format json") {
  RunResult const validate = run_cli("validate " + fx("mon.json") + " --format json");
  CHECK(validate.code == 0);
  CHECK(Json::parse(validate.out).at("valid") == true);

  RunResult const check =
      run_cli("check --sposet " + fx("chain2.json") + " --condition P --format json");
  CHECK(check.code == 1);
  Json const verdict = Json::parse(check.out);
  CHECK(verdict.at("holds") == false);
  CHECK(verdict.contains("counterexample"));

  RunResult const tensor = run_cli("tensor --left " + fx("right.json") + " --right " +
                                   fx("left.json") + " --table --format json");
  CHECK(tensor.code == 0);
  Json const classes = Json::parse(tensor.out);
  CHECK(classes.at("classes").size() == 2);
  CHECK(classes.at("class_order").size() == 2);

  RunResult const flat =
      run_cli("flat --sposet " + fx("left.json") + " --variant pwf --format json");
  CHECK(flat.code == 0);
  CHECK(Json::parse(flat.out).at("status") == "holds");

  RunResult const search = run_cli("search --monoid " + fx("mon.json") +
                                   " --stronger P --weaker Pw --format json");
  CHECK(search.code == 1);
  Json const found = Json::parse(search.out);
  CHECK(found.at("found") == true);
  CHECK(found.at("instance").at("kind") == "sposet");

  CHECK(run_cli("validate " + fx("mon.json") + " --format yaml").code == 2);
}

TEST_CASE("cli rejects malformed invocations") {
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("validate --frobnicate " + fx("mon.json")).code == 2);
  CHECK(run_cli("check --sposet " + fx("chain2.json")).code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("--help").code == 0);
}
