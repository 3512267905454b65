#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "sposet/io.hpp"
#include "sposet/tensor.hpp"

using namespace sposet;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string const kU2Doc = R"({
  "kind": "pomonoid",
  "elements": ["1", "e"],
  "one": "1",
  "mul": [["1", "e"], ["e", "e"]],
  "leq": [["e", "1"]]
})";

//! Scratch directory for path-reference tests, wiped per process.
std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "sposet-io-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("pomonoid documents parse and serialise stably") {
  PomonoidPtr const S = parse_pomonoid(kU2Doc);
  REQUIRE(S != nullptr);
  CHECK(S->size() == 2);
  CHECK(S->one() == 0);
  CHECK(S->mul(1, 1) == 1);
  CHECK(S->leq(1, 0));
  CHECK_FALSE(S->leq(0, 1));
  CHECK(S->name(0) == "1");
  CHECK(S->name(1) == "e");
  CHECK(*S == *fixtures::u2(-1));

  std::string const text = to_text(*S);
  CHECK(text.back() == '\n');
  PomonoidPtr const again = parse_pomonoid(text);
  CHECK(*again == *S);
  CHECK(again->name(1) == "e");
  CHECK(to_text(*again) == text);
}

TEST_CASE("order generators are closed before validation") {
  SECTION("transitive closure fills in missing pairs") {
    std::string const doc = R"({
      "kind": "sposet",
      "side": "left",
      "monoid": { "kind": "pomonoid", "elements": ["1"], "one": "1",
                  "mul": [["1"]], "leq": [] },
      "elements": ["x", "y", "z"],
      "act": [["x", "y", "z"]],
      "leq": [["x", "y"], ["y", "z"]]
    })";
    SPoset const B = parse_sposet(doc);
    CHECK(B.leq(0, 2));
    CHECK(B.leq(0, 0));
  }

  SECTION("antisymmetry is still enforced on the closure") {
    std::string const doc = R"({
      "kind": "pomonoid",
      "elements": ["1", "e"],
      "one": "1",
      "mul": [["1", "e"], ["e", "e"]],
      "leq": [["e", "1"], ["1", "e"]]
    })";
    CHECK_THROWS_MATCHES(parse_pomonoid(doc), std::invalid_argument,
                         Catch::Matchers::MessageMatches(ContainsSubstring("antisymmetr")));
  }
}

TEST_CASE("shape errors name the offending field") {
  CHECK_THROWS_MATCHES(parse_pomonoid(R"({"kind": "nope"})"), std::invalid_argument,
                       Catch::Matchers::MessageMatches(ContainsSubstring("kind")));
  CHECK_THROWS_MATCHES(
      parse_pomonoid(R"({"kind": "pomonoid", "elements": ["1"], "mul": [["1"]], "leq": []})"),
      std::invalid_argument, Catch::Matchers::MessageMatches(ContainsSubstring("one")));
  CHECK_THROWS_AS(parse_pomonoid(R"({
    "kind": "pomonoid", "elements": ["1", "1"], "one": "1",
    "mul": [["1", "1"], ["1", "1"]], "leq": []
  })"),
                  std::invalid_argument);
  CHECK_THROWS_MATCHES(parse_pomonoid(R"({
    "kind": "pomonoid", "elements": ["1", "e"], "one": "1",
    "mul": [["1", "e"], ["e", "f"]], "leq": []
  })"),
                       std::invalid_argument,
                       Catch::Matchers::MessageMatches(ContainsSubstring("f")));
  CHECK_THROWS_MATCHES(parse_sposet(R"({
    "kind": "sposet", "side": "sideways",
    "monoid": { "kind": "pomonoid", "elements": ["1"], "one": "1",
                "mul": [["1"]], "leq": [] },
    "elements": ["x"], "act": [["x"]], "leq": []
  })"),
                       std::invalid_argument,
                       Catch::Matchers::MessageMatches(ContainsSubstring("side")));
}

TEST_CASE("syntax errors report a position") {
  CHECK_THROWS_MATCHES(parse_pomonoid("{ \"kind\": "), std::invalid_argument,
                       Catch::Matchers::MessageMatches(ContainsSubstring("line")));
  CHECK_THROWS_AS(document_kind("[1, 2,"), std::invalid_argument);
}

TEST_CASE("document kinds are sniffed without validation") {
  CHECK(document_kind(kU2Doc) == "pomonoid");
  CHECK(document_kind(R"({"kind": "sposet", "whatever": 3})") == "sposet");
  CHECK(document_kind(R"({"kind": "tossing"})") == "tossing");
}

TEST_CASE("monoid references resolve relative to the referring file") {
  auto const dir = scratch_dir();
  write_text_file((dir / "mon.json").string(), kU2Doc);
  std::string const sposet_doc = R"({
    "kind": "sposet",
    "side": "left",
    "monoid": "mon.json",
    "elements": ["a", "b"],
    "act": [["a", "b"], ["a", "a"]],
    "leq": [["a", "b"]]
  })";
  write_text_file((dir / "act.json").string(), sposet_doc);

  SECTION("load_sposet uses the file's own directory") {
    SPoset const B = load_sposet((dir / "act.json").string());
    CHECK(B.size() == 2);
    CHECK(B.side() == Side::left);
    CHECK(B.monoid()->size() == 2);
    CHECK(B.act(1, 1) == 0);
    CHECK(B.leq(0, 1));
  }

  SECTION("parse_sposet honours an explicit base directory") {
    SPoset const B = parse_sposet(sposet_doc, dir.string());
    CHECK(B.size() == 2);
    CHECK(*B.monoid() == *fixtures::u2(-1));
  }

  SECTION("a dangling reference fails with the path in the message") {
    CHECK_THROWS_MATCHES(parse_sposet(sposet_doc, (dir / "missing").string()),
                         std::invalid_argument,
                         Catch::Matchers::MessageMatches(ContainsSubstring("mon.json")));
  }

  SECTION("loaders round-trip files byte for byte") {
    PomonoidPtr const S = load_pomonoid((dir / "mon.json").string());
    CHECK(*S == *fixtures::u2(-1));
    std::string const text = to_text(*S);
    write_text_file((dir / "mon2.json").string(), text);
    CHECK(read_text_file((dir / "mon2.json").string()) == text);
    CHECK_THROWS_AS(read_text_file((dir / "no-such-file.json").string()),
                    std::runtime_error);
  }
}

TEST_CASE("s-poset documents serialise stably with names") {
  SPoset const B = fixtures::chain2();
  std::string const text = to_text(B);
  SPoset const again = parse_sposet(text);
  CHECK(again.size() == 2);
  CHECK(again.leq(1, 0));
  CHECK(again.name(0) == "a");
  CHECK(again.name(1) == "b");
  CHECK(to_text(again) == text);
}

TEST_CASE("tossing certificates round-trip through their documents") {
  PomonoidPtr const S = fixtures::u2(-1);
  SPoset const A = regular_act(S, Side::right);
  SPoset const B = regular_act(S, Side::left);
  TensorPoset const T = tensor_product(A, B);

  SECTION("single") {
    auto const cert = extract_tossing(T, {1, 0}, {0, 0});
    REQUIRE(cert.has_value());
    std::string const text = to_text(*cert, A, B);
    CHECK(document_kind(text) == "tossing");
    TossingCertificate const parsed = parse_certificate(text, A, B);
    CHECK(verify_tossing(A, B, parsed));
    CHECK(parsed.from == cert->from);
    CHECK(parsed.to == cert->to);
    CHECK(parsed.skeleton == cert->skeleton);
    CHECK(to_text(parsed, A, B) == text);
  }

  SECTION("doubled") {
    auto const cert = extract_double_tossing(T, {1, 0}, {1, 1});
    REQUIRE(cert.has_value());
    REQUIRE(cert->skeleton.doubled());
    std::string const text = to_text(*cert, A, B);
    TossingCertificate const parsed = parse_certificate(text, A, B);
    CHECK(parsed.skeleton.doubled());
    CHECK(verify_tossing(A, B, parsed));
    CHECK(to_text(parsed, A, B) == text);
  }

  SECTION("unknown element names are rejected") {
    auto const cert = extract_tossing(T, {1, 0}, {0, 0});
    REQUIRE(cert.has_value());
    std::string text = to_text(*cert, A, B);
    auto const pos = text.find("\"1\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "\"?\"");
    CHECK_THROWS_AS(parse_certificate(text, A, B), std::invalid_argument);
  }
}
