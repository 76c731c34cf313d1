#include <doctest.h>

#include <filesystem>
#include <random>

#include "evconflict/document.hpp"
#include "evconflict/fusion.hpp"
#include "random_bpa.hpp"

using namespace evconflict;

namespace {

std::string error_of(std::string_view text, ErrorCode* code = nullptr) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    if (code) *code = e.code();
    return e.what();
  }
  FAIL("document unexpectedly parsed");
  return {};
}

bool contains(const std::string& hay, std::string_view needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("parse a well-formed document") {
  const auto doc = parse_document(R"({
    "frame": ["a", "b", "c"],
    "bpas": [
      {"name": "m", "masses": [{"set": ["a", "b"], "mass": 0.6}, {"set": ["c"], "mass": 0.4}]},
      {"name": "dup", "masses": [{"set": ["a"], "mass": 0.5}, {"set": ["a"], "mass": 0.5}]}
    ]
  })");
  CHECK(doc.frame.size() == 3);
  REQUIRE(doc.bpas.size() == 2);
  CHECK(doc.find("m").mass({0b011}) == doctest::Approx(0.6));
  CHECK(doc.find("dup").size() == 1);
  CHECK_THROWS_AS(doc.find("nope"), Error);
}

TEST_CASE("parse errors carry a position") {
  ErrorCode code{};
  auto msg = error_of(R"({"frame": ["a"], "bpas": [{"name": "m", "masses": [{"set": ["a"], "mass": 0.9}]}]})", &code);
  CHECK(code == ErrorCode::UnnormalizedMass);
  CHECK(contains(msg, "$.bpas[0] ('m')"));

  msg = error_of(R"({"frame": ["a"], "bpas": [{"name": "m", "masses": [{"set": ["z"], "mass": 1}]}]})", &code);
  CHECK(code == ErrorCode::UnknownLabel);
  CHECK(contains(msg, "$.bpas[0].masses[0].set"));

  msg = error_of(R"({"frame": ["a"], "bpas": [{"name": "m", "masses": [{"set": [], "mass": 0.2}, {"set": ["a"], "mass": 0.8}]}]})", &code);
  CHECK(code == ErrorCode::EmptySetMass);
  CHECK(contains(msg, "$.bpas[0].masses[0]"));

  msg = error_of(R"({"frame": ["a"], "bpas": [], "extra": 1})", &code);
  CHECK(code == ErrorCode::Parse);
  CHECK(contains(msg, "$.extra: unknown field"));

  msg = error_of(R"({"frame": ["a"], "bpas": [{"name": "m", "masses": [{"set": ["a"], "mass": 1, "w": 2}]}]})");
  CHECK(contains(msg, "$.bpas[0].masses[0].w"));

  msg = error_of(R"({"frame": ["a", "a"], "bpas": []})", &code);
  CHECK(code == ErrorCode::DuplicateLabel);
  CHECK(contains(msg, "$.frame"));

  msg = error_of(R"({"bpas": []})");
  CHECK(contains(msg, "missing field 'frame'"));

  msg = error_of(R"({"frame": ["a"], "bpas": [{"name": "m", "masses": [{"set": ["a"], "mass": "1"}]}]})");
  CHECK(contains(msg, "$.bpas[0].masses[0].mass: expected a number"));

  msg = error_of(R"({"frame": ["a"], "bpas": [
      {"name": "m", "masses": [{"set": ["a"], "mass": 1}]},
      {"name": "m", "masses": [{"set": ["a"], "mass": 1}]}]})");
  CHECK(contains(msg, "$.bpas[1].name: duplicate BPA name"));

  msg = error_of("{\n  \"frame\": [\"a\"]\n  \"bpas\": []\n}", &code);
  CHECK(code == ErrorCode::Parse);
  CHECK(contains(msg, "line 3"));
}

TEST_CASE("dump and parse round-trip random documents") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = testgen::frame_of_size(testgen::random_frame_size(rng, 1, 40));
    BpaDocument doc{f, {}};
    for (int i = 0; i < 3; ++i) {
      doc.bpas.push_back({"m" + std::to_string(i), testgen::random_bpa(rng, f, 10)});
    }
    const auto back = parse_document(dump_document(doc));
    REQUIRE(back.frame == doc.frame);
    for (const auto& entry : doc.bpas) {
      REQUIRE(bpa_equal(back.find(entry.name), entry.bpa, 1e-15));
    }
  }
}

TEST_CASE("combined BPAs survive serialization") {
  std::mt19937_64 rng(32);
  int done = 0;
  while (done < 100) {
    const auto f = testgen::frame_of_size(testgen::random_frame_size(rng, 2, 8));
    const auto a = testgen::random_bpa(rng, f);
    const auto b = testgen::random_bpa(rng, f);
    if (conflict_k(a, b) > 1.0 - 1e-6) continue;
    const auto r = combine_dempster(a, b);
    const auto back = parse_document(dump_document({f, {{"c", r.combined}}}));
    REQUIRE(bpa_equal(back.find("c"), r.combined, 1e-9));
    ++done;
  }
}

TEST_CASE("atomic writes leave nothing behind on failure") {
  const auto dir = std::filesystem::temp_directory_path() / "evconflict_doc_test";
  std::filesystem::create_directories(dir);
  const auto target = dir / "out.json";
  write_file_atomic(target, "{}\n");
  CHECK(std::filesystem::exists(target));
  CHECK_FALSE(std::filesystem::exists(dir / "out.json.tmp"));

  const auto missing = dir / "no_such_dir" / "out.json";
  CHECK_THROWS_AS(write_file_atomic(missing, "x"), Error);
  CHECK_FALSE(std::filesystem::exists(missing));
  std::filesystem::remove_all(dir);
}
