#include <doctest.h>

#include "evconflict/fusion.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "random_bpa.hpp"

using namespace evconflict;

TEST_CASE("conflict_k on the worked examples") {
  const auto ex1 = fixtures::example1();
  CHECK(conflict_k(ex1.m1, ex1.m2) == doctest::Approx(0.99).epsilon(1e-15));

  const auto ex3 = fixtures::example3();
  CHECK(std::abs(conflict_k(ex3.m1, ex3.m2) - 0.8) < 1e-12);

  const auto ex2 = fixtures::example2_m1_m2();
  CHECK(conflict_k(ex2.m1, ex2.m2) == 1.0);

  CHECK_THROWS_AS(conflict_k(ex1.m1, ex3.m1), Error);
}

TEST_CASE("combine_dempster") {
  SUBCASE("example 1 keeps only {A3}") {
    const auto ex1 = fixtures::example1();
    const auto r = combine_dempster(ex1.m1, ex1.m2);
    CHECK(r.k == doctest::Approx(0.99).epsilon(1e-15));
    REQUIRE(r.combined.size() == 1);
    CHECK(r.combined.focal()[0].set.bits == 0b0100);
    CHECK(r.combined.focal()[0].mass == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("vacuous evidence is neutral") {
    const auto ex1 = fixtures::example1();
    const auto vac = vacuous_bpa(ex1.m1.frame());
    const auto r = combine_dempster(ex1.m1, vac);
    CHECK(r.k == 0.0);
    CHECK(bpa_equal(r.combined, ex1.m1, 1e-12));
  }

  SUBCASE("total conflict") {
    const auto rev = fixtures::example1_revised();
    CHECK(conflict_k(rev.m1, rev.m2) == 1.0);
    try {
      combine_dempster(rev.m1, rev.m2);
      FAIL("expected TotalConflict");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TotalConflict);
      CHECK(std::string(e.what()).find("k = 1") != std::string::npos);
    }
    const auto m34 = fixtures::example2_m3_m4();
    CHECK_THROWS_AS(combine_dempster(m34.m1, m34.m2), Error);
  }

  SUBCASE("near-total conflict is refused") {
    const auto f = fixtures::labelled_frame(2);
    const auto a = fixtures::bpa(f, {{{"A1"}, 1.0 - 1e-13}, {{"A2"}, 1e-13}});
    const auto b = fixtures::bpa(f, {{{"A2"}, 1.0}});
    CHECK_THROWS_AS(combine_dempster(a, b), Error);
  }
}

TEST_CASE("combine_dempster agrees with the dense oracle") {
  std::mt19937_64 rng(21);
  int compared = 0;
  while (compared < 300) {
    const auto f = testgen::frame_of_size(testgen::random_frame_size(rng, 1, 6));
    const auto a = testgen::random_bpa(rng, f);
    const auto b = testgen::random_bpa(rng, f);
    const auto ref = oracle::dempster(a, b);
    if (1.0 - ref.k < 1e-6) continue;
    const auto got = combine_dempster(a, b);
    REQUIRE(std::abs(got.k - ref.k) < 1e-12);
    for (std::size_t s = 1; s < ref.combined.size(); ++s) {
      REQUIRE(std::abs(got.combined.mass({s}) - ref.combined[s]) < 1e-12);
    }
    ++compared;
  }
}
