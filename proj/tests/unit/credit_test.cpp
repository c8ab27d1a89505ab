#include <numeric>
#include <random>

#include "doctest.h"
#include "fssrank/credit.hpp"
#include "fssrank/errors.hpp"
#include "helpers.hpp"

using namespace fssrank;
using testutil::make_pub;
using testutil::TempDir;

namespace {

double sum_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

TEST_CASE("equal fraction is the inverse of the author count") {
  CHECK(equal_fraction(4) == doctest::Approx(0.25));
  CHECK(equal_fraction(1) == 1.0);
  CHECK(3 * equal_fraction(3) == doctest::Approx(1.0));
  CHECK_THROWS_AS(equal_fraction(0), ComputeError);
}

TEST_CASE("positional weights, extra-mural five authors") {
  const auto w = positional_weights(5, false);
  REQUIRE(w.size() == 5);
  CHECK(w[0] == 0.30);
  CHECK(w[1] == 0.15);
  CHECK(w[2] == 0.10);
  CHECK(w[3] == 0.15);
  CHECK(w[4] == 0.30);
}

TEST_CASE("positional weights, intra-mural six authors") {
  const auto w = positional_weights(6, true);
  REQUIRE(w.size() == 6);
  CHECK(w[0] == doctest::Approx(0.40));
  CHECK(w[5] == doctest::Approx(0.40));
  for (int i = 1; i <= 4; ++i) CHECK(w[i] == doctest::Approx(0.05));
}

TEST_CASE("degenerate author counts renormalize") {
  const auto two = positional_weights(2, true);
  CHECK(two[0] == doctest::Approx(0.5));
  CHECK(two[1] == doctest::Approx(0.5));

  // brute force: roles (0.30, 0.15, 0.30) scaled by 1/0.75
  const auto three = positional_weights(3, false);
  CHECK(three[0] == doctest::Approx(0.40));
  CHECK(three[1] == doctest::Approx(0.20));
  CHECK(three[2] == doctest::Approx(0.40));
  CHECK(sum_of(three) == doctest::Approx(1.0));

  const auto four = positional_weights(4, false);
  CHECK(four[0] == doctest::Approx(0.30 / 0.9));
  CHECK(four[1] == doctest::Approx(0.15 / 0.9));
  CHECK(sum_of(four) == doctest::Approx(1.0));

  CHECK(positional_weights(1, false) == std::vector<double>{1.0});
  CHECK(positional_weights(1, true) == std::vector<double>{1.0});
}

TEST_CASE("credit vectors sum to one and stay non-negative") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const bool intra = rng() % 2 == 0;
    const auto w = positional_weights(n, intra);
    REQUIRE(w.size() == static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double x : w) {
      CHECK(x >= 0.0);
      sum += x;
    }
    CHECK(std::fabs(sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("positional weights are symmetric under byline reversal") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const bool intra = rng() % 2 == 0;
    auto w = positional_weights(n, intra);
    auto r = w;
    std::reverse(r.begin(), r.end());
    for (int i = 0; i < n; ++i) CHECK(w[i] == doctest::Approx(r[i]));
  }
}

TEST_CASE("first author weight dominates middle weights from five authors up") {
  for (int n = 5; n <= 30; ++n) {
    for (bool intra : {false, true}) {
      const auto w = positional_weights(n, intra);
      for (int i = 2; i < n - 2; ++i) CHECK(w[0] >= w[i]);
    }
  }
}

TEST_CASE("intra predicate follows the first and last affiliations") {
  CHECK(intra_mural(make_pub("W", 2010, 1, {"A"}, {{"P1", "u1"}, {"", "x"}, {"P2", "u1"}})));
  CHECK_FALSE(intra_mural(make_pub("W", 2010, 1, {"A"}, {{"P1", "u1"}, {"P2", "u2"}})));
  // unknown affiliation falls back to the extra-mural variant
  CHECK_FALSE(intra_mural(make_pub("W", 2010, 1, {"A"}, {{"P1", "u1"}, {"", ""}})));
}

TEST_CASE("author_fraction selects the scheme from the professor's field") {
  const auto taxonomy = testutil::small_taxonomy();
  const auto pub = make_pub("W", 2010, 10, {"A"},
                            {{"P1", "u1"}, {"", "x"}, {"", "y"}, {"", "z"}, {"P2", "u2"}});

  const Professor equal_prof = testutil::make_prof("P1", "u1", "MAT/02");
  CHECK(author_fraction(pub, equal_prof, taxonomy) == doctest::Approx(0.2));

  const Professor positional_prof = testutil::make_prof("P1", "u1", "MED/01");
  CHECK(author_fraction(pub, positional_prof, taxonomy) == doctest::Approx(0.30));

  const Professor outsider = testutil::make_prof("P9", "u1", "MAT/02");
  CHECK_THROWS_AS(author_fraction(pub, outsider, taxonomy), ComputeError);
}

TEST_CASE("weight overrides load from csv and are validated") {
  TempDir dir;
  const auto weights = CreditWeights::from_csv(dir.file("w.csv",
                                                        "scheme,role,weight\n"
                                                        "intra,first,0.5\n"
                                                        "intra,last,0.3\n"
                                                        "intra,others,0.2\n"));
  CHECK(weights.intra_first == 0.5);
  CHECK(weights.extra_first == 0.30);  // untouched default
  const auto w = positional_weights(6, true, weights);
  CHECK(w[0] == doctest::Approx(0.5));
  CHECK(w[5] == doctest::Approx(0.3));

  CHECK_THROWS_AS(
      CreditWeights::from_csv(dir.file("bad_sum.csv", "scheme,role,weight\nintra,first,0.9\n")),
      ValidationError);
  CHECK_THROWS_AS(
      CreditWeights::from_csv(dir.file("bad_role.csv", "scheme,role,weight\nintra,middle,0.2\n")),
      ValidationError);
  CHECK_THROWS_AS(CreditWeights::from_csv(dir.file(
                      "dup.csv", "scheme,role,weight\nintra,first,0.4\nintra,first,0.4\n")),
                  ValidationError);
  CHECK_THROWS_AS(
      CreditWeights::from_csv(dir.file(
          "neg.csv",
          "scheme,role,weight\nintra,first,1.4\nintra,last,-0.6\nintra,others,0.2\n")),
      ValidationError);
}
