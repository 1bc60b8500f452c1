// Copyright 2026 the umetrics developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "umetrics/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "umetrics/errors.hpp"
#include "umetrics/norms.hpp"

using namespace umetrics;
using namespace umetrics::majorization;

TEST_SUITE("majorization") {

TEST_CASE("weak sub-majorization on hand examples") {
  const std::vector<double> ones{1.0, 1.0};
  const auto equal = weakly_submajorized(ones, ones);
  CHECK(equal.holds);
  CHECK(equal.min_margin == 0.0);
  CHECK(equal.violating_k == 0);

  const auto spread = weakly_submajorized(ones, std::vector<double>{2.0, 0.0});
  CHECK(spread.holds);
  CHECK(spread.min_margin == doctest::Approx(0.0));

  const auto reversed =
      weakly_submajorized(std::vector<double>{3.0, 0.0},
                          std::vector<double>{2.0, 1.0});
  CHECK_FALSE(reversed.holds);
  CHECK(reversed.violating_k == 1);
  CHECK(reversed.min_margin == doctest::Approx(-1.0));

  CHECK_THROWS_AS(weakly_submajorized(ones, std::vector<double>{1.0}),
                  DimensionMismatch);
}

TEST_CASE("weak sub-majorization sorts unordered input itself") {
  const auto res = weakly_submajorized(std::vector<double>{0.0, 3.0},
                                       std::vector<double>{1.0, 2.5});
  CHECK_FALSE(res.holds);  // sorted u = (3,0) vs v = (2.5,1)
  CHECK(res.violating_k == 1);
}

TEST_CASE("the relation is reflexive and transitive on sampled pairs") {
  RandomStream rng(307);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 5);
    auto [mid, top] = sample_submajorized_pair(n, rng);
    RandomStream inner(rng.next_u64());
    auto [low, mid2] = sample_submajorized_pair(n, inner);
    // Rescale so low is sub-majorized by mid (chain through a common
    // middle): build low from mid with a second transfer instead.
    std::vector<double> low_from_mid = mid;
    for (double& x : low_from_mid) x -= inner.uniform01() * x;
    std::sort(low_from_mid.begin(), low_from_mid.end(), std::greater<>());

    CHECK(weakly_submajorized(mid, mid).holds);
    CHECK(weakly_submajorized(mid, top).holds);
    CHECK(weakly_submajorized(low_from_mid, mid).holds);
    CHECK(weakly_submajorized(low_from_mid, top).holds);  // transitivity
    (void)low;
    (void)mid2;
  }
}

TEST_CASE("sub-majorization matches k-largest-sum dominance") {
  RandomStream rng(311);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 5);
    std::vector<double> u(n), v(n);
    for (double& x : u) x = std::abs(rng.normal());
    for (double& x : v) x = std::abs(rng.normal());

    const bool related = weakly_submajorized(u, v, 0.0).holds;
    bool dominated = true;
    for (int k = 1; k <= n; ++k) {
      if (norms::ky_fan_vector(u, k) > norms::ky_fan_vector(v, k)) {
        dominated = false;
        break;
      }
    }
    CHECK(related == dominated);
  }
}

TEST_CASE("schur-convexity check accepts prefix sums and norms") {
  const int n = 5;
  for (int k = 1; k <= n; ++k) {
    RandomStream rng(313);
    const auto prefix = [k](std::span<const double> u) {
      std::vector<double> s(u.begin(), u.end());
      std::sort(s.begin(), s.end(), std::greater<>());
      return std::accumulate(s.begin(), s.begin() + k, 0.0);
    };
    const auto report = check_schur_convex(prefix, n, 1000, rng);
    CHECK(report.ok());
  }

  RandomStream seeder(317);
  std::vector<double> mu(n);
  for (double& w : mu) w = seeder.uniform(0.1, 1.0);
  const std::vector<norms::SymmetricNormSpec> specs{
      norms::SymmetricNormSpec::lp(1.0, n),
      norms::SymmetricNormSpec::lp(2.0, n),
      norms::SymmetricNormSpec::lp_infinity(n),
      norms::SymmetricNormSpec::ky_fan(2, n),
      norms::SymmetricNormSpec::mu_weighted(mu),
  };
  for (const auto& spec : specs) {
    RandomStream rng(331);
    const auto report = check_schur_convex(
        [&spec](std::span<const double> u) { return norms::evaluate(spec, u); },
        n, 1000, rng);
    CAPTURE(spec.to_string());
    CHECK(report.ok());
    CHECK(report.violations == 0);
  }
}

TEST_CASE("schur-convexity check flags an antitone functional") {
  RandomStream rng(337);
  const auto negative_sum = [](std::span<const double> u) {
    return -std::accumulate(u.begin(), u.end(), 0.0);
  };
  const auto report = check_schur_convex(negative_sum, 4, 500, rng);
  CHECK_FALSE(report.ok());
  CHECK(report.violations > 0);
  CHECK_FALSE(report.worst_case.empty());
}

TEST_CASE("generated pairs always satisfy the premise") {
  RandomStream rng(347);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 6);
    auto [lower, upper] = sample_submajorized_pair(n, rng);
    CHECK(weakly_submajorized(lower, upper).holds);
    CHECK(std::is_sorted(upper.begin(), upper.end(), std::greater<>()));
    CHECK(std::is_sorted(lower.begin(), lower.end(), std::greater<>()));
  }
}

TEST_CASE("lidskii sums match an independent loop") {
  const std::vector<double> c{5.0, 3.0, 1.0, -2.0};
  const std::vector<double> a{4.0, 2.0, 0.5, -1.0};
  const std::vector<double> b{3.0, 1.5, 0.0, -0.5};

  // Full identity triple: plain totals on both sides.
  IndexTriple full{{1, 2, 3, 4}, {1, 2, 3, 4}};
  const auto [lhs_full, rhs_full] = lidskii_lhs_rhs(full, c, a, b);
  CHECK(lhs_full == doctest::Approx(7.0));
  CHECK(rhs_full == doctest::Approx(9.5));

  // Top singleton: first entries only.
  IndexTriple top{{1}, {1}};
  const auto [lhs_top, rhs_top] = lidskii_lhs_rhs(top, c, a, b);
  CHECK(lhs_top == doctest::Approx(5.0));
  CHECK(rhs_top == doctest::Approx(7.0));

  RandomStream rng(353);
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + static_cast<int>(rng.next_u64() % 4);
    std::vector<double> cc(n), aa(n), bb(n);
    for (double& x : cc) x = rng.normal();
    for (double& x : aa) x = rng.normal();
    for (double& x : bb) x = rng.normal();
    std::sort(cc.begin(), cc.end(), std::greater<>());
    std::sort(aa.begin(), aa.end(), std::greater<>());
    std::sort(bb.begin(), bb.end(), std::greater<>());
    for (int p = 1; p <= n; ++p) {
      for (const auto& triple : enumerate_triples(n, p)) {
        const auto [lhs, rhs] = lidskii_lhs_rhs(triple, cc, aa, bb);
        double lhs_ref = 0.0, rhs_ref = 0.0;
        for (int l = 1; l <= p; ++l) {
          lhs_ref += cc[static_cast<size_t>(triple.j_seq[l - 1] +
                                            triple.k_seq[l - 1] - l - 1)];
          rhs_ref += aa[static_cast<size_t>(triple.j_seq[l - 1] - 1)] +
                     bb[static_cast<size_t>(triple.k_seq[l - 1] - 1)];
        }
        CHECK(lhs == lhs_ref);
        CHECK(rhs == rhs_ref);
      }
    }
  }
}

TEST_CASE("inadmissible or malformed triples are rejected") {
  CHECK_THROWS_AS(validate_triple(IndexTriple{{2}, {2}}, 2), InvalidIndexSet);
  CHECK_THROWS_AS(validate_triple(IndexTriple{{1, 1}, {1, 2}}, 3),
                  InvalidIndexSet);
  CHECK_THROWS_AS(validate_triple(IndexTriple{{1}, {1, 2}}, 3),
                  InvalidIndexSet);
  CHECK_THROWS_AS(validate_triple(IndexTriple{{0}, {1}}, 3), InvalidIndexSet);
  CHECK_THROWS_AS(validate_triple(IndexTriple{{}, {}}, 3), InvalidIndexSet);
  CHECK_NOTHROW(validate_triple(IndexTriple{{1, 3}, {2, 4}}, 6));
}

TEST_CASE("triple enumeration matches hand counts and a brute recount") {
  const auto n2p1 = enumerate_triples(2, 1);
  REQUIRE(n2p1.size() == 3);  // (1,1), (1,2), (2,1); (2,2) inadmissible
  CHECK(n2p1[0].j_seq == std::vector<int>{1});
  CHECK(n2p1[0].k_seq == std::vector<int>{1});
  CHECK(n2p1[1].k_seq == std::vector<int>{2});
  CHECK(n2p1[2].j_seq == std::vector<int>{2});

  const auto n3p3 = enumerate_triples(3, 3);
  REQUIRE(n3p3.size() == 1);  // only the identity triple fits
  CHECK(n3p3[0].j_seq == std::vector<int>{1, 2, 3});
  CHECK(n3p3[0].k_seq == std::vector<int>{1, 2, 3});

  // Brute recount for n=5, p=2 over all index pairs.
  long count = 0;
  for (int j1 = 1; j1 <= 5; ++j1) {
    for (int j2 = j1 + 1; j2 <= 5; ++j2) {
      for (int k1 = 1; k1 <= 5; ++k1) {
        for (int k2 = k1 + 1; k2 <= 5; ++k2) {
          if (j2 + k2 - 2 <= 5) ++count;
        }
      }
    }
  }
  CHECK(static_cast<long>(enumerate_triples(5, 2).size()) == count);
}

TEST_CASE("enumerated triples are unique and valid") {
  for (int n : {2, 4, 6}) {
    for (int p = 1; p <= n; ++p) {
      const auto triples = enumerate_triples(n, p);
      for (const auto& t : triples) CHECK_NOTHROW(validate_triple(t, n));
      for (size_t i = 1; i < triples.size(); ++i) {
        const bool same = triples[i - 1].j_seq == triples[i].j_seq &&
                          triples[i - 1].k_seq == triples[i].k_seq;
        CHECK_FALSE(same);
      }
    }
  }
  CHECK_THROWS_AS(enumerate_triples(3, 0), InvalidIndexSet);
  CHECK_THROWS_AS(enumerate_triples(3, 4), InvalidIndexSet);
}

TEST_CASE("index set families validate their shape") {
  CHECK_NOTHROW(validate_sets(GeneralIndexSets{{1}, {2}, {2}}, 2));
  CHECK_THROWS_AS(validate_sets(GeneralIndexSets{{1, 2}, {1}, {1}}, 3),
                  InvalidIndexSet);
  CHECK_THROWS_AS(validate_sets(GeneralIndexSets{{1}, {1}, {7}}, 3),
                  InvalidIndexSet);
}

}  // TEST_SUITE
