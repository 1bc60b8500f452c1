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

#include "umetrics/inequalities.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "umetrics/errors.hpp"
#include "umetrics/linalg.hpp"
#include "umetrics/matrix_io.hpp"
#include "umetrics/metrics.hpp"

using namespace umetrics;
using namespace umetrics::suites;
using norms::SymmetricNormSpec;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix diag_phases(const std::vector<double>& thetas) {
  const int n = static_cast<int>(thetas.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = std::complex<double>(std::cos(thetas[i]), std::sin(thetas[i]));
  }
  return m;
}

}  // namespace

TEST_SUITE("inequalities") {

TEST_CASE("theorem-backed suites run clean at desk scale") {
  const SuiteRun run{200, 42, 1};

  for (int n : {2, 3, 4}) {
    CAPTURE(n);
    CHECK(check_kyfan_chain(n, run).ok());
    CHECK(check_unitary_lidskii(n, 1, n, run).ok());
    CHECK(check_hermitian_lidskii(n, 1, n, run).ok());
    CHECK(check_perturbation(n, 0.1, run).ok());

    const auto l1 = SymmetricNormSpec::lp(1.0, n);
    const auto linf = SymmetricNormSpec::lp_infinity(n);
    CHECK(check_metric_axioms(l1, run).ok());
    CHECK(check_metric_axioms(linf, run).ok());
    CHECK(check_pseudo_metric_axioms(l1, SuiteRun{60, 42, 1}).ok());
    CHECK(check_cost_constraints(linf, SuiteRun{60, 42, 1}).ok());
  }
}

TEST_CASE("kyfan chain degenerates to equality when two factors match") {
  // With Z = Y the third quotient equals the first and b = 0, so every
  // k-sum inequality is tight. Direct computation, no sampling.
  RandomStream rng(401);
  const ComplexMatrix x = linalg::haar_unitary(3, rng);
  const ComplexMatrix y = linalg::haar_unitary(3, rng);
  const auto a = metrics::abs_phases(x * y.adjoint()).values();
  const auto b = metrics::abs_phases(y * y.adjoint()).values();
  const auto c = metrics::abs_phases(x * y.adjoint()).values();
  for (int k = 1; k <= 3; ++k) {
    std::vector<double> paired(a.size());
    for (size_t i = 0; i < a.size(); ++i) paired[i] = a[i] + b[i];
    const double gap =
        norms::ky_fan_vector(paired, k) - norms::ky_fan_vector(c, k);
    CHECK(std::abs(gap) <= 1e-9);
  }
}

TEST_CASE("kyfan chain scalar case wraps as expected") {
  // Phases 2pi/3 on both factors push the product across the cut.
  const ComplexMatrix x = diag_phases({2.0 * kPi / 3.0});
  const ComplexMatrix y = diag_phases({-2.0 * kPi / 3.0});  // so X Y* wraps
  const auto a = metrics::abs_phases(ComplexMatrix(x)).values();
  const auto b = metrics::abs_phases(ComplexMatrix(y)).values();
  const auto c = metrics::abs_phases(ComplexMatrix(x * y.adjoint())).values();
  CHECK(c[0] == doctest::Approx(2.0 * kPi / 3.0));  // wrapped |4pi/3 - 2pi|
  CHECK(a[0] + b[0] == doctest::Approx(4.0 * kPi / 3.0));
  CHECK(c[0] <= a[0] + b[0] + 1e-12);
}

TEST_CASE("metric triangle is tight for commuting rotations") {
  const double alpha = 0.9, beta = 1.3;  // alpha + beta < pi
  const ComplexMatrix x = diag_phases({0.0, alpha});
  const ComplexMatrix y = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix z = diag_phases({0.0, -beta});
  const auto l1 = SymmetricNormSpec::lp(1.0, 2);
  const double lhs = metrics::metric(l1, x, z);
  const double rhs = metrics::metric(l1, x, y) + metrics::metric(l1, y, z);
  CHECK(lhs == doctest::Approx(alpha + beta));
  CHECK(rhs == doctest::Approx(alpha + beta));
}

TEST_CASE("hermitian lidskii is exact for commuting diagonals") {
  Eigen::VectorXcd da(2), db(2);
  da << 2.0, 0.0;
  db << 1.0, -1.0;
  const ComplexMatrix a = da.asDiagonal();
  const ComplexMatrix b = db.asDiagonal();
  const auto sa = linalg::eig_hermitian(a).values;
  const auto sb = linalg::eig_hermitian(b).values;
  const auto sab = linalg::eig_hermitian(ComplexMatrix(a + b)).values;
  // lambda(A+B) = (3, -1); top inequality holds with equality.
  CHECK(sab(0).real() == doctest::Approx(3.0));
  CHECK(sab(0).real() <= sa(0).real() + sb(0).real() + 1e-12);
}

TEST_CASE("schur transfer passes for the built-in family") {
  for (int n : {2, 3}) {
    for (const auto& h : builtin_transfer_functionals(n)) {
      CAPTURE(h.name());
      const auto report = check_schur_transfer(h, n, SuiteRun{150, 7, 1});
      CHECK(report.ok());
    }
  }
}

TEST_CASE("transfer functionals reduce to known forms") {
  // Lidskii form with the top singleton against the matching suite.
  TransferFunctional top;
  top.form = TransferFunctional::Form::Lidskii;
  top.triple.j_seq = {1};
  top.triple.k_seq = {1};

  RandomStream rng(419);
  const ComplexMatrix x = linalg::haar_unitary(3, rng);
  const ComplexMatrix y = linalg::haar_unitary(3, rng);
  const auto a = metrics::abs_phases(x).values();
  const auto b = metrics::abs_phases(y).values();
  const auto c = metrics::abs_phases(ComplexMatrix(x * y)).values();
  CHECK(top(c, a, b) == doctest::Approx(c[0] - a[0] - b[0]));

  const std::vector<double> zeros(3, 0.0);
  TransferFunctional kyfan_full;
  kyfan_full.form = TransferFunctional::Form::KyFan;
  kyfan_full.k = 3;
  CHECK(kyfan_full(zeros, zeros, zeros) == 0.0);
}

TEST_CASE("general lidskii accepts valid families and flags false ones") {
  const SuiteRun run{300, 99, 1};

  // Weyl's top inequality: always true.
  const auto weyl = check_general_lidskii(
      majorization::GeneralIndexSets{{1}, {1}, {1}}, 2, run);
  CHECK(weyl.ok());

  // A known-valid staggered family at n = 2.
  const auto staggered = check_general_lidskii(
      majorization::GeneralIndexSets{{1}, {2}, {2}}, 2, run);
  CHECK(staggered.ok());

  // lambda_min(A+B) <= lambda_min(A) + lambda_min(B) is false in general.
  const auto bottom = check_general_lidskii(
      majorization::GeneralIndexSets{{2}, {2}, {2}}, 2, run);
  CHECK_FALSE(bottom.ok());
  CHECK(bottom.violations >= 1);

  // The explicit counterexample: A = diag(1,0), B = diag(0,1).
  Eigen::VectorXcd da(2), db(2);
  da << 1.0, 0.0;
  db << 0.0, 1.0;
  const auto la = linalg::eig_hermitian(ComplexMatrix(da.asDiagonal())).values;
  const auto lb = linalg::eig_hermitian(ComplexMatrix(db.asDiagonal())).values;
  const auto lab = linalg::eig_hermitian(
                       ComplexMatrix(ComplexMatrix(da.asDiagonal()) +
                                     ComplexMatrix(db.asDiagonal())))
                       .values;
  CHECK(lab(1).real() > la(1).real() + lb(1).real());
}

TEST_CASE("perturbation bound specializes to the unperturbed case") {
  // A tiny eps keeps wraps impossible; margins must stay nonnegative.
  const auto report = check_perturbation(3, 0.01, SuiteRun{200, 5, 1});
  CHECK(report.ok());
  CHECK(report.worst_margin >= -1e-9);

  const auto scalar = check_perturbation(1, 0.3, SuiteRun{200, 5, 1});
  CHECK(scalar.ok());

  CHECK_THROWS_AS(check_perturbation(2, 0.0, SuiteRun{10, 1, 1}), Error);
  CHECK_THROWS_AS(check_perturbation(2, 1.0, SuiteRun{10, 1, 1}), Error);
}

TEST_CASE("reports are deterministic and thread-count independent") {
  const auto l2 = SymmetricNormSpec::lp(2.0, 3);

  const auto serial_a = check_metric_axioms(l2, SuiteRun{120, 2024, 1});
  const auto serial_b = check_metric_axioms(l2, SuiteRun{120, 2024, 1});
  const auto parallel = check_metric_axioms(l2, SuiteRun{120, 2024, 4});

  CHECK(report_to_json(serial_a).dump() == report_to_json(serial_b).dump());
  CHECK(report_to_json(serial_a).dump() == report_to_json(parallel).dump());

  const auto chain_serial = check_kyfan_chain(4, SuiteRun{240, 7, 1});
  const auto chain_parallel = check_kyfan_chain(4, SuiteRun{240, 7, 3});
  CHECK(report_to_json(chain_serial).dump() ==
        report_to_json(chain_parallel).dump());
}

TEST_CASE("the reported worst case replays to its margin") {
  const auto report = check_kyfan_chain(3, SuiteRun{150, 31337, 2});
  REQUIRE(report.worst_trial >= 0);
  REQUIRE(!report.worst_case.is_null());

  const auto subseed = report.worst_case["subseed"].get<std::uint64_t>();
  CHECK(subseed == mix_seed(report.seed,
                            static_cast<std::uint64_t>(report.worst_trial)));

  nlohmann::json replay_record;
  const double replayed = kyfan_chain_trial(3, subseed, &replay_record);
  CHECK(std::abs(replayed - report.worst_margin) <= 1e-12);
  CHECK(report.worst_case["margin"].get<double>() == replayed);

  // The serialized matrices round-trip and reproduce the same phases.
  const ComplexMatrix x = io::matrix_from_json(report.worst_case["X"]);
  const ComplexMatrix y = io::matrix_from_json(report.worst_case["Y"]);
  const ComplexMatrix rx = io::matrix_from_json(replay_record["X"]);
  CHECK(x == rx);
  CHECK(linalg::unitarity_defect(x) <= 1e-10);
  CHECK(linalg::unitarity_defect(y) <= 1e-10);
}

TEST_CASE("hermitian lidskii worst case replays through the single path") {
  const auto report = check_hermitian_lidskii(3, 1, 3, SuiteRun{100, 555, 1});
  REQUIRE(report.worst_trial >= 0);
  const auto subseed = report.worst_case["subseed"].get<std::uint64_t>();
  const double replayed = hermitian_lidskii_trial(3, 1, 3, subseed, nullptr);
  CHECK(std::abs(replayed - report.worst_margin) <= 1e-12);
}

TEST_CASE("suite failures carry the failing trial index") {
  // A dimension clash between norm and suite surfaces as a failure.
  const auto l2 = SymmetricNormSpec::lp(2.0, 3);
  (void)l2;
  CHECK_THROWS_AS(check_unitary_lidskii(3, 2, 1, SuiteRun{10, 1, 1}),
                  InvalidIndexSet);
  CHECK_THROWS_AS(check_kyfan_chain(2, SuiteRun{0, 1, 1}), Error);
}

TEST_CASE("unitary lidskii is trivial against the inverse") {
  // With Y = X* the product is the identity: every phase collapses, so
  // each inequality reads 0 <= rhs.
  RandomStream rng(431);
  const ComplexMatrix x = linalg::haar_unitary(4, rng);
  const ComplexMatrix y = linalg::adjoint(x);
  const auto a = metrics::abs_phases(x).values();
  const auto b = metrics::abs_phases(y).values();
  const auto c = metrics::abs_phases(ComplexMatrix(x * y)).values();
  for (double phase : c) CHECK(std::abs(phase) <= 1e-10);
  for (int p = 1; p <= 4; ++p) {
    for (const auto& triple : majorization::enumerate_triples(4, p)) {
      const auto [lhs, rhs] = majorization::lidskii_lhs_rhs(triple, c, a, b);
      CHECK(lhs <= rhs + 1e-10);
      CHECK(std::abs(lhs) <= 1e-9);
    }
  }
}

TEST_CASE("matrix and index-set JSON round-trips exactly") {
  RandomStream rng(433);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 6);
    const ComplexMatrix u = linalg::haar_unitary(n, rng);
    const ComplexMatrix back =
        io::matrix_from_json(nlohmann::json::parse(io::matrix_to_json(u).dump()));
    CHECK(u == back);  // bit-exact through text
  }

  const majorization::IndexTriple triple{{1, 3}, {2, 4}};
  const auto triple_back = io::triple_from_json(io::triple_to_json(triple));
  CHECK(triple_back.j_seq == triple.j_seq);
  CHECK(triple_back.k_seq == triple.k_seq);

  const majorization::GeneralIndexSets sets{{1}, {2}, {2}};
  const auto sets_back = io::sets_from_json(io::sets_to_json(sets));
  CHECK(sets_back.I == sets.I);
  CHECK(sets_back.J == sets.J);
  CHECK(sets_back.K == sets.K);

  CHECK_THROWS_AS(io::matrix_from_json(nlohmann::json{{"rows", 2}}), ParseError);
  CHECK_THROWS_AS(
      io::matrix_from_json(nlohmann::json::parse(
          R"({"rows": 1, "cols": 1, "data": [[1, null]]})")),
      ParseError);
}

TEST_CASE("report JSON carries the documented fields") {
  const auto report = check_kyfan_chain(2, SuiteRun{50, 9, 1});
  const auto j = report_to_json(report);
  for (const char* key :
       {"suite", "trials", "violations", "worst_margin", "seed", "n",
        "worst_trial", "worst_case"}) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
  CHECK(j["suite"] == "kyfan-chain");
  CHECK(j["trials"] == 50);
  CHECK(j["violations"] == 0);
}

}  // TEST_SUITE
