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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

#include "umetrics/errors.hpp"
#include "umetrics/linalg.hpp"
#include "umetrics/matrix_io.hpp"
#include "umetrics/metrics.hpp"

namespace umetrics::suites {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using linalg::adjoint;
using linalg::gue_hermitian;
using linalg::haar_unitary;
using linalg::matmul;

using TrialFn = std::function<double(std::uint64_t, nlohmann::json*)>;

struct ChunkResult {
  double min_margin = kInf;
  long argmin = -1;
  long violations = 0;
  long failed_trial = -1;
  std::string failure;
};

void run_chunk(const TrialFn& trial, std::uint64_t seed, double tol, long lo,
               long hi, ChunkResult& out) {
  for (long t = lo; t < hi; ++t) {
    double margin = kInf;
    try {
      margin = trial(mix_seed(seed, static_cast<std::uint64_t>(t)), nullptr);
    } catch (const std::exception& e) {
      out.failed_trial = t;
      out.failure = e.what();
      return;
    }
    if (margin < out.min_margin) {
      out.min_margin = margin;
      out.argmin = t;
    }
    if (margin < -tol) ++out.violations;
  }
}

TrialReport run_trials(const std::string& suite, int n, std::string context,
                       const SuiteRun& run, double tol, const TrialFn& trial) {
  if (run.trials < 1) throw Error(suite + ": trials must be >= 1");
  const int threads =
      static_cast<int>(std::clamp<long>(run.threads, 1, run.trials));

  std::vector<ChunkResult> chunks(static_cast<size_t>(threads));
  if (threads == 1) {
    run_chunk(trial, run.seed, tol, 0, run.trials, chunks[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int c = 0; c < threads; ++c) {
      const long lo = run.trials * c / threads;
      const long hi = run.trials * (c + 1) / threads;
      pool.emplace_back(run_chunk, std::cref(trial), run.seed, tol, lo, hi,
                        std::ref(chunks[static_cast<size_t>(c)]));
    }
    for (auto& th : pool) th.join();
  }

  // Numerical failures surface with the lowest failing trial index so
  // serial and parallel runs raise the same error.
  long failed = -1;
  std::string failure;
  for (const auto& c : chunks) {
    if (c.failed_trial >= 0 && (failed < 0 || c.failed_trial < failed)) {
      failed = c.failed_trial;
      failure = c.failure;
    }
  }
  if (failed >= 0) {
    std::ostringstream os;
    os << suite << ": trial " << failed << " failed: " << failure;
    throw NumericalFailure(os.str());
  }

  TrialReport report;
  report.suite = suite;
  report.n = n;
  report.context = std::move(context);
  report.trials = run.trials;
  report.seed = run.seed;
  report.worst_margin = kInf;
  for (const auto& c : chunks) {
    report.violations += c.violations;
    if (c.argmin >= 0 && c.min_margin < report.worst_margin) {
      report.worst_margin = c.min_margin;
      report.worst_trial = c.argmin;
    }
  }

  if (report.worst_trial >= 0) {
    const std::uint64_t subseed =
        mix_seed(run.seed, static_cast<std::uint64_t>(report.worst_trial));
    nlohmann::json record;
    const double replayed = trial(subseed, &record);
    record["trial"] = report.worst_trial;
    record["subseed"] = subseed;
    record["margin"] = replayed;
    report.worst_case = std::move(record);
  }
  return report;
}

std::vector<double> hermitian_spectrum(const ComplexMatrix& h) {
  const auto sys = linalg::eig_hermitian(h);
  std::vector<double> values(static_cast<size_t>(sys.values.size()));
  for (Eigen::Index i = 0; i < sys.values.size(); ++i) {
    values[static_cast<size_t>(i)] = sys.values(i).real();
  }
  return values;  // already descending
}

std::vector<double> singular_values(const ComplexMatrix& h) {
  std::vector<double> s = hermitian_spectrum(h);
  for (double& x : s) x = std::abs(x);
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

ComplexMatrix random_hermitian_with_spectrum(int n, double lo, double hi,
                                             RandomStream& rng) {
  const ComplexMatrix basis = haar_unitary(n, rng);
  Eigen::VectorXcd d(n);
  for (int i = 0; i < n; ++i) d(i) = rng.uniform(lo, hi);
  const ComplexMatrix raw = basis * d.asDiagonal() * basis.adjoint();
  return 0.5 * (raw + raw.adjoint());
}

ComplexMatrix phase_times(double r, const ComplexMatrix& m) {
  return std::complex<double>(std::cos(r), std::sin(r)) * m;
}

double triples_margin(std::span<const majorization::IndexTriple> triples,
                      std::span<const double> c, std::span<const double> a,
                      std::span<const double> b) {
  double margin = kInf;
  for (const auto& triple : triples) {
    const auto [lhs, rhs] = majorization::lidskii_lhs_rhs(triple, c, a, b);
    margin = std::min(margin, rhs - lhs);
  }
  return margin;
}

std::vector<majorization::IndexTriple> triples_for_range(int n, int p_lo,
                                                         int p_hi) {
  if (p_lo < 1 || p_hi > n || p_lo > p_hi) {
    std::ostringstream os;
    os << "lidskii check: p range [" << p_lo << ", " << p_hi
       << "] invalid for n = " << n;
    throw InvalidIndexSet(os.str());
  }
  std::vector<majorization::IndexTriple> all;
  for (int p = p_lo; p <= p_hi; ++p) {
    auto batch = majorization::enumerate_triples(n, p);
    all.insert(all.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return all;
}

}  // namespace

nlohmann::json report_to_json(const TrialReport& report) {
  nlohmann::json j{{"suite", report.suite},
                   {"n", report.n},
                   {"trials", report.trials},
                   {"violations", report.violations},
                   {"worst_margin", report.worst_margin},
                   {"seed", report.seed},
                   {"worst_trial", report.worst_trial}};
  if (!report.context.empty()) j["context"] = report.context;
  if (!report.worst_case.is_null()) j["worst_case"] = report.worst_case;
  return j;
}

// --------------------------------------------------------------------------
// Ky Fan chain
// --------------------------------------------------------------------------

double kyfan_chain_trial(int n, std::uint64_t subseed, nlohmann::json* record) {
  RandomStream rng(subseed);
  const ComplexMatrix x = haar_unitary(n, rng);
  const ComplexMatrix y = haar_unitary(n, rng);
  const ComplexMatrix z = haar_unitary(n, rng);

  const auto a = metrics::abs_phases(matmul(x, adjoint(y))).values();
  const auto b = metrics::abs_phases(matmul(y, adjoint(z))).values();
  const auto c = metrics::abs_phases(matmul(x, adjoint(z))).values();

  // Both sides paired after each factor is sorted descending.
  std::vector<double> paired(a.size());
  for (size_t i = 0; i < a.size(); ++i) paired[i] = a[i] + b[i];

  double margin = kInf;
  for (int k = 1; k <= n; ++k) {
    margin = std::min(margin, norms::ky_fan_vector(paired, k) -
                                  norms::ky_fan_vector(c, k));
  }
  if (record) {
    (*record)["X"] = io::matrix_to_json(x);
    (*record)["Y"] = io::matrix_to_json(y);
    (*record)["Z"] = io::matrix_to_json(z);
  }
  return margin;
}

TrialReport check_kyfan_chain(int n, const SuiteRun& run, double tol) {
  return run_trials("kyfan-chain", n, "", run, tol,
                    [n](std::uint64_t s, nlohmann::json* rec) {
                      return kyfan_chain_trial(n, s, rec);
                    });
}

// --------------------------------------------------------------------------
// Metric axioms
// --------------------------------------------------------------------------

double metric_axioms_trial(const norms::SymmetricNormSpec& g,
                           std::uint64_t subseed, nlohmann::json* record) {
  const int n = g.dim();
  RandomStream rng(subseed);
  const ComplexMatrix x = haar_unitary(n, rng);
  const ComplexMatrix y = haar_unitary(n, rng);
  const ComplexMatrix z = haar_unitary(n, rng);

  const double dxy = metrics::metric(g, x, y);
  const double dyx = metrics::metric(g, y, x);
  const double dyz = metrics::metric(g, y, z);
  const double dxz = metrics::metric(g, x, z);
  const double dself = metrics::metric(g, x, x);
  const double dleft = metrics::metric(g, matmul(z, x), matmul(z, y));

  double margin = std::min({dxy, dyz, dxz});       // nonnegativity
  margin = std::min(margin, -std::abs(dxy - dyx)); // symmetry
  margin = std::min(margin, dxy + dyz - dxz);      // triangle
  margin = std::min(margin, -dself);               // d(X, X) = 0
  margin = std::min(margin, -std::abs(dleft - dxy));  // left invariance
  if ((x - y).norm() > 1e-6) {
    // Separated arguments must be strictly apart in the metric.
    margin = std::min(margin, dxy - 1e-8);
  }

  if (record) {
    (*record)["X"] = io::matrix_to_json(x);
    (*record)["Y"] = io::matrix_to_json(y);
    (*record)["Z"] = io::matrix_to_json(z);
  }
  return margin;
}

TrialReport check_metric_axioms(const norms::SymmetricNormSpec& g,
                                const SuiteRun& run, double tol) {
  return run_trials("metric-axioms", g.dim(), g.to_string(), run, tol,
                    [&g](std::uint64_t s, nlohmann::json* rec) {
                      return metric_axioms_trial(g, s, rec);
                    });
}

// --------------------------------------------------------------------------
// Pseudo-metric axioms
// --------------------------------------------------------------------------

double pseudo_metric_axioms_trial(const norms::SymmetricNormSpec& g,
                                  long oracle_grid_points,
                                  std::uint64_t subseed,
                                  nlohmann::json* record) {
  const int n = g.dim();
  RandomStream rng(subseed);
  const ComplexMatrix x = haar_unitary(n, rng);
  const ComplexMatrix y = haar_unitary(n, rng);
  const ComplexMatrix z = haar_unitary(n, rng);
  const double r = rng.uniform(0.0, kTwoPi);

  const double pxy = metrics::pseudo_metric(g, x, y).value;
  const double pyx = metrics::pseudo_metric(g, y, x).value;
  const double pyz = metrics::pseudo_metric(g, y, z).value;
  const double pxz = metrics::pseudo_metric(g, x, z).value;
  const double pphase = metrics::pseudo_metric(g, phase_times(r, x), y).value;
  const double pself = metrics::pseudo_metric(g, phase_times(r, x), x).value;
  const double dxy = metrics::metric(g, x, y);

  double margin = std::min({pxy, pyz, pxz});        // nonnegativity
  margin = std::min(margin, -std::abs(pxy - pyx));  // symmetry
  margin = std::min(margin, pxy + pyz - pxz);       // triangle
  margin = std::min(margin, -std::abs(pphase - pxy));  // phase invariance
  margin = std::min(margin, -pself);  // zero on phase multiples
  margin = std::min(margin, dxy - pxy);  // pseudo <= metric

  if (oracle_grid_points > 0) {
    const double oracle =
        metrics::pseudo_metric_grid_oracle(g, x, y, oracle_grid_points).value;
    margin = std::min(margin, -std::abs(pxy - oracle));
  }

  if (record) {
    (*record)["X"] = io::matrix_to_json(x);
    (*record)["Y"] = io::matrix_to_json(y);
    (*record)["Z"] = io::matrix_to_json(z);
    (*record)["r"] = r;
  }
  return margin;
}

TrialReport check_pseudo_metric_axioms(const norms::SymmetricNormSpec& g,
                                       const SuiteRun& run, double tol,
                                       long oracle_grid_points) {
  return run_trials("pseudo-metric-axioms", g.dim(), g.to_string(), run, tol,
                    [&g, oracle_grid_points](std::uint64_t s,
                                             nlohmann::json* rec) {
                      return pseudo_metric_axioms_trial(g, oracle_grid_points,
                                                        s, rec);
                    });
}

// --------------------------------------------------------------------------
// Lidskii-type checks
// --------------------------------------------------------------------------

namespace {

double unitary_lidskii_margin(
    int n, std::span<const majorization::IndexTriple> triples,
    std::uint64_t subseed, nlohmann::json* record) {
  RandomStream rng(subseed);
  const ComplexMatrix x = haar_unitary(n, rng);
  const ComplexMatrix y = haar_unitary(n, rng);

  const auto a = metrics::abs_phases(x).values();
  const auto b = metrics::abs_phases(y).values();
  const auto c = metrics::abs_phases(matmul(x, y)).values();
  const double margin = triples_margin(triples, c, a, b);

  if (record) {
    (*record)["X"] = io::matrix_to_json(x);
    (*record)["Y"] = io::matrix_to_json(y);
  }
  return margin;
}

double hermitian_lidskii_margin(
    int n, std::span<const majorization::IndexTriple> triples,
    std::uint64_t subseed, nlohmann::json* record) {
  RandomStream rng(subseed);
  const ComplexMatrix a = gue_hermitian(n, 1.0, rng);
  const ComplexMatrix b = gue_hermitian(n, 1.0, rng);

  const auto la = hermitian_spectrum(a);
  const auto lb = hermitian_spectrum(b);
  const auto lab = hermitian_spectrum(a + b);

  double margin = triples_margin(triples, lab, la, lb);

  // Trace identity, normalized per dimension so the suite slack applies.
  const double trace_gap =
      std::accumulate(lab.begin(), lab.end(), 0.0) -
      std::accumulate(la.begin(), la.end(), 0.0) -
      std::accumulate(lb.begin(), lb.end(), 0.0);
  margin = std::min(margin, -std::abs(trace_gap) / n);

  if (record) {
    (*record)["A"] = io::matrix_to_json(a);
    (*record)["B"] = io::matrix_to_json(b);
  }
  return margin;
}

}  // namespace

double unitary_lidskii_trial(int n, int p_lo, int p_hi, std::uint64_t subseed,
                             nlohmann::json* record) {
  const auto triples = triples_for_range(n, p_lo, p_hi);
  return unitary_lidskii_margin(n, triples, subseed, record);
}

TrialReport check_unitary_lidskii(int n, int p_lo, int p_hi,
                                  const SuiteRun& run, double tol) {
  const auto triples = triples_for_range(n, p_lo, p_hi);
  std::ostringstream ctx;
  ctx << "p=" << p_lo << ".." << p_hi;
  return run_trials("unitary-lidskii", n, ctx.str(), run, tol,
                    [n, &triples](std::uint64_t s, nlohmann::json* rec) {
                      return unitary_lidskii_margin(n, triples, s, rec);
                    });
}

double hermitian_lidskii_trial(int n, int p_lo, int p_hi,
                               std::uint64_t subseed, nlohmann::json* record) {
  const auto triples = triples_for_range(n, p_lo, p_hi);
  return hermitian_lidskii_margin(n, triples, subseed, record);
}

TrialReport check_hermitian_lidskii(int n, int p_lo, int p_hi,
                                    const SuiteRun& run, double tol) {
  const auto triples = triples_for_range(n, p_lo, p_hi);
  std::ostringstream ctx;
  ctx << "p=" << p_lo << ".." << p_hi;
  return run_trials("hermitian-lidskii", n, ctx.str(), run, tol,
                    [n, &triples](std::uint64_t s, nlohmann::json* rec) {
                      return hermitian_lidskii_margin(n, triples, s, rec);
                    });
}

// --------------------------------------------------------------------------
// Transfer functionals
// --------------------------------------------------------------------------

std::string TransferFunctional::name() const {
  std::ostringstream os;
  if (form == Form::KyFan) {
    os << "kyfan-form:k=" << k;
  } else {
    os << "lidskii-form:" << triple.to_string();
  }
  return os.str();
}

double TransferFunctional::operator()(std::span<const double> c,
                                      std::span<const double> a,
                                      std::span<const double> b) const {
  if (form == Form::KyFan) {
    return norms::ky_fan_vector(c, k) - norms::ky_fan_vector(a, k) -
           norms::ky_fan_vector(b, k);
  }
  const auto [lhs, rhs] = majorization::lidskii_lhs_rhs(triple, c, a, b);
  return lhs - rhs;
}

std::vector<TransferFunctional> builtin_transfer_functionals(int n) {
  std::vector<TransferFunctional> family;
  for (int k = 1; k <= n; ++k) {
    TransferFunctional f;
    f.form = TransferFunctional::Form::KyFan;
    f.k = k;
    family.push_back(std::move(f));
  }
  for (int p = 1; p <= n; ++p) {
    TransferFunctional f;
    f.form = TransferFunctional::Form::Lidskii;
    f.triple.j_seq.resize(p);
    f.triple.k_seq.resize(p);
    for (int l = 0; l < p; ++l) {
      f.triple.j_seq[l] = l + 1;
      f.triple.k_seq[l] = l + 1;
    }
    family.push_back(std::move(f));
  }
  for (const auto& t : majorization::enumerate_triples(n, 1)) {
    if (t.j_seq[0] == 1 && t.k_seq[0] == 1) continue;  // already included
    TransferFunctional f;
    f.form = TransferFunctional::Form::Lidskii;
    f.triple = t;
    family.push_back(std::move(f));
  }
  return family;
}

double schur_transfer_base_trial(const TransferFunctional& h, int n,
                                 std::uint64_t subseed,
                                 nlohmann::json* record) {
  RandomStream rng(subseed);
  const ComplexMatrix a = gue_hermitian(n, 1.0, rng);
  const ComplexMatrix b = gue_hermitian(n, 1.0, rng);
  const double value = h(singular_values(a + b), singular_values(a),
                         singular_values(b));
  if (record) {
    (*record)["A"] = io::matrix_to_json(a);
    (*record)["B"] = io::matrix_to_json(b);
  }
  return -value;
}

double schur_transfer_unitary_trial(const TransferFunctional& h, int n,
                                    std::uint64_t subseed,
                                    nlohmann::json* record) {
  RandomStream rng(subseed);
  const ComplexMatrix x = haar_unitary(n, rng);
  const ComplexMatrix y = haar_unitary(n, rng);
  const double value = h(metrics::abs_phases(matmul(x, y)).values(),
                         metrics::abs_phases(x).values(),
                         metrics::abs_phases(y).values());
  if (record) {
    (*record)["X"] = io::matrix_to_json(x);
    (*record)["Y"] = io::matrix_to_json(y);
  }
  return -value;
}

TrialReport check_schur_transfer(const TransferFunctional& h, int n,
                                 const SuiteRun& run, double tol) {
  // Stage 1: isotonicity of h in its first argument at fixed (a, b).
  RandomStream iso_rng(mix_seed(run.seed, 0xA11CEULL));
  const auto a0 = metrics::abs_phases(haar_unitary(n, iso_rng)).values();
  const auto b0 = metrics::abs_phases(haar_unitary(n, iso_rng)).values();
  const auto iso = majorization::check_schur_convex(
      [&](std::span<const double> c) { return h(c, a0, b0); }, n, run.trials,
      iso_rng, tol);

  TrialReport report;
  report.suite = "schur-transfer";
  report.n = n;
  report.context = h.name();
  report.trials = run.trials;
  report.seed = run.seed;
  report.violations = iso.violations;
  report.worst_margin = iso.worst_margin;
  if (!iso.ok()) {
    report.worst_case = {{"stage", "isotonicity"}, {"pair", iso.worst_case}};
    return report;  // transfer premise unmet; later stages are meaningless
  }

  // Stage 2: Hermitian base inequality on singular values.
  SuiteRun base_run = run;
  base_run.seed = mix_seed(run.seed, 1);
  TrialReport base =
      run_trials("schur-transfer", n, h.name(), base_run, tol,
                 [&h, n](std::uint64_t s, nlohmann::json* rec) {
                   return schur_transfer_base_trial(h, n, s, rec);
                 });
  report.violations += base.violations;
  if (base.worst_margin < report.worst_margin) {
    report.worst_margin = base.worst_margin;
    report.worst_trial = base.worst_trial;
    report.worst_case = base.worst_case;
    if (!report.worst_case.is_null()) report.worst_case["stage"] = "hermitian-base";
  }
  if (base.violations > 0) return report;

  // Stage 3: transferred inequality on unitary products.
  SuiteRun unitary_run = run;
  unitary_run.seed = mix_seed(run.seed, 2);
  TrialReport transferred =
      run_trials("schur-transfer", n, h.name(), unitary_run, tol,
                 [&h, n](std::uint64_t s, nlohmann::json* rec) {
                   return schur_transfer_unitary_trial(h, n, s, rec);
                 });
  report.violations += transferred.violations;
  if (transferred.worst_margin < report.worst_margin) {
    report.worst_margin = transferred.worst_margin;
    report.worst_trial = transferred.worst_trial;
    report.worst_case = transferred.worst_case;
    if (!report.worst_case.is_null()) report.worst_case["stage"] = "unitary";
  }
  return report;
}

// --------------------------------------------------------------------------
// General Lidskii probe
// --------------------------------------------------------------------------

double general_lidskii_trial(const majorization::GeneralIndexSets& sets, int n,
                             std::uint64_t subseed, nlohmann::json* record) {
  majorization::validate_sets(sets, n);
  RandomStream rng(subseed);
  const ComplexMatrix a = gue_hermitian(n, 1.0, rng);
  const ComplexMatrix b = gue_hermitian(n, 1.0, rng);

  const auto la = hermitian_spectrum(a);
  const auto lb = hermitian_spectrum(b);
  const auto lab = hermitian_spectrum(a + b);

  double lhs = 0.0, rhs = 0.0;
  for (int k : sets.K) lhs += lab[static_cast<size_t>(k - 1)];
  for (int i : sets.I) rhs += la[static_cast<size_t>(i - 1)];
  for (int j : sets.J) rhs += lb[static_cast<size_t>(j - 1)];

  if (record) {
    (*record)["A"] = io::matrix_to_json(a);
    (*record)["B"] = io::matrix_to_json(b);
    (*record)["sets"] = io::sets_to_json(sets);
  }
  return rhs - lhs;
}

TrialReport check_general_lidskii(const majorization::GeneralIndexSets& sets,
                                  int n, const SuiteRun& run, double tol) {
  majorization::validate_sets(sets, n);
  return run_trials("general-lidskii", n, sets.to_string(), run, tol,
                    [&sets, n](std::uint64_t s, nlohmann::json* rec) {
                      return general_lidskii_trial(sets, n, s, rec);
                    });
}

// --------------------------------------------------------------------------
// Perturbation bound
// --------------------------------------------------------------------------

double perturbation_trial(int n, double eps, std::uint64_t subseed,
                          nlohmann::json* record) {
  RandomStream rng(subseed);
  const ComplexMatrix a =
      random_hermitian_with_spectrum(n, -std::numbers::pi + eps,
                                     std::numbers::pi - eps, rng);
  const ComplexMatrix b = random_hermitian_with_spectrum(n, -eps, eps, rng);
  const ComplexMatrix x = linalg::exp_i_hermitian(a);
  const ComplexMatrix e = linalg::exp_i_hermitian(b);

  const auto base = metrics::eigenphases(x).values();
  const auto perturbed = metrics::eigenphases(matmul(x, e)).values();

  double margin = kInf;
  for (size_t j = 0; j < base.size(); ++j) {
    margin = std::min(margin, eps - std::abs(perturbed[j] - base[j]));
  }
  if (record) {
    (*record)["A"] = io::matrix_to_json(a);
    (*record)["B"] = io::matrix_to_json(b);
    (*record)["eps"] = eps;
  }
  return margin;
}

TrialReport check_perturbation(int n, double eps, const SuiteRun& run,
                               double tol) {
  if (!(eps > 0.0) || !(eps < std::numbers::pi / 4.0)) {
    throw Error("check_perturbation: eps must lie in (0, pi/4)");
  }
  std::ostringstream ctx;
  ctx << "eps=" << eps;
  return run_trials("perturbation", n, ctx.str(), run, tol,
                    [n, eps](std::uint64_t s, nlohmann::json* rec) {
                      return perturbation_trial(n, eps, s, rec);
                    });
}

// --------------------------------------------------------------------------
// Cost-function constraints
// --------------------------------------------------------------------------

double cost_constraints_trial(const norms::SymmetricNormSpec& g,
                              std::uint64_t subseed, nlohmann::json* record) {
  const int n = g.dim();
  RandomStream rng(subseed);
  const ComplexMatrix x = haar_unitary(n, rng);
  const ComplexMatrix y = haar_unitary(n, rng);
  const ComplexMatrix w = haar_unitary(n, rng);
  const double r = rng.uniform(0.0, kTwoPi);

  const double cx = metrics::cost(g, x);
  const double cy = metrics::cost(g, y);
  const double c_identity =
      metrics::cost(g, ComplexMatrix::Identity(n, n));
  const double c_phase = metrics::cost(g, phase_times(r, x));
  const double c_inverse = metrics::cost(g, adjoint(x));
  const double c_conj = metrics::cost(g, matmul(matmul(w, x), adjoint(w)));
  const double c_product = metrics::cost(g, matmul(x, y));

  double margin = -c_identity;                          // cost(I) = 0
  margin = std::min(margin, -std::abs(c_phase - cx));   // phase invariance
  margin = std::min(margin, -std::abs(c_inverse - cx)); // inverse symmetry
  margin = std::min(margin, -std::abs(c_conj - cx));    // conjugation invariance
  margin = std::min(margin, cx + cy - c_product);       // sub-additivity

  if (record) {
    (*record)["X"] = io::matrix_to_json(x);
    (*record)["Y"] = io::matrix_to_json(y);
    (*record)["W"] = io::matrix_to_json(w);
    (*record)["r"] = r;
  }
  return margin;
}

TrialReport check_cost_constraints(const norms::SymmetricNormSpec& g,
                                   const SuiteRun& run, double tol) {
  return run_trials("cost-constraints", g.dim(), g.to_string(), run, tol,
                    [&g](std::uint64_t s, nlohmann::json* rec) {
                      return cost_constraints_trial(g, s, rec);
                    });
}

}  // namespace umetrics::suites
