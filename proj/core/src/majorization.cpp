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
#include <numbers>
#include <sstream>

#include "umetrics/errors.hpp"

namespace umetrics::majorization {
namespace {

std::string format_vector(std::span<const double> v) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "]";
  return os.str();
}

std::string format_indices(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "]";
  return os.str();
}

void require_strictly_increasing(const std::vector<int>& seq, int n,
                                 const char* name) {
  if (seq.empty()) {
    throw InvalidIndexSet(std::string("index sequence ") + name + " is empty");
  }
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 1 || seq[i] > n) {
      std::ostringstream os;
      os << "index sequence " << name << " entry " << seq[i]
         << " outside [1, " << n << "]";
      throw InvalidIndexSet(os.str());
    }
    if (i > 0 && seq[i] <= seq[i - 1]) {
      throw InvalidIndexSet(std::string("index sequence ") + name +
                            " is not strictly increasing");
    }
  }
}

}  // namespace

SubmajorizationCheck weakly_submajorized(std::span<const double> u,
                                         std::span<const double> v,
                                         double tol) {
  if (u.size() != v.size()) {
    std::ostringstream os;
    os << "weakly_submajorized: lengths " << u.size() << " vs " << v.size();
    throw DimensionMismatch(os.str());
  }
  std::vector<double> us(u.begin(), u.end());
  std::vector<double> vs(v.begin(), v.end());
  std::sort(us.begin(), us.end(), std::greater<>());
  std::sort(vs.begin(), vs.end(), std::greater<>());

  SubmajorizationCheck out;
  out.holds = true;
  out.min_margin = std::numeric_limits<double>::infinity();
  double pu = 0.0, pv = 0.0;
  for (size_t k = 0; k < us.size(); ++k) {
    pu += us[k];
    pv += vs[k];
    const double margin = pv - pu;
    if (margin < out.min_margin) out.min_margin = margin;
    if (margin < -tol && out.violating_k == 0) {
      out.holds = false;
      out.violating_k = static_cast<int>(k) + 1;
    }
  }
  return out;
}

std::pair<std::vector<double>, std::vector<double>> sample_submajorized_pair(
    int n, RandomStream& rng) {
  std::vector<double> upper(n);
  for (double& x : upper) x = rng.uniform(0.0, std::numbers::pi);
  std::sort(upper.begin(), upper.end(), std::greater<>());

  // Nonnegative entrywise transfer. Mode 0: none (equality everywhere).
  // Mode 1: shrink only trailing entries (equality on leading prefixes).
  // Mode 2: generic proportional shrink.
  std::vector<double> lower = upper;
  const int mode = static_cast<int>(rng.next_u64() % 8);
  if (mode > 0) {
    const int first = (mode == 1) ? static_cast<int>(rng.next_u64() % n) : 0;
    const double intensity = rng.uniform01();
    for (int i = first; i < n; ++i) {
      lower[i] -= intensity * rng.uniform01() * upper[i];
    }
    std::sort(lower.begin(), lower.end(), std::greater<>());
  }
  return {std::move(lower), std::move(upper)};
}

SchurConvexityReport check_schur_convex(
    const std::function<double(std::span<const double>)>& h, int n, long trials,
    RandomStream& rng, double tol) {
  if (trials < 1) throw Error("check_schur_convex: trials must be >= 1");
  SchurConvexityReport report;
  report.trials = trials;
  for (long t = 0; t < trials; ++t) {
    auto [lower, upper] = sample_submajorized_pair(n, rng);
    const auto premise = weakly_submajorized(lower, upper);
    if (!premise.holds) {
      throw NumericalFailure("check_schur_convex: generator produced a pair "
                             "that is not weakly sub-majorized");
    }
    const double margin = h(upper) - h(lower);
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      if (margin < -tol) {
        report.worst_case = "u = " + format_vector(lower) +
                            ", u' = " + format_vector(upper);
      }
    }
    if (margin < -tol) ++report.violations;
  }
  return report;
}

std::string IndexTriple::to_string() const {
  return "j = " + format_indices(j_seq) + ", k = " + format_indices(k_seq);
}

void validate_triple(const IndexTriple& triple, int n) {
  require_strictly_increasing(triple.j_seq, n, "j");
  require_strictly_increasing(triple.k_seq, n, "k");
  if (triple.j_seq.size() != triple.k_seq.size()) {
    throw InvalidIndexSet("index triple: j and k have different lengths");
  }
  const int p = triple.p();
  if (triple.j_seq[p - 1] + triple.k_seq[p - 1] - p > n) {
    std::ostringstream os;
    os << "index triple inadmissible: j_p + k_p - p = "
       << triple.j_seq[p - 1] + triple.k_seq[p - 1] - p << " > n = " << n;
    throw InvalidIndexSet(os.str());
  }
}

std::pair<double, double> lidskii_lhs_rhs(const IndexTriple& triple,
                                          std::span<const double> c,
                                          std::span<const double> a,
                                          std::span<const double> b) {
  const int n = static_cast<int>(c.size());
  if (a.size() != c.size() || b.size() != c.size()) {
    throw DimensionMismatch("lidskii_lhs_rhs: input vectors differ in length");
  }
  validate_triple(triple, n);

  double lhs = 0.0, rhs = 0.0;
  for (int l = 1; l <= triple.p(); ++l) {
    const int j = triple.j_seq[l - 1];
    const int k = triple.k_seq[l - 1];
    lhs += c[j + k - l - 1];  // 1-based convention into 0-based storage
    rhs += a[j - 1] + b[k - 1];
  }
  return {lhs, rhs};
}

std::vector<IndexTriple> enumerate_triples(int n, int p) {
  if (p < 1 || p > n) {
    std::ostringstream os;
    os << "enumerate_triples: p = " << p << " out of range [1, " << n << "]";
    throw InvalidIndexSet(os.str());
  }

  // All strictly increasing p-subsequences of [1, n], lexicographic.
  std::vector<std::vector<int>> subsets;
  std::vector<int> current(p);
  const auto recurse = [&](auto&& self, int position, int smallest) -> void {
    if (position == p) {
      subsets.push_back(current);
      return;
    }
    for (int value = smallest; value <= n - (p - position - 1); ++value) {
      current[position] = value;
      self(self, position + 1, value + 1);
    }
  };
  recurse(recurse, 0, 1);

  std::vector<IndexTriple> triples;
  for (const auto& j : subsets) {
    for (const auto& k : subsets) {
      if (j[p - 1] + k[p - 1] - p <= n) {
        triples.push_back(IndexTriple{j, k});
      }
    }
  }
  return triples;
}

std::string GeneralIndexSets::to_string() const {
  return "I = " + format_indices(I) + ", J = " + format_indices(J) +
         ", K = " + format_indices(K);
}

void validate_sets(const GeneralIndexSets& sets, int n) {
  require_strictly_increasing(sets.I, n, "I");
  require_strictly_increasing(sets.J, n, "J");
  require_strictly_increasing(sets.K, n, "K");
  if (sets.I.size() != sets.J.size() || sets.I.size() != sets.K.size()) {
    throw InvalidIndexSet("index sets I, J, K must have equal cardinality");
  }
}

}  // namespace umetrics::majorization
