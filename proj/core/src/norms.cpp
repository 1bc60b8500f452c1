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

#include "umetrics/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "umetrics/errors.hpp"

namespace umetrics::norms {
namespace {

std::vector<double> abs_sorted_descending(std::span<const double> v) {
  std::vector<double> a(v.begin(), v.end());
  for (double& x : a) x = std::abs(x);
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

double parse_number(std::string_view text, const char* what) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw InvalidNormSpec(std::string("norm spec: cannot parse ") + what +
                          " from '" + std::string(text) + "'");
  }
  return value;
}

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

}  // namespace

SymmetricNormSpec SymmetricNormSpec::lp(double p, int n) {
  if (n < 1) throw InvalidNormSpec("lp norm: dimension must be >= 1");
  if (!(p >= 1.0)) throw InvalidNormSpec("lp norm: p must be >= 1");
  SymmetricNormSpec s;
  s.kind_ = Kind::Lp;
  s.n_ = n;
  s.p_ = p;
  return s;
}

SymmetricNormSpec SymmetricNormSpec::lp_infinity(int n) {
  return lp(std::numeric_limits<double>::infinity(), n);
}

SymmetricNormSpec SymmetricNormSpec::ky_fan(int k, int n) {
  if (n < 1) throw InvalidNormSpec("kyfan norm: dimension must be >= 1");
  if (k < 1 || k > n) {
    std::ostringstream os;
    os << "kyfan norm: k = " << k << " out of range [1, " << n << "]";
    throw InvalidNormSpec(os.str());
  }
  SymmetricNormSpec s;
  s.kind_ = Kind::KyFan;
  s.n_ = n;
  s.k_ = k;
  return s;
}

SymmetricNormSpec SymmetricNormSpec::mu_weighted(std::vector<double> mu) {
  if (mu.empty()) throw InvalidNormSpec("mu norm: weight vector is empty");
  bool any_nonzero = false;
  for (double w : mu) {
    if (!std::isfinite(w)) throw InvalidNormSpec("mu norm: weights must be finite");
    if (w != 0.0) any_nonzero = true;
  }
  if (!any_nonzero) {
    throw InvalidNormSpec(
        "mu norm: all weights are zero; that defines a seminorm, not a norm");
  }
  SymmetricNormSpec s;
  s.kind_ = Kind::MuWeighted;
  s.n_ = static_cast<int>(mu.size());
  s.mu_ = std::move(mu);
  return s;
}

std::string SymmetricNormSpec::to_string() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::Lp:
      if (p_is_infinite()) return "linf";
      if (p_ == 1.0) return "l1";
      if (p_ == 2.0) return "l2";
      os << "lp:" << p_;
      return os.str();
    case Kind::KyFan:
      os << "kyfan:" << k_;
      return os.str();
    case Kind::MuWeighted:
      os << "mu:";
      for (size_t i = 0; i < mu_.size(); ++i) {
        if (i) os << ",";
        os << mu_[i];
      }
      return os.str();
  }
  return "?";
}

SymmetricNormSpec parse_norm_spec(std::string_view text, int n) {
  if (text == "l1") return SymmetricNormSpec::lp(1.0, n);
  if (text == "l2") return SymmetricNormSpec::lp(2.0, n);
  if (text == "linf") return SymmetricNormSpec::lp_infinity(n);
  if (text.starts_with("lp:")) {
    return SymmetricNormSpec::lp(parse_number(text.substr(3), "p"), n);
  }
  if (text.starts_with("kyfan:")) {
    const double k = parse_number(text.substr(6), "k");
    if (k != std::floor(k)) throw InvalidNormSpec("kyfan norm: k must be an integer");
    return SymmetricNormSpec::ky_fan(static_cast<int>(k), n);
  }
  if (text.starts_with("mu:")) {
    std::vector<double> mu;
    std::string_view rest = text.substr(3);
    while (!rest.empty()) {
      const size_t comma = rest.find(',');
      const std::string_view piece =
          comma == std::string_view::npos ? rest : rest.substr(0, comma);
      mu.push_back(parse_number(piece, "mu weight"));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (static_cast<int>(mu.size()) != n) {
      std::ostringstream os;
      os << "mu norm: " << mu.size() << " weights supplied but dimension is " << n;
      throw InvalidNormSpec(os.str());
    }
    return SymmetricNormSpec::mu_weighted(std::move(mu));
  }
  throw InvalidNormSpec("unknown norm spec '" + std::string(text) +
                        "'; expected l1 | l2 | linf | lp:<p> | kyfan:<k> | mu:<w1,...>");
}

double evaluate(const SymmetricNormSpec& spec, std::span<const double> v) {
  if (static_cast<int>(v.size()) != spec.dim()) {
    std::ostringstream os;
    os << "norm evaluate: vector length " << v.size() << " != spec dimension "
       << spec.dim();
    throw DimensionMismatch(os.str());
  }
  for (double x : v) {
    if (!std::isfinite(x)) throw Error("norm evaluate: non-finite entry");
  }

  switch (spec.kind()) {
    case SymmetricNormSpec::Kind::Lp: {
      if (spec.p_is_infinite()) {
        double best = 0.0;
        for (double x : v) best = std::max(best, std::abs(x));
        return best;
      }
      const double p = spec.p();
      if (p == 1.0) {
        double sum = 0.0;
        for (double x : v) sum += std::abs(x);
        return sum;
      }
      if (p == 2.0) {
        double sum = 0.0;
        for (double x : v) sum += x * x;
        return std::sqrt(sum);
      }
      // Scale by the max entry so large p cannot overflow.
      double peak = 0.0;
      for (double x : v) peak = std::max(peak, std::abs(x));
      if (peak == 0.0) return 0.0;
      double sum = 0.0;
      for (double x : v) sum += std::pow(std::abs(x) / peak, p);
      return peak * std::pow(sum, 1.0 / p);
    }
    case SymmetricNormSpec::Kind::KyFan: {
      std::vector<double> a = abs_sorted_descending(v);
      double sum = 0.0;
      for (int i = 0; i < spec.k(); ++i) sum += a[i];
      return sum;
    }
    case SymmetricNormSpec::Kind::MuWeighted: {
      // The max over permutations is attained by pairing both sequences
      // of absolute values in matching (descending) order, so sorting
      // replaces the factorial search.
      std::vector<double> a = abs_sorted_descending(v);
      std::vector<double> w = abs_sorted_descending(spec.mu());
      double sum = 0.0;
      for (size_t i = 0; i < a.size(); ++i) sum += w[i] * a[i];
      return sum;
    }
  }
  throw Error("norm evaluate: unreachable");
}

double ky_fan_vector(std::span<const double> v, int k) {
  const int n = static_cast<int>(v.size());
  if (k < 1 || k > n) {
    std::ostringstream os;
    os << "ky_fan_vector: k = " << k << " out of range [1, " << n << "]";
    throw InvalidNormSpec(os.str());
  }
  std::vector<double> a(v.begin(), v.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  return std::accumulate(a.begin(), a.begin() + k, 0.0);
}

double ky_fan_matrix(const ComplexMatrix& m, int k, const Tolerances& tol) {
  const int bound = static_cast<int>(std::min(m.rows(), m.cols()));
  if (k < 1 || k > bound) {
    std::ostringstream os;
    os << "ky_fan_matrix: k = " << k << " out of range [1, " << bound << "]";
    throw InvalidNormSpec(os.str());
  }

  std::vector<double> singular;
  if (m.rows() == m.cols() && linalg::hermiticity_defect(m) <= tol.hermiticity) {
    const auto sys = linalg::eig_hermitian(m, tol);
    for (Eigen::Index i = 0; i < sys.values.size(); ++i) {
      singular.push_back(std::abs(sys.values(i).real()));
    }
  } else {
    const ComplexMatrix gram = m.adjoint() * m;
    const auto sys = linalg::eig_hermitian(gram, tol);
    for (Eigen::Index i = 0; i < sys.values.size(); ++i) {
      singular.push_back(std::sqrt(std::max(0.0, sys.values(i).real())));
    }
  }
  std::sort(singular.begin(), singular.end(), std::greater<>());
  return std::accumulate(singular.begin(), singular.begin() + k, 0.0);
}

NormValidationReport validate_norm_function(
    const std::function<double(std::span<const double>)>& fn, int n,
    RandomStream& rng, long trials, double slack) {
  NormValidationReport report;
  report.trials = trials;

  constexpr size_t kMaxRecorded = 16;
  const auto note = [&](double margin, const std::string& what,
                        std::span<const double> v) {
    report.worst_margin = std::min(report.worst_margin, margin);
    if (margin < -slack) {
      ++report.violations;
      if (report.failures.size() < kMaxRecorded) {
        report.failures.push_back(what + " violated by " + format_vector(v));
      }
    }
  };

  std::vector<double> u(n), v(n), w(n);
  for (long t = 0; t < trials; ++t) {
    for (int i = 0; i < n; ++i) {
      u[i] = rng.normal();
      v[i] = rng.normal();
    }

    // (i) triangle inequality
    for (int i = 0; i < n; ++i) w[i] = u[i] + v[i];
    note(fn(u) + fn(v) - fn(w), "triangle inequality", w);

    // (ii) absolute homogeneity
    const double alpha = rng.uniform(-3.0, 3.0);
    for (int i = 0; i < n; ++i) w[i] = alpha * u[i];
    note(-std::abs(fn(w) - std::abs(alpha) * fn(u)), "absolute homogeneity", u);

    // (iii) permutation invariance (random cyclic shift + one swap)
    w.assign(u.begin(), u.end());
    std::rotate(w.begin(), w.begin() + (rng.next_u64() % n), w.end());
    if (n > 1) {
      const size_t a = rng.next_u64() % n;
      const size_t b = rng.next_u64() % n;
      std::swap(w[a], w[b]);
    }
    note(-std::abs(fn(w) - fn(u)), "permutation invariance", u);

    // (iv) sign-flip invariance
    for (int i = 0; i < n; ++i) w[i] = (rng.uniform01() < 0.5) ? -u[i] : u[i];
    note(-std::abs(fn(w) - fn(u)), "sign-flip invariance", u);

    // (v) positivity away from zero
    double peak = 0.0;
    for (double x : u) peak = std::max(peak, std::abs(x));
    if (peak > 1e-3) {
      note(fn(u) - 1e-12, "positivity", u);
    }
  }
  return report;
}

NormValidationReport validate_symmetric_norm(const SymmetricNormSpec& spec,
                                             RandomStream& rng, long trials,
                                             double slack) {
  return validate_norm_function(
      [&spec](std::span<const double> v) { return evaluate(spec, v); },
      spec.dim(), rng, trials, slack);
}

}  // namespace umetrics::norms
