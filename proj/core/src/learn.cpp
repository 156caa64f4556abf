// Copyright 2026 The qbfa developers
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

#include "qbfa/learn.hpp"

#include <cmath>
#include <stdexcept>

namespace qbfa {
namespace {

constexpr double kCoeffTol = 1e-9;

void check_unit_interval(double v, const char* name) {
  if (!(v > 0.0) || v > 1.0) {
    throw std::invalid_argument(std::string(name) + " must lie in (0, 1]");
  }
}

}  // namespace

QueryOracle::QueryOracle(FourierOperator hidden, std::uint64_t seed)
    : hidden_(std::move(hidden)), rng_(seed) {
  double norm_sq = 0.0;
  hidden_.for_each([&](std::uint64_t, Complex v) {
    if (std::abs(v.imag()) > kCoeffTol) {
      throw std::invalid_argument(
          "hidden operator must have real coefficients");
    }
    if (std::abs(v.real()) > 1.0 + kCoeffTol) {
      throw std::invalid_argument(
          "hidden coefficient exceeds 1; operator invalid for sampling");
    }
    norm_sq += std::norm(v);
  });
  weight_cap_ = std::max(1.0, norm_sq);
}

int QueryOracle::sample_coefficient_bit(const PauliString& s) {
  ++queries_;
  const double p0 =
      0.5 + 0.5 * std::clamp(hidden_.coeff(s).real(), -1.0, 1.0);
  return rng_.bernoulli(p0) ? 0 : 1;
}

double QueryOracle::estimate_mean(std::uint64_t word, std::uint64_t shots) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  queries_ += shots;
  const double p0 =
      0.5 + 0.5 * std::clamp(hidden_.coeff(word).real(), -1.0, 1.0);
  const auto zeros = rng_.binomial(shots, p0);
  return (2.0 * static_cast<double>(zeros) - static_cast<double>(shots)) /
         static_cast<double>(shots);
}

double QueryOracle::estimate_subtree_weight(std::uint64_t prefix,
                                            int prefix_len,
                                            std::uint64_t shots) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  if (prefix_len < 0 || prefix_len > n()) {
    throw std::invalid_argument("bad prefix length");
  }
  queries_ += shots;
  const int tail = 2 * (n() - prefix_len);
  double weight = 0.0;
  hidden_.for_each([&](std::uint64_t idx, Complex v) {
    if ((idx >> tail) == prefix) weight += std::norm(v);
  });
  const double noisy =
      weight + rng_.gaussian() / std::sqrt(static_cast<double>(shots));
  return std::clamp(noisy, 0.0, weight_cap_);
}

double estimate_coefficient(QueryOracle& oracle, const PauliString& s,
                            double eta, double delta) {
  check_unit_interval(eta, "eta");
  check_unit_interval(delta, "delta");
  const auto shots = static_cast<std::uint64_t>(
      std::ceil(2.0 / (eta * eta) * std::log(2.0 / delta)));
  return oracle.estimate_mean(s.index(), std::max<std::uint64_t>(shots, 1));
}

std::vector<PauliString> goldreich_levin(QueryOracle& oracle, double gamma,
                                         double delta) {
  check_unit_interval(gamma, "gamma");
  check_unit_interval(delta, "delta");
  const int n = oracle.n();
  const double gamma_sq = gamma * gamma;

  // Union bound over at most 4n/gamma^2 live prefixes times 4 children per
  // level; each estimate must stay within gamma^2/4 of the true weight.
  const double budget = std::ceil(16.0 * n / gamma_sq);
  const double delta_each = delta / budget;
  const auto shots = static_cast<std::uint64_t>(std::ceil(
      32.0 / (gamma_sq * gamma_sq) * std::log(2.0 / delta_each)));

  std::vector<std::uint64_t> frontier{0};
  for (int level = 0; level < n; ++level) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t prefix : frontier) {
      for (std::uint64_t digit = 0; digit < 4; ++digit) {
        const std::uint64_t child = (prefix << 2) | digit;
        const double w =
            oracle.estimate_subtree_weight(child, level + 1, shots);
        if (w >= gamma_sq / 2.0) next.push_back(child);
      }
    }
    frontier = std::move(next);
  }

  std::vector<PauliString> list;
  list.reserve(frontier.size());
  for (std::uint64_t idx : frontier) {
    list.push_back(PauliString::from_index(idx, n));
  }
  return list;
}

LearnReport learn_qbf(QueryOracle& oracle, double eps, double delta,
                      int k_hint) {
  check_unit_interval(eps, "eps");
  check_unit_interval(delta, "delta");
  if (k_hint < 0) throw std::invalid_argument("k_hint must be >= 0");

  const double gamma = eps * std::pow(2.0, -k_hint);
  const std::vector<PauliString> list =
      goldreich_levin(oracle, gamma, delta / 2.0);

  const auto list_size = std::max<std::size_t>(list.size(), 1);
  const double eta =
      std::min(1.0, eps / (2.0 * std::sqrt(static_cast<double>(list_size))));
  const double delta_coeff = delta / (2.0 * static_cast<double>(list_size));

  LearnReport report;
  report.recovered = FourierOperator(oracle.n());
  for (const PauliString& s : list) {
    const double estimate = estimate_coefficient(oracle, s, eta, delta_coeff);
    report.recovered.set_coeff(s, Complex{estimate, 0.0});
  }
  report.queries_used = oracle.query_count();

  // Simulation-side verification against the hidden coefficients.
  const FourierOperator& hidden = oracle.hidden();
  bool guarantee_in_list = true;   // |A_s| >= gamma implies s in L
  double missed_weight = 0.0;      // sum over s not in L of A_s^2
  hidden.for_each([&](std::uint64_t idx, Complex v) {
    bool in_list = false;
    for (const PauliString& s : list) in_list = in_list || s.index() == idx;
    if (!in_list) {
      missed_weight += std::norm(v);
      if (std::abs(v.real()) >= gamma) guarantee_in_list = false;
    }
  });
  bool guarantee_large = true;     // s in L implies |A_s| >= gamma/2
  for (const PauliString& s : list) {
    if (std::abs(hidden.coeff(s).real()) < gamma / 2.0) {
      guarantee_large = false;
    }
  }
  const double tail_bound = std::sqrt(
      eps * eps + std::pow(4.0, k_hint) * gamma * gamma);
  const bool tail_ok = std::sqrt(missed_weight) <= tail_bound + 1e-12;

  FourierOperator gap = report.recovered;
  gap -= hidden;
  report.l2_error = std::sqrt(gap.two_norm_squared());
  report.success = guarantee_in_list && guarantee_large && tail_ok;

  report.params["gamma"] = gamma;
  report.params["eta"] = eta;
  report.params["eps"] = eps;
  report.params["delta"] = delta;
  report.params["k_hint"] = k_hint;
  report.params["list_size"] = static_cast<double>(list.size());
  report.params["tail_bound"] = tail_bound;
  report.params["true_tail"] = std::sqrt(missed_weight);
  // Total certified radius: the tail plus the estimation budget eps/2.
  report.params["error_bound"] = tail_bound + eps / 2.0;
  return report;
}

LearnReport low_degree_learn(QueryOracle& oracle, int degree, double eps,
                             double delta, double c_d) {
  check_unit_interval(eps, "eps");
  check_unit_interval(delta, "delta");
  if (degree < 0 || degree > oracle.n()) {
    throw std::invalid_argument("degree out of range");
  }
  if (!(c_d > 0.0)) throw std::invalid_argument("C_d must be > 0");

  const FourierOperator& hidden = oracle.hidden();
  hidden.for_each([&](std::uint64_t idx, Complex v) {
    if (index_weight(idx, hidden.n()) > degree && std::abs(v) > 1e-12) {
      throw std::invalid_argument("hidden operator exceeds the stated degree");
    }
  });

  // d = 0 degenerates the stated sample size; fall back to the d = 1 form.
  const int d_eff = std::max(degree, 1);
  const double cd_power = std::pow(c_d, 2.0 * d_eff);
  const double n_real = static_cast<double>(oracle.n());
  const auto shots = static_cast<std::uint64_t>(std::ceil(
      std::exp(8.0) * d_eff * d_eff / std::pow(eps, d_eff + 1) * cd_power *
      std::log(n_real / delta)));
  const double b =
      std::sqrt(std::exp(-5.0) * std::pow(eps, d_eff + 1) / (d_eff * cd_power));
  const double threshold = b * (1.0 + std::sqrt(d_eff + 1.0));

  LearnReport report;
  report.recovered = FourierOperator(oracle.n());
  std::uint64_t words = 0;
  const std::uint64_t total = std::uint64_t{1} << (2 * oracle.n());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (index_weight(idx, oracle.n()) > degree) continue;
    ++words;
    const double estimate = oracle.estimate_mean(idx, shots);
    if (std::abs(estimate) >= threshold) {
      report.recovered.set_coeff(idx, Complex{estimate, 0.0});
    }
  }

  FourierOperator gap = report.recovered;
  gap -= hidden;
  const double err_sq = gap.two_norm_squared();
  report.l2_error = std::sqrt(err_sq);
  report.queries_used = oracle.query_count();
  report.success = err_sq <= eps;
  report.params["N"] = static_cast<double>(shots);
  report.params["words"] = static_cast<double>(words);
  report.params["b"] = b;
  report.params["threshold"] = threshold;
  report.params["eps"] = eps;
  report.params["delta"] = delta;
  report.params["c_d"] = c_d;
  return report;
}

double bh_ratio(const FourierOperator& f, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  double power_sum = 0.0;
  const double exponent = 2.0 * degree / (degree + 1.0);
  f.for_each([&](std::uint64_t idx, Complex v) {
    if (index_weight(idx, f.n()) > degree) {
      if (std::abs(v) > 1e-12) {
        throw std::invalid_argument("operator degree exceeds d");
      }
      return;
    }
    power_sum += std::pow(std::abs(v), exponent);
  });
  const double lhs = std::pow(power_sum, 1.0 / exponent);
  const double norm = operator_norm(to_dense(f).mat);
  if (norm <= 0.0) return 0.0;
  return lhs / norm;
}

}  // namespace qbfa
