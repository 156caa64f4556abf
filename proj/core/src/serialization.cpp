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

#include "qbfa/serialization.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qbfa {

Json operator_to_json(const FourierOperator& f) {
  std::vector<std::pair<std::uint64_t, Complex>> entries;
  f.for_each([&](std::uint64_t idx, Complex v) { entries.emplace_back(idx, v); });
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Json coeffs = Json::array();
  for (const auto& [idx, v] : entries) {
    coeffs.push_back({{"s", PauliString::from_index(idx, f.n()).to_base4()},
                      {"re", v.real()},
                      {"im", v.imag()}});
  }
  return Json{{"n", f.n()}, {"coeffs", std::move(coeffs)}};
}

FourierOperator operator_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  FourierOperator f(n);
  for (const auto& entry : j.at("coeffs")) {
    const auto s = PauliString::from_base4(entry.at("s").get<std::string>());
    if (s.size() != n) {
      throw std::invalid_argument("coefficient word length does not match n");
    }
    f.set_coeff(s, Complex{entry.at("re").get<double>(),
                           entry.value("im", 0.0)});
  }
  return f;
}

void save_operator(const std::string& path, const FourierOperator& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << operator_to_json(f).dump(2) << "\n";
}

FourierOperator load_operator(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open operator file: " + path);
  Json j;
  in >> j;
  return operator_from_json(j);
}

Json to_json(const InfluenceProfile& profile) {
  return Json{{"inf1", profile.inf1},
              {"inf2", profile.inf2},
              {"total1", profile.total1},
              {"total2", profile.total2},
              {"argmax1", profile.argmax1}};
}

Json to_json(const SemigroupCheckReport& report) {
  return Json{{"name", report.name},     {"t", report.t},
              {"lhs", report.lhs},       {"rhs", report.rhs},
              {"satisfied", report.satisfied}, {"slack", report.slack}};
}

Json to_json(const InequalityReport& report) {
  Json j{{"name", report.name},
         {"n", report.n},
         {"seed", report.seed},
         {"lhs", report.lhs},
         {"rhs", report.rhs},
         {"implied_constant", report.implied_constant},
         {"satisfied_at", report.satisfied_at},
         {"satisfied", report.satisfied},
         {"degenerate", report.degenerate}};
  if (!report.tag.empty()) j["tag"] = report.tag;
  if (!report.extras.empty()) j["extras"] = report.extras;
  return j;
}

Json to_json(const JuntaResult& result) {
  return Json{{"discarded", std::vector<int>(result.discarded.begin(),
                                             result.discarded.end())},
              {"junta", operator_to_json(result.junta)},
              {"error_l2", result.error_l2},
              {"k_actual", result.k_actual},
              {"k_bound", result.k_bound},
              {"eta", result.eta},
              {"t", result.t}};
}

Json to_json(const BooleanJuntaResult& result) {
  return Json{{"junta", operator_to_json(to_fourier(result.junta))},
              {"error_l2", result.error_l2},
              {"k_actual", result.k_actual},
              {"k_bound", result.k_bound},
              {"extraction", to_json(result.extraction)}};
}

Json to_json(const LearnReport& report) {
  return Json{{"recovered", operator_to_json(report.recovered)},
              {"l2_error", report.l2_error},
              {"queries_used", report.queries_used},
              {"success", report.success},
              {"params", report.params}};
}

Json to_json(const AxiomReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"asserted", c.asserted},
                      {"satisfied", c.satisfied},
                      {"worst_slack", c.worst_slack},
                      {"constant", c.constant}});
  }
  return Json{{"checks", std::move(checks)},
              {"best_alpha", report.best_alpha},
              {"sigma_condition", report.sigma_condition},
              {"all_asserted_pass", report.all_asserted_pass}};
}

Json to_json(const EnsembleSpec& spec) {
  Json j{{"family", family_name(spec.family)},
         {"n", spec.n},
         {"seed", spec.seed},
         {"rank", spec.rank},
         {"width", spec.width},
         {"time", spec.time},
         {"site", spec.site},
         {"pauli", spec.pauli}};
  if (!spec.truth_table.empty()) j["truth_table"] = spec.truth_table;
  if (!spec.hamiltonian.empty()) {
    Json terms = Json::array();
    for (const auto& term : spec.hamiltonian) {
      Json re = Json::array();
      Json im = Json::array();
      for (Eigen::Index r = 0; r < term.op.rows(); ++r) {
        Json re_row = Json::array();
        Json im_row = Json::array();
        for (Eigen::Index c = 0; c < term.op.cols(); ++c) {
          re_row.push_back(term.op(r, c).real());
          im_row.push_back(term.op(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
      }
      terms.push_back({{"sites", term.sites},
                       {"re", std::move(re)},
                       {"im", std::move(im)}});
    }
    j["hamiltonian"] = std::move(terms);
  }
  return j;
}

EnsembleSpec ensemble_spec_from_json(const Json& j) {
  EnsembleSpec spec;
  spec.family = family_from_name(j.at("family").get<std::string>());
  spec.n = j.at("n").get<int>();
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.rank = j.value("rank", -1);
  spec.width = j.value("width", 2);
  spec.time = j.value("time", 0.0);
  spec.site = j.value("site", 0);
  spec.pauli = j.value("pauli", 3);
  if (j.contains("truth_table")) {
    spec.truth_table = j.at("truth_table").get<std::vector<double>>();
  }
  if (j.contains("hamiltonian")) {
    for (const auto& term : j.at("hamiltonian")) {
      HamiltonianTerm t;
      t.sites = term.at("sites").get<std::vector<int>>();
      const auto& re = term.at("re");
      const auto& im = term.at("im");
      const auto rows = static_cast<Eigen::Index>(re.size());
      t.op = Matrix::Zero(rows, rows);
      for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < rows; ++c) {
          t.op(r, c) = Complex{re[r][c].get<double>(), im[r][c].get<double>()};
        }
      }
      spec.hamiltonian.push_back(std::move(t));
    }
  }
  return spec;
}

std::string inequality_csv_header() {
  return "name,n,seed,lhs,rhs,implied_constant";
}

std::string inequality_csv_row(const InequalityReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << report.name << ',' << report.n << ',' << report.seed << ','
      << report.lhs << ',' << report.rhs << ',' << report.implied_constant;
  return out.str();
}

}  // namespace qbfa
