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

#pragma once

#include <cstdint>
#include <string>

namespace qbfa::cli {

// Shared output policy. Reports are byte-identical for identical options:
// anything time-dependent goes to a sidecar next to --out, never inline.
struct CommonOptions {
  std::uint64_t seed = 1;
  double tol = 1e-10;
  std::string out;           // empty = stdout
  std::string format = "json";  // json | csv (inequality sweeps only)
  std::string invocation;    // recorded in the sidecar
};

struct AnalyzeOptions {
  std::string input;
};

struct VerifyOptions {
  std::string suite = "all";
  int n_min = 2;
  int n_max = 5;
  int trials = 100;
};

struct JuntaOptions {
  std::string input;
  double eps = 0.5;
  bool boolean_round = false;
};

struct LearnOptions {
  std::string hidden;
  double gamma = 0.3;
  double delta = 0.1;
  double eps = -1.0;    // >0 selects learn_qbf
  int degree = -1;      // >=0 selects low_degree_learn
  double c_d = -1.0;    // <=0: calibration table value
  int k_hint = 2;
  int trials = 1;
};

struct EnsembleOptions {
  std::string family = "random_qbf";
  int n = 4;
  int rank = -1;
  int width = 2;
  int count = 1;
  double time = 0.0;
  int site = 0;
  int pauli = 3;
};

struct WeightedOptions {
  double omega_q = 0.5;
  std::string omega_file;  // optional 2x2 JSON {"re": [[..]], "im": [[..]]}
  int n = 2;
  int samples = 6;
};

struct DynamicsOptions {
  int n = 6;
  double time = 1.0;
  int site = 2;
  int pauli = 3;
  double coupling = 1.0;
  double field = 1.0;
};

int run_analyze(const CommonOptions& common, const AnalyzeOptions& opt);
int run_verify(const CommonOptions& common, const VerifyOptions& opt);
int run_junta(const CommonOptions& common, const JuntaOptions& opt);
int run_learn(const CommonOptions& common, const LearnOptions& opt);
int run_ensemble(const CommonOptions& common, const EnsembleOptions& opt);
int run_weighted(const CommonOptions& common, const WeightedOptions& opt);
int run_dynamics(const CommonOptions& common, const DynamicsOptions& opt);

}  // namespace qbfa::cli
