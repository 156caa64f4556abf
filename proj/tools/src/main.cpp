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

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fourier analysis of quantum Boolean functions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  qbfa::cli::CommonOptions common;
  {
    std::ostringstream inv;
    for (int i = 0; i < argc; ++i) inv << (i ? " " : "") << argv[i];
    common.invocation = inv.str();
  }
  app.add_option("--seed", common.seed, "Base RNG seed");
  app.add_option("--tol", common.tol, "Numerical tolerance");
  app.add_option("--out", common.out, "Report file (default stdout)");
  app.add_option("--format", common.format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  qbfa::cli::AnalyzeOptions analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Norms, influences and support of an operator");
  analyze_cmd->add_option("--input", analyze.input, "Operator JSON file")
      ->required();

  qbfa::cli::VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run an inequality verification suite");
  verify_cmd->add_option(
      "--suite", verify.suite,
      "fourier|poincare|semigroup|gamma|talagrand|kkl|isoperimetry|bh|"
      "calibrate|all");
  verify_cmd->add_option("--n-min", verify.n_min, "Smallest qubit count");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest qubit count");
  verify_cmd->add_option("--trials", verify.trials, "Instances per suite");

  qbfa::cli::JuntaOptions junta;
  auto* junta_cmd =
      app.add_subcommand("junta", "Junta extraction with certified guarantees");
  junta_cmd->add_option("--input", junta.input, "Operator JSON file")
      ->required();
  junta_cmd->add_option("--eps", junta.eps, "Target L2 error in (0,2]");
  junta_cmd->add_flag("--boolean", junta.boolean_round,
                      "Sign-round to a quantum Boolean junta");

  qbfa::cli::LearnOptions learn;
  auto* learn_cmd =
      app.add_subcommand("learn", "Simulated-oracle learning algorithms");
  learn_cmd->add_option("--hidden", learn.hidden, "Hidden operator JSON file")
      ->required();
  learn_cmd->add_option("--gamma", learn.gamma, "Goldreich-Levin threshold");
  learn_cmd->add_option("--delta", learn.delta, "Failure probability");
  learn_cmd->add_option("--eps", learn.eps, "Target L2 error (learn_qbf)");
  learn_cmd->add_option("--degree", learn.degree,
                        "Degree bound (low-degree learner)");
  learn_cmd->add_option("--cd", learn.c_d,
                        "C_d constant (default: calibration table)");
  learn_cmd->add_option("--k-hint", learn.k_hint, "Junta size hint");
  learn_cmd->add_option("--trials", learn.trials, "Independent trials");

  qbfa::cli::EnsembleOptions ensemble;
  auto* ensemble_cmd =
      app.add_subcommand("ensemble", "Materialize test operators to files");
  ensemble_cmd->add_option("--family", ensemble.family,
                           "dictator|parity|majority|tribes|random_qbf|"
                           "random_hermitian|random_projector|evolved_pauli");
  ensemble_cmd->add_option("--n", ensemble.n, "Qubit count");
  ensemble_cmd->add_option("--rank", ensemble.rank,
                           "Projector rank (-1: half dimension)");
  ensemble_cmd->add_option("--width", ensemble.width, "Tribes width");
  ensemble_cmd->add_option("--count", ensemble.count, "Operators to emit");
  ensemble_cmd->add_option("--time", ensemble.time, "Evolution time");
  ensemble_cmd->add_option("--site", ensemble.site, "Evolved Pauli site");
  ensemble_cmd->add_option("--pauli", ensemble.pauli, "Evolved Pauli index");

  qbfa::cli::WeightedOptions weighted;
  auto* weighted_cmd = app.add_subcommand(
      "weighted", "KMS-weighted semigroup axioms and L1-Poincare");
  weighted_cmd->add_option("--omega", weighted.omega_q,
                           "Diagonal omega parameter q");
  weighted_cmd->add_option("--omega-file", weighted.omega_file,
                           "Full 2x2 omega as JSON");
  weighted_cmd->add_option("--n", weighted.n, "Qubit count (<= 3)");
  weighted_cmd->add_option("--samples", weighted.samples,
                           "Random test operators");

  qbfa::cli::DynamicsOptions dynamics;
  auto* dynamics_cmd = app.add_subcommand(
      "dynamics", "Evolve a site Pauli under a chain Hamiltonian");
  dynamics_cmd->add_option("--n", dynamics.n, "Chain length");
  dynamics_cmd->add_option("--time", dynamics.time, "Evolution time");
  dynamics_cmd->add_option("--site", dynamics.site, "Source site");
  dynamics_cmd->add_option("--pauli", dynamics.pauli, "Pauli index");
  dynamics_cmd->add_option("--coupling", dynamics.coupling, "ZZ coupling");
  dynamics_cmd->add_option("--field", dynamics.field, "Transverse field");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) return qbfa::cli::run_analyze(common, analyze);
    if (verify_cmd->parsed()) return qbfa::cli::run_verify(common, verify);
    if (junta_cmd->parsed()) return qbfa::cli::run_junta(common, junta);
    if (learn_cmd->parsed()) return qbfa::cli::run_learn(common, learn);
    if (ensemble_cmd->parsed())
      return qbfa::cli::run_ensemble(common, ensemble);
    if (weighted_cmd->parsed())
      return qbfa::cli::run_weighted(common, weighted);
    if (dynamics_cmd->parsed())
      return qbfa::cli::run_dynamics(common, dynamics);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
