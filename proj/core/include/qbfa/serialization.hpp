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

#include <json.hpp>

#include <string>

#include "qbfa/ensembles.hpp"
#include "qbfa/inequalities.hpp"
#include "qbfa/influence.hpp"
#include "qbfa/junta.hpp"
#include "qbfa/learn.hpp"
#include "qbfa/semigroup.hpp"
#include "qbfa/weighted.hpp"

namespace qbfa {

using Json = nlohmann::json;

// Operator files: {"n": int, "coeffs": [{"s": "<base-4>", "re": .., "im": ..}]}
// with absent strings meaning coefficient zero. Round trips are lossless at
// double precision; coefficients are emitted in lexicographic word order.
Json operator_to_json(const FourierOperator& f);
FourierOperator operator_from_json(const Json& j);
void save_operator(const std::string& path, const FourierOperator& f);
FourierOperator load_operator(const std::string& path);

Json to_json(const InfluenceProfile& profile);
Json to_json(const SemigroupCheckReport& report);
Json to_json(const InequalityReport& report);
Json to_json(const JuntaResult& result);
Json to_json(const BooleanJuntaResult& result);
Json to_json(const LearnReport& report);
Json to_json(const AxiomReport& report);
Json to_json(const EnsembleSpec& spec);
EnsembleSpec ensemble_spec_from_json(const Json& j);

/// CSV emission for inequality sweeps.
std::string inequality_csv_header();
std::string inequality_csv_row(const InequalityReport& report);

}  // namespace qbfa
