// Copyright 2026 The qmm Authors
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

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "qmm/bound.hpp"
#include "qmm/demos.hpp"
#include "qmm/divergence.hpp"
#include "qmm/group.hpp"
#include "qmm/postprocessing.hpp"
#include "qmm/quantum.hpp"
#include "qmm/verify.hpp"

// JSON documents. Complex numbers are [re, im] pairs and matrices are
// {"rows", "cols", "entries"} with entries in row-major order. Doubles are
// written with round-trip precision. Loaders raise FormatError for
// malformed documents; semantic validation (positivity, normalization,
// stochasticity) is done by the constructed objects themselves.
namespace qmm {

using Json = nlohmann::json;

Json to_json(const ComplexMatrix& m);
Json to_json(const ComplexVector& v);
Json to_json(const DensityState& s);
Json to_json(const Observable& e);
Json to_json(const QuantumChannel& c);
Json to_json(const PostProcessing& l);
Json to_json(const Multimeter& m);
Json to_json(const FiniteGroup& g);
/// Group table plus one matrix per element keyed by element name.
Json to_json(const ProjectiveRepresentation& rep);
Json to_json(const DivergenceEstimate& est);
Json to_json(const CheckResult& c);
/// Keys: check, seed, trials, violations, worst_margin, tolerance, fixtures,
/// metrics, checks, elapsed_seconds and, when recorded, margins.
Json to_json(const VerificationReport& r);
Json to_json(const QuaternionDemoReport& r);
Json to_json(const PhaseSpaceDemoReport& r);
Json to_json(const BoundCurve& c);

ComplexMatrix matrix_from_json(const Json& j);
ComplexVector vector_from_json(const Json& j);
DensityState state_from_json(const Json& j);
Observable observable_from_json(const Json& j);
QuantumChannel channel_from_json(const Json& j);
PostProcessing kernel_from_json(const Json& j);
Multimeter multimeter_from_json(const Json& j);

/// Throws FormatError when the file cannot be read or parsed.
Json read_json_file(const std::filesystem::path& path);

}  // namespace qmm
