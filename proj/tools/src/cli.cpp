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
#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmm/bound.hpp"
#include "qmm/covariant.hpp"
#include "qmm/demos.hpp"
#include "qmm/divergence.hpp"
#include "qmm/errors.hpp"
#include "qmm/group.hpp"
#include "qmm/random.hpp"
#include "qmm/verify.hpp"

namespace qmm::cli {
namespace {

const std::set<std::string> kCommands{"demo q8",      "demo phase-space", "verify prop1",
                                      "verify prop3", "verify bprops",    "bound",
                                      "divergence"};
const std::set<std::string> kToleranceKeys{"tol_check", "estimator", "pointwise"};

// Raised for invalid configurations detected while executing.
class ConfigError : public Error {
 public:
  using Error::Error;
};

void emit(const RunConfig& c, const std::string& payload, std::ostream& out) {
  if (c.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw ConfigError("cannot open output file " + c.out);
  file << payload;
  if (!file) throw ConfigError("failed writing " + c.out);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

VerifyOptions verify_options(const RunConfig& c) {
  VerifyOptions o;
  if (auto it = c.tolerances.find("tol_check"); it != c.tolerances.end()) o.tol_check = it->second;
  if (auto it = c.tolerances.find("estimator"); it != c.tolerances.end()) {
    o.estimator_tolerance = it->second;
  }
  if (auto it = c.tolerances.find("pointwise"); it != c.tolerances.end()) {
    o.pointwise_tolerance = it->second;
  }
  o.divergence.restarts = c.restarts;
  o.divergence.seed = c.seed;
  return o;
}

struct ProgramFixture {
  Multimeter device;
  DensityState xi1;
  DensityState xi2;
  PostProcessing l1;
  PostProcessing l2;
};

ProgramFixture covariant_fixture(const ProjectiveRepresentation& rep, const CyclicSubgroup& h1,
                                 const ComplexVector& psi1, const CyclicSubgroup& h2,
                                 const ComplexVector& psi2) {
  const DensityState eta = DensityState::basis(rep.degree(), 0);
  return ProgramFixture{covariant_multimeter(rep),
                        covariant_program_state(eta, DensityState::pure(psi1)),
                        covariant_program_state(eta, DensityState::pure(psi2)),
                        coset_postprocessing(rep.group(), h1), coset_postprocessing(rep.group(), h2)};
}

ProgramFixture program_fixture(const RunConfig& c) {
  if (c.fixture == "random") {
    Rng rng(c.seed);
    Multimeter m = random_multimeter(2, 4, rng);
    DensityState xi1 = random_mixed_state(4, 2, rng);
    DensityState xi2 = random_mixed_state(4, 2, rng);
    PostProcessing l1 = random_kernel(4, 3, rng);
    PostProcessing l2 = random_kernel(4, 3, rng);
    return ProgramFixture{std::move(m), std::move(xi1), std::move(xi2), std::move(l1),
                          std::move(l2)};
  }
  if (c.fixture == "q8") {
    const auto rep = q8_representation();
    const auto subgroups = cyclic_subgroups(rep.group(), 4);
    const auto psi1 = eigenvector_program_states(rep, subgroups[0].generator).vectors.front();
    const auto psi3 = eigenvector_program_states(rep, subgroups[2].generator).vectors.front();
    return covariant_fixture(rep, subgroups[0], psi1, subgroups[2], psi3);
  }
  if (c.fixture == "phase-space") {
    const auto rep = weyl_heisenberg(c.dim);
    const auto programs = phase_space_programs(rep);
    return covariant_fixture(rep, programs[0].subgroup, programs[0].vector, programs[1].subgroup,
                             programs[1].vector);
  }
  throw ConfigError("unknown fixture '" + c.fixture + "' (random, q8, phase-space)");
}

std::pair<Observable, Observable> observable_pair(const RunConfig& c) {
  if (!c.e1.empty() || !c.e2.empty()) {
    if (c.e1.empty() || c.e2.empty()) throw ConfigError("both --e1 and --e2 are required");
    return {observable_from_json(read_json_file(c.e1)), observable_from_json(read_json_file(c.e2))};
  }
  Rng rng(c.seed);
  if (c.fixture == "random") {
    Observable a = random_povm(2, 3, rng);
    Observable b = random_povm(2, 3, rng);
    return {std::move(a), std::move(b)};
  }
  if (c.fixture == "equal") {
    Observable a = random_povm(2, 3, rng);
    return {a, a};
  }
  if (c.fixture == "sharp") {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix hadamard(2, 2);
    hadamard << s, s, s, -s;
    return {Observable::from_basis(identity(2)), Observable::from_basis(hadamard)};
  }
  throw ConfigError("unknown fixture '" + c.fixture + "' for bprops (random, equal, sharp)");
}

int finish_report(const RunConfig& c, const VerificationReport& r, const std::string& fixture,
                  std::ostream& out, std::ostream& err) {
  Json j = to_json(r);
  j["fixtures"]["fixture"] = fixture;
  emit(c, dump(j), out);
  if (!r.passed()) {
    err << "qmm: " << r.check << ": " << r.violations << " of " << r.trials
        << " trials violate the inequality (worst margin " << r.worst_margin << ")\n";
    for (const auto& sub : r.checks) {
      if (!sub.passed()) err << "qmm:   failing: " << sub.name << "\n";
    }
    return kExitViolation;
  }
  return kExitOk;
}

int run_bound(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.points < 2) throw ConfigError("--points must be at least 2");
  const BoundCurve curve = sharpmin_curve(c.points);
  const std::string format = c.format.empty() ? "csv" : c.format;
  if (format == "csv") {
    emit(c, to_csv(curve), out);
  } else if (format == "json") {
    emit(c, dump(to_json(curve)), out);
  } else {
    throw ConfigError("unknown format '" + format + "' (json, csv)");
  }
  const double floor = 1.0 / std::sqrt(2.0) - 1e-6;
  const std::size_t n = curve.bound.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (curve.bound[i] < floor || curve.bound[i] > 1.0 + 1e-6) {
      err << "qmm: bound at t = " << curve.t[i] << " is outside [1/sqrt(2), 1]\n";
      return kExitViolation;
    }
    if (std::abs(curve.bound[i] - curve.bound[n - 1 - i]) > 1e-6) {
      err << "qmm: bound is not symmetric at t = " << curve.t[i] << "\n";
      return kExitViolation;
    }
  }
  return kExitOk;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.format.empty() && c.format != "json" && c.format != "csv") {
    throw ConfigError("unknown format '" + c.format + "' (json, csv)");
  }
  if (c.format == "csv" && c.command != "bound") {
    throw ConfigError("csv output is only available for bound");
  }
  if (c.command == "demo q8") {
    emit(c, dump(to_json(quaternion_demo())), out);
    return kExitOk;
  }
  if (c.command == "demo phase-space") {
    emit(c, dump(to_json(phase_space_demo(c.dim))), out);
    return kExitOk;
  }
  if (c.command == "verify prop1" || c.command == "verify prop3") {
    const ProgramFixture f = program_fixture(c);
    const std::size_t trials = c.trials.value_or(1000);
    const VerificationReport r =
        c.command == "verify prop1"
            ? verify_prop1(f.device, f.xi1, f.xi2, trials, c.seed, verify_options(c))
            : verify_prop3(f.device, f.xi1, f.xi2, f.l1, f.l2, trials, c.seed, verify_options(c));
    return finish_report(c, r, c.fixture, out, err);
  }
  if (c.command == "verify bprops") {
    const auto [e1, e2] = observable_pair(c);
    const VerificationReport r =
        verify_b_properties(e1, e2, c.trials.value_or(200), c.seed, verify_options(c));
    return finish_report(c, r, c.e1.empty() ? c.fixture : "files", out, err);
  }
  if (c.command == "bound") return run_bound(c, out, err);
  if (c.command == "divergence") {
    if (c.e1.empty() || c.e2.empty()) throw ConfigError("divergence needs --e1 and --e2");
    const Observable e1 = observable_from_json(read_json_file(c.e1));
    const Observable e2 = observable_from_json(read_json_file(c.e2));
    DivergenceOptions opts = verify_options(c).divergence;
    const DivergenceEstimate est = observable_divergence(e1, e2, opts);
    emit(c, dump(to_json(est)), out);
    if (!est.converged) err << "qmm: divergence: optimizer did not converge on every restart\n";
    return kExitOk;
  }
  throw ConfigError(c.command.empty() ? "no command given"
                                      : "unknown command '" + c.command + "'");
}

template <class T>
T get_as(const Json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const Json::exception&) {
    throw FormatError("config: key '" + key + "' has the wrong type");
  }
}

}  // namespace

RunConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("config: expected a JSON object");
  RunConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "command") {
      c.command = get_as<std::string>(value, key);
    } else if (key == "seed") {
      c.seed = get_as<std::uint64_t>(value, key);
    } else if (key == "trials") {
      c.trials = get_as<std::size_t>(value, key);
    } else if (key == "tolerances") {
      if (!value.is_object()) throw FormatError("config: tolerances must be an object");
      for (const auto& [name, tol] : value.items()) {
        if (!kToleranceKeys.count(name)) {
          throw FormatError("config: unknown tolerance '" + name + "'");
        }
        c.tolerances[name] = get_as<double>(tol, name);
      }
    } else if (key == "out") {
      c.out = get_as<std::string>(value, key);
    } else if (key == "format") {
      c.format = get_as<std::string>(value, key);
    } else if (key == "dim") {
      c.dim = get_as<std::size_t>(value, key);
    } else if (key == "points") {
      c.points = get_as<std::size_t>(value, key);
    } else if (key == "fixture") {
      c.fixture = get_as<std::string>(value, key);
    } else if (key == "e1") {
      c.e1 = get_as<std::string>(value, key);
    } else if (key == "e2") {
      c.e2 = get_as<std::string>(value, key);
    } else if (key == "restarts") {
      c.restarts = get_as<std::size_t>(value, key);
    } else {
      throw FormatError("config: unknown key '" + key + "'");
    }
  }
  return c;
}

Json to_json(const RunConfig& c) {
  Json j{{"command", c.command}, {"seed", c.seed},         {"tolerances", c.tolerances},
         {"out", c.out},         {"format", c.format},     {"dim", c.dim},
         {"points", c.points},   {"fixture", c.fixture},   {"e1", c.e1},
         {"e2", c.e2},           {"restarts", c.restarts}};
  if (c.trials) j["trials"] = *c.trials;
  return j;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out, err);
  } catch (const CheckFailure& e) {
    err << "qmm: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "qmm: " << e.what() << "\n";
    return kExitConfig;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Programmable quantum multimeters: demos, verification suites and bound sweeps",
               "qmm"};
  app.set_version_flag("--version", "qmm 0.1.0");
  app.fallthrough();
  app.require_subcommand(0, 1);

  RunConfig flags;
  std::string config_path;
  std::size_t trials = 0;
  double tol_check = 0.0, tol_estimator = 0.0, tol_pointwise = 0.0;

  app.add_option("--config", config_path, "JSON run configuration");
  auto* o_seed = app.add_option("--seed", flags.seed, "Random seed (default 0)");
  auto* o_trials = app.add_option("--trials", trials, "Number of randomized trials");
  auto* o_out = app.add_option("--out", flags.out, "Write the report here instead of stdout");
  auto* o_format = app.add_option("--format", flags.format, "json or csv");
  auto* o_dim = app.add_option("--dim", flags.dim, "Prime dimension for phase-space fixtures");
  auto* o_points = app.add_option("--points", flags.points, "Points of the bound sweep");
  auto* o_fixture = app.add_option("--fixture", flags.fixture,
                                   "random, q8, phase-space (prop1/prop3); random, equal, sharp (bprops)");
  auto* o_e1 = app.add_option("--e1", flags.e1, "First observable (JSON file)");
  auto* o_e2 = app.add_option("--e2", flags.e2, "Second observable (JSON file)");
  auto* o_restarts = app.add_option("--restarts", flags.restarts, "Random restarts of the estimator");
  auto* o_tc = app.add_option("--tol-check", tol_check, "Slack of inequality checks");
  auto* o_te = app.add_option("--tol-estimator", tol_estimator, "Slack of estimator comparisons");
  auto* o_tp = app.add_option("--tol-pointwise", tol_pointwise, "Slack of pointwise monotonicity");

  auto* demo = app.add_subcommand("demo", "Built-in covariant pipelines");
  demo->require_subcommand(1)->fallthrough();
  demo->add_subcommand("q8", "Quaternion group pipeline")->fallthrough();
  demo->add_subcommand("phase-space", "Weyl-Heisenberg pipeline (--dim)")->fallthrough();
  auto* verify = app.add_subcommand("verify", "Randomized inequality checks");
  verify->require_subcommand(1)->fallthrough();
  verify->add_subcommand("prop1", "Programming-state fidelity bound")->fallthrough();
  verify->add_subcommand("prop3", "Bound with post-processing")->fallthrough();
  verify->add_subcommand("bprops", "Properties of the observable divergence")->fallthrough();
  app.add_subcommand("bound", "Sweep of the sharp-observable bound")->fallthrough();
  app.add_subcommand("divergence", "Estimate the divergence of two observables")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  RunConfig c;
  try {
    if (!config_path.empty()) c = config_from_json(read_json_file(config_path));
    if (const char* env = std::getenv("QML_SEED"); env != nullptr && *env != '\0') {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      c.seed = v;
    }
  } catch (const std::invalid_argument&) {
    err << "qmm: QML_SEED is not an unsigned integer\n";
    return kExitConfig;
  } catch (const std::out_of_range&) {
    err << "qmm: QML_SEED is out of range\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "qmm: " << e.what() << "\n";
    return kExitConfig;
  }

  std::string command;
  for (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
       sub != nullptr;
       sub = sub->get_subcommands().empty() ? nullptr : sub->get_subcommands().front()) {
    command += (command.empty() ? "" : " ") + sub->get_name();
  }
  if (!command.empty()) {
    if (!c.command.empty() && c.command != command) {
      err << "qmm: command '" << command << "' conflicts with config command '" << c.command
          << "'\n";
      return kExitConfig;
    }
    c.command = command;
  }
  if (!kCommands.count(c.command)) {
    err << "qmm: " << (c.command.empty() ? "no command given" : "unknown command '" + c.command + "'")
        << "\n"
        << app.help();
    return kExitConfig;
  }

  if (o_seed->count()) c.seed = flags.seed;
  if (o_trials->count()) c.trials = trials;
  if (o_out->count()) c.out = flags.out;
  if (o_format->count()) c.format = flags.format;
  if (o_dim->count()) c.dim = flags.dim;
  if (o_points->count()) c.points = flags.points;
  if (o_fixture->count()) c.fixture = flags.fixture;
  if (o_e1->count()) c.e1 = flags.e1;
  if (o_e2->count()) c.e2 = flags.e2;
  if (o_restarts->count()) c.restarts = flags.restarts;
  if (o_tc->count()) c.tolerances["tol_check"] = tol_check;
  if (o_te->count()) c.tolerances["estimator"] = tol_estimator;
  if (o_tp->count()) c.tolerances["pointwise"] = tol_pointwise;

  return execute(c, out, err);
}

}  // namespace qmm::cli
