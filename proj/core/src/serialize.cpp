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
#include "qmm/serialize.hpp"

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "qmm/errors.hpp"

namespace qmm {
namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string(what) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

void expect_type(const Json& j, const char* type, const char* what) {
  if (j.is_object() && j.contains("type") && j.at("type") != type) {
    throw FormatError(std::string(what) + ": expected type '" + type + "', got " +
                      j.at("type").dump());
  }
}

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("complex number must be a [re, im] pair, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json real_matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json programmed_json(const ProgrammedPvm& p) {
  return Json{{"subgroup", p.subgroup},
              {"program_vector", to_json(p.program_vector)},
              {"pvm", to_json(p.pvm)},
              {"pvm_defect", p.pvm_defect},
              {"rank_defect", p.rank_defect},
              {"sharp_mismatch", p.sharp_mismatch}};
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(complex_json(m(i, k)));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const ComplexVector& v) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) entries.push_back(complex_json(v(i)));
  return entries;
}

Json to_json(const DensityState& s) {
  return Json{{"type", "state"}, {"dim", s.dim()}, {"matrix", to_json(s.matrix())}};
}

Json to_json(const Observable& e) {
  Json effects = Json::object();
  for (std::size_t x = 0; x < e.size(); ++x) effects[e.labels()[x]] = to_json(e.effect(x));
  return Json{{"type", "observable"},
              {"dim", e.dim()},
              {"outcomes", e.labels()},
              {"effects", std::move(effects)}};
}

Json to_json(const QuantumChannel& c) {
  Json kraus = Json::array();
  for (const auto& k : c.kraus()) kraus.push_back(to_json(k));
  return Json{{"type", "channel"},
              {"in_dim", c.in_dim()},
              {"out_dim", c.out_dim()},
              {"kraus", std::move(kraus)}};
}

Json to_json(const PostProcessing& l) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < l.n_in(); ++i) {
    for (std::size_t k = 0; k < l.n_out(); ++k) entries.push_back(l(i, k));
  }
  return Json{{"type", "kernel"},
              {"n_in", l.n_in()},
              {"n_out", l.n_out()},
              {"outputs", l.output_labels()},
              {"entries", std::move(entries)}};
}

Json to_json(const Multimeter& m) {
  return Json{{"type", "multimeter"},
              {"system_dim", m.system_dim()},
              {"probe_dim", m.probe_dim()},
              {"pointer", to_json(m.pointer())},
              {"interaction", to_json(m.interaction())}};
}

Json to_json(const FiniteGroup& g) {
  return Json{{"order", g.order()},
              {"elements", g.names()},
              {"identity", g.name(g.identity())},
              {"table", g.table()}};
}

Json to_json(const ProjectiveRepresentation& rep) {
  Json matrices = Json::object();
  for (std::size_t g = 0; g < rep.group().order(); ++g) {
    matrices[rep.group().name(g)] = to_json(rep.matrix(g));
  }
  return Json{{"type", "representation"},
              {"group", to_json(rep.group())},
              {"degree", rep.degree()},
              {"ordinary", rep.is_ordinary()},
              {"matrices", std::move(matrices)}};
}

Json to_json(const DivergenceEstimate& est) {
  return Json{{"type", "divergence"},
              {"value", est.value},
              {"exact_zero", est.exact_zero},
              {"converged", est.converged},
              {"method", est.method},
              {"seed", est.seed},
              {"restarts", est.restarts},
              {"evaluations", est.evaluations},
              {"rho1", to_json(est.rho1)},
              {"rho2", to_json(est.rho2)}};
}

Json to_json(const CheckResult& c) {
  Json j{{"name", c.name},
         {"applicable", c.applicable},
         {"trials", c.trials},
         {"violations", c.violations},
         {"worst_margin", c.worst_margin},
         {"tolerance", c.tolerance},
         {"passed", c.passed()}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json j{{"check", r.check},
         {"seed", r.seed},
         {"trials", r.trials},
         {"violations", r.violations},
         {"worst_margin", r.worst_margin},
         {"tolerance", r.tolerance},
         {"passed", r.passed()},
         {"fixtures", r.fixtures},
         {"metrics", r.metrics},
         {"checks", std::move(checks)},
         {"elapsed_seconds", r.elapsed_seconds}};
  if (!r.margins.empty()) j["margins"] = r.margins;
  return j;
}

Json to_json(const QuaternionDemoReport& r) {
  Json outputs = Json::array();
  for (const auto& p : r.outputs) outputs.push_back(programmed_json(p));
  return Json{{"demo", "q8"},
              {"outputs", std::move(outputs)},
              {"max_pvm_error", r.max_pvm_error},
              {"fidelities", real_matrix_json(r.fidelities)},
              {"max_fidelity_error", r.max_fidelity_error},
              {"bound_at_zero", r.bound_at_zero},
              {"coset_kernel_fidelity", r.coset_kernel_fidelity},
              {"elapsed_seconds", r.elapsed_seconds}};
}

Json to_json(const PhaseSpaceDemoReport& r) {
  Json outputs = Json::array();
  for (const auto& p : r.outputs) outputs.push_back(programmed_json(p));
  return Json{{"demo", "phase-space"},
              {"d", r.d},
              {"outputs", std::move(outputs)},
              {"overlaps", real_matrix_json(r.overlaps)},
              {"max_overlap_error", r.max_overlap_error},
              {"max_pvm_defect", r.max_pvm_defect},
              {"max_rank_defect", r.max_rank_defect},
              {"formula_failures", r.formula_failures},
              {"elapsed_seconds", r.elapsed_seconds}};
}

Json to_json(const BoundCurve& c) {
  Json points = Json::array();
  for (std::size_t i = 0; i < c.t.size(); ++i) {
    Json p{{"t", c.t[i]}, {"bound", c.bound[i]}};
    if (i < c.details.size()) {
      const auto& d = c.details[i];
      p["argmax"] = d.argmax;
      p["grid_value"] = d.grid_value;
      p["evaluations"] = d.evaluations;
    }
    points.push_back(std::move(p));
  }
  return Json{{"type", "bound_curve"}, {"points", std::move(points)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const auto rows = field(j, "rows", "matrix").get<Eigen::Index>();
    const auto cols = field(j, "cols", "matrix").get<Eigen::Index>();
    const Json& entries = field(j, "entries", "matrix");
    if (rows < 0 || cols < 0 || !entries.is_array() ||
        entries.size() != static_cast<std::size_t>(rows * cols)) {
      throw FormatError("matrix: entry count does not equal rows * cols");
    }
    ComplexMatrix m(rows, cols);
    std::size_t n = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from(entries[n++]);
    }
    return m;
  });
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("vector: expected an array of [re, im] pairs");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from(j[i]);
  return v;
}

DensityState state_from_json(const Json& j) {
  return guarded("state", [&] {
    expect_type(j, "state", "state");
    ComplexMatrix m = matrix_from_json(field(j, "matrix", "state"));
    if (j.contains("dim") && j.at("dim").get<Eigen::Index>() != m.rows()) {
      throw FormatError("state: dim does not match the matrix");
    }
    return DensityState::from_matrix(m);
  });
}

Observable observable_from_json(const Json& j) {
  return guarded("observable", [&] {
    expect_type(j, "observable", "observable");
    const Json& effects = field(j, "effects", "observable");
    if (!effects.is_object()) throw FormatError("observable: effects must be keyed by label");
    std::vector<std::string> labels;
    if (j.contains("outcomes")) {
      labels = j.at("outcomes").get<std::vector<std::string>>();
      if (labels.size() != effects.size()) {
        throw FormatError("observable: outcomes and effects differ in count");
      }
    } else {
      for (const auto& [label, value] : effects.items()) labels.push_back(label);
    }
    std::vector<ComplexMatrix> mats;
    for (const auto& label : labels) {
      if (!effects.contains(label)) throw FormatError("observable: no effect for outcome '" + label + "'");
      mats.push_back(matrix_from_json(effects.at(label)));
    }
    if (j.contains("dim") && !mats.empty() &&
        j.at("dim").get<Eigen::Index>() != mats.front().rows()) {
      throw FormatError("observable: dim does not match the effects");
    }
    return Observable(std::move(labels), std::move(mats));
  });
}

QuantumChannel channel_from_json(const Json& j) {
  return guarded("channel", [&] {
    expect_type(j, "channel", "channel");
    const Json& kraus = field(j, "kraus", "channel");
    if (!kraus.is_array()) throw FormatError("channel: kraus must be an array");
    std::vector<ComplexMatrix> ops;
    for (const auto& k : kraus) ops.push_back(matrix_from_json(k));
    return QuantumChannel(std::move(ops));
  });
}

PostProcessing kernel_from_json(const Json& j) {
  return guarded("kernel", [&] {
    expect_type(j, "kernel", "kernel");
    const auto n_in = field(j, "n_in", "kernel").get<Eigen::Index>();
    const auto n_out = field(j, "n_out", "kernel").get<Eigen::Index>();
    const auto entries = field(j, "entries", "kernel").get<std::vector<double>>();
    if (n_in <= 0 || n_out <= 0 || entries.size() != static_cast<std::size_t>(n_in * n_out)) {
      throw FormatError("kernel: entry count does not equal n_in * n_out");
    }
    Eigen::MatrixXd k(n_in, n_out);
    std::size_t n = 0;
    for (Eigen::Index i = 0; i < n_in; ++i) {
      for (Eigen::Index c = 0; c < n_out; ++c) k(i, c) = entries[n++];
    }
    std::vector<std::string> labels;
    if (j.contains("outputs")) labels = j.at("outputs").get<std::vector<std::string>>();
    return PostProcessing(std::move(k), std::move(labels));
  });
}

Multimeter multimeter_from_json(const Json& j) {
  return guarded("multimeter", [&] {
    expect_type(j, "multimeter", "multimeter");
    return Multimeter(field(j, "system_dim", "multimeter").get<std::size_t>(),
                      observable_from_json(field(j, "pointer", "multimeter")),
                      channel_from_json(field(j, "interaction", "multimeter")));
  });
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace qmm
