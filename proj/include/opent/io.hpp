// Copyright 2026 The opent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON exchange formats.
//
//   matrix    {"dim": n, "re": [[...]], "im": [[...]]}, row-major. Non-square
//             matrices (Kraus operators) carry "rows" and "cols" instead of "dim".
//   field     {"weights": [...], "matrices": [matrix, ...]}
//   map       {"kraus": [matrix, ...]}
//   instance  see instance_to_json
//   report    {"config": ..., "results": [...], "failures": [...]}
//
// Doubles are written with round-trip precision, so a dumped instance
// reloads to the same bits and re-checks to the same margin.

#ifndef OPENT_IO_HPP
#define OPENT_IO_HPP

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "opent/bounds.hpp"
#include "opent/verify.hpp"

namespace opent::io {

using Json = nlohmann::json;

namespace detail {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad value for '") + key + "': " + e.what());
  }
}

inline Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json optional_number(const std::optional<double>& v) {
  return v ? number(*v) : Json(nullptr);
}

}  // namespace detail

// --- matrices ---------------------------------------------------------------

inline Json to_json(const CMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json r = Json::array(), c = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  Json out;
  if (m.rows() == m.cols()) {
    out["dim"] = m.rows();
  } else {
    out["rows"] = m.rows();
    out["cols"] = m.cols();
  }
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

inline CMatrix matrix_from_json(const Json& j) {
  Eigen::Index rows = 0, cols = 0;
  if (j.is_object() && j.contains("dim")) {
    rows = cols = detail::get<Eigen::Index>(j, "dim");
  } else {
    rows = detail::get<Eigen::Index>(j, "rows");
    cols = detail::get<Eigen::Index>(j, "cols");
  }
  if (rows < 1 || cols < 1 || rows > kMaxDim || cols > kMaxDim)
    throw FormatError("matrix dimensions out of range");
  const auto re = detail::get<std::vector<std::vector<double>>>(j, "re");
  auto im = j.contains("im") ? detail::get<std::vector<std::vector<double>>>(j, "im")
                             : std::vector<std::vector<double>>(
                                   static_cast<std::size_t>(rows),
                                   std::vector<double>(static_cast<std::size_t>(cols), 0.0));
  if (re.size() != static_cast<std::size_t>(rows) || im.size() != re.size())
    throw FormatError("matrix row count mismatch");
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& rr = re[static_cast<std::size_t>(i)];
    const auto& ri = im[static_cast<std::size_t>(i)];
    if (rr.size() != static_cast<std::size_t>(cols) || ri.size() != rr.size())
      throw FormatError("matrix column count mismatch");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = Complex(rr[static_cast<std::size_t>(c)], ri[static_cast<std::size_t>(c)]);
  }
  return m;
}

inline Json to_json(const HermitianMatrix& h) { return to_json(h.matrix()); }
inline Json to_json(const PositiveDefiniteMatrix& a) { return to_json(a.matrix()); }

inline HermitianMatrix hermitian_from_json(const Json& j) {
  const CMatrix m = matrix_from_json(j);
  if (m.rows() != m.cols()) throw FormatError("Hermitian matrix must be square");
  if ((m - m.adjoint()).norm() > 1e-12 * std::max(1.0, m.norm()))
    throw FormatError("matrix is not Hermitian");
  return HermitianMatrix(m);
}

inline PositiveDefiniteMatrix pd_from_json(const Json& j) {
  try {
    return PositiveDefiniteMatrix(hermitian_from_json(j));
  } catch (const DomainError& e) {
    throw FormatError(std::string("matrix is not positive definite: ") + e.what());
  }
}

// --- fields, maps, compressions ----------------------------------------------

inline Json to_json(const OperatorField& f) {
  Json mats = Json::array();
  for (const auto& a : f.matrices()) mats.push_back(to_json(a));
  return {{"weights", f.weights()}, {"matrices", std::move(mats)}};
}

inline OperatorField field_from_json(const Json& j) {
  auto weights = detail::get<std::vector<double>>(j, "weights");
  const auto mats = detail::get<std::vector<Json>>(j, "matrices");
  std::vector<PositiveDefiniteMatrix> out;
  for (const auto& m : mats) out.push_back(pd_from_json(m));
  try {
    return OperatorField(std::move(weights), std::move(out));
  } catch (const Error& e) {
    throw FormatError(std::string("invalid field: ") + e.what());
  }
}

inline Json to_json(const PositiveLinearMap& p) {
  Json kraus = Json::array();
  for (const auto& c : p.kraus()) kraus.push_back(to_json(c));
  return {{"kraus", std::move(kraus)}};
}

inline PositiveLinearMap map_from_json(const Json& j) {
  std::vector<CMatrix> kraus;
  for (const auto& m : detail::get<std::vector<Json>>(j, "kraus")) kraus.push_back(matrix_from_json(m));
  try {
    return PositiveLinearMap(std::move(kraus));
  } catch (const Error& e) {
    throw FormatError(std::string("invalid map: ") + e.what());
  }
}

inline Json to_json(const Compressions& c) {
  Json mats = Json::array();
  for (const auto& m : c.matrices) mats.push_back(to_json(m));
  return {{"weights", c.weights}, {"matrices", std::move(mats)}};
}

inline Compressions compressions_from_json(const Json& j) {
  Compressions c;
  c.weights = detail::get<std::vector<double>>(j, "weights");
  for (const auto& m : detail::get<std::vector<Json>>(j, "matrices"))
    c.matrices.push_back(matrix_from_json(m));
  if (c.matrices.empty() || c.matrices.size() != c.weights.size())
    throw FormatError("compression weights/matrices mismatch");
  return c;
}

// --- instances ----------------------------------------------------------------

inline Json to_json(const Instance& inst) {
  Json j;
  j["theorem"] = std::string(to_string(inst.theorem));
  j["seed"] = inst.seed;
  j["dim"] = inst.dim;
  j["k"] = inst.k;
  j["diagonal"] = inst.diagonal;
  j["f"] = inst.f.spec();
  j["param"] = inst.param;
  j["t0"] = inst.t0;
  j["m"] = inst.m;
  j["M"] = inst.M;
  j["alpha"] = inst.alpha;
  if (inst.fa) j["fa"] = to_json(*inst.fa);
  if (inst.fb) j["fb"] = to_json(*inst.fb);
  if (inst.fc) j["fc"] = to_json(*inst.fc);
  if (inst.fd) j["fd"] = to_json(*inst.fd);
  if (inst.map) j["map"] = to_json(*inst.map);
  if (inst.x) j["x"] = to_json(*inst.x);
  if (inst.compressions) j["compressions"] = to_json(*inst.compressions);
  if (!inst.prob_a.empty()) j["prob_a"] = inst.prob_a;
  if (!inst.prob_b.empty()) j["prob_b"] = inst.prob_b;
  return j;
}

inline Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("instance must be a JSON object");
  Instance inst;
  try {
    inst.theorem = parse_theorem(detail::get<std::string>(j, "theorem"));
    const char* fixed = theorem_info(inst.theorem).fixed_function;
    inst.f = ScalarFunction::parse(j.contains("f") ? detail::get<std::string>(j, "f")
                                                   : std::string(fixed ? fixed : "log"));
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
  // Hand-written instances may omit the bookkeeping keys; checkers re-validate
  // the hypotheses against the matrices anyway.
  auto number_or = [&](const char* key, double fallback) {
    return j.contains(key) ? detail::get<double>(j, key) : fallback;
  };
  inst.seed = j.contains("seed") ? detail::get<std::uint64_t>(j, "seed") : 0;
  inst.k = j.contains("k") ? detail::get<int>(j, "k") : 1;
  inst.diagonal = j.contains("diagonal") && detail::get<bool>(j, "diagonal");
  inst.param = number_or("param", 0.0);
  inst.t0 = number_or("t0", 1.0);
  inst.m = number_or("m", 1.0);
  inst.M = number_or("M", 1.0);
  inst.alpha = number_or("alpha", 1.0);
  if (j.contains("fa")) inst.fa = field_from_json(j["fa"]);
  if (j.contains("fb")) inst.fb = field_from_json(j["fb"]);
  if (j.contains("fc")) inst.fc = field_from_json(j["fc"]);
  if (j.contains("fd")) inst.fd = field_from_json(j["fd"]);
  if (j.contains("map")) inst.map = map_from_json(j["map"]);
  if (j.contains("x")) inst.x = pd_from_json(j["x"]);
  if (j.contains("compressions")) inst.compressions = compressions_from_json(j["compressions"]);
  if (j.contains("prob_a")) inst.prob_a = detail::get<std::vector<double>>(j, "prob_a");
  if (j.contains("prob_b")) inst.prob_b = detail::get<std::vector<double>>(j, "prob_b");
  if (j.contains("dim")) {
    inst.dim = detail::get<int>(j, "dim");
  } else if (inst.fa) {
    inst.dim = inst.fa->dim();
  } else if (inst.x) {
    inst.dim = inst.x->dim();
  } else {
    inst.dim = static_cast<int>(inst.prob_a.size());
  }
  return inst;
}

inline Instance instance_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

// --- results and reports --------------------------------------------------------

inline Json to_json(const VerificationResult& r) {
  return {{"theorem", r.theorem ? Json(std::string(to_string(*r.theorem))) : Json(nullptr)},
          {"label", r.label},
          {"holds", r.holds},
          {"margin", detail::number(r.margin)},
          {"lhs_norm", detail::number(r.lhs_norm)},
          {"rhs_norm", detail::number(r.rhs_norm)},
          {"hypothesis_met", r.hypothesis_met},
          {"triage", std::string(to_string(r.triage))},
          {"detail", r.detail}};
}

inline Json to_json(const SecantData& s) {
  Json j{{"m", s.m},
         {"M", s.M},
         {"mu", s.mu},
         {"nu", s.nu},
         {"gamma", detail::optional_number(s.gamma)},
         {"argmax_gamma", detail::optional_number(s.argmax_gamma)},
         {"zeta", s.zeta},
         {"argmax_zeta", s.argmax_zeta}};
  if (!s.gamma_error.empty()) j["gamma_error"] = s.gamma_error;
  return j;
}

inline Json to_json(const CampaignConfig& c) {
  Json theorems = Json::array();
  for (auto t : c.theorems) theorems.push_back(std::string(to_string(t)));
  return {{"theorems", std::move(theorems)},
          {"trials", c.trials},
          {"dims", {c.dim_min, c.dim_max}},
          {"k", {c.k_min, c.k_max}},
          {"functions", c.functions},
          {"q_or_p", c.params},
          {"tol", c.tol},
          {"seed", c.seed},
          {"diagonal", c.diagonal}};
}

inline Json to_json(const TheoremSummary& s) {
  Json bins = Json::array();
  for (const auto& b : s.width_bins)
    bins.push_back({{"width_below", detail::number(b.upper)},
                    {"count", b.count},
                    {"min_margin", detail::optional_number(b.min_margin)}});
  return {{"theorem", std::string(to_string(s.theorem))},
          {"trials", s.trials},
          {"passes", s.passes},
          {"skips", s.skips},
          {"failures", s.failures},
          {"numerical", s.numerical},
          {"substantive", s.substantive},
          {"errors", s.errors},
          {"min_margin", detail::optional_number(s.min_margin)},
          {"worst_seed", s.worst_seed ? Json(*s.worst_seed) : Json(nullptr)},
          {"width_bins", std::move(bins)}};
}

inline Json to_json(const TrialRecord& t) {
  Json j{{"theorem", std::string(to_string(t.theorem))},
         {"trial", t.trial},
         {"seed", t.seed},
         {"dim", t.dim},
         {"k", t.k},
         {"f", t.function},
         {"param", t.param},
         {"m", t.m},
         {"M", t.M},
         {"result", to_json(t.result)}};
  if (!t.error.empty()) j["error"] = t.error;
  return j;
}

/// Full report. Failing trials are dumped with their regenerated instance.
inline Json to_json(const CampaignReport& r) {
  Json results = Json::array();
  for (const auto& s : r.results) results.push_back(to_json(s));
  Json failures = Json::array();
  for (const auto& t : r.trials) {
    if (!t.result.failed() || !t.error.empty()) continue;
    auto j = to_json(t);
    j["instance"] = to_json(trial_instance(r.config, t.theorem, t.seed));
    failures.push_back(std::move(j));
  }
  return {{"config", to_json(r.config)}, {"results", std::move(results)},
          {"failures", std::move(failures)}};
}

/// One row per trial.
inline std::string to_csv(const CampaignReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "theorem,trial,seed,dim,k,f,param,m,M,hypothesis_met,holds,margin,triage,error\n";
  for (const auto& t : r.trials) {
    std::string err = t.error;
    for (auto& c : err)
      if (c == ',' || c == '\n' || c == '"') c = ' ';
    os << to_string(t.theorem) << ',' << t.trial << ',' << t.seed << ',' << t.dim << ',' << t.k
       << ',' << t.function << ',' << t.param << ',' << t.m << ',' << t.M << ','
       << (t.result.hypothesis_met ? 1 : 0) << ',' << (t.result.holds ? 1 : 0) << ','
       << t.result.margin << ',' << to_string(t.result.triage) << ',' << err << '\n';
  }
  return os.str();
}

}  // namespace opent::io

#endif  // OPENT_IO_HPP
