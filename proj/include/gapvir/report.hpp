#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gapvir/checks.hpp"
#include "gapvir/tensor_model.hpp"
#include "gapvir/unitarity.hpp"

namespace gapvir {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gapvir/1";
inline constexpr const char* kVersion = "0.1.0";

inline Json to_json(const Scalar& s) { return s.to_string(); }

inline Json to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

inline Json to_json(const Matrix& m) { return m.to_strings(); }

inline Json to_json(const HighestWeight& w) {
  Json c = Json::array();
  for (const auto& x : w.central()) c.push_back(x.to_string());
  return {{"p", w.p()}, {"L0", w.L0().to_string()}, {"C", c}, {"J", w.J()}};
}

inline Json to_json(const DefinitenessVerdict& v) {
  Json out{{"kind", to_string(v.kind)},
           {"kernelDim", v.kernel_dim},
           {"inertia", {{"positive", v.positive}, {"negative", v.negative}, {"zero", v.zero}}}};
  if (!v.witness.empty()) out["witness"] = v.witness;
  return out;
}

inline Json monomials_json(const std::vector<Monomial>& basis) {
  Json out = Json::array();
  for (const auto& m : basis) out.push_back(render_monomial(m));
  return out;
}

inline Json to_json(const ModuleVector& v) {
  Json out = Json::object();
  for (const auto& [m, c] : v) out[render_monomial(m)] = c.to_string();
  return out;
}

inline Json to_json(const GramMatrix& G) {
  return {{"level", G.level}, {"sector", to_string(G.sector)}, {"basis", monomials_json(G.basis)},
          {"matrix", to_json(G.entries)}};
}

inline Json to_json(const ReducibilityReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json j{{"level", l.d}, {"dim", l.dim}, {"singularDim", l.singular_dim}};
    j["gramKernel"] = l.gram_kernel ? Json(*l.gram_kernel) : Json(nullptr);
    levels.push_back(j);
  }
  return {{"levels", levels},
          {"firstSingularLevel", r.first_singular_level ? Json(*r.first_singular_level) : Json(nullptr)},
          {"gramRoute", r.gram_route},
          {"routesAgree", r.routes_agree}};
}

inline Json to_json(const KacScan& s) {
  Json pts = Json::array();
  for (const auto& p : s.points) {
    pts.push_back({{"c", p.c.to_string()}, {"h", p.h.to_string()}, {"phiZero", p.phi_zero},
                   {"singular", p.has_singular}});
  }
  return {{"direction", to_string(s.direction)}, {"setsEqual", s.sets_equal}, {"points", pts}};
}

inline Json to_json(const HeisenbergReport& h) {
  Json clauses = Json::array();
  for (const auto& c : h.clauses) {
    clauses.push_back({{"i", c.i}, {"product", c.product.to_string()}, {"realNonzero", c.real_nonzero},
                       {"positive", c.positive}});
  }
  return {{"realNonzero", h.real_nonzero}, {"positive", h.positive}, {"perIndex", clauses}};
}

inline Json to_json(const VirasoroClause& v) {
  Json out{{"applicable", v.applicable}, {"continuum", v.continuum}};
  if (v.discrete) {
    out["discreteSeries"] = {{"m", v.discrete->m}, {"r", v.discrete->r}, {"s", v.discrete->s}};
  } else {
    out["discreteSeries"] = nullptr;
  }
  out["holds"] = v.holds();
  return out;
}

inline Json to_json(const OracleReport& o) {
  Json levels = Json::array();
  for (const auto& l : o.levels) {
    Json j{{"level", l.d}, {"dim", l.dim}, {"hermitian", l.hermitian}};
    j["verdict"] = l.verdict ? to_json(*l.verdict) : Json(nullptr);
    levels.push_back(j);
  }
  return {{"psd", o.psd}, {"firstFailure", o.first_failure ? Json(*o.first_failure) : Json(nullptr)},
          {"levels", levels}};
}

inline Json to_json(const UnitarityVerdict& v) {
  Json out{{"verdict", v.closed_form ? "unitary" : "not-unitary"},
           {"closedForm", v.closed_form},
           {"closedFormLiteral", v.closed_form_literal},
           {"clauses", {{"heisenberg", to_json(v.heisenberg)}, {"centralCharge", to_json(v.virasoro)}}}};
  out["oracle"] = v.oracle ? to_json(*v.oracle) : Json(nullptr);
  out["agreement"] = v.agreement ? Json(*v.agreement) : Json(nullptr);
  out["variantDiscrepancy"] = v.variant_discrepancy;
  out["notes"] = v.notes;
  return out;
}

inline Json to_json(const FViolation& v) {
  return {{"kind", v.kind == FViolation::Kind::Compatibility ? "compatibility" : "closure"},
          {"indices", {v.a, v.b, v.c}},
          {"message", v.describe()}};
}

inline Json to_json(const SeriesPredicates& s) {
  Json failures = Json::array();
  for (const auto& [i, j] : s.f_failures) failures.push_back({{"i", i}, {"j", j}});
  Json out{{"reducible", s.reducible},
           {"reducibility", {{"singleColumn", s.single_column}, {"aInteger", s.a_integer},
                             {"bInZeroOne", s.b_in_zero_one}}},
           {"unitary", s.unitary},
           {"unitarity", {{"aReal", s.a_real}, {"bOnHalfLine", s.b_on_half_line},
                          {"fCondition", s.f_condition}, {"fFailures", failures}}},
           {"aNonzero", s.a_nonzero},
           {"unitaryWithNonzeroA", s.unitary_with_nonzero_a}};
  out["contravarianceSelfTest"] =
      s.contravariance_self_test ? Json(*s.contravariance_self_test) : Json(nullptr);
  return out;
}

inline Json to_json(const AxiomCheck& a, int p) {
  Json out{{"pass", a.pass}, {"checked", a.checked}};
  if (a.witness) {
    GapVirasoro alg(p);
    out["witness"] = {{"x", alg.render(a.witness->x)}, {"y", alg.render(a.witness->y)},
                      {"vector", {{"k", a.witness->v.k}, {"j", a.witness->v.j}}}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

inline Json to_json(const Classification& c) {
  Json out;
  out["bucket"] = c.bucket ? Json(*c.bucket) : Json(nullptr);
  out["verdict"] = c.bucket ? "unitary" : "not-unitary";
  out["failingClauses"] = c.failing;
  out["variantDiscrepancy"] = c.variant_discrepancy;
  out["notes"] = c.notes;
  if (c.series) out["series"] = to_json(*c.series);
  if (c.highest) out["highestWeight"] = to_json(*c.highest);
  return out;
}

inline Json to_json(const InvolutionAxioms& a) {
  return {{"pass", a.pass()},
          {"involutive", a.involutive},
          {"conjugateLinear", a.conjugate_linear},
          {"antiMultiplicative", a.anti_multiplicative},
          {"virasoroStable", a.virasoro_stable},
          {"heisenbergStable", a.heisenberg_stable},
          {"failures", a.failures}};
}

/// Report envelope shared by every command.
inline Json make_report(const std::string& command, Json config, std::vector<std::string> clauses, Json result) {
  return {{"schema", kSchema}, {"version", kVersion}, {"command", command},
          {"config", std::move(config)}, {"clauses", std::move(clauses)}, {"result", std::move(result)}};
}

}  // namespace gapvir
