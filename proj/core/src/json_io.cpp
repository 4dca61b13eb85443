// Copyright 2026 The zxeval developers
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

#include "zxeval/json_io.hpp"

#include <algorithm>

namespace zxeval {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  raise(Errc::schema_violation, "schema violation at " + path + ": " + what);
}

const json& expect(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) schema_error(path, std::string("missing '") + key + "'");
  return j.at(key);
}

Rational rat(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) schema_error(path, "expected rational string");
  try {
    return rational_from_string(j.get<std::string>());
  } catch (const Error&) {
    schema_error(path, "malformed rational '" + j.get<std::string>() + "'");
  }
}

} // namespace

json to_json(const LinearPhase& p) {
  json params = json::object();
  for (const auto& [name, c] : p.terms()) params[name] = rational_to_string(c);
  return json{{"pi", rational_to_string(p.pi_part())}, {"params", params}};
}

LinearPhase linear_phase_from_json(const json& j) {
  const std::string path = "/phase";
  LinearPhase out = LinearPhase::pi_multiple(rat(expect(j, "pi", path), path + "/pi"));
  if (j.contains("params")) {
    const json& params = j.at("params");
    if (!params.is_object()) schema_error(path + "/params", "expected object");
    for (auto it = params.begin(); it != params.end(); ++it)
      out = out + LinearPhase::parameter(it.key(), rat(it.value(), path + "/params/" + it.key()));
  }
  return out;
}

json to_json(const ScalarExpr& e) {
  json monomials = json::array();
  for (const auto& m : e.monomials()) {
    json atoms = json::array();
    for (const auto& a : m.atoms)
      atoms.push_back(json{{"fn", a.fn == Atom::Fn::cos ? "cos" : "sin"}, {"arg", to_json(a.arg)}});
    monomials.push_back(json{{"re", rational_to_string(m.coeff.re)},
                             {"im", rational_to_string(m.coeff.im)},
                             {"sqrt2", m.sqrt2_exp},
                             {"atoms", atoms}});
  }
  return json{{"monomials", monomials}};
}

ScalarExpr scalar_expr_from_json(const json& j) {
  const std::string path = "/scalar";
  const json& ms = expect(j, "monomials", path);
  if (!ms.is_array()) schema_error(path + "/monomials", "expected array");
  ScalarExpr out = ScalarExpr::zero();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string mp = path + "/monomials/" + std::to_string(i);
    const json& m = ms[i];
    GaussianRational coeff(rat(expect(m, "re", mp), mp + "/re"),
                           rat(expect(m, "im", mp), mp + "/im"));
    if (!expect(m, "sqrt2", mp).is_number_integer()) schema_error(mp + "/sqrt2", "expected int");
    int s2 = m.at("sqrt2").get<int>();
    ScalarExpr mono = ScalarExpr::constant(coeff) * ScalarExpr::sqrt2_pow(s2);
    const json& atoms = expect(m, "atoms", mp);
    if (!atoms.is_array()) schema_error(mp + "/atoms", "expected array");
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      const std::string ap = mp + "/atoms/" + std::to_string(k);
      const json& a = atoms[k];
      std::string fn = expect(a, "fn", ap).get<std::string>();
      LinearPhase arg = linear_phase_from_json(expect(a, "arg", ap));
      if (fn == "cos")
        mono = mono * ScalarExpr::cos(arg);
      else if (fn == "sin")
        mono = mono * ScalarExpr::sin(arg);
      else
        schema_error(ap + "/fn", "unknown atom kind '" + fn + "'");
    }
    out = out + mono;
  }
  return out;
}

json to_json(const Diagram& d) {
  json vertices = json::array();
  for (const auto& [id, v] : d.vertices()) {
    json jv{{"id", id}};
    switch (v.kind) {
    case VertexKind::Z: jv["kind"] = "Z"; break;
    case VertexKind::X: jv["kind"] = "X"; break;
    case VertexKind::In: jv["kind"] = "in"; break;
    case VertexKind::Out: jv["kind"] = "out"; break;
    }
    if (is_spider(v.kind)) jv["phase"] = to_json(v.phase);
    vertices.push_back(std::move(jv));
  }
  std::vector<Edge> es = d.edges();
  std::sort(es.begin(), es.end());
  json edges = json::array();
  for (const auto& e : es) edges.push_back(json::array({e.a, e.b}));
  json params = json::array();
  for (const auto& p : d.parameters()) params.push_back(p);
  return json{{"vertices", vertices}, {"edges", edges},   {"inputs", d.inputs()},
              {"outputs", d.outputs()}, {"scalar", to_json(d.scalar())}, {"params", params}};
}

Diagram diagram_from_json(const json& j) {
  Diagram d;
  d.set_scalar(scalar_expr_from_json(expect(j, "scalar", "/")));
  const json& vs = expect(j, "vertices", "/");
  if (!vs.is_array()) schema_error("/vertices", "expected array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string vp = "/vertices/" + std::to_string(i);
    const json& v = vs[i];
    const json& jid = expect(v, "id", vp);
    if (!jid.is_number_integer() || jid.get<long long>() < 0)
      schema_error(vp + "/id", "expected id");
    VertexId id = v.at("id").get<VertexId>();
    std::string kind = expect(v, "kind", vp).get<std::string>();
    LinearPhase phase;
    if (v.contains("phase")) phase = linear_phase_from_json(v.at("phase"));
    if (kind == "Z")
      d.add_vertex_with_id(id, VertexKind::Z, phase);
    else if (kind == "X")
      d.add_vertex_with_id(id, VertexKind::X, phase);
    else if (kind == "in")
      d.add_vertex_with_id(id, VertexKind::In);
    else if (kind == "out")
      d.add_vertex_with_id(id, VertexKind::Out);
    else
      schema_error(vp + "/kind", "unknown kind '" + kind + "'");
  }
  const json& es = expect(j, "edges", "/");
  if (!es.is_array()) schema_error("/edges", "expected array");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string ep = "/edges/" + std::to_string(i);
    const json& e = es[i];
    if (!e.is_array() || e.size() != 2) schema_error(ep, "expected [a,b]");
    VertexId a = e[0].get<VertexId>(), b = e[1].get<VertexId>();
    if (!d.contains(a) || !d.contains(b)) schema_error(ep, "edge endpoint does not exist");
    if (is_boundary(d.vertex(a).kind) && is_boundary(d.vertex(b).kind)) {
      // bare wire: normalize through a Z(0) spider
      VertexId mid = d.add_vertex(VertexKind::Z);
      d.add_edge(a, mid);
      d.add_edge(mid, b);
    } else {
      d.add_edge(a, b);
    }
  }
  std::vector<VertexId> ins, outs;
  for (const auto& v : expect(j, "inputs", "/")) ins.push_back(v.get<VertexId>());
  for (const auto& v : expect(j, "outputs", "/")) outs.push_back(v.get<VertexId>());
  d.set_boundaries(std::move(ins), std::move(outs));
  try {
    d.validate();
  } catch (const Error& err) {
    schema_error("/", err.what());
  }
  return d;
}

json to_json(const LinComb& lc) {
  json terms = json::array();
  for (const auto& t : lc.terms())
    terms.push_back(json{{"coeff", to_json(t.coeff)}, {"diagram", to_json(t.diagram)}});
  return json{{"arity", json::array({lc.n_inputs(), lc.n_outputs()})}, {"terms", terms}};
}

LinComb lincomb_from_json(const json& j) {
  const json& arity = expect(j, "arity", "/");
  if (!arity.is_array() || arity.size() != 2) schema_error("/arity", "expected [m,n]");
  LinComb lc(arity[0].get<std::size_t>(), arity[1].get<std::size_t>());
  const json& terms = expect(j, "terms", "/");
  if (!terms.is_array()) schema_error("/terms", "expected array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const json& t = terms[i];
    const std::string tp = "/terms/" + std::to_string(i);
    lc.add_term(scalar_expr_from_json(expect(t, "coeff", tp)),
                diagram_from_json(expect(t, "diagram", tp)));
  }
  return lc;
}

} // namespace zxeval
