#include "records.hpp"

#include <json.hpp>

namespace domfix::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

ordered_json set_json(const SymmetricGammaSet& s) {
  return {{"d1", s.d1.to_vector()}, {"d2", s.d2.to_vector()}};
}

ordered_json sets_json(const std::vector<SymmetricGammaSet>& sets) {
  ordered_json a = ordered_json::array();
  for (const auto& s : sets) a.push_back(set_json(s));
  return a;
}

const char* structure_name(EvenStructureKind k) {
  switch (k) {
    case EvenStructureKind::NO_EVEN: return "NO_EVEN";
    case EvenStructureKind::PIVOT: return "PIVOT";
    case EvenStructureKind::DISJOINT_FAMILY: return "DISJOINT_FAMILY";
  }
  return "?";
}

ordered_json detail_json(const WitnessReport& rep) {
  ordered_json d = ordered_json::object();
  if (rep.detail.structure) d["structure"] = structure_name(*rep.detail.structure);
  if (rep.detail.sym) d["symmetric_set"] = set_json(*rep.detail.sym);
  if (rep.detail.u1) d["u1"] = *rep.detail.u1;
  if (rep.detail.chain) {
    d["chain"] = {{"x", rep.detail.chain->x}, {"a", rep.detail.chain->a}};
    d["family"] = sets_json(rep.detail.family);
  }
  if (rep.detail.component) {
    d["component"] = *rep.detail.component;
    d["component_route"] = route_name(*rep.detail.component_route);
  }
  if (rep.detail.method) d["method"] = *rep.detail.method;
  if (!rep.found) d["not_found"] = true;
  return d;
}

ordered_json analyze_json(const AnalyzeRecord& r) {
  ordered_json j = {
      {"graph6", r.graph6},
      {"n", r.n},
      {"m_edges", r.m},
      {"gamma", r.gamma},
      {"prism_fixer", r.prism_fixer},
      {"truncated", r.truncated},
      {"symmetric_count", r.sets.size()},
      {"symmetric_sets", sets_json(r.sets)},
      {"structure", nullptr},
      {"structure_sets", nullptr},
      {"invariants_ok", nullptr},
      {"intersection_ok", nullptr},
      {"note", nullptr},
      {"components", nullptr},
  };
  if (r.structure) {
    j["structure"] = structure_name(r.structure->kind);
    j["structure_sets"] = sets_json(r.structure->sets);
  }
  if (r.invariants_ok) j["invariants_ok"] = *r.invariants_ok;
  if (r.intersection_ok) j["intersection_ok"] = *r.intersection_ok;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.components.empty()) {
    ordered_json cs = ordered_json::array();
    for (const auto& c : r.components) cs.push_back(analyze_json(c));
    j["components"] = cs;
  }
  return j;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string gamma_header(Format f) {
  return f == Format::CSV ? "graph6,n,gamma,witness" : "";
}

std::string analyze_header(Format f) {
  return f == Format::CSV
             ? "graph6,n,m_edges,gamma,prism_fixer,truncated,symmetric_count,"
               "structure,invariants_ok,intersection_ok,note"
             : "";
}

std::string verify_header(Format f) {
  return f == Format::CSV
             ? "graph6,n,m_edges,gamma,prism_fixer,route,permutation_cycles,"
               "gamma_prism,violation,detail"
             : "";
}

std::string format_gamma(Format f, const GammaRecord& r) {
  switch (f) {
    case Format::JSON: {
      ordered_json j = {{"graph6", r.graph6},
                        {"n", r.n},
                        {"gamma", r.gamma},
                        {"witness", r.witness}};
      return j.dump();
    }
    case Format::CSV:
      return csv_escape(r.graph6) + "," + std::to_string(r.n) + "," +
             std::to_string(r.gamma) + "," + join_ints(r.witness);
    case Format::TEXT:
      return r.graph6 + " n=" + std::to_string(r.n) +
             " gamma=" + std::to_string(r.gamma) + " witness={" +
             join_ints(r.witness) + "}";
  }
  return "";
}

std::string format_analyze(Format f, const AnalyzeRecord& r) {
  switch (f) {
    case Format::JSON:
      return analyze_json(r).dump();
    case Format::CSV: {
      std::string row = csv_escape(r.graph6) + "," + std::to_string(r.n) + "," +
                        std::to_string(r.m) + "," + std::to_string(r.gamma) +
                        "," + yn(r.prism_fixer) + "," + yn(r.truncated) + "," +
                        std::to_string(r.sets.size()) + ",";
      row += r.structure ? structure_name(r.structure->kind) : "";
      row += ",";
      row += r.invariants_ok ? yn(*r.invariants_ok) : "";
      row += ",";
      row += r.intersection_ok ? yn(*r.intersection_ok) : "";
      row += ",";
      row += csv_escape(r.note);
      return row;
    }
    case Format::TEXT: {
      std::string s = r.graph6 + " n=" + std::to_string(r.n) +
                      " m=" + std::to_string(r.m) +
                      " gamma=" + std::to_string(r.gamma) +
                      " fixer=" + yn(r.prism_fixer) +
                      " sets=" + std::to_string(r.sets.size());
      if (r.structure)
        s += std::string(" structure=") + structure_name(r.structure->kind);
      if (r.invariants_ok) s += " invariants=" + yn(*r.invariants_ok);
      if (r.intersection_ok) s += " intersection=" + yn(*r.intersection_ok);
      if (r.truncated) s += " truncated";
      if (!r.note.empty()) s += " note=\"" + r.note + "\"";
      return s;
    }
  }
  return "";
}

std::string format_verify(Format f, const VerifyRecord& r) {
  const WitnessReport& rep = r.report;
  bool fixer = rep.gamma_prism_identity == rep.gamma_g;
  switch (f) {
    case Format::JSON: {
      ordered_json j = {
          {"graph6", r.graph6},
          {"n", r.n},
          {"m_edges", r.m},
          {"gamma", rep.gamma_g},
          {"prism_fixer", fixer},
          {"route", route_name(rep.route)},
          {"permutation_cycles", nullptr},
          {"gamma_prism", nullptr},
          {"violation", rep.violation},
          {"detail", detail_json(rep)},
      };
      if (rep.found) {
        j["permutation_cycles"] = rep.alpha.cycle_string();
        j["gamma_prism"] = rep.gamma_prism;
      }
      return j.dump();
    }
    case Format::CSV: {
      std::string row = csv_escape(r.graph6) + "," + std::to_string(r.n) + "," +
                        std::to_string(r.m) + "," + std::to_string(rep.gamma_g) +
                        "," + yn(fixer) + "," + route_name(rep.route) + ",";
      if (rep.found) row += csv_escape(rep.alpha.cycle_string());
      row += ",";
      if (rep.found) row += std::to_string(rep.gamma_prism);
      row += ",";
      row += yn(rep.violation);
      row += "," + csv_escape(detail_json(rep).dump());
      return row;
    }
    case Format::TEXT: {
      std::string s = r.graph6 + " n=" + std::to_string(r.n) +
                      " m=" + std::to_string(r.m) +
                      " gamma=" + std::to_string(rep.gamma_g) +
                      " fixer=" + yn(fixer) + " route=" + route_name(rep.route);
      if (rep.found) {
        s += " alpha=" + rep.alpha.cycle_string() +
             " gamma_prism=" + std::to_string(rep.gamma_prism);
      } else {
        s += " alpha=NOT_FOUND";
      }
      s += " violation=" + yn(rep.violation);
      return s;
    }
  }
  return "";
}

std::string format_verify_summary(Format f, const VerifySummary& s) {
  if (f == Format::JSON) {
    ordered_json routes = ordered_json::object();
    for (const auto& [k, v] : s.routes) routes[k] = v;
    ordered_json j = {{"summary",
                       {{"total", s.total},
                        {"violations", s.violations},
                        {"not_found", s.not_found},
                        {"errors", s.errors},
                        {"routes", routes}}}};
    return j.dump();
  }
  std::string out = "summary: total=" + std::to_string(s.total) +
                    " violations=" + std::to_string(s.violations) +
                    " not_found=" + std::to_string(s.not_found) +
                    " errors=" + std::to_string(s.errors);
  for (const auto& [k, v] : s.routes)
    out += " " + k + "=" + std::to_string(v);
  return out;
}

}  // namespace domfix::cli
