#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "turanlab/enumeration.hpp"
#include "turanlab/matching.hpp"
#include "turanlab/theorems.hpp"

namespace turanlab {

using Json = nlohmann::ordered_json;

inline Json to_json(const ExtremalResult& r) {
  return Json{{"n", r.n},           {"h_spec", r.h_spec},     {"f_spec", r.f_spec},
              {"value", r.value},   {"extremal", r.extremal}, {"searched", r.searched}};
}

inline ExtremalResult extremal_result_from_json(const Json& j) {
  try {
    ExtremalResult r;
    r.n = j.at("n").get<int>();
    r.h_spec = j.at("h_spec").get<std::string>();
    r.f_spec = j.at("f_spec").get<std::string>();
    r.value = j.at("value").get<Count>();
    r.extremal = j.at("extremal").get<std::vector<std::string>>();
    r.searched = j.at("searched").get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedEncoding(std::string("bad extremal result: ") + e.what());
  }
}

inline Json to_json(const MatchingProfile& p) { return Json(p.counts); }

inline Json to_json(const DetailRow& row) {
  Json j{{"case", row.label}, {"n", row.n}, {"formula", row.expected}, {"oracle", row.observed},
         {"holds", row.holds}};
  j["witness"] = row.witness.empty() ? Json(nullptr) : Json(row.witness);
  j["note"] = row.note;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json j{{"theorem_id", std::string(to_string(r.theorem))}, {"params", params},
         {"status", std::string(to_string(r.status))}};
  j["holds_from"] = r.status == Status::HOLDS_FROM ? Json(*r.holds_from) : Json(nullptr);
  j["witness"] = r.witness.empty() ? Json(nullptr) : Json(r.witness);
  Json details = Json::array();
  for (const auto& row : r.details) details.push_back(to_json(row));
  j["details"] = std::move(details);
  return j;
}

inline Json to_json(const std::vector<VerificationReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

inline Json to_json(const BergeTuttePartition& p) {
  Json comps = Json::array();
  for (VertexSet c : p.components) comps.push_back(to_vector(c));
  return Json{{"B", to_vector(p.witness)}, {"components", comps}, {"value", p.value},
              {"singletons", p.singleton_count()}};
}

inline Json to_json(const StructureParams& p) {
  Json j{{"tau", p.tau}, {"alpha", p.alpha}, {"nu", p.nu}};
  j["b"] = p.b ? Json(*p.b) : Json(nullptr);
  return j;
}

inline std::string params_string(const VerificationReport& r) {
  std::string out;
  for (const auto& [k, v] : r.params) out += (out.empty() ? "" : " ") + k + "=" + v;
  return out;
}

inline std::string status_string(const VerificationReport& r) {
  std::string s(to_string(r.status));
  if (r.status == Status::HOLDS_FROM) s += "(" + std::to_string(*r.holds_from) + ")";
  return s;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv_header(std::ostream& os) {
  os << "theorem_id,params,case,n,expected,observed,holds,witness,note\n";
}

inline void write_csv(std::ostream& os, const VerificationReport& r) {
  const std::string id(to_string(r.theorem));
  const std::string params = params_string(r);
  for (const auto& row : r.details)
    os << id << ',' << csv_field(params) << ',' << csv_field(row.label) << ',' << row.n << ',' << row.expected << ','
       << row.observed << ',' << (row.holds ? "true" : "false") << ',' << csv_field(row.witness) << ','
       << csv_field(row.note) << '\n';
}

inline void write_table(std::ostream& os, const VerificationReport& r) {
  os << to_string(r.theorem) << "  [" << params_string(r) << "]  " << status_string(r);
  if (!r.witness.empty()) os << "  witness " << r.witness;
  os << '\n';
  os << "  " << std::left << std::setw(18) << "case" << std::right << std::setw(12) << "expected" << std::setw(12)
     << "observed" << "  ok  witness / note\n";
  for (const auto& row : r.details) {
    os << "  " << std::left << std::setw(18) << row.label << std::right << std::setw(12) << row.expected
       << std::setw(12) << row.observed << "  " << (row.holds ? "yes " : "NO  ");
    std::string tail = row.witness;
    if (!row.note.empty()) tail += (tail.empty() ? "" : "  ") + row.note;
    os << tail << '\n';
  }
}

inline void write_table(std::ostream& os, const ExtremalResult& r) {
  os << "ex(" << r.n << ", " << r.h_spec << ", " << r.f_spec << ") = " << r.value << '\n';
  os << "searched " << r.searched << " isomorphism classes, " << r.extremal.size() << " extremal\n";
  for (const auto& g6 : r.extremal) os << "  " << g6 << '\n';
}

}  // namespace turanlab
