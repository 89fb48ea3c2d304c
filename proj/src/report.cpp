#include "qvcount/report.hpp"

#include <sstream>

#include "qvcount/config.hpp"

namespace qvc {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json to_json(const Partition& p) {
  Json a = Json::array();
  for (auto x : p) a.push_back(x);
  return a;
}

Json to_json(const Root& r) {
  return Json{{"vector", to_json(r.vec)}, {"kind", r.is_real() ? "real" : "imaginary"}};
}

Json to_json(const Hyperplane& h) {
  return Json{{"normal", to_json(h.normal)},
              {"offset", to_json(h.offset)},
              {"space", to_string(h.space)},
              {"provenance", h.provenance}};
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& [t, h] : q.arrows()) arrows.push_back(Json::array({t, h}));
  return Json{{"vertices", q.size()}, {"arrows", arrows}};
}

Json make_report(const std::string& command, Json inputs, Json result, const std::string& status) {
  return Json{{"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"status", status},
              {"version", kVersion}};
}

namespace {

std::string cell(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ' ';
      s += cell(v[i]);
    }
  } else if (v.is_null()) {
    s = "";
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

}  // namespace

std::string to_csv(const Json& report) {
  const Json& result = report.at("result");
  Json records = Json::array();
  for (const char* key : {"rows", "hyperplanes", "roots"}) {
    if (result.contains(key) && result.at(key).is_array()) {
      records = result.at(key);
      break;
    }
  }
  if (records.empty() && !(result.contains("rows") || result.contains("hyperplanes") || result.contains("roots"))) {
    Json flat = Json::object();
    for (const auto& [k, v] : result.items()) flat[k] = v;
    records.push_back(flat);
  }
  std::ostringstream out;
  std::vector<std::string> cols;
  if (!records.empty()) {
    for (const auto& [k, v] : records.front().items()) cols.push_back(k);
  }
  bool row_status = !records.empty() && records.front().contains("status");
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
  if (!row_status) out << (cols.empty() ? "" : ",") << "status";
  out << "\n";
  for (const auto& rec : records) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << (c ? "," : "");
      if (rec.contains(cols[c])) out << cell(rec.at(cols[c]));
    }
    if (!row_status) out << (cols.empty() ? "" : ",") << cell(report.at("status"));
    out << "\n";
  }
  return out.str();
}

}  // namespace qvc
