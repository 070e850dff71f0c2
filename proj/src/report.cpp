#include "lcw/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lcw {

Json& Report::section(const std::string& name) {
  for (auto& [n, body] : sections)
    if (n == name) return body;
  sections.emplace_back(name, Json::object());
  return sections.back().second;
}

const Json* Report::find(const std::string& name) const {
  for (const auto& [n, body] : sections)
    if (n == name) return &body;
  return nullptr;
}

Json Report::to_json() const {
  Json out = Json::object();
  Json list = Json::array();
  for (const auto& [name, body] : sections) {
    Json s = Json::object();
    s["name"] = name;
    s["body"] = body;
    list.push_back(s);
  }
  out["sections"] = list;
  return out;
}

Report Report::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sections") || !j["sections"].is_array())
    throw std::invalid_argument("report: expected {\"sections\": [...]}");
  Report r;
  for (const Json& s : j["sections"]) {
    if (!s.is_object() || !s.contains("name") || !s.contains("body"))
      throw std::invalid_argument("report: malformed section");
    r.sections.emplace_back(s["name"].get<std::string>(), s["body"]);
  }
  return r;
}

std::string Report::serialize() const { return to_json().dump(2) + "\n"; }

Report Report::parse(const std::string& text) {
  return from_json(Json::parse(text));
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

bool is_numeric_cell(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("num") &&
         j.contains("residual");
}

void render_value(const Json& j, std::ostringstream& out, int indent) {
  std::string pad(indent, ' ');
  if (is_numeric_cell(j)) {
    out << fmt12(j["num"].get<double>()) << " (residual "
        << fmt12(j["residual"].get<double>()) << ")";
    return;
  }
  if (j.is_string()) {
    out << j.get<std::string>();
    return;
  }
  if (j.is_boolean()) {
    out << (j.get<bool>() ? "yes" : "no");
    return;
  }
  if (j.is_number_integer()) {
    out << j.get<long long>();
    return;
  }
  if (j.is_number_float()) {
    out << fmt12(j.get<double>());
    return;
  }
  if (j.is_null()) {
    out << "-";
    return;
  }
  if (j.is_array()) {
    // flat arrays of scalars render inline
    bool flat = true;
    for (const Json& e : j)
      flat = flat && (e.is_string() || e.is_number() || e.is_boolean());
    if (flat) {
      out << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ", ";
        render_value(j[i], out, 0);
      }
      out << "]";
      return;
    }
    for (const Json& e : j) {
      out << "\n" << pad << "- ";
      render_value(e, out, indent + 2);
    }
    return;
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << "\n" << pad << it.key() << ": ";
      render_value(it.value(), out, indent + 2);
    }
    return;
  }
  out << j.dump();
}

}  // namespace

std::string Report::render_text() const {
  std::ostringstream out;
  for (const auto& [name, body] : sections) {
    out << "== " << name << " ==";
    render_value(body, out, 2);
    out << "\n";
  }
  return out.str();
}

Json exact_cell(const Rat& v) { return Json(rat_str(v)); }

Json exact_cell(const RVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

Json exact_cell(const RMat& m) {
  Json a = Json::array();
  for (const RVec& r : m) a.push_back(exact_cell(r));
  return a;
}

Json numeric_cell(double num, double residual) {
  Json o = Json::object();
  o["num"] = num;
  o["residual"] = residual;
  return o;
}

}  // namespace lcw
