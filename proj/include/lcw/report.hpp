#pragma once
#include "lcw/rat.hpp"
#include "lcw/vec.hpp"

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lcw {

using Json = nlohmann::ordered_json;

// Named sections in a fixed order. Exact rationals are stored as "p/q"
// strings; floating values as {"num": x, "residual": r} objects, so the two
// kinds can never be confused in serialized output.
struct Report {
  std::vector<std::pair<std::string, Json>> sections;

  Json& section(const std::string& name);           // appends when absent
  const Json* find(const std::string& name) const;  // nullptr when absent

  Json to_json() const;
  static Report from_json(const Json& j);
  std::string serialize() const;  // stable bytes, two-space indent
  static Report parse(const std::string& text);
  std::string render_text() const;

  bool operator==(const Report& o) const { return to_json() == o.to_json(); }
};

Json exact_cell(const Rat& v);
Json exact_cell(const RVec& v);
Json exact_cell(const RMat& m);
Json numeric_cell(double num, double residual);

// 12 significant digits, the fixed float format of text reports
std::string fmt12(double v);

}  // namespace lcw
