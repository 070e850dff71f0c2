#include "lcw/input.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lcw {
namespace {

using Json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("input: " + where + ": " + what);
}

Rat rational_at(const Json& j, const std::string& where) {
  if (j.is_number())
    fail(where, "decimals forbidden; write 1/2");
  if (!j.is_string())
    fail(where, "expected a rational string like \"p/q\"");
  try {
    return rat_parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

int int_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

RVec vec_at(const Json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    fail(where, "expected an array of " + std::to_string(n) + " rationals");
  RVec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rational_at(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

InputDoc parse_lie_algebra(const Json& j) {
  InputDoc doc;
  doc.kind = InputKind::LieAlgebra;
  if (!j.contains("dim")) fail("dim", "missing");
  doc.dim = int_at(j["dim"], "dim");
  if (doc.dim != 3 && doc.dim != 4) fail("dim", "3 or 4 expected");
  if (!j.contains("brackets") || !j["brackets"].is_array())
    fail("brackets", "expected an array");
  for (std::size_t bi = 0; bi < j["brackets"].size(); ++bi) {
    const Json& b = j["brackets"][bi];
    std::string where = "brackets[" + std::to_string(bi) + "]";
    if (!b.is_object()) fail(where, "expected an object");
    if (!b.contains("pair") || !b["pair"].is_array() || b["pair"].size() != 2)
      fail(where + ".pair", "expected [i, j]");
    int i = int_at(b["pair"][0], where + ".pair[0]");
    int k = int_at(b["pair"][1], where + ".pair[1]");
    if (i < 0 || k >= doc.dim || i >= k)
      fail(where + ".pair", "need 0 <= i < j < dim");
    if (!b.contains("result") || !b["result"].is_object())
      fail(where + ".result", "expected an object of index -> rational");
    RVec v = rvec(doc.dim);
    for (const auto& [key, val] : b["result"].items()) {
      int idx;
      try {
        std::size_t used = 0;
        idx = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail(where + ".result", "component key '" + key + "' is not an index");
      }
      if (idx < 0 || idx >= doc.dim)
        fail(where + ".result", "component index " + key + " out of range");
      v[idx] = rational_at(val, where + ".result." + key);
    }
    doc.brackets.push_back({i, k, v});
  }
  return doc;
}

InputDoc parse_ckf(const Json& j) {
  InputDoc doc;
  doc.kind = InputKind::Ckf;
  if (!j.contains("dim")) fail("dim", "missing");
  doc.dim = int_at(j["dim"], "dim");
  CkField X;
  X.n = doc.dim;
  if (!j.contains("alpha")) fail("alpha", "missing");
  X.alpha = vec_at(j["alpha"], doc.dim, "alpha");
  if (!j.contains("c")) fail("c", "missing");
  X.c = rational_at(j["c"], "c");
  if (!j.contains("B") || !j["B"].is_array() ||
      static_cast<int>(j["B"].size()) != doc.dim)
    fail("B", "expected a " + std::to_string(doc.dim) + "-row matrix");
  for (std::size_t r = 0; r < j["B"].size(); ++r)
    X.B.push_back(vec_at(j["B"][r], doc.dim, "B[" + std::to_string(r) + "]"));
  if (!j.contains("gamma")) fail("gamma", "missing");
  X.gamma = vec_at(j["gamma"], doc.dim, "gamma");
  try {
    X.validate();
  } catch (const std::exception& e) {
    fail("field", e.what());
  }
  doc.field = X;
  return doc;
}

}  // namespace

InputDoc parse_input_text(const std::string& text, bool skip_jacobi) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail("document", e.what());
  }
  if (!j.is_object()) fail("document", "expected a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string())
    fail("kind", "expected \"lie_algebra\" or \"ckf\"");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "lie_algebra") {
    InputDoc doc = parse_lie_algebra(j);
    // structural validation, including Jacobi, happens at load time
    LieAlgebra::load(doc.dim, doc.brackets, skip_jacobi);
    return doc;
  }
  if (kind == "ckf") return parse_ckf(j);
  fail("kind", "unknown kind '" + kind + "'");
}

InputDoc parse_input(const std::string& path, bool skip_jacobi) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str(), skip_jacobi);
}

}  // namespace lcw
