#include "lcw/sweep.hpp"

#include "lcw/dist.hpp"
#include "lcw/flags.hpp"
#include "lcw/liealg.hpp"
#include "lcw/report.hpp"
#include "lcw/vec.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace lcw {

std::string sweep_predicate_name(SweepPredicate p) {
  switch (p) {
    case SweepPredicate::DetCyZero:
      return "detcy-zero";
    case SweepPredicate::EigenflagExists:
      return "eigenflag-exists";
    case SweepPredicate::EigenflagWithoutLcw:
      return "eigenflag-without-lcw";
  }
  throw std::invalid_argument("sweep: bad predicate value");
}

SweepPredicate sweep_predicate_from(const std::string& name) {
  if (name == "detcy-zero") return SweepPredicate::DetCyZero;
  if (name == "eigenflag-exists") return SweepPredicate::EigenflagExists;
  if (name == "eigenflag-without-lcw") return SweepPredicate::EigenflagWithoutLcw;
  throw std::invalid_argument(
      "sweep: unknown predicate \"" + name +
      "\"; use detcy-zero, eigenflag-exists or eigenflag-without-lcw");
}

namespace {

std::vector<Rat> expand(const SweepRange& r, const char* which) {
  if (r.step <= 0)
    throw std::invalid_argument(std::string("sweep: ") + which +
                                ": step must be positive");
  if (r.lo > r.hi)
    throw std::invalid_argument(std::string("sweep: ") + which +
                                ": empty range (lo > hi)");
  std::vector<Rat> out;
  for (Rat v = r.lo; v <= r.hi; v += r.step) out.push_back(v);
  return out;
}

Json rat_list(const RVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

// One finding line, or the empty string when the predicate does not hold.
std::string evaluate_point(const Rat& l1, const Rat& l2, const Rat& l3,
                           SweepPredicate pred) {
  LieAlgebra L = LieAlgebra::diagonal_3d(l1, l2, l3);
  RMat cy = cotton_york(L);

  Json line = Json::object();
  line["l1"] = rat_str(l1);
  line["l2"] = rat_str(l2);
  line["l3"] = rat_str(l3);

  if (pred == SweepPredicate::DetCyZero) {
    if (det_cy(cy) != 0) return {};
    Json d = Json::array();
    for (int i = 0; i < 3; ++i) d.push_back(rat_str(cy[i][i]));
    line["cy_diag"] = d;
    return line.dump() + "\n";
  }

  Eigenflags3 found = eigenflag_find_3d(cy);

  if (pred == SweepPredicate::EigenflagExists) {
    if (!found.all_directions && found.flags.empty()) return {};
    line["all_directions"] = found.all_directions;
    Json flags = Json::array();
    for (const FlagCertificate& f : found.flags) {
      Json e = Json::object();
      e["exact"] = f.exact;
      if (f.exact) {
        e["v"] = rat_list(f.v);
      } else {
        Json vn = Json::array();
        for (double x : f.v_num) vn.push_back(x);
        e["v_num"] = vn;
        e["defect"] = f.defect;
      }
      flags.push_back(e);
    }
    line["flags"] = flags;
    return line.dump() + "\n";
  }

  // EigenflagWithoutLcw: a vanishing tensor leaves directions unconstrained
  // and a missing or non-exact certificate proves nothing, so both bail out.
  if (found.all_directions || found.flags.empty()) return {};
  for (const FlagCertificate& f : found.flags)
    if (!f.exact) return {};

  Json flags = Json::array();
  for (const FlagCertificate& f : found.flags) {
    Distribution D;
    D.tangent = kernel(RMat{f.v});
    D.normal = {f.v};
    IntegrabilityReport ir = is_integrable(L, D);
    bool umb = ir.integrable ? is_umbilical(L, D).umbilical : false;
    if (ir.integrable && umb) return {};  // this direction survives
    Json e = Json::object();
    e["v"] = rat_list(f.v);
    e["integrable"] = ir.integrable;
    if (!ir.integrable) {
      e["bracket"] = rat_list(ir.bracket);
    } else {
      e["umbilical"] = false;
    }
    flags.push_back(e);
  }
  line["flags"] = flags;
  return line.dump() + "\n";
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LCWLAB_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

SweepOutcome sweep(const SweepSpec& spec) {
  std::vector<Rat> g1 = expand(spec.l1, "l1");
  std::vector<Rat> g2 = expand(spec.l2, "l2");
  std::vector<Rat> g3 = expand(spec.l3, "l3");

  const std::size_t n1 = g1.size(), n2 = g2.size(), n3 = g3.size();
  const std::size_t total = n1 * n2 * n3;
  std::vector<std::string> results(total);

  const int workers =
      static_cast<int>(std::min<std::size_t>(resolve_workers(spec.workers), total));
  const std::size_t chunk = (total + workers - 1) / workers;

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Rat& l1 = g1[idx / (n2 * n3)];
      const Rat& l2 = g2[(idx / n3) % n2];
      const Rat& l3 = g3[idx % n3];
      results[idx] = evaluate_point(l1, l2, l3, spec.predicate);
    }
  };

  if (workers <= 1) {
    run_range(0, total);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      std::size_t begin = static_cast<std::size_t>(w) * chunk;
      std::size_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  SweepOutcome out;
  out.points = static_cast<long long>(total);
  for (const std::string& r : results) {
    if (r.empty()) continue;
    ++out.findings;
    out.text += r;
  }
  return out;
}

}  // namespace lcw
