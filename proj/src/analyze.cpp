#include "lcw/analyze.hpp"

#include "lcw/ckfield.hpp"
#include "lcw/dist.hpp"
#include "lcw/flags.hpp"
#include "lcw/liealg.hpp"

#include <string>
#include <vector>

namespace lcw {
namespace {

Json sparse_entries(const TensorTable& t) {
  Json out = Json::array();
  std::vector<int> idx(t.rank(), 0);
  do {
    const Rat& v = t.at(idx);
    if (v == 0) continue;
    Json e = Json::object();
    e["index"] = idx;
    e["value"] = rat_str(v);
    out.push_back(e);
  } while (t.next_index(idx));
  return out;
}

Json flag_cell(const FlagCertificate& f) {
  Json e = Json::object();
  e["exact"] = f.exact;
  if (f.exact) {
    e["v"] = exact_cell(f.v);
  } else {
    Json v = Json::array();
    for (double x : f.v_num) v.push_back(x);
    e["v_num"] = v;
    e["defect"] = f.defect;
  }
  return e;
}

Json distribution_verdict(const LieAlgebra& L, const RVec& v) {
  Distribution D;
  D.tangent = kernel(RMat{v});
  D.normal = {v};
  Json e = Json::object();
  e["direction"] = exact_cell(v);

  IntegrabilityReport ir = is_integrable(L, D);
  e["integrable"] = ir.integrable;
  if (!ir.integrable) {
    Json w = Json::object();
    w["pair"] = Json::array({ir.a, ir.b});
    w["tangent_a"] = exact_cell(D.tangent[ir.a]);
    w["tangent_b"] = exact_cell(D.tangent[ir.b]);
    w["bracket"] = exact_cell(ir.bracket);
    w["normal_coeffs"] = exact_cell(ir.normal_coeffs);
    e["bracket_witness"] = w;
  }

  UmbilicReport ur = is_umbilical(L, D);
  e["umbilical"] = ur.umbilical;
  if (ur.umbilical) {
    e["mean_curvature"] = exact_cell(ur.mean_curvature);
  } else {
    Json w = Json::object();
    w["normal_index"] = ur.z;
    w["entry"] = Json::array({ur.a, ur.b});
    w["value"] = rat_str(ur.value);
    w["required"] = rat_str(ur.required);
    e["shape_violation"] = w;
  }

  e["obstructed"] = !(ir.integrable && ur.umbilical);
  return e;
}

void analyze_lie_algebra(const InputDoc& doc, bool skip_jacobi, Report& rep) {
  LieAlgebra L = LieAlgebra::load(doc.dim, doc.brackets, skip_jacobi);
  CurvaturePack pack = curvature_pack(L);

  Json& alg = rep.section("algebra");
  alg["dim"] = doc.dim;
  Json blist = Json::array();
  for (const Bracket& b : doc.brackets) {
    Json e = Json::object();
    e["pair"] = Json::array({b.i, b.j});
    e["result"] = exact_cell(b.v);
    blist.push_back(e);
  }
  alg["brackets"] = blist;

  rep.section("connection")["nonzero"] = sparse_entries(pack.connection);
  rep.section("curvature")["nonzero"] = sparse_entries(pack.riemann);
  rep.section("ricci")["matrix"] = exact_cell(pack.ricci);
  rep.section("scalar")["value"] = exact_cell(pack.scalar);
  rep.section("schouten")["matrix"] = exact_cell(pack.schouten);

  std::vector<FlagCertificate> exact_flags;
  bool unconstrained = false;  // obstruction tensor vanished
  bool any_flag = false;

  if (doc.dim == 3) {
    rep.section("cotton")["nonzero"] = sparse_entries(pack.cotton);
    rep.section("cotton_york")["matrix"] = exact_cell(pack.cotton_york);

    Json& fl = rep.section("flags");
    fl["det_cy"] = exact_cell(det_cy(pack.cotton_york));
    Eigenflags3 found = eigenflag_find_3d(pack.cotton_york);
    fl["all_directions"] = found.all_directions;
    Json certs = Json::array();
    for (const FlagCertificate& f : found.flags) {
      certs.push_back(flag_cell(f));
      if (f.exact) exact_flags.push_back(f);
    }
    fl["certificates"] = certs;
    unconstrained = found.all_directions;
    any_flag = found.all_directions || !found.flags.empty();
  } else {
    rep.section("weyl")["nonzero"] = sparse_entries(pack.weyl);
    rep.section("weyl6")["matrix"] = exact_cell(pack.weyl6);

    WeylType wt = weyl_type(pack.weyl);
    Json& fl = rep.section("flags");
    fl["type"] = weyl_tag_str(wt.tag);
    Json evs = Json::array();
    for (double v : wt.eigenvalues) evs.push_back(v);
    fl["eigenvalues"] = evs;
    fl["multiplicities"] = wt.multiplicities;
    fl["exact_spectrum"] = wt.exact_spectrum;
    if (wt.exact_spectrum) {
      Json ex = Json::array();
      for (const Rat& v : wt.exact_eigenvalues) ex.push_back(rat_str(v));
      fl["exact_eigenvalues"] = ex;
    }
    Json certs = Json::array();
    for (const FlagCertificate& f : wt.flags) {
      certs.push_back(flag_cell(f));
      if (f.exact) exact_flags.push_back(f);
    }
    fl["certificates"] = certs;
    if (!wt.planes.empty()) {
      Json planes = Json::array();
      for (const PlaneCertificate& p : wt.planes) {
        Json e = Json::object();
        e["u"] = exact_cell(p.u);
        e["w"] = exact_cell(p.w);
        planes.push_back(e);
      }
      fl["planes"] = planes;
    }
    fl["starts"] = wt.starts;
    fl["min_defect"] = wt.min_defect;
    fl["note"] = wt.note;
    unconstrained = wt.tag == WeylTag::D;
    any_flag = unconstrained || !wt.flags.empty();
  }

  Json& ds = rep.section("distributions");
  Json rows = Json::array();
  for (const FlagCertificate& f : exact_flags)
    rows.push_back(distribution_verdict(L, f.v));
  ds["per_flag"] = rows;

  Json& cls = rep.section("classification");
  Json candidates = Json::array();
  for (const Json& row : rows)
    if (!row["obstructed"].get<bool>()) candidates.push_back(row["direction"]);
  cls["lcw_candidates"] = candidates;
  if (unconstrained) {
    cls["verdict"] =
        "the obstruction tensor vanishes; eigenflag tests do not constrain "
        "limiting-weight directions";
  } else if (!any_flag) {
    cls["verdict"] =
        "no eigenflag direction exists; a limiting-weight gradient has no "
        "admissible direction";
  } else if (candidates.empty()) {
    cls["verdict"] =
        "eigenflag directions exist but none survives the distribution "
        "obstructions";
  } else {
    cls["verdict"] = std::to_string(candidates.size()) +
                     " eigenflag direction(s) pass every implemented "
                     "obstruction";
  }
}

void analyze_ckf(const InputDoc& doc, Report& rep) {
  const CkField& X = doc.field;
  Json& fs = rep.section("field");
  fs["dim"] = X.n;
  fs["alpha"] = exact_cell(X.alpha);
  fs["c"] = exact_cell(X.c);
  fs["B"] = exact_cell(X.B);
  fs["gamma"] = exact_cell(X.gamma);

  KillingSelftest st = conformal_killing_selftest(X);
  Json& self = rep.section("selftest");
  self["passes"] = st.passes;
  self["lambda_linear"] = exact_cell(st.lambda_linear);
  self["lambda_const"] = exact_cell(st.lambda_const);

  LcwConditions cond = lcw_conditions(X);
  Json& cs = rep.section("conditions");
  cs["pass"] = cond.pass;
  cs["b_wedge_gamma_nonzero"] = sparse_entries(cond.b_wedge_gamma);
  cs["cB_minus_alpha_wedge_gamma_nonzero"] =
      sparse_entries(cond.cB_minus_alpha_wedge_gamma);

  Json& cls = rep.section("classification");
  try {
    Reduction red = reduce_to_family(X);
    cls["is_lcw_tuple"] = true;
    cls["family"] = red.family.id;
    cls["orbit"] = orbit_of_family(red.family.id);
    cls["gamma"] = exact_cell(red.family.gamma);
    if (red.family.id == 3) cls["sigma"] = exact_cell(red.family.sigma);
    if (red.family.id == 5 || red.family.id == 6)
      cls["s"] = exact_cell(red.family.s);
    cls["a"] = exact_cell(red.family.a);
    cls["b"] = exact_cell(red.family.b);
    Json chain = Json::array();
    for (const ConformalMove& m : red.chain) chain.push_back(move_str(m));
    cls["chain"] = chain;
  } catch (const std::invalid_argument& e) {
    cls["is_lcw_tuple"] = false;
    cls["reason"] = std::string(e.what());
  }
}

}  // namespace

Report analyze(const InputDoc& doc, bool skip_jacobi) {
  Report rep;
  if (doc.kind == InputKind::LieAlgebra)
    analyze_lie_algebra(doc, skip_jacobi, rep);
  else
    analyze_ckf(doc, rep);
  return rep;
}

}  // namespace lcw
