// lcwlab: exact curvature obstructions for limiting-weight directions on
// metric Lie algebras, plus the conformal classification of quadratic
// conformal Killing fields on flat space.
//
// Exit codes: 0 success, 2 input/validation error, 3 golden mismatch.
#include "lcw/analyze.hpp"
#include "lcw/input.hpp"
#include "lcw/scenario.hpp"
#include "lcw/sweep.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>

namespace {

lcw::SweepRange parse_range(const std::string& s, const char* which) {
  auto p1 = s.find(':');
  auto p2 = s.find(':', p1 == std::string::npos ? p1 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw std::invalid_argument(std::string(which) + ": expected lo:hi:step, got \"" +
                                s + "\"");
  lcw::SweepRange r;
  r.lo = lcw::rat_parse(s.substr(0, p1));
  r.hi = lcw::rat_parse(s.substr(p1 + 1, p2 - p1 - 1));
  r.step = lcw::rat_parse(s.substr(p2 + 1));
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument(path + ": cannot open for writing");
  out << text;
}

int cmd_analyze(const std::string& file, const std::string& json_out,
                bool skip_jacobi) {
  lcw::InputDoc doc = lcw::parse_input(file, skip_jacobi);
  lcw::Report rep = lcw::analyze(doc, skip_jacobi);
  std::cout << rep.render_text();
  if (!json_out.empty()) write_file(json_out, rep.serialize());
  return 0;
}

int cmd_classify(const std::string& file) {
  lcw::InputDoc doc = lcw::parse_input(file);
  if (doc.kind != lcw::InputKind::Ckf)
    throw std::invalid_argument(file + ": classify-ckf expects \"kind\": \"ckf\"");
  lcw::Report rep = lcw::analyze(doc);
  std::cout << rep.render_text();
  return 0;
}

int cmd_scenario(const std::string& name) {
  lcw::ScenarioResult r = lcw::run_scenario(name);
  std::cout << r.report.render_text();
  if (!r.diffs.empty()) {
    std::cerr << "scenario " << name << ": " << r.diffs.size()
              << " golden mismatch(es)\n";
    for (const std::string& d : r.diffs) std::cerr << "  " << d << "\n";
    return 3;
  }
  std::cout << "scenario " << name << ": OK\n";
  return 0;
}

int cmd_sweep(const std::string& l1, const std::string& l2, const std::string& l3,
              const std::string& predicate, int workers, const std::string& out) {
  lcw::SweepSpec spec;
  spec.l1 = parse_range(l1, "--l1");
  spec.l2 = parse_range(l2, "--l2");
  spec.l3 = parse_range(l3, "--l3");
  spec.predicate = lcw::sweep_predicate_from(predicate);
  spec.workers = workers;
  lcw::SweepOutcome res = lcw::sweep(spec);
  if (out.empty()) {
    std::cout << res.text;
    std::cerr << "sweep: " << res.points << " points, " << res.findings
              << " finding(s)\n";
  } else {
    write_file(out, res.text);
    std::cout << "sweep: " << res.points << " points, " << res.findings
              << " finding(s) -> " << out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact curvature and conformal-classification toolkit for "
      "limiting-weight analysis"};
  app.require_subcommand(1);

  std::string an_file, an_json;
  bool an_skip = false;
  CLI::App* an = app.add_subcommand(
      "analyze", "full curvature/flag/distribution report for an input file");
  an->add_option("file", an_file, "JSON input document")->required();
  an->add_option("--json", an_json, "also write the report as JSON");
  an->add_flag("--skip-jacobi", an_skip,
               "skip the Jacobi validation (error-path demos only)");

  std::string ck_file;
  CLI::App* ck = app.add_subcommand(
      "classify-ckf", "reduce a conformal Killing tuple to its model family");
  ck->add_option("file", ck_file, "JSON input document")->required();

  std::string sc_name;
  CLI::App* sc = app.add_subcommand(
      "scenario", "run a built-in worked example against its pinned values");
  std::string names;
  for (const std::string& n : lcw::scenario_names())
    names += (names.empty() ? "" : ", ") + n;
  sc->add_option("name", sc_name, "one of: " + names)->required();

  std::string sw_l1, sw_l2, sw_l3, sw_out;
  std::string sw_pred = "eigenflag-without-lcw";
  int sw_workers = 0;
  CLI::App* sw = app.add_subcommand(
      "sweep", "scan diagonal 3D structure constants for a predicate");
  sw->add_option("--l1", sw_l1, "range lo:hi:step")->required();
  sw->add_option("--l2", sw_l2, "range lo:hi:step")->required();
  sw->add_option("--l3", sw_l3, "range lo:hi:step")->required();
  sw->add_option("--predicate", sw_pred,
                 "detcy-zero | eigenflag-exists | eigenflag-without-lcw");
  sw->add_option("--workers", sw_workers, "worker threads (default: auto)");
  sw->add_option("--out", sw_out, "write findings to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (an->parsed()) return cmd_analyze(an_file, an_json, an_skip);
    if (ck->parsed()) return cmd_classify(ck_file);
    if (sc->parsed()) return cmd_scenario(sc_name);
    if (sw->parsed()) return cmd_sweep(sw_l1, sw_l2, sw_l3, sw_pred, sw_workers, sw_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
