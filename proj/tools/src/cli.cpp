#include "hornlab_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hornlab/facet_probe.hpp"
#include "hornlab/lp.hpp"
#include "hornlab/polytope.hpp"
#include "hornlab/scanner.hpp"
#include "hornlab/schubert.hpp"
#include "hornlab/symmetry.hpp"

namespace hornlab::cli {

namespace {

// A QIndex given inline or as a file holding one.
QIndex load_index(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    auto all = read_index_file(arg);
    if (all.size() != 1) throw ParseError(arg + " must hold exactly one index");
    return all.front();
  }
  return parse_qindex(arg);
}

std::vector<QIndex> load_indices(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return read_index_file(arg);
  return {parse_qindex(arg)};
}

Group parse_group(const std::string& text) {
  if (text == "G") return Group::G;
  if (text == "Gtilde" || text == "GTilde") return Group::GTilde;
  throw ParseError("unknown group " + text + " (expected G or Gtilde)");
}

// Writes `text` to `path`, or to `out` when the path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

std::string format_verdict(const Verdict& v) {
  std::ostringstream out;
  out << "verdict " << to_text(v.kind) << '\n';
  out << "totals tight=" << v.tight_total << " violated=" << v.violated_total << '\n';
  for (const auto& r : v.violated) out << "violated " << r.origin.to_text() << ' ' << to_text(r.value) << '\n';
  for (const auto& r : v.tight) out << "tight " << r.origin.to_text() << '\n';
  return out.str();
}

struct Options {
  std::string index;
  bool classical = false;
  std::string group = "G";
  int n = 0;
  bool both = false;
  int workers = 1;
  std::size_t max_reports = kAllReports;
  std::string resume;
  std::string output;
  std::string point;
  std::string mode = "delta";
  bool stream = false;
  std::string problem;
  bool identify_ab = false;
  std::string objective;
  std::string indices;
  std::vector<std::string> anchors;
  std::string exclude;
  bool translate = false;
  bool no_identify = false;
  std::size_t max_rows = static_cast<std::size_t>(-1);
  bool dedup = false;
};

int cmd_qlr(const Options& o, std::ostream& out) {
  const QIndex t = load_index(o.index);
  if (o.classical) {
    out << to_text(t.d == 0 && t.degree_consistent() ? classical_lr(t.a, t.b, t.c) : Integer(0)) << '\n';
  } else {
    out << to_text(quantum_lr(t)) << '\n';
  }
  return kOk;
}

int cmd_orbit(const Options& o, std::ostream& out, std::ostream& err) {
  const QIndex t = load_index(o.index);
  const Group group = parse_group(o.group);
  const Orbit orb = orbit(t, group);
  const auto images = orbit_images(t, group);
  std::ostringstream text;
  for (const auto& [g, m] : images) text << to_text(g) << "  " << to_text(m) << "  d=" << m.d << '\n';
  emit(text.str(), o.output, out);
  err << images.size() << " images, " << orb.members.size() << " distinct members";
  if (orb.left_valid_region) err << " (some images had d < 0 and were dropped)";
  err << '\n';
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 2) throw CLI::ValidationError("-n", "n must be at least 2");
  const auto strata = scan_strata(o.n, o.both);
  ScanOptions opts;
  opts.workers = o.workers;
  opts.log_path = o.resume;
  const ScanReport report = reduction_check(o.n, strata, opts);
  emit(write_scan_report(report), o.output, out);
  const auto exceptional = report.exceptional();
  err << report.orbits.size() << " orbits, " << exceptional.size() << " exceptional";
  if (report.resumed_units > 0) err << ", " << report.resumed_units << " units replayed from log";
  err << '\n';
  return exceptional.empty() ? kOk : kNegative;
}

int cmd_member(const Options& o, std::ostream& out, std::ostream& err) {
  bool reordered = false;
  const SpectrumTriple p = read_point_file(o.point, &reordered);
  if (reordered) err << "warning: point components were reordered to be decreasing\n";
  const int n = o.n == 0 ? p.n() : o.n;
  if (p.n() != n) throw std::invalid_argument("point has n=" + std::to_string(p.n()) + ", expected " + std::to_string(n));
  const SystemMode mode = parse_mode(o.mode);
  Verdict v;
  if (o.stream) {
    auto rows = generate_system(n, mode);
    v = membership(p, *rows, o.max_reports);
  } else {
    v = implicit_membership(p, mode, o.workers, o.max_reports);
  }
  emit(format_verdict(v), o.output, out);
  return v.kind == VerdictKind::Violated ? kNegative : kOk;
}

int exit_for(const LPOutcome& outcome) {
  switch (outcome.status) {
    case LPStatus::Optimal: return kOk;
    case LPStatus::Infeasible: return kNegative;
    case LPStatus::Unbounded: return kUnbounded;
  }
  return kUsage;
}

int cmd_lp(const Options& o, std::ostream& out, std::ostream& err) {
  const SystemFile file = read_system_file(o.problem);
  LPProblem problem = problem_from_file(file);
  if (o.identify_ab) problem = identify_alpha_beta(problem, file.n);
  const LPOutcome outcome = solve(problem);
  if (!check_certificate(problem, outcome)) {
    err << "certificate check failed\n";
    return kUsage;
  }
  emit(write_outcome(outcome), o.output, out);
  err << to_text(outcome.status) << " after " << outcome.pivots << " pivots\n";
  return exit_for(outcome);
}

int cmd_separate(const Options& o, std::ostream& out, std::ostream& err) {
  SeparationConfig cfg;
  cfg.objective = load_index(o.objective);
  cfg.n = cfg.objective.n();
  cfg.translate = o.translate;
  cfg.identify_ab = !o.no_identify;
  cfg.stream_verify = o.stream;
  cfg.workers = o.workers;
  if (o.max_reports != kAllReports) cfg.report_limit = o.max_reports;
  if (!o.indices.empty()) {
    cfg.indices = load_indices(o.indices);
  } else if (!o.anchors.empty()) {
    std::vector<SpectrumTriple> anchors;
    for (const auto& path : o.anchors) anchors.push_back(read_point_file(path));
    cfg.indices = tight_filter(cfg.n, anchors, cfg.objective, o.workers);
    err << cfg.indices.size() << " indices tight at the anchors\n";
  } else {
    throw CLI::ValidationError("separate", "give --indices or --anchor");
  }
  const auto result = separation_experiment(cfg);
  emit(result.transcript, o.output, out);
  return kOk;
}

int cmd_tight(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.anchors.empty()) throw CLI::ValidationError("--anchor", "at least one anchor is required");
  std::vector<SpectrumTriple> anchors;
  for (const auto& path : o.anchors) anchors.push_back(read_point_file(path));
  const int n = anchors.front().n();
  std::optional<QIndex> exclude;
  if (!o.exclude.empty()) exclude = load_index(o.exclude);
  const auto list = tight_filter(n, anchors, exclude, o.workers);
  std::ostringstream text;
  for (const auto& t : list) text << to_text(t) << '\n';
  emit(text.str(), o.output, out);
  err << list.size() << " indices\n";
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 2) throw CLI::ValidationError("-n", "n must be at least 2");
  const SystemMode mode = parse_mode(o.mode);
  std::ofstream file;
  const bool append = !o.resume.empty() && !o.output.empty();
  if (!o.output.empty()) {
    file.open(o.output, append ? std::ios::app | std::ios::binary : std::ios::trunc | std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + o.output);
  }
  std::ostream& sink = o.output.empty() ? out : file;
  auto rows = generate_system(o.n, mode, o.resume);
  if (o.dedup) {
    ConstraintSystem all;
    all.num_vars = 3 * o.n;
    Row row;
    while (rows->next(row)) all.rows.push_back(row);
    const auto unique = dedup_rows(all);
    VectorRowStream stream(unique.rows);
    write_system(sink, o.n, to_text(mode), stream);
    return kOk;
  }
  try {
    write_system(sink, o.n, to_text(mode), *rows, o.max_rows, !append);
  } catch (const PartialOutputError& e) {
    err << e.what() << "\nresume token: " << e.resume_token() << '\n';
    return kPartial;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Littlewood-Richardson coefficients and the facet systems built from them"};
  app.require_subcommand(1);
  Options o;

  auto* qlr = app.add_subcommand("qlr", "Print the coefficient N_t of an index");
  qlr->add_option("index", o.index, "Index text 'r k ; a ; b ; c ; d' or a file")->required();
  qlr->add_flag("--classical", o.classical, "Classical LR coefficient (0 unless d = 0)");

  auto* orb = app.add_subcommand("orbit", "List the orbit of an index");
  orb->add_option("index", o.index, "Index text or file")->required();
  orb->add_option("--group", o.group, "G or Gtilde")->capture_default_str();
  orb->add_option("-o,--output", o.output, "Output file");

  auto* scan = app.add_subcommand("scan", "Group coefficient-one indices into orbits and check each reaches d = 0");
  scan->add_option("-n", o.n, "n = r + k")->required();
  scan->add_flag("--both", o.both, "Scan every stratum instead of r <= k");
  scan->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--resume", o.resume, "Append-only unit log; finished units are replayed");
  scan->add_option("-o,--output", o.output, "Report file");

  auto* member = app.add_subcommand("member", "Test a point against a facet system");
  member->add_option("point", o.point, "HORNLAB-PT file")->required();
  member->add_option("--mode", o.mode, "delta, cone or deltak")->capture_default_str();
  member->add_option("-n", o.n, "Expected n");
  member->add_flag("--stream", o.stream, "Evaluate every generated row instead of the pruned probe");
  member->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  member->add_option("--max-reports", o.max_reports, "List at most this many tight and violated rows each");
  member->add_option("-o,--output", o.output, "Verdict file");

  auto* lp = app.add_subcommand("lp", "Solve an LP given as a HORNLAB-CS file with an OBJ row");
  lp->add_option("problem", o.problem, "HORNLAB-CS file")->required();
  lp->add_flag("--identify-ab", o.identify_ab, "Substitute beta = alpha");
  lp->add_option("-o,--output", o.output, "Outcome file");

  auto* sep = app.add_subcommand("separate", "Minimize h_t over the alcove and a set of facets, then check the minimizer");
  sep->add_option("--objective", o.objective, "Objective index or file")->required();
  sep->add_option("--indices", o.indices, "Constraint indices file");
  sep->add_option("--anchor", o.anchors, "Anchor point files; constraints become the indices tight at all of them");
  sep->add_flag("--translate", o.translate, "Use every G-translate of each constraint");
  sep->add_flag("--no-identify", o.no_identify, "Keep beta as separate variables");
  sep->add_flag("--stream", o.stream, "Verify by streaming every DeltaK row");
  sep->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  sep->add_option("--max-reports", o.max_reports, "Rows listed in the verification (default 1000)");
  sep->add_option("-o,--output", o.output, "Transcript file");

  auto* tight = app.add_subcommand("tight", "List coefficient-one indices tight at every anchor");
  tight->add_option("--anchor", o.anchors, "Anchor point files")->required();
  tight->add_option("--exclude", o.exclude, "Index to leave out");
  tight->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  tight->add_option("-o,--output", o.output, "Output file");

  auto* gen = app.add_subcommand("gen", "Dump a facet system as HORNLAB-CS");
  gen->add_option("-n", o.n, "n = r + k")->required();
  gen->add_option("--mode", o.mode, "delta, cone or deltak")->capture_default_str();
  gen->add_option("--max-rows", o.max_rows, "Stop after this many rows and print a resume token");
  gen->add_option("--resume", o.resume, "Resume token from an earlier partial run");
  gen->add_flag("--dedup", o.dedup, "Drop repeated rows (materializes the system)");
  gen->add_option("-o,--output", o.output, "Output file (appended to when resuming)");

  std::vector<const char*> argv{"hornlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*qlr) return cmd_qlr(o, out);
    if (*orb) return cmd_orbit(o, out, err);
    if (*scan) return cmd_scan(o, out, err);
    if (*member) return cmd_member(o, out, err);
    if (*lp) return cmd_lp(o, out, err);
    if (*sep) return cmd_separate(o, out, err);
    if (*tight) return cmd_tight(o, out, err);
    if (*gen) return cmd_gen(o, out, err);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hornlab::cli
