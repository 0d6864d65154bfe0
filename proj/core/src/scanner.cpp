#include "hornlab/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hornlab/facet_probe.hpp"
#include "hornlab/symmetry.hpp"

namespace hornlab {

std::vector<Stratum> scan_strata(int n, bool both) { return both ? all_strata(n) : reduced_strata(n); }

UnitIndexStream scan_coefficient_one(int n, std::vector<Stratum> strata) {
  return UnitIndexStream(n, std::move(strata), false);
}

std::vector<QIndex> ScanReport::exceptional() const {
  std::vector<QIndex> out;
  for (const auto& line : orbits) {
    if (!line.reaches_d0) out.push_back(line.rep);
  }
  return out;
}

namespace {

struct UnitResult {
  std::size_t units = 0;
  std::vector<OrbitLine> lines;
  bool done = false;
};

std::string format_orbit_line(const OrbitLine& line) {
  return "rep=" + to_text(line.rep) + " size=" + std::to_string(line.size) +
         " reaches_d0=" + (line.reaches_d0 ? "true" : "false");
}

OrbitLine parse_orbit_line(std::string_view text) {
  const auto size_pos = text.rfind(" size=");
  const auto reach_pos = text.rfind(" reaches_d0=");
  if (text.substr(0, 4) != "rep=" || size_pos == std::string_view::npos || reach_pos == std::string_view::npos ||
      reach_pos < size_pos) {
    throw ParseError("malformed orbit line: " + std::string(text));
  }
  OrbitLine line;
  line.rep = parse_qindex(text.substr(4, size_pos - 4));
  line.size = static_cast<std::size_t>(parse_int(text.substr(size_pos + 6, reach_pos - size_pos - 6)));
  const auto flag = trim(text.substr(reach_pos + 12));
  if (flag != "true" && flag != "false") throw ParseError("malformed reaches_d0 flag");
  line.reaches_d0 = flag == "true";
  return line;
}

std::string strata_text(std::span<const Stratum> strata) {
  std::string out;
  for (const auto& s : strata) {
    if (!out.empty()) out += ',';
    out += std::to_string(s.r) + "x" + std::to_string(s.k);
  }
  return out;
}

std::vector<Stratum> parse_strata(std::string_view text) {
  std::vector<Stratum> out;
  for (auto item : split(text, ',')) {
    const auto x = item.find('x');
    if (x == std::string_view::npos) throw ParseError("malformed stratum " + std::string(item));
    out.push_back({parse_int(item.substr(0, x)), parse_int(item.substr(x + 1))});
  }
  return out;
}

UnitResult process_unit(const Stratum& s, const std::vector<Partition>& parts, std::size_t ai) {
  UnitResult res;
  for (const auto& b : parts) {
    const auto product = quantum_product(parts[ai], b);
    for (const auto& term : *product) {
      if (term.coeff != 1) continue;
      ++res.units;
      QIndex t{s.r, s.k, parts[ai], b, term.c, term.d};
      if (!is_canonical_rep(t, Group::GTilde)) continue;
      res.lines.push_back({t, orbit(t, Group::GTilde).members.size(), t.d == 0});
    }
  }
  res.done = true;
  return res;
}

// Log blocks: "unit <r> <k> <a> units=<count>", orbit lines, "end".
void replay_log(const std::string& path, std::map<std::tuple<int, int, std::size_t>, UnitResult>& done) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  std::optional<std::tuple<int, int, std::size_t>> key;
  UnitResult pending;
  while (std::getline(in, line)) {
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "unit" && tokens.size() == 5 && tokens[4].substr(0, 6) == "units=") {
      key = std::tuple{parse_int(tokens[1]), parse_int(tokens[2]), static_cast<std::size_t>(parse_int(tokens[3]))};
      pending = UnitResult{static_cast<std::size_t>(parse_int(tokens[4].substr(6))), {}, false};
    } else if (tokens[0] == "end" && key) {
      pending.done = true;
      done[*key] = std::move(pending);
      key.reset();
    } else if (key) {
      pending.lines.push_back(parse_orbit_line(trim(line)));
    }
  }
}

}  // namespace

ScanReport reduction_check(int n, std::span<const Stratum> strata, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& s : strata) {
    if (s.r < 1 || s.k < 1 || s.r + s.k != n) throw std::invalid_argument("stratum does not match n");
  }
  std::map<std::tuple<int, int, std::size_t>, UnitResult> replayed;
  if (!options.log_path.empty()) replay_log(options.log_path, replayed);

  struct Unit {
    std::size_t stratum;
    std::size_t a;
  };
  std::vector<std::vector<Partition>> parts;
  std::vector<Unit> units;
  for (std::size_t si = 0; si < strata.size(); ++si) {
    parts.push_back(enumerate_partitions(strata[si].r, strata[si].k));
    for (std::size_t ai = 0; ai < parts.back().size(); ++ai) units.push_back({si, ai});
  }
  std::vector<UnitResult> results(units.size());
  std::size_t resumed = 0;
  for (std::size_t u = 0; u < units.size(); ++u) {
    const auto& s = strata[units[u].stratum];
    auto it = replayed.find({s.r, s.k, units[u].a});
    if (it != replayed.end()) {
      results[u] = std::move(it->second);
      ++resumed;
    }
  }

  std::ofstream log;
  if (!options.log_path.empty()) log.open(options.log_path, std::ios::app);
  std::mutex log_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t u = next++; u < units.size(); u = next++) {
      if (results[u].done) continue;
      const auto& s = strata[units[u].stratum];
      results[u] = process_unit(s, parts[units[u].stratum], units[u].a);
      if (log.is_open()) {
        std::ostringstream block;
        block << "unit " << s.r << ' ' << s.k << ' ' << units[u].a << " units=" << results[u].units << '\n';
        for (const auto& line : results[u].lines) block << format_orbit_line(line) << '\n';
        block << "end\n";
        std::lock_guard lock(log_mutex);
        log << block.str() << std::flush;
      }
    }
  };
  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ScanReport report;
  report.n = n;
  report.strata.assign(strata.begin(), strata.end());
  for (const auto& s : strata) report.summaries.push_back({s, 0, 0, 0});
  for (std::size_t u = 0; u < units.size(); ++u) {
    auto& summary = report.summaries[units[u].stratum];
    summary.units += results[u].units;
    for (auto& line : results[u].lines) report.orbits.push_back(std::move(line));
  }
  std::sort(report.orbits.begin(), report.orbits.end(),
            [](const OrbitLine& x, const OrbitLine& y) { return x.rep < y.rep; });
  for (const auto& line : report.orbits) {
    for (auto& summary : report.summaries) {
      if (summary.stratum.r == line.rep.r && summary.stratum.k == line.rep.k) {
        ++summary.orbits;
        if (line.reaches_d0) ++summary.reducible;
      }
    }
  }
  report.resumed_units = resumed;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string write_scan_report(const ScanReport& report) {
  std::ostringstream out;
  out << "HORNLAB-SCAN v1 n=" << report.n << " strata=" << strata_text(report.strata) << '\n';
  for (const auto& s : report.summaries) {
    out << "stratum " << s.stratum.r << 'x' << s.stratum.k << " units=" << s.units << " orbits=" << s.orbits
        << " reducible=" << s.reducible << " exceptional=" << s.orbits - s.reducible << '\n';
  }
  for (const auto& line : report.orbits) out << format_orbit_line(line) << '\n';
  return out.str();
}

ScanReport read_scan_report(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty HORNLAB-SCAN input");
  const auto head = split_ws(line);
  if (head.size() != 4 || head[0] != "HORNLAB-SCAN" || head[1] != "v1" || head[2].substr(0, 2) != "n=" ||
      head[3].substr(0, 7) != "strata=") {
    throw ParseError("not a HORNLAB-SCAN v1 file");
  }
  ScanReport report;
  report.n = parse_int(head[2].substr(2));
  report.strata = parse_strata(head[3].substr(7));
  while (std::getline(in, line)) {
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens[0] == "stratum" && tokens.size() == 6) {
      StratumSummary s;
      s.stratum = parse_strata(tokens[1]).at(0);
      auto field = [&](std::size_t i, std::string_view key) {
        if (tokens[i].substr(0, key.size()) != key) throw ParseError("malformed stratum line");
        return static_cast<std::size_t>(parse_int(tokens[i].substr(key.size())));
      };
      s.units = field(2, "units=");
      s.orbits = field(3, "orbits=");
      s.reducible = field(4, "reducible=");
      if (field(5, "exceptional=") != s.orbits - s.reducible) throw ParseError("inconsistent stratum line");
      report.summaries.push_back(s);
    } else {
      report.orbits.push_back(parse_orbit_line(trim(line)));
    }
  }
  return report;
}

std::vector<QIndex> tight_filter(int n, std::span<const SpectrumTriple> anchors, const std::optional<QIndex>& exclude,
                                 int workers) {
  auto out = tight_indices(n, anchors, workers);
  if (exclude) std::erase(out, *exclude);
  return out;
}

SeparationResult separation_experiment(const SeparationConfig& config) {
  const int n = config.n;
  if (config.objective.n() != n) throw std::invalid_argument("objective index does not match n");
  SeparationResult res;
  LPProblem full;
  full.num_vars = 3 * n;
  full.objective = halfspace_form(config.objective);
  full.constraints = alcove_constraints(n);
  std::vector<GroupElement> elements;
  if (config.translate) {
    elements = group_elements(n, Group::G);
  } else {
    elements.push_back(GroupElement{});
  }
  std::vector<AffineAction> pulls;
  for (const auto& g : elements) pulls.emplace_back(inverse(g, n), n);
  for (const auto& t : config.indices) {
    if (t.n() != n) throw std::invalid_argument("constraint index does not match n");
    const auto h = halfspace_form(t);
    for (std::size_t gi = 0; gi < elements.size(); ++gi) {
      Provenance origin{Provenance::Kind::Facet, -1, -1, t, std::nullopt};
      if (config.translate) origin.element = elements[gi];
      full.constraints.rows.push_back({RowKind::Ge, config.translate ? pulls[gi].pull_back(h) : h, origin});
    }
  }
  res.problem = config.identify_ab ? identify_alpha_beta(full, n) : full;
  res.outcome = solve(res.problem);
  if (res.outcome.status != LPStatus::Optimal) {
    throw std::runtime_error("separation LP is " + to_text(res.outcome.status));
  }
  res.point = config.identify_ab ? expand_identified(res.outcome.point, n) : res.outcome.point;
  const SpectrumTriple p = SpectrumTriple::from_flat(res.point);
  if (config.stream_verify) {
    auto rows = generate_system(n, SystemMode::DeltaK);
    res.verification = membership(p, *rows, config.report_limit);
  } else {
    res.verification = implicit_membership(p, SystemMode::DeltaK, config.workers, config.report_limit);
  }

  std::ostringstream out;
  out << "HORNLAB-SEP v1 n=" << n << '\n';
  out << "objective " << to_text(config.objective) << '\n';
  out << "rows " << res.problem.constraints.rows.size() << " vars " << res.problem.num_vars << '\n';
  out << "certificate " << (check_certificate(res.problem, res.outcome) ? "ok" : "failed") << '\n';
  out << "value " << to_text(res.outcome.value) << '\n';
  out << "alpha " << join_rationals(p.alpha) << '\n';
  out << "beta " << join_rationals(p.beta) << '\n';
  out << "gamma " << join_rationals(p.gamma) << '\n';
  out << "verdict " << to_text(res.verification.kind) << '\n';
  out << "totals tight=" << res.verification.tight_total << " violated=" << res.verification.violated_total << '\n';
  for (const auto& v : res.verification.violated) out << "violated " << v.origin.to_text() << ' ' << to_text(v.value) << '\n';
  for (const auto& v : res.verification.tight) out << "tight " << v.origin.to_text() << '\n';
  res.transcript = out.str();
  return res;
}

std::vector<QIndex> read_indices(std::istream& in) {
  std::vector<QIndex> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    out.push_back(parse_qindex(text));
  }
  return out;
}

std::vector<QIndex> read_index_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_indices(in);
}

}  // namespace hornlab
