#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hornlab/lp.hpp"
#include "hornlab/polytope.hpp"
#include "hornlab/schubert.hpp"

namespace hornlab {

/// Strata to scan: r <= k by default (the rest follows by conjugation), or
/// every r + k = n when `both` is set.
std::vector<Stratum> scan_strata(int n, bool both = false);

/// Every t with N_t = 1 in the given strata, in deterministic order.
UnitIndexStream scan_coefficient_one(int n, std::vector<Stratum> strata);

struct OrbitLine {
  QIndex rep;
  std::size_t size = 0;
  bool reaches_d0 = false;
  friend bool operator==(const OrbitLine&, const OrbitLine&) = default;
};

struct StratumSummary {
  Stratum stratum;
  std::size_t units = 0;      // indices with N_t = 1 in this stratum
  std::size_t orbits = 0;     // GTilde-orbits whose representative lies here
  std::size_t reducible = 0;  // of those, orbits that reach d = 0
  friend bool operator==(const StratumSummary&, const StratumSummary&) = default;
};

struct ScanReport {
  int n = 0;
  std::vector<Stratum> strata;
  std::vector<StratumSummary> summaries;
  std::vector<OrbitLine> orbits;  // sorted by representative
  double seconds = 0;             // not written to the report text
  std::size_t resumed_units = 0;

  std::vector<QIndex> exceptional() const;
  friend bool operator==(const ScanReport& a, const ScanReport& b) {
    return a.n == b.n && a.strata == b.strata && a.summaries == b.summaries && a.orbits == b.orbits;
  }
};

struct ScanOptions {
  int workers = 1;
  /// Append-only log of finished (stratum, a) units; an existing log is
  /// replayed and its units skipped.
  std::string log_path;
};

/// Groups the coefficient-one indices of the strata into GTilde-orbits (each
/// orbit is handled once, at its canonical representative) and records
/// whether each orbit contains an index with d = 0.
ScanReport reduction_check(int n, std::span<const Stratum> strata, const ScanOptions& options = {});

std::string write_scan_report(const ScanReport& report);
ScanReport read_scan_report(std::istream& in);

/// Every t with N_t = 1 tight at all anchors, minus `exclude`.
std::vector<QIndex> tight_filter(int n, std::span<const SpectrumTriple> anchors, const std::optional<QIndex>& exclude,
                                 int workers = 1);

struct SeparationConfig {
  int n = 0;
  QIndex objective;
  std::vector<QIndex> indices;
  /// Use h_t o g^-1 for every g in G instead of h_t alone.
  bool translate = false;
  bool identify_ab = true;
  /// Re-check the minimizer against DeltaK by streaming every row; otherwise
  /// the pruned probe is used.
  bool stream_verify = false;
  int workers = 1;
  /// Reports kept per kind in the verification; totals are always exact.
  std::size_t report_limit = 1000;
};

struct SeparationResult {
  LPProblem problem;
  LPOutcome outcome;
  std::vector<Rational> point;  // full (alpha, beta, gamma)
  Verdict verification;
  std::string transcript;
};

/// Minimizes h_objective over the alcove and the given rows, then checks the
/// minimizer against DeltaK. Throws std::runtime_error if the LP is
/// infeasible or unbounded.
SeparationResult separation_experiment(const SeparationConfig& config);

/// Reads QIndex lines, skipping blanks and '#' comments.
std::vector<QIndex> read_index_file(const std::string& path);
std::vector<QIndex> read_indices(std::istream& in);

}  // namespace hornlab
