#pragma once

#include <compare>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hornlab/rational.hpp"
#include "hornlab/schubert.hpp"
#include "hornlab/spectrum.hpp"
#include "hornlab/symmetry.hpp"

namespace hornlab {

/// value(x) = constant + sum coeff_v x_v over variables ordered
/// alpha_1..alpha_n, beta_1..beta_n, gamma_1..gamma_n (0-based here,
/// 1-based in text).
struct LinearForm {
  Rational constant;
  /// Sorted by variable, no zero coefficients.
  std::vector<std::pair<int, Rational>> terms;

  void add(int var, const Rational& coeff);
  Rational coeff(int var) const;
  Rational evaluate(std::span<const Rational> x) const;
  /// Largest variable index + 1 (0 for a constant form).
  int span_size() const noexcept { return terms.empty() ? 0 : terms.back().first + 1; }
  LinearForm& operator*=(const Rational& factor);

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

enum class RowKind { Eq, Ge };

/// Where a constraint row came from.
struct Provenance {
  enum class Kind { Sum, Chamber, Wrap, Facet, External };
  Kind kind = Kind::External;
  /// 0/1/2 for alpha/beta/gamma rows, -1 otherwise.
  int component = -1;
  /// Chamber row position (1-based) or external row number.
  int position = -1;
  std::optional<QIndex> index;
  /// Set for rows of a G-translated cone: the row is h_t composed with g^{-1}.
  std::optional<GroupElement> element;

  std::string to_text() const;
  friend bool operator==(const Provenance&, const Provenance&) = default;
  friend std::strong_ordering operator<=>(const Provenance&, const Provenance&);
};

struct Row {
  RowKind kind = RowKind::Ge;
  LinearForm form;
  Provenance origin;
};

struct ConstraintSystem {
  int num_vars = 0;
  std::vector<Row> rows;
};

/// h_t(alpha, beta, gamma) = d + sum gamma_{k+i-c_i} - sum alpha_{k+i-a_i} - sum beta_{k+i-b_i}.
LinearForm halfspace_form(const QIndex& t);

/// Per component: sum = 0 and lambda_i - lambda_{i+1} >= 0.
ConstraintSystem chamber_constraints(int n);
/// Chamber rows plus 1 - lambda_1 + lambda_n >= 0 per component.
ConstraintSystem alcove_constraints(int n);

/// The affine map x -> g . x on Q^{3n}, stored as sparse rows plus offset.
class AffineAction {
 public:
  AffineAction(const GroupElement& g, int n);
  /// form o g, i.e. x -> form(g . x).
  LinearForm pull_back(const LinearForm& form) const;

 private:
  std::vector<Rational> offset_;
  std::vector<std::vector<std::pair<int, Rational>>> rows_;
};

enum class SystemMode { Delta, Cone, DeltaK };
std::string to_text(SystemMode mode);
SystemMode parse_mode(std::string_view text);

class RowStream {
 public:
  virtual ~RowStream() = default;
  virtual bool next(Row& row) = 0;
  /// Opaque resume token for the next row.
  virtual std::string cursor() const = 0;
};

class VectorRowStream final : public RowStream {
 public:
  explicit VectorRowStream(std::span<const Row> rows, std::size_t start = 0) : rows_(rows), pos_(start) {}
  bool next(Row& row) override;
  std::string cursor() const override { return std::to_string(pos_); }

 private:
  std::span<const Row> rows_;
  std::size_t pos_;
};

/// Deterministic stream of the facet system:
///   Delta  : alcove rows, then h_t >= 0 for t in I (N_t = 1)
///   Cone   : chamber rows, then h_t >= 0 for t in I_0
///   DeltaK : alcove rows, then h_t o g^{-1} >= 0 for t in I_0, g in G
/// Rows are generated lazily; `resume` is a token previously returned by cursor().
std::unique_ptr<RowStream> generate_system(int n, SystemMode mode, std::string_view resume = {});

/// Thrown by consumers that stop a stream early; carries the resume token.
class PartialOutputError : public std::runtime_error {
 public:
  PartialOutputError(const std::string& what, std::string token)
      : std::runtime_error(what), token_(std::move(token)) {}
  const std::string& resume_token() const noexcept { return token_; }

 private:
  std::string token_;
};

enum class VerdictKind { Inside, Boundary, Violated };
std::string to_text(VerdictKind kind);

struct RowReport {
  Provenance origin;
  RowKind kind = RowKind::Ge;
  Rational value;
  friend bool operator==(const RowReport&, const RowReport&) = default;
};

/// No cap on stored row reports.
inline constexpr std::size_t kAllReports = static_cast<std::size_t>(-1);

struct Verdict {
  VerdictKind kind = VerdictKind::Inside;
  /// Inequalities with value exactly 0, sorted by provenance. With a report
  /// limit only the first `limit` in that order are kept.
  std::vector<RowReport> tight;
  /// Inequalities with negative value and equalities with nonzero value.
  std::vector<RowReport> violated;
  /// Counts before truncation.
  std::size_t tight_total = 0;
  std::size_t violated_total = 0;
  std::size_t rows_checked = 0;

  bool truncated() const noexcept { return tight.size() < tight_total || violated.size() < violated_total; }
};

/// Exact membership of p against every row of the stream.
Verdict membership(const SpectrumTriple& p, RowStream& rows, std::size_t report_limit = kAllReports);
Verdict membership(const SpectrumTriple& p, const ConstraintSystem& system, std::size_t report_limit = kAllReports);
/// Order-independent merge of verdicts over disjoint row shards.
Verdict merge_verdicts(std::span<const Verdict> parts, std::size_t report_limit = kAllReports);
/// Adds a report, trimming to the `limit` smallest by provenance now and then.
void record_report(std::vector<RowReport>& list, RowReport report, std::size_t limit);

/// Alcove spectrum of a +-1 diagonal matrix: m entries 1/2, zeros, m entries
/// -1/2 where 2m is the number of -1 entries (which must be even).
std::vector<Rational> sign_pattern_spectrum(std::span<const int> signs);
/// (lambda(A), lambda(B), lambda(AB)) for diagonal sign matrices A, B.
SpectrumTriple anchor_points(std::span<const int> signs_a, std::span<const int> signs_b);

/// The n^2 points (Omega^i(0), Omega^j(0), Omega^{i+j}(0)).
std::vector<SpectrumTriple> lower_bound_vertices(int n);

/// Text dump `HORNLAB-CS v1 n=<n> mode=<mode>` with rows
/// `GE|EQ <constant> <idx>:<coeff> ...`. An optional `OBJ` row (minimize)
/// and a `vars=<m>` header token are accepted for LP problems.
struct SystemFile {
  int n = 0;
  std::string mode;
  int num_vars = 0;
  ConstraintSystem system;
  std::optional<LinearForm> objective;
};

std::string format_row(const Row& row);
std::string format_header(int n, std::string_view mode, int num_vars);
std::string format_objective(const LinearForm& objective);
/// Writes header plus every row of the stream; returns the row count.
std::size_t write_system(std::ostream& out, int n, std::string_view mode, RowStream& rows,
                         std::size_t max_rows = static_cast<std::size_t>(-1), bool with_header = true);
SystemFile read_system(std::istream& in);
SystemFile read_system_file(const std::string& path);
std::string write_system_file(const SystemFile& file);

/// Drops rows whose (kind, form) repeats an earlier row.
ConstraintSystem dedup_rows(const ConstraintSystem& system);

}  // namespace hornlab
