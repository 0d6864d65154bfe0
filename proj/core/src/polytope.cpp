#include "hornlab/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hornlab {

void LinearForm::add(int var, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(terms.begin(), terms.end(), var,
                             [](const std::pair<int, Rational>& t, int v) { return t.first < v; });
  if (it != terms.end() && it->first == var) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  } else {
    terms.insert(it, {var, coeff});
  }
}

Rational LinearForm::coeff(int var) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), var,
                             [](const std::pair<int, Rational>& t, int v) { return t.first < v; });
  return (it != terms.end() && it->first == var) ? it->second : Rational(0);
}

Rational LinearForm::evaluate(std::span<const Rational> x) const {
  if (span_size() > static_cast<int>(x.size())) {
    throw std::invalid_argument("linear form refers to variable " + std::to_string(span_size()) +
                                " but the point has dimension " + std::to_string(x.size()));
  }
  Rational value = constant;
  for (const auto& [var, c] : terms) value += c * x[static_cast<std::size_t>(var)];
  return value;
}

LinearForm& LinearForm::operator*=(const Rational& factor) {
  constant *= factor;
  if (factor == 0) {
    terms.clear();
  } else {
    for (auto& t : terms) t.second *= factor;
  }
  return *this;
}

namespace {

const char* component_name(int w) {
  switch (w) {
    case 0: return "alpha";
    case 1: return "beta";
    case 2: return "gamma";
  }
  return "?";
}

}  // namespace

std::string Provenance::to_text() const {
  switch (kind) {
    case Kind::Sum: return std::string("sum ") + component_name(component);
    case Kind::Chamber: return std::string("chamber ") + component_name(component) + " " + std::to_string(position);
    case Kind::Wrap: return std::string("wrap ") + component_name(component);
    case Kind::Facet: {
      std::string out = "facet " + hornlab::to_text(*index);
      if (element) out += " @ " + hornlab::to_text(*element);
      return out;
    }
    case Kind::External: return "row " + std::to_string(position);
  }
  return "?";
}

std::strong_ordering operator<=>(const Provenance& x, const Provenance& y) {
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.component <=> y.component; c != 0) return c;
  if (auto c = x.position <=> y.position; c != 0) return c;
  if (auto c = x.index.has_value() <=> y.index.has_value(); c != 0) return c;
  if (x.index) {
    if (auto c = *x.index <=> *y.index; c != 0) return c;
  }
  if (auto c = x.element.has_value() <=> y.element.has_value(); c != 0) return c;
  if (x.element) {
    if (auto c = *x.element <=> *y.element; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

LinearForm halfspace_form(const QIndex& t) {
  const int n = t.n();
  LinearForm h;
  h.constant = t.d;
  for (int i = 1; i <= t.r; ++i) {
    h.add(2 * n + t.k + i - t.c[i - 1] - 1, 1);
    h.add(t.k + i - t.a[i - 1] - 1, -1);
    h.add(n + t.k + i - t.b[i - 1] - 1, -1);
  }
  return h;
}

namespace {

ConstraintSystem weyl_rows(int n, bool wrap) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  ConstraintSystem sys;
  sys.num_vars = 3 * n;
  for (int w = 0; w < 3; ++w) {
    const int base = w * n;
    Row sum{RowKind::Eq, {}, {Provenance::Kind::Sum, w, -1, std::nullopt, std::nullopt}};
    for (int i = 0; i < n; ++i) sum.form.add(base + i, 1);
    sys.rows.push_back(std::move(sum));
    for (int i = 0; i + 1 < n; ++i) {
      Row row{RowKind::Ge, {}, {Provenance::Kind::Chamber, w, i + 1, std::nullopt, std::nullopt}};
      row.form.add(base + i, 1);
      row.form.add(base + i + 1, -1);
      sys.rows.push_back(std::move(row));
    }
    if (wrap) {
      Row row{RowKind::Ge, {}, {Provenance::Kind::Wrap, w, -1, std::nullopt, std::nullopt}};
      row.form.constant = 1;
      row.form.add(base, -1);
      row.form.add(base + n - 1, 1);
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

}  // namespace

ConstraintSystem chamber_constraints(int n) { return weyl_rows(n, false); }
ConstraintSystem alcove_constraints(int n) { return weyl_rows(n, true); }

AffineAction::AffineAction(const GroupElement& g, int n) {
  const auto dim = static_cast<std::size_t>(3 * n);
  offset_ = act_on_point(g, origin_triple(n)).flat();
  rows_.assign(dim, {});
  std::vector<Rational> unit(dim);
  for (std::size_t u = 0; u < dim; ++u) {
    unit[u] = 1;
    const auto image = act_on_point(g, SpectrumTriple::from_flat(unit)).flat();
    unit[u] = 0;
    for (std::size_t v = 0; v < dim; ++v) {
      Rational m = image[v] - offset_[v];
      if (m != 0) rows_[v].emplace_back(static_cast<int>(u), m);
    }
  }
}

LinearForm AffineAction::pull_back(const LinearForm& form) const {
  LinearForm out;
  out.constant = form.constant;
  for (const auto& [v, c] : form.terms) {
    const auto vv = static_cast<std::size_t>(v);
    out.constant += c * offset_[vv];
    for (const auto& [u, m] : rows_[vv]) out.add(u, c * m);
  }
  return out;
}

std::string to_text(SystemMode mode) {
  switch (mode) {
    case SystemMode::Delta: return "delta";
    case SystemMode::Cone: return "cone";
    case SystemMode::DeltaK: return "deltak";
  }
  return "?";
}

SystemMode parse_mode(std::string_view text) {
  if (text == "delta") return SystemMode::Delta;
  if (text == "cone") return SystemMode::Cone;
  if (text == "deltak") return SystemMode::DeltaK;
  throw ParseError("unknown mode '" + std::string(text) + "' (expected delta, cone or deltak)");
}

bool VectorRowStream::next(Row& row) {
  if (pos_ >= rows_.size()) return false;
  row = rows_[pos_++];
  return true;
}

std::string to_text(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Inside: return "inside";
    case VerdictKind::Boundary: return "boundary";
    case VerdictKind::Violated: return "violated";
  }
  return "?";
}

namespace {

bool report_less(const RowReport& x, const RowReport& y) {
  if (auto c = x.origin <=> y.origin; c != 0) return c < 0;
  return x.value < y.value;
}

void keep_smallest(std::vector<RowReport>& list, std::size_t limit) {
  if (list.size() <= limit) {
    std::sort(list.begin(), list.end(), report_less);
    return;
  }
  std::nth_element(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(limit), list.end(), report_less);
  list.resize(limit);
  std::sort(list.begin(), list.end(), report_less);
}

void finish(Verdict& v, std::size_t limit) {
  keep_smallest(v.tight, limit);
  keep_smallest(v.violated, limit);
  if (v.violated_total > 0) {
    v.kind = VerdictKind::Violated;
  } else if (v.tight_total > 0) {
    v.kind = VerdictKind::Boundary;
  } else {
    v.kind = VerdictKind::Inside;
  }
}

}  // namespace

void record_report(std::vector<RowReport>& list, RowReport report, std::size_t limit) {
  list.push_back(std::move(report));
  if (limit != kAllReports && list.size() >= 2 * limit + 64) keep_smallest(list, limit);
}

Verdict membership(const SpectrumTriple& p, RowStream& rows, std::size_t report_limit) {
  const auto x = p.flat();
  if (p.beta.size() != p.alpha.size() || p.gamma.size() != p.alpha.size()) {
    throw std::invalid_argument("spectrum components differ in length");
  }
  Verdict v;
  Row row;
  while (rows.next(row)) {
    ++v.rows_checked;
    Rational value = row.form.evaluate(x);
    const bool bad = row.kind == RowKind::Eq ? value != 0 : value < 0;
    if (bad) {
      ++v.violated_total;
      record_report(v.violated, {row.origin, row.kind, value}, report_limit);
    } else if (value == 0) {
      ++v.tight_total;
      record_report(v.tight, {row.origin, row.kind, value}, report_limit);
    }
  }
  finish(v, report_limit);
  return v;
}

Verdict membership(const SpectrumTriple& p, const ConstraintSystem& system, std::size_t report_limit) {
  VectorRowStream rows(system.rows);
  return membership(p, rows, report_limit);
}

Verdict merge_verdicts(std::span<const Verdict> parts, std::size_t report_limit) {
  Verdict v;
  for (const auto& part : parts) {
    v.tight.insert(v.tight.end(), part.tight.begin(), part.tight.end());
    v.violated.insert(v.violated.end(), part.violated.begin(), part.violated.end());
    v.tight_total += part.tight_total;
    v.violated_total += part.violated_total;
    v.rows_checked += part.rows_checked;
    if (report_limit != kAllReports) {
      keep_smallest(v.tight, report_limit);
      keep_smallest(v.violated, report_limit);
    }
  }
  finish(v, report_limit);
  return v;
}

std::vector<Rational> sign_pattern_spectrum(std::span<const int> signs) {
  int negatives = 0;
  for (int s : signs) {
    if (s == -1) {
      ++negatives;
    } else if (s != 1) {
      throw std::invalid_argument("sign pattern entries must be +1 or -1");
    }
  }
  if (negatives % 2 != 0) throw std::invalid_argument("sign pattern needs an even number of -1 entries");
  const std::size_t m = static_cast<std::size_t>(negatives / 2);
  std::vector<Rational> out(signs.size());
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = Rational(1, 2);
    out[signs.size() - 1 - i] = Rational(-1, 2);
  }
  return out;
}

SpectrumTriple anchor_points(std::span<const int> signs_a, std::span<const int> signs_b) {
  if (signs_a.size() != signs_b.size()) throw std::invalid_argument("sign patterns differ in length");
  std::vector<int> product(signs_a.size());
  for (std::size_t i = 0; i < product.size(); ++i) product[i] = signs_a[i] * signs_b[i];
  return SpectrumTriple{sign_pattern_spectrum(signs_a), sign_pattern_spectrum(signs_b),
                        sign_pattern_spectrum(product)};
}

std::vector<SpectrumTriple> lower_bound_vertices(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const std::vector<Rational> zero(static_cast<std::size_t>(n));
  std::vector<SpectrumTriple> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.push_back(SpectrumTriple{omega_power(zero, i), omega_power(zero, j), omega_power(zero, i + j)});
    }
  }
  return out;
}

ConstraintSystem dedup_rows(const ConstraintSystem& system) {
  ConstraintSystem out;
  out.num_vars = system.num_vars;
  std::set<std::string> seen;
  for (const auto& row : system.rows) {
    if (seen.insert(format_row(row)).second) out.rows.push_back(row);
  }
  return out;
}

}  // namespace hornlab
