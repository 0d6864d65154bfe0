#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "hornlab/polytope.hpp"

namespace hornlab {

namespace {

class FacetSystemStream final : public RowStream {
 public:
  FacetSystemStream(int n, SystemMode mode, std::string_view resume) : n_(n), mode_(mode) {
    base_ = mode == SystemMode::Cone ? chamber_constraints(n) : alcove_constraints(n);
    if (mode == SystemMode::DeltaK) {
      elements_ = group_elements(n, Group::G);
      for (const auto& g : elements_) inverse_actions_.emplace_back(inverse(g, n), n);
    } else {
      elements_ = {GroupElement{}};
    }
    const bool classical = mode != SystemMode::Delta;
    resume = trim(resume);
    if (resume.empty()) {
      units_ = std::make_unique<UnitIndexStream>(n, all_strata(n), classical);
      return;
    }
    auto fields = split(resume, ':');
    if (fields.size() == 2 && fields[0] == "base") {
      base_pos_ = static_cast<std::size_t>(parse_int(fields[1]));
      units_ = std::make_unique<UnitIndexStream>(n, all_strata(n), classical);
    } else if (fields.size() == 6 && fields[0] == "facet") {
      base_pos_ = base_.rows.size();
      const auto cursor = UnitIndexStream::Cursor::parse(
          std::string(fields[1]) + ":" + std::string(fields[2]) + ":" + std::string(fields[3]) + ":" +
          std::string(fields[4]));
      units_ = std::make_unique<UnitIndexStream>(n, all_strata(n), classical, cursor);
      before_ = cursor;
      current_ = units_->next();
      if (current_) current_form_ = halfspace_form(*current_);
      g_pos_ = static_cast<std::size_t>(parse_int(fields[5]));
    } else {
      throw ParseError("malformed resume token '" + std::string(resume) + "'");
    }
  }

  bool next(Row& row) override {
    if (base_pos_ < base_.rows.size()) {
      row = base_.rows[base_pos_++];
      return true;
    }
    for (;;) {
      if (!current_) {
        before_ = units_->cursor();
        current_ = units_->next();
        if (!current_) return false;
        current_form_ = halfspace_form(*current_);
        g_pos_ = 0;
      }
      if (g_pos_ < elements_.size()) {
        row.kind = RowKind::Ge;
        row.origin = Provenance{Provenance::Kind::Facet, -1, -1, *current_, std::nullopt};
        if (mode_ == SystemMode::DeltaK) {
          row.form = inverse_actions_[g_pos_].pull_back(current_form_);
          row.origin.element = elements_[g_pos_];
        } else {
          row.form = current_form_;
        }
        ++g_pos_;
        return true;
      }
      current_.reset();
    }
  }

  std::string cursor() const override {
    if (base_pos_ < base_.rows.size()) return "base:" + std::to_string(base_pos_);
    if (current_ && g_pos_ < elements_.size()) return "facet:" + before_.to_text() + ":" + std::to_string(g_pos_);
    return "facet:" + units_->cursor().to_text() + ":0";
  }

 private:
  int n_;
  SystemMode mode_;
  ConstraintSystem base_;
  std::size_t base_pos_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<AffineAction> inverse_actions_;
  std::unique_ptr<UnitIndexStream> units_;
  UnitIndexStream::Cursor before_;
  std::optional<QIndex> current_;
  LinearForm current_form_;
  std::size_t g_pos_ = 0;
};

}  // namespace

std::unique_ptr<RowStream> generate_system(int n, SystemMode mode, std::string_view resume) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return std::make_unique<FacetSystemStream>(n, mode, resume);
}

namespace {

std::string format_terms(const LinearForm& form) {
  std::string out = to_text(form.constant);
  for (const auto& [var, c] : form.terms) out += " " + std::to_string(var + 1) + ":" + to_text(c);
  return out;
}

LinearForm parse_terms(std::span<const std::string_view> toks, int num_vars) {
  if (toks.empty()) throw ParseError("row without constant");
  LinearForm form;
  form.constant = parse_rational(toks[0]);
  int last = 0;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    auto colon = toks[i].find(':');
    if (colon == std::string_view::npos) throw ParseError("term '" + std::string(toks[i]) + "' lacks ':'");
    const int idx = parse_int(toks[i].substr(0, colon));
    if (idx < 1 || idx > num_vars) throw ParseError("variable index " + std::to_string(idx) + " out of range");
    if (idx <= last) throw ParseError("variable indices must be strictly increasing");
    last = idx;
    form.add(idx - 1, parse_rational(toks[i].substr(colon + 1)));
  }
  return form;
}

}  // namespace

std::string format_row(const Row& row) {
  return std::string(row.kind == RowKind::Eq ? "EQ " : "GE ") + format_terms(row.form);
}

std::string format_objective(const LinearForm& objective) { return "OBJ " + format_terms(objective); }

std::string format_header(int n, std::string_view mode, int num_vars) {
  std::string out = "HORNLAB-CS v1 n=" + std::to_string(n) + " mode=" + std::string(mode);
  if (num_vars != 3 * n) out += " vars=" + std::to_string(num_vars);
  return out;
}

std::size_t write_system(std::ostream& out, int n, std::string_view mode, RowStream& rows, std::size_t max_rows,
                         bool with_header) {
  if (with_header) out << format_header(n, mode, 3 * n) << '\n';
  std::size_t count = 0;
  Row row;
  while (count < max_rows && rows.next(row)) {
    out << format_row(row) << '\n';
    ++count;
  }
  if (count == max_rows) {
    const std::string token = rows.cursor();
    if (rows.next(row)) throw PartialOutputError("row limit reached after " + std::to_string(count) + " rows", token);
  }
  return count;
}

SystemFile read_system(std::istream& in) {
  SystemFile file;
  std::string line;
  bool have_header = false;
  int row_number = 0;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto toks = split_ws(t);
    if (!have_header) {
      if (toks.size() < 4 || toks[0] != "HORNLAB-CS" || toks[1] != "v1") {
        throw ParseError("bad constraint-system header '" + std::string(t) + "'");
      }
      for (std::size_t i = 2; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string_view::npos) throw ParseError("bad header token '" + std::string(toks[i]) + "'");
        auto key = toks[i].substr(0, eq);
        auto value = toks[i].substr(eq + 1);
        if (key == "n") {
          file.n = parse_int(value);
        } else if (key == "mode") {
          file.mode = std::string(value);
        } else if (key == "vars") {
          file.num_vars = parse_int(value);
        } else {
          throw ParseError("unknown header key '" + std::string(key) + "'");
        }
      }
      if (file.num_vars == 0) file.num_vars = 3 * file.n;
      if (file.num_vars <= 0) throw ParseError("constraint system without variables");
      file.system.num_vars = file.num_vars;
      have_header = true;
      continue;
    }
    std::span<const std::string_view> rest(toks.data() + 1, toks.size() - 1);
    if (toks[0] == "OBJ") {
      if (file.objective) throw ParseError("more than one OBJ row");
      file.objective = parse_terms(rest, file.num_vars);
    } else if (toks[0] == "GE" || toks[0] == "EQ") {
      Row row;
      row.kind = toks[0] == "EQ" ? RowKind::Eq : RowKind::Ge;
      row.form = parse_terms(rest, file.num_vars);
      row.origin = Provenance{Provenance::Kind::External, -1, ++row_number, std::nullopt, std::nullopt};
      file.system.rows.push_back(std::move(row));
    } else {
      throw ParseError("unknown row tag '" + std::string(toks[0]) + "'");
    }
  }
  if (!have_header) throw ParseError("empty constraint-system file");
  return file;
}

SystemFile read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open constraint file " + path);
  return read_system(in);
}

std::string write_system_file(const SystemFile& file) {
  std::string out = format_header(file.n, file.mode, file.num_vars) + "\n";
  if (file.objective) out += format_objective(*file.objective) + "\n";
  for (const auto& row : file.system.rows) out += format_row(row) + "\n";
  return out;
}

}  // namespace hornlab
