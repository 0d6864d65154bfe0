#include <istream>
#include <sstream>
#include <string>

#include "hornlab/lp.hpp"

namespace hornlab {

namespace {

std::string_view header_value(const std::vector<std::string_view>& tokens, std::string_view key) {
  for (auto t : tokens) {
    if (t.size() > key.size() && t.substr(0, key.size()) == key && t[key.size()] == '=') return t.substr(key.size() + 1);
  }
  throw ParseError("HORNLAB-LP header lacks " + std::string(key));
}

std::vector<Rational> parse_vector(const std::vector<std::string_view>& tokens, std::size_t expected) {
  if (tokens.size() != expected + 1) throw ParseError("HORNLAB-LP vector has the wrong length");
  std::vector<Rational> out;
  for (std::size_t i = 1; i < tokens.size(); ++i) out.push_back(parse_rational(tokens[i]));
  return out;
}

}  // namespace

std::string write_outcome(const LPOutcome& outcome) {
  std::ostringstream out;
  const std::size_t vars = outcome.point.empty() ? outcome.ray.size() : outcome.point.size();
  out << "HORNLAB-LP v1 status=" << to_text(outcome.status) << " vars=" << vars
      << " rows=" << outcome.multipliers.size() << '\n';
  if (outcome.status == LPStatus::Optimal) out << "value " << to_text(outcome.value) << '\n';
  if (!outcome.point.empty() || (outcome.status != LPStatus::Infeasible && vars == 0)) {
    out << "point";
    for (const auto& x : outcome.point) out << ' ' << to_text(x);
    out << '\n';
  }
  if (outcome.status == LPStatus::Unbounded) {
    out << "ray";
    for (const auto& x : outcome.ray) out << ' ' << to_text(x);
    out << '\n';
  }
  for (std::size_t i = 0; i < outcome.multipliers.size(); ++i) {
    if (outcome.multipliers[i] != 0) out << "cert " << i + 1 << ' ' << to_text(outcome.multipliers[i]) << '\n';
  }
  return out.str();
}

LPOutcome read_outcome(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty HORNLAB-LP input");
  const auto head = split_ws(line);
  if (head.size() < 2 || head[0] != "HORNLAB-LP" || head[1] != "v1") throw ParseError("not a HORNLAB-LP v1 file");
  LPOutcome out;
  out.status = parse_status(header_value(head, "status"));
  const auto vars = static_cast<std::size_t>(parse_int(header_value(head, "vars")));
  const auto rows = static_cast<std::size_t>(parse_int(header_value(head, "rows")));
  out.multipliers.assign(rows, Rational(0));
  while (std::getline(in, line)) {
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens[0] == "value" && tokens.size() == 2) {
      out.value = parse_rational(tokens[1]);
    } else if (tokens[0] == "point") {
      out.point = parse_vector(tokens, vars);
    } else if (tokens[0] == "ray") {
      out.ray = parse_vector(tokens, vars);
    } else if (tokens[0] == "cert" && tokens.size() == 3) {
      const int i = parse_int(tokens[1]);
      if (i < 1 || static_cast<std::size_t>(i) > rows) throw ParseError("certificate row out of range");
      out.multipliers[static_cast<std::size_t>(i - 1)] = parse_rational(tokens[2]);
    } else {
      throw ParseError("unrecognized HORNLAB-LP line: " + line);
    }
  }
  return out;
}

}  // namespace hornlab
