#include "hornlab/spectrum.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace hornlab {

std::vector<Rational>& SpectrumTriple::component(int which) {
  switch (which) {
    case 0: return alpha;
    case 1: return beta;
    case 2: return gamma;
  }
  throw std::out_of_range("spectrum component");
}

const std::vector<Rational>& SpectrumTriple::component(int which) const {
  return const_cast<SpectrumTriple*>(this)->component(which);
}

std::vector<Rational> SpectrumTriple::flat() const {
  std::vector<Rational> out;
  out.reserve(alpha.size() * 3);
  out.insert(out.end(), alpha.begin(), alpha.end());
  out.insert(out.end(), beta.begin(), beta.end());
  out.insert(out.end(), gamma.begin(), gamma.end());
  return out;
}

SpectrumTriple SpectrumTriple::from_flat(std::span<const Rational> values) {
  if (values.size() % 3 != 0) throw std::invalid_argument("flat point length not divisible by 3");
  const auto n = values.size() / 3;
  SpectrumTriple p;
  p.alpha.assign(values.begin(), values.begin() + static_cast<long>(n));
  p.beta.assign(values.begin() + static_cast<long>(n), values.begin() + static_cast<long>(2 * n));
  p.gamma.assign(values.begin() + static_cast<long>(2 * n), values.end());
  return p;
}

namespace {

bool chamber_ok(const std::vector<Rational>& v) {
  Rational sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += v[i];
    if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
  }
  return sum == 0;
}

}  // namespace

bool SpectrumTriple::in_chamber() const {
  if (beta.size() != alpha.size() || gamma.size() != alpha.size()) return false;
  return chamber_ok(alpha) && chamber_ok(beta) && chamber_ok(gamma);
}

bool SpectrumTriple::in_alcove() const {
  if (!in_chamber()) return false;
  for (int w = 0; w < 3; ++w) {
    const auto& v = component(w);
    if (!v.empty() && v.front() - v.back() > 1) return false;
  }
  return true;
}

bool SpectrumTriple::normalize() {
  bool moved = false;
  for (int w = 0; w < 3; ++w) {
    auto& v = component(w);
    if (!std::is_sorted(v.begin(), v.end(), std::greater<>())) {
      std::sort(v.begin(), v.end(), std::greater<>());
      moved = true;
    }
  }
  return moved;
}

SpectrumTriple origin_triple(int n) {
  const auto len = static_cast<std::size_t>(n);
  return SpectrumTriple{std::vector<Rational>(len), std::vector<Rational>(len), std::vector<Rational>(len)};
}

std::vector<Rational> reflect(std::span<const Rational> x) {
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[x.size() - 1 - i];
  return out;
}

std::string write_point(const SpectrumTriple& p) {
  std::string out = "HORNLAB-PT v1 n=" + std::to_string(p.n()) + "\n";
  for (int w = 0; w < 3; ++w) out += join_rationals(p.component(w)) + "\n";
  return out;
}

SpectrumTriple read_point(std::istream& in, bool* reordered) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    lines.emplace_back(t);
  }
  if (lines.size() != 4) throw ParseError("point file needs a header and three data lines");
  auto head = split_ws(lines[0]);
  if (head.size() != 3 || head[0] != "HORNLAB-PT" || head[1] != "v1" || head[2].substr(0, 2) != "n=") {
    throw ParseError("bad point header '" + lines[0] + "'");
  }
  const int n = parse_int(head[2].substr(2));
  SpectrumTriple p;
  for (int w = 0; w < 3; ++w) {
    auto toks = split_ws(lines[static_cast<std::size_t>(w + 1)]);
    if (static_cast<int>(toks.size()) != n) throw ParseError("point line has wrong length");
    for (auto tok : toks) p.component(w).push_back(parse_rational(tok));
  }
  const bool moved = p.normalize();
  if (reordered) *reordered = moved;
  return p;
}

SpectrumTriple read_point_file(const std::string& path, bool* reordered) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open point file " + path);
  return read_point(in, reordered);
}

}  // namespace hornlab
