#include "hornlab/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace hornlab {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

// One quantum Pieri step: multiplication by sigma_k.
PieriShift pieri_step(const Partition& a) {
  const int r = a.rows();
  const int k = a.cols();
  std::vector<int> out(static_cast<std::size_t>(r));
  if (a[r - 1] == 0) {
    out[0] = k;
    for (int i = 1; i < r; ++i) out[static_cast<std::size_t>(i)] = a[i - 1];
    return {Partition(r, k, out), 0};
  }
  for (int i = 0; i < r; ++i) out[static_cast<std::size_t>(i)] = a[i] - 1;
  return {Partition(r, k, out), 1};
}

// chain[m] = pieri_shift(a, m) for m = 0..len-1.
std::vector<PieriShift> pieri_chain(const Partition& a, int len) {
  std::vector<PieriShift> chain;
  chain.reserve(static_cast<std::size_t>(len));
  chain.push_back({a, 0});
  for (int m = 1; m < len; ++m) {
    auto step = pieri_step(chain.back().a);
    chain.push_back({step.a, chain.back().degree + step.degree});
  }
  return chain;
}

QIndex apply_g0(const GroupElement& g, QIndex t) {
  for (int p = 0; p < g.dual; ++p) t = poincare_dual(t);
  if (g.swap) t = swap_ab(t);
  if (g.star) t = star(t);
  return t;
}

std::vector<GroupElement> g0_elements() {
  std::vector<GroupElement> out;
  for (int s = 0; s < 2; ++s) {
    for (int w = 0; w < 2; ++w) {
      for (int p = 0; p < 3; ++p) out.push_back(GroupElement{0, 0, s == 1, w == 1, p});
    }
  }
  return out;
}

// Visits every image of t under G~ (or G) as (image); stops when visit returns false.
template <class Visit>
bool for_each_image(const QIndex& t, Group group, Visit&& visit) {
  const int n = t.n();
  const std::vector<GroupElement> g0 = group == Group::G ? std::vector<GroupElement>{GroupElement{}} : g0_elements();
  for (const auto& h : g0) {
    const QIndex base = apply_g0(h, t);
    const auto ca = pieri_chain(base.a, n);
    const auto cb = pieri_chain(base.b, n);
    const auto cc = pieri_chain(base.c, 2 * n - 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto& sa = ca[static_cast<std::size_t>(i)];
        const auto& sb = cb[static_cast<std::size_t>(j)];
        const auto& sc = cc[static_cast<std::size_t>(i + j)];
        QIndex img{base.r, base.k, sa.a, sb.a, sc.a, base.d + sc.degree - sa.degree - sb.degree};
        if (!visit(img)) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::string to_text(const GroupElement& g) {
  std::string out = std::to_string(g.i) + "," + std::to_string(g.j);
  if (g.star) out += 's';
  if (g.swap) out += 'w';
  out.append(static_cast<std::size_t>(g.dual), 'p');
  return out;
}

GroupElement parse_group_element(std::string_view text, int n) {
  text = trim(text);
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("group element needs 'i,j'");
  std::size_t end = comma + 1;
  if (end < text.size() && text[end] == '-') ++end;
  while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
  GroupElement g;
  g.i = mod(parse_int(text.substr(0, comma)), n);
  g.j = mod(parse_int(text.substr(comma + 1, end - comma - 1)), n);
  int s = 0, w = 0, p = 0;
  for (char ch : text.substr(end)) {
    switch (ch) {
      case 's': ++s; break;
      case 'w': ++w; break;
      case 'p': ++p; break;
      default: throw ParseError("unknown group letter '" + std::string(1, ch) + "'");
    }
  }
  g.star = s % 2 == 1;
  g.swap = w % 2 == 1;
  g.dual = p % 3;
  return g;
}

GroupElement compose(const GroupElement& g, const GroupElement& h, int n) {
  if (!g.in_G() || !h.in_G()) throw std::invalid_argument("compose: only pure G elements are supported");
  return GroupElement{mod(g.i + h.i, n), mod(g.j + h.j, n)};
}

GroupElement inverse(const GroupElement& g, int n) {
  if (!g.in_G()) throw std::invalid_argument("inverse: only pure G elements are supported");
  return GroupElement{mod(-g.i, n), mod(-g.j, n)};
}

std::vector<GroupElement> group_elements(int n, Group group) {
  std::vector<GroupElement> out;
  const std::vector<GroupElement> g0 = group == Group::G ? std::vector<GroupElement>{GroupElement{}} : g0_elements();
  for (const auto& h : g0) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        GroupElement g = h;
        g.i = i;
        g.j = j;
        out.push_back(g);
      }
    }
  }
  return out;
}

std::vector<Rational> omega_power(std::span<const Rational> x, int power) {
  const int n = static_cast<int>(x.size());
  if (n < 1) return {};
  const int m = mod(power, n);
  const Rational shift = make_rational(m, n);
  std::vector<Rational> out(x.size());
  for (int p = 0; p < n; ++p) {
    const int src = p + m;
    if (src < n) {
      out[static_cast<std::size_t>(p)] = x[static_cast<std::size_t>(src)] + shift;
    } else {
      out[static_cast<std::size_t>(p)] = x[static_cast<std::size_t>(src - n)] - 1 + shift;
    }
  }
  return out;
}

std::vector<Rational> omega(std::span<const Rational> x) { return omega_power(x, 1); }

SpectrumTriple act_on_point(const GroupElement& g, const SpectrumTriple& p) {
  SpectrumTriple x = p;
  for (int k = 0; k < g.dual; ++k) {
    // AB = C  <=>  B C^{-1} = A^{-1}
    SpectrumTriple y{x.beta, reflect(x.gamma), reflect(x.alpha)};
    x = std::move(y);
  }
  if (g.swap) std::swap(x.alpha, x.beta);
  if (g.star) x = SpectrumTriple{reflect(x.alpha), reflect(x.beta), reflect(x.gamma)};
  return SpectrumTriple{omega_power(x.alpha, g.i), omega_power(x.beta, g.j), omega_power(x.gamma, g.i + g.j)};
}

SpectrumTriple transport_point(const GroupElement& g, const SpectrumTriple& p) {
  const int n = p.n();
  GroupElement h = g;
  h.i = mod(-g.i, n);
  h.j = mod(-g.j, n);
  return act_on_point(h, p);
}

PieriShift pieri_shift(const Partition& a, int i) {
  const int n = a.rows() + a.cols();
  const int reduced = mod(i, n);
  const int wraps = (i - reduced) / n;
  auto chain = pieri_chain(a, reduced + 1);
  return {chain.back().a, chain.back().degree + wraps * a.cols()};
}

QIndex star(const QIndex& t) { return QIndex{t.k, t.r, conjugate(t.a), conjugate(t.b), conjugate(t.c), t.d}; }

QIndex swap_ab(const QIndex& t) { return QIndex{t.r, t.k, t.b, t.a, t.c, t.d}; }

QIndex poincare_dual(const QIndex& t) { return QIndex{t.r, t.k, t.b, complement(t.c), complement(t.a), t.d}; }

QIndex act_on_index(const GroupElement& g, const QIndex& t) {
  const QIndex base = apply_g0(g, t);
  const auto sa = pieri_shift(base.a, g.i);
  const auto sb = pieri_shift(base.b, g.j);
  const auto sc = pieri_shift(base.c, g.i + g.j);
  return QIndex{base.r, base.k, sa.a, sb.a, sc.a, base.d + sc.degree - sa.degree - sb.degree};
}

std::vector<std::pair<GroupElement, QIndex>> orbit_images(const QIndex& t, Group group) {
  std::vector<std::pair<GroupElement, QIndex>> out;
  for (const auto& g : group_elements(t.n(), group)) out.emplace_back(g, act_on_index(g, t));
  return out;
}

Orbit orbit(const QIndex& t, Group group) {
  Orbit out;
  for_each_image(t, group, [&](const QIndex& img) {
    if (img.valid()) {
      out.members.push_back(img);
    } else {
      out.left_valid_region = true;
    }
    return true;
  });
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

QIndex canonical_rep(const QIndex& t, Group group) {
  QIndex best = t;
  for_each_image(t, group, [&](const QIndex& img) {
    if (img.valid() && img < best) best = img;
    return true;
  });
  return best;
}

bool is_canonical_rep(const QIndex& t, Group group) {
  return for_each_image(t, group, [&](const QIndex& img) { return !(img.valid() && img < t); });
}

bool reaches_degree_zero(const QIndex& t) {
  return !for_each_image(t, Group::G, [](const QIndex& img) { return img.d != 0; });
}

}  // namespace hornlab
