#include "hornlab/facet_probe.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace hornlab {

namespace {

constexpr std::int64_t kScaleLimit = std::int64_t{1} << 40;

// Point coordinates times a common denominator.
struct ScaledPoint {
  std::int64_t scale = 1;
  std::vector<std::int64_t> coords;  // 3n entries

  explicit ScaledPoint(const SpectrumTriple& p) {
    const auto flat = p.flat();
    Integer lcm = 1;
    for (const auto& q : flat) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    if (lcm >= kScaleLimit) throw std::range_error("point denominators too large for the facet probe");
    scale = lcm.get_si();
    for (const auto& q : flat) {
      Rational scaled = q * Rational(lcm);
      const Integer num = scaled.get_num();
      if (abs(num) >= kScaleLimit) throw std::range_error("point coordinates too large for the facet probe");
      coords.push_back(num.get_si());
    }
  }
};

// sum over i of x[offset + k + i - part_i - 1].
std::int64_t partition_weight(const Partition& a, const std::vector<std::int64_t>& x, int offset) {
  std::int64_t w = 0;
  for (int i = 1; i <= a.rows(); ++i) w += x[static_cast<std::size_t>(offset + a.cols() + i - a[i - 1] - 1)];
  return w;
}

template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  workers = std::max(1, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct Evaluation {
  ScaledPoint point;
  std::optional<GroupElement> element;
};

void probe_stratum(const Stratum& s, const std::vector<Evaluation>& evals, bool degree_zero_only, int workers,
                   std::size_t limit, Verdict& out, std::mutex& out_mutex) {
  const int n = s.r + s.k;
  const auto parts = enumerate_partitions(s.r, s.k);
  for (const auto& ev : evals) {
    const auto& x = ev.point.coords;
    std::vector<std::int64_t> wa(parts.size()), wb(parts.size()), wc(parts.size());
    // buckets[weight] = (Gamma, index) sorted by Gamma.
    std::vector<std::vector<std::pair<std::int64_t, std::size_t>>> buckets(static_cast<std::size_t>(s.r * s.k + 1));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      wa[i] = partition_weight(parts[i], x, 0);
      wb[i] = partition_weight(parts[i], x, n);
      wc[i] = partition_weight(parts[i], x, 2 * n);
      buckets[static_cast<std::size_t>(parts[i].weight())].emplace_back(wc[i], i);
    }
    for (auto& bucket : buckets) std::sort(bucket.begin(), bucket.end());

    parallel_for(parts.size(), workers, [&](std::size_t ai) {
      Verdict local;
      for (std::size_t bi = 0; bi < parts.size(); ++bi) {
        const int total = parts[ai].weight() + parts[bi].weight();
        const int dmax = degree_zero_only ? 0 : total / n;
        for (int d = 0; d <= dmax; ++d) {
          const int w = total - n * d;
          if (w > s.r * s.k) continue;
          const std::int64_t bound = wa[ai] + wb[bi] - ev.point.scale * d;
          for (const auto& [gamma, ci] : buckets[static_cast<std::size_t>(w)]) {
            if (gamma > bound) break;
            ++local.rows_checked;
            QIndex t{s.r, s.k, parts[ai], parts[bi], parts[ci], d};
            const Integer coeff = d == 0 ? classical_lr(t.a, t.b, t.c) : quantum_lr(t);
            if (coeff != 1) continue;
            const Rational value = make_rational(gamma - bound, ev.point.scale);
            RowReport rep{Provenance{Provenance::Kind::Facet, -1, -1, t, ev.element}, RowKind::Ge, value};
            if (value < 0) {
              ++local.violated_total;
              record_report(local.violated, std::move(rep), limit);
            } else {
              ++local.tight_total;
              record_report(local.tight, std::move(rep), limit);
            }
          }
        }
      }
      std::lock_guard lock(out_mutex);
      out.rows_checked += local.rows_checked;
      out.tight_total += local.tight_total;
      out.violated_total += local.violated_total;
      for (auto& rep : local.tight) record_report(out.tight, std::move(rep), limit);
      for (auto& rep : local.violated) record_report(out.violated, std::move(rep), limit);
    });
  }
}

}  // namespace

Verdict implicit_membership(const SpectrumTriple& p, SystemMode mode, int workers, std::size_t report_limit) {
  const int n = p.n();
  if (n < 2 || p.beta.size() != p.alpha.size() || p.gamma.size() != p.alpha.size()) {
    throw std::invalid_argument("implicit_membership: malformed point");
  }
  const ConstraintSystem base = mode == SystemMode::Cone ? chamber_constraints(n) : alcove_constraints(n);
  Verdict base_verdict = membership(p, base, report_limit);

  std::vector<Evaluation> evals;
  if (mode == SystemMode::DeltaK) {
    for (const auto& g : group_elements(n, Group::G)) {
      evals.push_back({ScaledPoint(act_on_point(inverse(g, n), p)), g});
    }
  } else {
    evals.push_back({ScaledPoint(p), std::nullopt});
  }
  Verdict facets;
  std::mutex mutex;
  for (const auto& s : all_strata(n)) probe_stratum(s, evals, mode != SystemMode::Delta, workers, report_limit, facets, mutex);
  std::array<Verdict, 2> parts{std::move(base_verdict), std::move(facets)};
  return merge_verdicts(parts, report_limit);
}

std::vector<QIndex> tight_indices(int n, std::span<const SpectrumTriple> anchors, int workers) {
  if (anchors.empty() || anchors.size() > 3) throw std::invalid_argument("tight_indices needs 1 to 3 anchors");
  std::vector<ScaledPoint> points;
  for (const auto& p : anchors) {
    if (p.n() != n) throw std::invalid_argument("anchor dimension does not match n");
    points.emplace_back(p);
  }
  using Key = std::array<std::int64_t, 4>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = 0;
      for (auto v : k) h = (h ^ static_cast<std::size_t>(v)) * 0x9e3779b97f4a7c15ull;
      return h;
    }
  };
  std::vector<QIndex> out;
  std::mutex mutex;
  for (const auto& s : all_strata(n)) {
    const auto parts = enumerate_partitions(s.r, s.k);
    const std::size_t count = parts.size();
    // weights[j][i] for anchor j: alpha, beta and gamma sums.
    std::vector<std::vector<std::int64_t>> wa(points.size()), wb(points.size());
    std::unordered_map<Key, std::vector<std::size_t>, KeyHash> by_key;
    for (std::size_t i = 0; i < count; ++i) {
      Key key{parts[i].weight(), 0, 0, 0};
      for (std::size_t j = 0; j < points.size(); ++j) {
        wa[j].push_back(partition_weight(parts[i], points[j].coords, 0));
        wb[j].push_back(partition_weight(parts[i], points[j].coords, n));
        key[j + 1] = partition_weight(parts[i], points[j].coords, 2 * n);
      }
      by_key[key].push_back(i);
    }
    parallel_for(count, workers, [&](std::size_t ai) {
      std::vector<QIndex> local;
      for (std::size_t bi = 0; bi < count; ++bi) {
        const int total = parts[ai].weight() + parts[bi].weight();
        for (int d = 0; d * n <= total; ++d) {
          const int w = total - n * d;
          if (w > s.r * s.k) continue;
          Key key{w, 0, 0, 0};
          for (std::size_t j = 0; j < points.size(); ++j) key[j + 1] = wa[j][ai] + wb[j][bi] - points[j].scale * d;
          auto it = by_key.find(key);
          if (it == by_key.end()) continue;
          for (std::size_t ci : it->second) {
            QIndex t{s.r, s.k, parts[ai], parts[bi], parts[ci], d};
            if (quantum_lr(t) == 1) local.push_back(t);
          }
        }
      }
      std::lock_guard lock(mutex);
      out.insert(out.end(), local.begin(), local.end());
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hornlab
