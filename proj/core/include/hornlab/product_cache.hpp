#pragma once

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "hornlab/schubert.hpp"

namespace hornlab {

/// Thread-safe memo of quantum product expansions keyed by (r, k, a, b) with
/// a <= b. When `capacity` entries are reached the in-memory table is flushed
/// (optionally spilled to disk first), so memory stays bounded by the cap.
class ProductCache {
 public:
  explicit ProductCache(std::size_t capacity = 1u << 18,
                        std::optional<std::filesystem::path> spill_dir = std::nullopt);

  /// Process-wide instance; spill directory from HORNLAB_CACHE_DIR if set.
  static ProductCache& global();

  std::shared_ptr<const ProductExpansion> get(const Partition& a, const Partition& b);

  std::size_t size() const;
  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }
  void clear();

 private:
  struct Key {
    Partition lo;
    Partition hi;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return k.lo.hash() * 1000003u ^ k.hi.hash(); }
  };

  std::filesystem::path spill_path(const Key& key) const;
  void spill_locked();
  std::shared_ptr<const ProductExpansion> load_spilled(const Key& key) const;

  std::size_t capacity_;
  std::optional<std::filesystem::path> spill_dir_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, std::shared_ptr<const ProductExpansion>, KeyHash> table_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

}  // namespace hornlab
