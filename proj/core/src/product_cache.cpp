#include "hornlab/product_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <string>

namespace hornlab {

ProductCache::ProductCache(std::size_t capacity, std::optional<std::filesystem::path> spill_dir)
    : capacity_(capacity == 0 ? 1 : capacity), spill_dir_(std::move(spill_dir)) {}

ProductCache& ProductCache::global() {
  static ProductCache cache = [] {
    std::optional<std::filesystem::path> dir;
    if (const char* env = std::getenv("HORNLAB_CACHE_DIR"); env && *env) dir = env;
    return ProductCache(1u << 18, dir);
  }();
  return cache;
}

std::size_t ProductCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void ProductCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

std::filesystem::path ProductCache::spill_path(const Key& key) const {
  const std::string box = std::to_string(key.lo.rows()) + "x" + std::to_string(key.lo.cols());
  return *spill_dir_ / box / (to_text(key.lo) + "_" + to_text(key.hi) + ".qp");
}

void ProductCache::spill_locked() {
  if (!spill_dir_) return;
  for (const auto& [key, value] : table_) {
    auto path = spill_path(key);
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec || std::filesystem::exists(path)) continue;
    // Write-then-rename so concurrent readers never see a partial file.
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      for (const auto& term : *value) out << to_text(term.c) << ';' << term.d << ';' << to_text(term.coeff) << '\n';
    }
    std::filesystem::rename(tmp, path, ec);
  }
}

std::shared_ptr<const ProductExpansion> ProductCache::load_spilled(const Key& key) const {
  if (!spill_dir_) return nullptr;
  std::ifstream in(spill_path(key));
  if (!in) return nullptr;
  auto out = std::make_shared<ProductExpansion>();
  std::string line;
  while (std::getline(in, line)) {
    auto f = split(line, ';');
    if (f.size() != 3) return nullptr;
    out->push_back(ProductTerm{parse_partition(f[0], key.lo.rows(), key.lo.cols()), parse_int(f[1]),
                               Integer(std::string(f[2]))});
  }
  return out;
}

std::shared_ptr<const ProductExpansion> ProductCache::get(const Partition& a, const Partition& b) {
  Key key = a <= b ? Key{a, b} : Key{b, a};
  {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) {
      ++hits_;
      return it->second;
    }
  }
  ++misses_;
  auto value = load_spilled(key);
  if (!value) value = std::make_shared<const ProductExpansion>(compute_quantum_product(key.lo, key.hi));
  std::unique_lock lock(mutex_);
  if (table_.size() >= capacity_) {
    spill_locked();
    table_.clear();
  }
  table_.emplace(key, value);
  return value;
}

}  // namespace hornlab
