#pragma once

#include "qhorn/rational.hpp"
#include "qhorn/schubert.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

namespace qhorn {

/// Shared memo store for the engines: two-factor structure constants
/// (in-memory) and computed problem values (persistable as versioned JSON).
///
/// Concurrency contract: any number of concurrent readers; writes are
/// serialized; a missed entry recomputed redundantly by two workers is fine
/// because the values are idempotent.
class CoefficientCache {
 public:
  using ClassMap = std::map<Partition, Int>;
  static constexpr const char* kVersion = "qhorn/1";

  std::shared_ptr<const ClassMap> product(const std::string& key,
                                          const std::function<ClassMap()>& compute);

  std::optional<Int> value(const std::string& key) const;
  Int value_or_compute(const std::string& key, const std::function<Int()>& compute);

  struct LoadStatus {
    bool loaded = false;
    std::string note;
  };
  /// Loads persisted values. A corrupt file is renamed aside and ignored; a
  /// version-mismatched file is ignored with a note. Never throws on bad data.
  LoadStatus load(const std::string& path);
  void save(const std::string& path) const;

  size_t value_count() const;
  size_t product_count() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<const ClassMap>> products_;
  std::map<std::string, Int> values_;
};

/// Process-wide cache used by the CLI and the default engine entry points.
CoefficientCache& global_cache();

}  // namespace qhorn
