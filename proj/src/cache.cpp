#include "qhorn/cache.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <mutex>

namespace qhorn {

std::shared_ptr<const CoefficientCache::ClassMap> CoefficientCache::product(
    const std::string& key, const std::function<ClassMap()>& compute) {
  {
    std::shared_lock lock(mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  auto fresh = std::make_shared<const ClassMap>(compute());
  std::unique_lock lock(mutex_);
  auto [it, inserted] = products_.emplace(key, fresh);
  return it->second;
}

std::optional<Int> CoefficientCache::value(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Int CoefficientCache::value_or_compute(const std::string& key,
                                       const std::function<Int()>& compute) {
  if (auto hit = value(key)) return *hit;
  Int fresh = compute();
  std::unique_lock lock(mutex_);
  auto [it, inserted] = values_.emplace(key, fresh);
  return it->second;
}

CoefficientCache::LoadStatus CoefficientCache::load(const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) return {false, "absent"};
  nlohmann::json j;
  try {
    std::ifstream in(path);
    in >> j;
    if (!j.is_object() || !j.contains("version") || !j.contains("values") ||
        !j["values"].is_object())
      throw std::runtime_error("schema");
  } catch (const std::exception&) {
    // Quarantine the corrupt file so a later save starts clean.
    std::string q = path + ".corrupt";
    int k = 0;
    while (fs::exists(q)) q = path + ".corrupt." + std::to_string(++k);
    std::error_code ec;
    fs::rename(path, q, ec);
    return {false, "quarantined: " + q};
  }
  if (j["version"].get<std::string>() != kVersion)
    return {false, "version-mismatch: ignored"};
  std::unique_lock lock(mutex_);
  for (auto& [k, v] : j["values"].items()) {
    if (v.is_string()) values_.emplace(k, Int(v.get<std::string>()));
  }
  return {true, "loaded " + std::to_string(values_.size()) + " values"};
}

void CoefficientCache::save(const std::string& path) const {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  auto& vals = j["values"] = nlohmann::ordered_json::object();
  {
    std::shared_lock lock(mutex_);
    for (const auto& [k, v] : values_) vals[k] = v.str();
  }
  std::ofstream out(path);
  out << j.dump(1) << "\n";
}

size_t CoefficientCache::value_count() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

size_t CoefficientCache::product_count() const {
  std::shared_lock lock(mutex_);
  return products_.size();
}

void CoefficientCache::clear() {
  std::unique_lock lock(mutex_);
  products_.clear();
  values_.clear();
}

CoefficientCache& global_cache() {
  static CoefficientCache cache;
  return cache;
}

}  // namespace qhorn
