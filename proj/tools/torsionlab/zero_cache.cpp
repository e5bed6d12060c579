#include "torsionlab/zero_cache.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include <json.hpp>

namespace torsionlab::cli {

namespace {

using json = nlohmann::json;

std::string format_order(double order) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", order);
  return buf;
}

std::optional<specfun::ZeroKind> parse_kind(const std::string& s) {
  for (auto k : {specfun::ZeroKind::JZero, specfun::ZeroKind::JPrimeZero, specfun::ZeroKind::GPlusZero,
                 specfun::ZeroKind::GMinusZero}) {
    if (specfun::to_string(k) == s) return k;
  }
  return std::nullopt;
}

// "kind:order" → family; nullopt when malformed.
std::optional<specfun::ZeroFamily> parse_family(const std::string& key) {
  const auto colon = key.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const auto kind = parse_kind(key.substr(0, colon));
  if (!kind) return std::nullopt;
  try {
    std::size_t used = 0;
    const std::string rest = key.substr(colon + 1);
    const double order = std::stod(rest, &used);
    if (used != rest.size() || !(order >= 0.0)) return std::nullopt;
    return specfun::ZeroFamily{*kind, order};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

ZeroCache::ZeroCache(std::string path) : path_(std::move(path)) { load(); }

std::string ZeroCache::family_key(const specfun::ZeroFamily& family) {
  return specfun::to_string(family.kind) + ":" + format_order(family.order);
}

std::string ZeroCache::zero_key(const specfun::ZeroFamily& family, int k) {
  return family_key(family) + ":" + std::to_string(k);
}

void ZeroCache::load() {
  std::ifstream in(path_);
  if (!in) return;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception&) {
    return;
  }
  if (!doc.is_object() || doc.value("format_version", 0) != kFormatVersion) return;
  if (!doc.contains("zeros") || !doc["zeros"].is_object()) return;
  if (!doc.contains("coverage") || !doc["coverage"].is_object()) return;
  std::map<std::string, std::map<int, double>> by_family;
  for (const auto& [key, value] : doc["zeros"].items()) {
    const auto last = key.rfind(':');
    if (last == std::string::npos || !value.is_number()) continue;
    int k = 0;
    try {
      k = std::stoi(key.substr(last + 1));
    } catch (const std::exception&) {
      continue;
    }
    if (k >= 1) by_family[key.substr(0, last)][k] = value.get<double>();
  }
  for (const auto& [fkey, covered] : doc["coverage"].items()) {
    const auto fam = parse_family(fkey);
    if (!fam || !covered.is_number() || family_key(*fam) != fkey) continue;
    Entry e;
    e.covered = covered.get<double>();
    const auto it = by_family.find(fkey);
    bool valid = true;
    if (it != by_family.end()) {
      int expected = 1;
      for (const auto& [k, z] : it->second) {
        // Indices must be contiguous from 1 and values strictly increasing below the coverage bound.
        if (k != expected++ || !(z > 0.0) || !(z < e.covered) || (!e.zeros.empty() && !(z > e.zeros.back()))) {
          valid = false;
          break;
        }
        e.zeros.push_back(z);
      }
    }
    if (!valid) continue;
    entries_[fkey] = std::move(e);
  }
  loaded_ = true;
}

std::vector<double> ZeroCache::zeros_below(const specfun::ZeroFamily& family, double bound) {
  const std::string key = family_key(family);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = entries_.find(key);
    if (it != entries_.end() && it->second.covered >= bound) {
      ++hits_;
      const auto& zs = it->second.zeros;
      return {zs.begin(), std::lower_bound(zs.begin(), zs.end(), bound)};
    }
    ++misses_;
  }
  auto zs = specfun::zeros_below(family, bound);
  std::lock_guard<std::mutex> lock(mutex_);
  auto& e = entries_[key];
  if (bound > e.covered) {
    e.zeros = zs;
    e.covered = bound;
    dirty_ = true;
  }
  return zs;
}

bool ZeroCache::save() {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!dirty_) return true;
  nlohmann::ordered_json doc;
  doc["format_version"] = kFormatVersion;
  nlohmann::ordered_json zeros = nlohmann::ordered_json::object();
  nlohmann::ordered_json coverage = nlohmann::ordered_json::object();
  for (const auto& [key, e] : entries_) {
    coverage[key] = e.covered;
    for (std::size_t i = 0; i < e.zeros.size(); ++i) zeros[key + ":" + std::to_string(i + 1)] = e.zeros[i];
  }
  doc["coverage"] = std::move(coverage);
  doc["zeros"] = std::move(zeros);
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    out << doc.dump(1) << '\n';
    if (!out) return false;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) return false;
  dirty_ = false;
  return true;
}

std::size_t ZeroCache::hits() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return hits_;
}

std::size_t ZeroCache::misses() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return misses_;
}

std::size_t ZeroCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::size_t n = 0;
  for (const auto& [key, e] : entries_) n += e.zeros.size();
  return n;
}

}  // namespace torsionlab::cli
