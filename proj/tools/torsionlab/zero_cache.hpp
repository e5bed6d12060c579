#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "torsionlab/spectrum.hpp"

namespace torsionlab::cli {

// Persistent zero store keyed "family:order:k"; a corrupt or foreign file is ignored and rebuilt.
class ZeroCache : public spectrum::ZeroProvider {
 public:
  static constexpr int kFormatVersion = 1;

  explicit ZeroCache(std::string path);

  // Zeros are served from the cache only when the family is known complete below `bound`.
  std::vector<double> zeros_below(const specfun::ZeroFamily& family, double bound) override;

  // Writes the file if anything was added; returns false on I/O failure.
  bool save();

  bool loaded_from_disk() const { return loaded_; }
  std::size_t hits() const;
  std::size_t misses() const;
  std::size_t size() const;

  static std::string family_key(const specfun::ZeroFamily& family);
  static std::string zero_key(const specfun::ZeroFamily& family, int k);

 private:
  struct Entry {
    // Zeros in increasing order; every zero below `covered` is present.
    std::vector<double> zeros;
    double covered = 0.0;
  };

  void load();

  std::string path_;
  mutable std::mutex mutex_;
  std::map<std::string, Entry> entries_;
  bool loaded_ = false;
  bool dirty_ = false;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace torsionlab::cli
