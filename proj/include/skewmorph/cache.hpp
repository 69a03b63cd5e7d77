#pragma once

// On-disk memo of enumerations. Each file is line-delimited JSON: a header
// line {"format":"skewmorph-cache","version":1,"kind":...,"params":[...],
// "count":N} followed by N records. Every record is re-verified on load; a
// file that fails any check is reported and recomputed.

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewmorph/reciprocal.hpp"
#include "skewmorph/skew.hpp"

namespace skewmorph {

inline constexpr int kCacheFormatVersion = 1;

/// "<kind>-<p1>-<p2>...jsonl", e.g. skew-27.jsonl, recip-9-27.jsonl.
std::string cache_key(std::string_view kind, std::initializer_list<std::int32_t> params);

/// $SKEWMORPH_CACHE_DIR, else $XDG_CACHE_HOME/skewmorph, else
/// $HOME/.cache/skewmorph, else ./.skewmorph-cache.
std::filesystem::path default_cache_dir();

/// Enumerations memoized in memory and, when a directory is given, on disk.
class Catalog {
 public:
  struct Options {
    std::optional<std::filesystem::path> cache_dir;
    unsigned jobs = 1;
    /// Receives warnings about unreadable cache files; may be null.
    std::ostream* log = nullptr;
  };

  explicit Catalog(Options options);

  /// Throws IoError if a cache file cannot be written.
  const std::vector<SkewMorphism>& skew(std::int32_t n);
  const std::vector<ReciprocalPair>& pairs(std::int32_t m, std::int32_t n);

  int disk_hits() const noexcept { return disk_hits_; }
  unsigned jobs() const noexcept { return options_.jobs; }

 private:
  template <class T, class Decode>
  std::optional<std::vector<T>> load(const std::string& kind, std::initializer_list<std::int32_t> params,
                                     Decode decode);
  template <class T>
  void store(const std::string& kind, std::initializer_list<std::int32_t> params, const std::vector<T>& items);

  Options options_;
  std::map<std::int32_t, std::vector<SkewMorphism>> skew_;
  std::map<std::pair<std::int32_t, std::int32_t>, std::vector<ReciprocalPair>> pairs_;
  int disk_hits_ = 0;
};

}  // namespace skewmorph
