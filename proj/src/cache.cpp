#include "skewmorph/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include <unistd.h>

#include "skewmorph/errors.hpp"
#include "skewmorph/serialize.hpp"

namespace skewmorph {

namespace fs = std::filesystem;

std::string cache_key(std::string_view kind, std::initializer_list<std::int32_t> params) {
  std::string key(kind);
  for (std::int32_t p : params) key += "-" + std::to_string(p);
  return key + ".jsonl";
}

fs::path default_cache_dir() {
  auto env = [](const char* name) -> const char* {
    const char* v = std::getenv(name);
    return v && *v ? v : nullptr;
  };
  if (const char* dir = env("SKEWMORPH_CACHE_DIR")) return dir;
  if (const char* xdg = env("XDG_CACHE_HOME")) return fs::path(xdg) / "skewmorph";
  if (const char* home = env("HOME")) return fs::path(home) / ".cache" / "skewmorph";
  return ".skewmorph-cache";
}

namespace {

Json header(const std::string& kind, std::initializer_list<std::int32_t> params, std::size_t count) {
  return Json{{"format", "skewmorph-cache"},
              {"version", kCacheFormatVersion},
              {"kind", kind},
              {"params", std::vector<std::int32_t>(params)},
              {"count", count}};
}

}  // namespace

Catalog::Catalog(Options options) : options_(std::move(options)) {}

template <class T, class Decode>
std::optional<std::vector<T>> Catalog::load(const std::string& kind, std::initializer_list<std::int32_t> params,
                                            Decode decode) {
  if (!options_.cache_dir) return std::nullopt;
  const fs::path file = *options_.cache_dir / cache_key(kind, params);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty file");
    const Json head = Json::parse(line);
    if (head.value("format", "") != "skewmorph-cache" || head.value("version", 0) != kCacheFormatVersion ||
        head.value("kind", "") != kind || head.value("params", std::vector<std::int32_t>{}) != std::vector(params)) {
      throw std::invalid_argument("header does not match");
    }
    const auto count = head.at("count").get<std::size_t>();
    std::vector<T> items;
    while (std::getline(in, line)) items.push_back(decode(Json::parse(line)));
    if (items.size() != count) throw std::invalid_argument("record count differs from the header");
    ++disk_hits_;
    return items;
  } catch (const std::exception& e) {
    if (options_.log) *options_.log << "warning: ignoring cache file " << file.string() << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

template <class T>
void Catalog::store(const std::string& kind, std::initializer_list<std::int32_t> params, const std::vector<T>& items) {
  if (!options_.cache_dir) return;
  std::error_code ec;
  fs::create_directories(*options_.cache_dir, ec);
  if (ec) throw IoError("cannot create cache directory " + options_.cache_dir->string() + ": " + ec.message());
  const fs::path file = *options_.cache_dir / cache_key(kind, params);
  // write beside the target and rename, so readers never see a partial file
  const fs::path partial = file.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(partial, std::ios::trunc);
    out << header(kind, params, items.size()).dump() << '\n';
    for (const T& item : items) out << to_json(item).dump() << '\n';
    if (!out) throw IoError("cannot write cache file " + partial.string());
  }
  fs::rename(partial, file, ec);
  if (ec) throw IoError("cannot move cache file into place: " + ec.message());
}

const std::vector<SkewMorphism>& Catalog::skew(std::int32_t n) {
  if (auto it = skew_.find(n); it != skew_.end()) return it->second;
  auto items = load<SkewMorphism>("skew", {n}, [](const Json& j) { return skew_from_json(j); });
  if (items && (!std::is_sorted(items->begin(), items->end()) ||
                std::adjacent_find(items->begin(), items->end()) != items->end() ||
                std::any_of(items->begin(), items->end(), [n](const auto& s) { return s.modulus() != n; }))) {
    if (options_.log) *options_.log << "warning: ignoring cache file " << cache_key("skew", {n}) << ": bad listing\n";
    items.reset();
  }
  if (!items) {
    EnumerationOptions eo;
    eo.jobs = options_.jobs;
    items = enumerate_skew_morphisms(n, eo);
    store("skew", {n}, *items);
  }
  return skew_.emplace(n, std::move(*items)).first->second;
}

const std::vector<ReciprocalPair>& Catalog::pairs(std::int32_t m, std::int32_t n) {
  if (auto it = pairs_.find({m, n}); it != pairs_.end()) return it->second;
  auto items = load<ReciprocalPair>("recip", {m, n}, [](const Json& j) { return pair_from_json(j); });
  if (items && std::any_of(items->begin(), items->end(), [&](const ReciprocalPair& p) {
        return p.m() != m || p.n() != n || p.convention() != PairConvention::standard;
      })) {
    if (options_.log) *options_.log << "warning: ignoring cache file " << cache_key("recip", {m, n}) << ": bad listing\n";
    items.reset();
  }
  if (!items) {
    items = enumerate_reciprocal_pairs(skew(m), skew(n), options_.jobs);
    store("recip", {m, n}, *items);
  }
  return pairs_.emplace(std::pair{m, n}, std::move(*items)).first->second;
}

}  // namespace skewmorph
