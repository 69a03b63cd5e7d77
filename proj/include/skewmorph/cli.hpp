#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace skewmorph::cli {

enum class Command { skew_enum, recip_enum, triple_build, dessin_classify, singular_scan, verify_all };
enum class Format { json, csv, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSelfCheck = 2;
inline constexpr int kExitIo = 3;

struct RunConfig {
  Command command = Command::skew_enum;
  std::int32_t m = 0;
  std::int32_t n = 0;
  std::int32_t max = 0;
  Format format = Format::json;
  /// Unset means default_cache_dir().
  std::optional<std::filesystem::path> cache_dir;
  bool no_cache = false;
  unsigned jobs = 1;
  /// skew-enum: cross-check against brute force.
  bool oracle = false;
  std::uint64_t seed = 0;
  /// triple-build: position of the pair in the enumeration.
  std::int32_t index = 0;
  bool cayley = false;
  bool rotation_system = false;
};

/// Bad flags or arguments out of range; maps to kExitUsage.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws UsageError for ranges or flag combinations the command rejects.
void validate(const RunConfig& config);

/// Runs one command. Returns an exit status and writes diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors and --help are handled here.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skewmorph::cli
