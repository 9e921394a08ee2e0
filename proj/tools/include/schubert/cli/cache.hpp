#pragma once

#include "schubert/classes.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace schubert::cli {

inline constexpr int kCacheFormatVersion = 1;

/// Hash of the sign and indexing conventions together with the Cartan matrix.
/// A cache written under different conventions is never reused.
std::uint64_t convention_fingerprint(const RootSystem& rs);

std::filesystem::path cache_path(const std::filesystem::path& dir, const LieType& lie, const std::vector<int>& subset);

/// Computes (if needed) and writes the multiplication table, CSM classes and
/// total Chern class of a space. Creates the directory.
void write_space_cache(const std::filesystem::path& dir, const FlagVariety& space, unsigned jobs = 1);

enum class CacheStatus { Hit, Missing, Stale, Corrupt };

struct CacheLoad {
  CacheStatus status = CacheStatus::Missing;
  std::shared_ptr<const FlagVariety> space;
  std::string message;
};

CacheLoad read_space_cache(const std::filesystem::path& dir, std::shared_ptr<const LieType> lie,
                           const std::vector<int>& subset);

/// Loads from the cache when possible; otherwise computes and, when a
/// directory is given, stores the result. Corrupt or stale files produce a
/// warning on `warn` and are rewritten.
std::shared_ptr<const FlagVariety> open_space(std::shared_ptr<const LieType> lie, const std::vector<int>& subset,
                                              const std::optional<std::filesystem::path>& dir, unsigned jobs,
                                              std::ostream& warn);

} // namespace schubert::cli
