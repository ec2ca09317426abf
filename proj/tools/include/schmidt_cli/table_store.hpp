#pragma once

#include "schmidt/extension.hpp"
#include "schmidt/linearizer.hpp"

#include <filesystem>
#include <string>

namespace schmidt::cli {

inline constexpr const char* kTableSchema = "schmidt-tables/1";
inline constexpr const char* kCacheDirEnv = "SCHMIDT_CACHE_DIR";

struct LoadStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;  // malformed or failed re-validation; recomputed on demand
};

/// Reads {"schema", "btables": {"m,r": [...]}, "ctables": {"j,a": [...]}}.
/// Every entry is re-validated before it enters a cache; a missing file is
/// an empty store and an unreadable one counts as all-rejected.
LoadStats load_tables(const std::filesystem::path& path, BTableCache& btables,
                      CTableCache& ctables);

/// Writes both caches through a temporary file and rename. Throws
/// std::runtime_error if the file cannot be written.
void save_tables(const std::filesystem::path& path, const BTableCache& btables,
                 const CTableCache& ctables);

/// --cache if given, else $SCHMIDT_CACHE_DIR/tables.json, else empty.
std::filesystem::path resolve_cache_path(const std::string& flag);

}  // namespace schmidt::cli
