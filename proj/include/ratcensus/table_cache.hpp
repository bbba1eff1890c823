#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "ratcensus/census.hpp"

namespace ratcensus {

inline constexpr int kCacheSchemaVersion = 1;

// On-disk form:
//   {"schema_version": 1, "kind": "R", "max_n": 15,
//    "entries": [[n, index, "decimal"], ...]}
nlohmann::json to_json(const CountTable& table);
CountTable table_from_json(const nlohmann::json& doc);

/// Entries with n <= max_n only.
CountTable restrict_table(const CountTable& table, int max_n);

/// One JSON file per table kind in a directory. A file that is missing,
/// unreadable, from another schema version or too small is a miss.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  std::filesystem::path file_for(TableKind kind) const;
  std::optional<CountTable> load(TableKind kind, int max_n) const;
  void store(const CountTable& table) const;

  /// Cached table when it covers max_n, otherwise computed and written back.
  CountTable obtain(TableKind kind, int max_n) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace ratcensus
