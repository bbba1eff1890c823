#include "ratcensus/table_cache.hpp"

#include <fstream>

#include "ratcensus/errors.hpp"

namespace ratcensus {

nlohmann::json to_json(const CountTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : table.entries) {
    entries.push_back({key.first, key.second, value.get_str(10)});
  }
  return {{"schema_version", kCacheSchemaVersion},
          {"kind", to_string(table.kind)},
          {"max_n", table.max_n},
          {"entries", std::move(entries)}};
}

CountTable table_from_json(const nlohmann::json& doc) {
  if (doc.at("schema_version").get<int>() != kCacheSchemaVersion) {
    throw InputError("unsupported cache schema version");
  }
  CountTable table;
  table.kind = table_kind_from_string(doc.at("kind").get<std::string>());
  table.max_n = doc.at("max_n").get<int>();
  for (const auto& row : doc.at("entries")) {
    BigInt value;
    if (value.set_str(row.at(2).get<std::string>(), 10) != 0) {
      throw InputError("cache entry is not a decimal integer");
    }
    table.entries.emplace(std::pair{row.at(0).get<int>(), row.at(1).get<int>()}, std::move(value));
  }
  return table;
}

CountTable restrict_table(const CountTable& table, int max_n) {
  CountTable out{table.kind, max_n, {}};
  for (const auto& [key, value] : table.entries) {
    if (key.first <= max_n) out.entries.emplace(key, value);
  }
  return out;
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::file_for(TableKind kind) const {
  return dir_ / ("table_" + to_string(kind) + ".json");
}

std::optional<CountTable> TableCache::load(TableKind kind, int max_n) const {
  std::ifstream in(file_for(kind));
  if (!in) return std::nullopt;
  try {
    const CountTable table = table_from_json(nlohmann::json::parse(in));
    if (table.kind != kind || table.max_n < max_n) return std::nullopt;
    return restrict_table(table, max_n);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void TableCache::store(const CountTable& table) const {
  std::filesystem::create_directories(dir_);
  const auto target = file_for(table.kind);
  auto staging = target;
  staging += ".tmp";
  {
    std::ofstream out(staging, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + staging.string());
    out << to_json(table).dump() << '\n';
    if (!out) throw std::runtime_error("failed writing cache file " + staging.string());
  }
  std::filesystem::rename(staging, target);
}

CountTable TableCache::obtain(TableKind kind, int max_n) const {
  if (auto cached = load(kind, max_n)) return *std::move(cached);
  CountTable table = make_table(kind, max_n);
  store(table);
  return table;
}

}  // namespace ratcensus
