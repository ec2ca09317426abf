#include "schmidt_cli/table_store.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace schmidt::cli {

namespace {

std::optional<std::pair<unsigned, unsigned>> parse_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) return std::nullopt;
  const std::string a = key.substr(0, comma), b = key.substr(comma + 1);
  auto digits = [](const std::string& s) {
    return !s.empty() && s.size() <= 6 && s.find_first_not_of("0123456789") == std::string::npos;
  };
  if (!digits(a) || !digits(b)) return std::nullopt;
  return std::pair{static_cast<unsigned>(std::stoul(a)), static_cast<unsigned>(std::stoul(b))};
}

std::optional<std::vector<Integer>> parse_entries(const nlohmann::json& value) {
  if (!value.is_array()) return std::nullopt;
  std::vector<Integer> out;
  for (const auto& v : value) {
    if (!v.is_string()) return std::nullopt;
    try {
      out.push_back(parse_integer(v.get<std::string>()));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  return out;
}

nlohmann::json entries_json(const std::vector<Integer>& entries) {
  auto arr = nlohmann::json::array();
  for (const auto& e : entries) arr.push_back(e.get_str());
  return arr;
}

std::string key_string(const std::pair<unsigned, unsigned>& key) {
  return std::to_string(key.first) + "," + std::to_string(key.second);
}

}  // namespace

LoadStats load_tables(const std::filesystem::path& path, BTableCache& btables,
                      CTableCache& ctables) {
  LoadStats stats;
  std::ifstream in(path);
  if (!in) return stats;
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || doc.value("schema", "") != kTableSchema) {
    stats.rejected = 1;
    return stats;
  }
  if (auto it = doc.find("btables"); it != doc.end() && it->is_object()) {
    for (const auto& [key, value] : it->items()) {
      auto k = parse_key(key);
      auto entries = parse_entries(value);
      bool ok = false;
      if (k && k->second >= 1 && entries &&
          entries->size() == static_cast<std::size_t>(k->second) * k->first - k->first + 1) {
        BTable table(k->first, k->second, std::move(*entries));
        if (btable_is_valid(table)) {
          btables.insert(*k, std::move(table));
          ok = true;
        }
      }
      ++(ok ? stats.accepted : stats.rejected);
    }
  }
  if (auto it = doc.find("ctables"); it != doc.end() && it->is_object()) {
    for (const auto& [key, value] : it->items()) {
      auto k = parse_key(key);
      auto entries = parse_entries(value);
      bool ok = false;
      if (k && entries && entries->size() == static_cast<std::size_t>(k->second) + 1) {
        CTable table(k->first, k->second, std::move(*entries));
        if (ctable_is_valid(table)) {
          ctables.insert(*k, std::move(table));
          ok = true;
        }
      }
      ++(ok ? stats.accepted : stats.rejected);
    }
  }
  return stats;
}

void save_tables(const std::filesystem::path& path, const BTableCache& btables,
                 const CTableCache& ctables) {
  nlohmann::json doc;
  doc["schema"] = kTableSchema;
  doc["btables"] = nlohmann::json::object();
  doc["ctables"] = nlohmann::json::object();
  for (const auto& [key, table] : btables.snapshot()) doc["btables"][key_string(key)] = entries_json(table.entries());
  for (const auto& [key, table] : ctables.snapshot()) doc["ctables"][key_string(key)] = entries_json(table.entries());

  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write table cache " + path.string());
    out << doc.dump(1) << '\n';
    if (!out) throw std::runtime_error("cannot write table cache " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot write table cache " + path.string() + ": " + ec.message());
}

std::filesystem::path resolve_cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* dir = std::getenv(kCacheDirEnv); dir != nullptr && *dir != '\0')
    return std::filesystem::path(dir) / "tables.json";
  return {};
}

}  // namespace schmidt::cli
