// Result cache for Euler characteristics: an in-memory memo plus an optional
// content-addressed file store shared between runs.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "jetdiff/chow.hpp"
#include "jetdiff/json_io.hpp"

namespace jetdiff::chow {

namespace {

std::shared_mutex g_mutex;
std::map<std::string, Poly> g_memo;
std::optional<std::string> g_dir;

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::filesystem::path cache_path(const std::string& key) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(key)));
  return std::filesystem::path(*g_dir) / (std::string(buf) + ".json");
}

}  // namespace

void set_chi_cache_dir(const std::optional<std::string>& dir) {
  std::unique_lock lock(g_mutex);
  g_dir = dir;
  if (g_dir && !g_dir->empty()) std::filesystem::create_directories(*g_dir);
  if (g_dir && g_dir->empty()) g_dir.reset();
}

std::optional<std::string> chi_cache_dir() {
  std::shared_lock lock(g_mutex);
  return g_dir;
}

void clear_chi_memory_cache() {
  std::unique_lock lock(g_mutex);
  g_memo.clear();
}

std::optional<Poly> chi_cache_lookup(const std::string& key) {
  {
    std::shared_lock lock(g_mutex);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }
  std::optional<std::string> dir;
  {
    std::shared_lock lock(g_mutex);
    dir = g_dir;
  }
  if (!dir) return std::nullopt;
  std::filesystem::path path;
  {
    std::shared_lock lock(g_mutex);
    path = cache_path(key);
  }
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    ojson j = ojson::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    Poly p = poly_from_json(j.at("value"));
    std::unique_lock lock(g_mutex);
    g_memo.emplace(key, p);
    return p;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void chi_cache_store(const std::string& key, const Poly& value) {
  std::unique_lock lock(g_mutex);
  g_memo.emplace(key, value);
  if (!g_dir) return;
  ojson j;
  j["key"] = key;
  j["value"] = poly_to_json(value);
  auto path = cache_path(key);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace jetdiff::chow
