#pragma once

// Optional on-disk cache for exact series produced by the expensive kernel
// builders (the colored theta functions and everything layered on them).
// Entries are keyed exactly as in EvalMemo (expression text + precision), so
// a hit requires the same builder, parameters, and precision.  The cache is
// a single text file of blocks:
//   key <memo key>
//   <series_serialize output>
//   endkey

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qseries/expr.hpp"
#include "qseries/series.hpp"

namespace qseries {

inline bool cache_key_is_kernel(const std::string& key) {
  static const char* prefixes[] = {"(cphi ", "(atheta ", "(dualtheta ",
                                   "(f ",    "(g ",      "(h "};
  for (const char* p : prefixes)
    if (key.rfind(p, 0) == 0) return true;
  return false;
}

inline std::filesystem::path cache_file_path(const std::string& dir) {
  return std::filesystem::path(dir) / "exact-series-cache.txt";
}

// Returns the number of entries loaded.  Malformed files are rejected whole.
inline size_t load_exact_cache(EvalMemo& memo, const std::string& dir) {
  std::ifstream in(cache_file_path(dir));
  if (!in) return 0;
  size_t loaded = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("key ", 0) != 0)
      throw SeriesError("series cache: expected 'key ...', got: " + line);
    std::string key = line.substr(4);
    std::ostringstream body;
    bool closed = false;
    while (std::getline(in, line)) {
      if (line == "endkey") {
        closed = true;
        break;
      }
      body << line << "\n";
    }
    if (!closed) throw SeriesError("series cache: unterminated entry for " + key);
    PuiseuxSeries s = series_deserialize(body.str());
    std::lock_guard<std::mutex> lk(memo.mu);
    memo.exact[key] = std::move(s);
    ++loaded;
  }
  return loaded;
}

// Writes every kernel-builder entry currently in the memo.  Returns the
// number of entries written.
inline size_t save_exact_cache(EvalMemo& memo, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::ostringstream out;
  size_t count = 0;
  {
    std::lock_guard<std::mutex> lk(memo.mu);
    for (const auto& [key, series] : memo.exact) {
      if (!cache_key_is_kernel(key)) continue;
      out << "key " << key << "\n" << series_serialize(series) << "endkey\n";
      ++count;
    }
  }
  std::ofstream f(cache_file_path(dir), std::ios::trunc);
  if (!f) throw SeriesError("series cache: cannot write " + cache_file_path(dir).string());
  f << out.str();
  return count;
}

}  // namespace qseries
