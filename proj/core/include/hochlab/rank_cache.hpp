#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "hochlab/algebra.hpp"

namespace hochlab {

/// Engine version; cache entries written by another version are ignored.
std::string_view engine_version();

/// Hex SHA-256 of a byte string.
std::string content_hash(std::string_view bytes);

/// Memo of matrix ranks keyed by a content hash of (algebra, degree, graded
/// piece, operator). Backed by a JSON-lines file rewritten atomically.
class RankCache {
 public:
  explicit RankCache(std::filesystem::path file);

  /// Cache at $HOCHLAB_CACHE_DIR/ranks.jsonl, if the variable is set.
  static std::optional<std::filesystem::path> default_path();

  static std::string make_key(const Algebra& a, std::size_t degree, std::optional<int> piece,
                              std::string_view op);

  std::optional<std::size_t> lookup(const std::string& key);
  void store(const std::string& key, std::size_t rank);

  /// Writes to a temporary file next to the cache, then renames it over.
  void flush();

  std::size_t hits() const;
  std::size_t misses() const;
  std::size_t size() const;
  const std::filesystem::path& path() const noexcept { return file_; }

 private:
  std::filesystem::path file_;
  mutable std::mutex mutex_;
  std::map<std::string, std::size_t> entries_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
  bool dirty_ = false;
};

}  // namespace hochlab
