#include "hochlab/rank_cache.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>

#include "hochlab/errors.hpp"
#include "hochlab/spec_io.hpp"

namespace hochlab {

std::string_view engine_version() { return HOCHLAB_VERSION_STRING; }

std::string content_hash(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

RankCache::RankCache(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    if (j.value("engine", "") != engine_version()) continue;
    if (!j.contains("key") || !j.contains("rank")) continue;
    entries_[j["key"].get<std::string>()] = j["rank"].get<std::size_t>();
  }
}

std::optional<std::filesystem::path> RankCache::default_path() {
  const char* dir = std::getenv("HOCHLAB_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / "ranks.jsonl";
}

std::string RankCache::make_key(const Algebra& a, std::size_t degree, std::optional<int> piece,
                                std::string_view op) {
  nlohmann::json j;
  j["algebra"] = algebra_to_json(a);
  j["degree"] = degree;
  j["piece"] = piece ? nlohmann::json(*piece) : nlohmann::json(nullptr);
  j["op"] = op;
  j["engine"] = engine_version();
  return content_hash(j.dump());
}

std::optional<std::size_t> RankCache::lookup(const std::string& key) {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void RankCache::store(const std::string& key, std::size_t rank) {
  std::lock_guard lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(key, rank);
  if (!inserted && it->second != rank) {
    throw Error(ErrorKind::InvalidArgument, "conflicting cached rank", key);
  }
  dirty_ = dirty_ || inserted;
}

void RankCache::flush() {
  std::lock_guard lock(mutex_);
  if (!dirty_) return;
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path());
  auto tmp = file_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (const auto& [key, rank] : entries_) {
      nlohmann::json j{{"key", key}, {"rank", rank}, {"engine", engine_version()}};
      out << j.dump() << '\n';
    }
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write rank cache", tmp.string());
  }
  std::filesystem::rename(tmp, file_);
  dirty_ = false;
}

std::size_t RankCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::size_t RankCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

std::size_t RankCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

}  // namespace hochlab
