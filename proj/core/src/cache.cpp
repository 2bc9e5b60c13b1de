#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "koyal/errors.hpp"
#include "koyal/translit.hpp"

namespace koyal {

namespace {

using nlohmann::json;

std::string utc_now_iso8601() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Exclusive advisory lock for the read-modify-write of the cache file, so
// concurrent writers (threads or processes) serialise.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& target) {
    if (target.empty()) return;
    const std::string lock_path = target.string() + ".lock";
    fd_ = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_EX);
    }
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

json entry_to_json(const TranslitCacheEntry& e) {
  return json{{"input", e.input},
              {"output", e.output},
              {"provider_id", e.provider_id},
              {"prompt_version", e.prompt_version},
              {"lang", e.lang},
              {"created_at", e.created_at}};
}

TranslitCacheEntry entry_from_json(const std::string& key, const json& j) {
  TranslitCacheEntry e;
  e.key = key;
  e.input = j.value("input", "");
  e.output = j.value("output", "");
  e.provider_id = j.value("provider_id", "");
  e.prompt_version = j.value("prompt_version", "");
  e.lang = j.value("lang", "");
  e.created_at = j.value("created_at", "");
  return e;
}

// An entry must hash its own input and satisfy the output contract.
bool entry_intact(const TranslitCacheEntry& e) {
  return e.key == cache_key(e.input) && validate_translit(e.input, e.output).ok;
}

}  // namespace

TranslitCache::TranslitCache(std::filesystem::path file)
    : file_(std::move(file)) {
  if (file_.empty()) return;
  FileLock lock(file_);
  std::lock_guard guard(mutex_);
  load_locked();
}

void TranslitCache::load_locked() {
  entries_.clear();
  std::ifstream in(file_, std::ios::binary);
  if (!in) return;  // missing file is an empty cache

  json doc;
  try {
    in >> doc;
  } catch (const json::exception&) {
    // Unreadable file: start over. Entries will be rebuilt on store.
    evictions_.fetch_add(1, std::memory_order_relaxed);
    return;
  }
  if (!doc.is_object()) return;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!it.value().is_object()) continue;
    entries_[it.key()] = entry_from_json(it.key(), it.value());
  }
}

void TranslitCache::persist_locked() const {
  if (file_.empty()) return;

  json doc = json::object();
  for (const auto& [key, entry] : entries_) {
    doc[key] = entry_to_json(entry);
  }

  const std::filesystem::path tmp =
      file_.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << doc.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, file_);
}

std::optional<TranslitCacheEntry> TranslitCache::lookup(
    const TranslitRequest& req) {
  const std::string key = cache_key(req.text);
  bool evict = false;
  std::optional<TranslitCacheEntry> found;

  {
    std::lock_guard guard(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      if (it->second.input != req.text || !entry_intact(it->second)) {
        entries_.erase(it);
        evict = true;
      } else {
        found = it->second;
      }
    }
  }

  if (evict) {
    // Corrupt entry: drop it from disk too, then treat as a miss. Lock order
    // is always file lock first, then mutex (matches store()).
    evictions_.fetch_add(1, std::memory_order_relaxed);
    misses_.fetch_add(1, std::memory_order_relaxed);
    FileLock lock(file_);
    std::lock_guard guard(mutex_);
    if (!file_.empty()) {
      load_locked();
      entries_.erase(key);
      persist_locked();
    }
    return std::nullopt;
  }

  if (!found) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }

  const std::string want_version = req.prompt_version.empty()
                                       ? std::string(kPromptVersion)
                                       : req.prompt_version;
  if (found->lang != to_string(req.lang) ||
      found->prompt_version != want_version) {
    misses_.fetch_add(1, std::memory_order_relaxed);  // valid, but not ours
    return std::nullopt;
  }

  hits_.fetch_add(1, std::memory_order_relaxed);
  return found;
}

void TranslitCache::store(const TranslitCacheEntry& entry) {
  TranslitCacheEntry copy = entry;
  if (copy.created_at.empty()) {
    copy.created_at = utc_now_iso8601();
  }
  if (!entry_intact(copy)) {
    throw Error(ErrorCode::CacheCorrupt,
                "refusing to store a cache entry that fails its invariant");
  }

  FileLock lock(file_);
  std::lock_guard guard(mutex_);
  if (!file_.empty()) {
    load_locked();  // merge concurrent writers: re-read, modify, write
  }
  entries_[copy.key] = std::move(copy);
  persist_locked();
}

std::size_t TranslitCache::size() const {
  std::lock_guard guard(mutex_);
  return entries_.size();
}

}  // namespace koyal
