#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koyal/normaliser.hpp"

namespace koyal {

// True iff the text contains at least one maximal Latin alphabetic run of
// length >= 2. Single letters and digits never trigger.
bool detect_codemix(std::string_view text);

// Lowercase 64-hex-char SHA-256 of the raw UTF-8 bytes, no normalisation.
std::string cache_key(std::string_view text);

struct ClauseViolation {
  char clause = '?';  // 'a', 'b' or 'c'
  std::string message;
};

struct ValidationResult {
  bool ok = false;
  std::vector<ClauseViolation> violations;
};

// Checks a transliteration against the output contract:
//   (a) the input's Brahmic codepoints appear in the output, in order;
//   (b) output has no Latin alphabetic run of length >= 2;
//   (c) the ASCII digit subsequence of output equals the input's.
ValidationResult validate_translit(std::string_view input, std::string_view output);

struct TranslitRequest {
  std::string text;
  Lang lang = Lang::Hi;
  std::string provider_id;
  std::string prompt_version;
};

struct TranslitCacheEntry {
  std::string key;  // SHA-256 of input, lowercase hex
  std::string input;
  std::string output;
  std::string provider_id;
  std::string prompt_version;
  std::string lang;
  std::string created_at;  // UTC, ISO 8601

  bool operator==(const TranslitCacheEntry&) const = default;
};

// Content-addressed store of transliteration calls, persisted as one JSON
// document keyed by digest. Writes are atomic (temp file + rename) and
// serialised by an exclusive lock around the read-modify-write; reads are
// lock-free on the in-memory copy. An entry whose key does not hash its
// input or whose output fails validation is evicted and counts as a miss;
// a lang/prompt_version mismatch is a plain miss.
class TranslitCache {
 public:
  TranslitCache() = default;  // in-memory only
  explicit TranslitCache(std::filesystem::path file);

  std::optional<TranslitCacheEntry> lookup(const TranslitRequest& req);
  void store(const TranslitCacheEntry& entry);

  std::size_t size() const;
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }
  std::uint64_t evictions() const { return evictions_; }

  const std::filesystem::path& file() const { return file_; }

 private:
  void load_locked();
  void persist_locked() const;

  std::filesystem::path file_;
  mutable std::mutex mutex_;
  std::map<std::string, TranslitCacheEntry> entries_;
  std::atomic<std::uint64_t> hits_{0}, misses_{0}, evictions_{0};
};

struct ProviderConfig {
  enum class Kind { OfflineDictionary, Remote };

  Kind kind = Kind::OfflineDictionary;
  std::string endpoint;     // remote: https://host[:port]/path
  std::string model;        // remote: model identifier
  std::string api_key_env;  // remote: name of the env var holding the key
  std::filesystem::path dict_path;  // offline: TSV dictionary, empty = built-in
  double timeout_s = 30.0;
  int max_retries = 2;
  int max_tokens = 1024;
  // temperature is fixed at 0 by contract and is deliberately not a field
};

// One transliteration backend. run() counts calls so tests and the cache
// contract ("cache hit => zero provider calls") can assert on it.
class TranslitProvider {
 public:
  virtual ~TranslitProvider() = default;

  virtual std::string id() const = 0;

  std::string run(const TranslitRequest& req, const std::string& system_prompt) {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return do_run(req, system_prompt);
  }

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  virtual std::string do_run(const TranslitRequest& req,
                             const std::string& system_prompt) = 0;

  std::atomic<std::uint64_t> calls_{0};
};

// Word-lookup provider for hermetic runs: every Latin word of length >= 2 is
// replaced by its dictionary spelling; unknown words stay as-is (validation
// then flags them). Ships with a built-in test dictionary per language.
class DictionaryProvider : public TranslitProvider {
 public:
  DictionaryProvider();  // built-in dictionary
  explicit DictionaryProvider(const std::filesystem::path& dict_file);

  std::string id() const override { return "offline-dictionary"; }

  void add(Lang lang, std::string_view word, std::string_view native);

 private:
  std::string do_run(const TranslitRequest& req,
                     const std::string& system_prompt) override;

  std::map<Lang, std::map<std::string, std::string>> words_;
};

// Generic chat-completion client: one HTTPS POST per call, body
// {model, system, user, temperature: 0, max_tokens}; the response must carry
// a single "text" field. Throws Error(ProviderUnreachable) after retries.
class HttpProvider : public TranslitProvider {
 public:
  explicit HttpProvider(ProviderConfig config);

  std::string id() const override;

 private:
  std::string do_run(const TranslitRequest& req,
                     const std::string& system_prompt) override;

  ProviderConfig config_;
};

std::unique_ptr<TranslitProvider> make_provider(const ProviderConfig& config);

constexpr std::string_view kPromptVersion = "v1";

// The fixed system prompt (clauses a/b/c), parameterised by target language.
std::string system_prompt(Lang lang);

// Detect -> cache -> call -> validate -> retry-once -> store. Pure-script
// input returns unchanged without a provider call. Deterministic given a
// deterministic provider (temperature 0).
std::string transliterate_codemix(const TranslitRequest& req,
                                  TranslitCache& cache,
                                  TranslitProvider& provider);

}  // namespace koyal
