// koyal: deterministic text frontend and synthesis-plan router for Indic TTS.
//
// Subcommands: segment | romanise | normalise | detect | translit | plan |
// batch. stdout carries only data; diagnostics go to stderr. Exit codes:
// 0 success, 1 record/data error, 2 usage error, 3 provider/network error.

#include <CLI11.hpp>
#include <json.hpp>

#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>
#include <vector>

#include "koyal/errors.hpp"
#include "koyal/normaliser.hpp"
#include "koyal/plan.hpp"
#include "koyal/romaniser.hpp"
#include "koyal/router.hpp"
#include "koyal/script.hpp"
#include "koyal/translit.hpp"
#include "koyal/utf8.hpp"
#include "koyal/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitProvider = 3;

json error_json(const koyal::Error& e) {
  return json{{"code", std::string(to_string(e.code()))},
              {"message", e.what()}};
}

int exit_code_for(const koyal::Error& e) {
  return e.code() == koyal::ErrorCode::ProviderUnreachable ? kExitProvider
                                                           : kExitDataError;
}

std::string utc_now_iso8601() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Provider/cache options shared by translit, plan and batch.
struct ProviderFlags {
  std::string provider = "offline";
  std::string endpoint;
  std::string model;
  std::string api_key_env = "KOYAL_TRANSLIT_API_KEY";
  std::string dict;
  std::string cache_file;
  std::string config_file;
  double timeout_s = 30.0;
  int max_retries = 2;
  int max_tokens = 1024;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--provider", provider, "Transliteration provider")
        ->check(CLI::IsMember({"offline", "http"}));
    cmd->add_option("--endpoint", endpoint, "Remote provider endpoint URL");
    cmd->add_option("--model", model, "Remote provider model identifier");
    cmd->add_option("--api-key-env", api_key_env,
                    "Environment variable holding the provider API key");
    cmd->add_option("--dict", dict, "Offline dictionary TSV (lang, word, native)");
    cmd->add_option("--cache-file", cache_file,
                    "Transliteration cache JSON path");
    cmd->add_option("--config", config_file,
                    "key=value config file for provider defaults");
    cmd->add_option("--timeout", timeout_s, "Provider timeout in seconds");
    cmd->add_option("--max-retries", max_retries, "Network retries per call");
    cmd->add_option("--max-tokens", max_tokens, "Completion token cap");
  }

  // Config file supplies defaults; explicit flags win.
  void apply_config(const CLI::App* cmd) {
    if (config_file.empty()) return;
    std::ifstream in(config_file);
    if (!in) {
      throw koyal::Error(koyal::ErrorCode::BadInput,
                         "cannot open config file: " + config_file);
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(0, eq);
      const std::string value = line.substr(eq + 1);
      const auto unset = [cmd](const char* flag) {
        return cmd->get_option(flag)->count() == 0;
      };
      if (key == "endpoint" && unset("--endpoint")) endpoint = value;
      else if (key == "model" && unset("--model")) model = value;
      else if (key == "api_key_env" && unset("--api-key-env")) api_key_env = value;
      else if (key == "dict" && unset("--dict")) dict = value;
      else if (key == "cache_file" && unset("--cache-file")) cache_file = value;
      else if (key == "provider" && unset("--provider")) provider = value;
    }
  }

  koyal::ProviderConfig to_config() const {
    koyal::ProviderConfig cfg;
    cfg.kind = provider == "http" ? koyal::ProviderConfig::Kind::Remote
                                  : koyal::ProviderConfig::Kind::OfflineDictionary;
    cfg.endpoint = endpoint;
    cfg.model = model;
    cfg.api_key_env = api_key_env;
    cfg.dict_path = dict;
    cfg.timeout_s = timeout_s;
    cfg.max_retries = max_retries;
    cfg.max_tokens = max_tokens;
    return cfg;
  }
};

// Voice-prompt flags for plan; duration falls back to the WAV header.
struct VoicePromptFlags {
  std::string path;
  double duration = -1.0;
  std::string language;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--voice-prompt", path, "Reference clip path (WAV)");
    cmd->add_option("--voice-prompt-duration", duration,
                    "Reference clip length in seconds");
    cmd->add_option("--voice-prompt-lang", language,
                    "Reference clip language (te|ta|hi|other)");
  }
};

// Reads seconds of audio from a RIFF/WAVE header: data chunk size over byte
// rate. No sample decoding.
double wav_duration_seconds(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw koyal::Error(koyal::ErrorCode::BadInput,
                       "cannot open voice prompt: " + path);
  }
  char riff[12];
  if (!in.read(riff, 12) || std::string_view(riff, 4) != "RIFF" ||
      std::string_view(riff + 8, 4) != "WAVE") {
    throw koyal::Error(koyal::ErrorCode::BadInput,
                       "voice prompt is not a RIFF/WAVE file: " + path);
  }
  const auto read_u32 = [](const char* p) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(p[0])) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(p[1])) << 8) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(p[2])) << 16) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(p[3])) << 24);
  };
  std::uint32_t byte_rate = 0;
  std::uint64_t data_size = 0;
  char hdr[8];
  while (in.read(hdr, 8)) {
    const std::string id(hdr, 4);
    const std::uint32_t size = read_u32(hdr + 4);
    if (id == "fmt ") {
      char fmt[16];
      if (size < 16 || !in.read(fmt, 16)) break;
      byte_rate = read_u32(fmt + 8);
      in.seekg(size - 16 + (size & 1), std::ios::cur);
    } else if (id == "data") {
      data_size = size;
      break;
    } else {
      in.seekg(size + (size & 1), std::ios::cur);
    }
  }
  if (byte_rate == 0 || data_size == 0) {
    throw koyal::Error(koyal::ErrorCode::BadInput,
                       "could not read WAV fmt/data chunks: " + path);
  }
  return static_cast<double>(data_size) / byte_rate;
}

std::optional<koyal::VoicePrompt> resolve_voice_prompt(
    const VoicePromptFlags& flags, const std::string& fallback_lang) {
  if (flags.path.empty()) {
    return std::nullopt;
  }
  koyal::VoicePrompt vp;
  vp.audio_path = flags.path;
  vp.duration =
      flags.duration >= 0 ? flags.duration : wav_duration_seconds(flags.path);
  vp.language = flags.language.empty() ? fallback_lang : flags.language;
  return vp;
}

koyal::Lang require_lang(const std::string& code) {
  auto lang = koyal::parse_lang(code);
  if (!lang) {
    throw CLI::ValidationError("--lang", "expected te, ta or hi");
  }
  return *lang;
}

struct PlanRequest {
  std::string text;
  std::optional<koyal::Lang> lang;
  std::optional<koyal::VoicePrompt> voice_prompt;
  koyal::Preset preset = koyal::Preset::ConfigB;
  bool strict = true;
  bool force_lora = false;
};

koyal::SynthesisPlan run_plan(const PlanRequest& req,
                              const koyal::PlannerDeps& deps) {
  koyal::PlanOptions opts;
  opts.lang = req.lang;
  opts.voice_prompt = req.voice_prompt;
  opts.preset = req.preset;
  opts.strict = req.strict;
  opts.force_lora = req.force_lora;
  return koyal::build_plan(req.text, opts, deps);
}

struct BatchRecord {
  std::string id;
  PlanRequest request;
};

json process_record(const std::string& line, const koyal::PlannerDeps& deps,
                    std::set<std::string>& seen_ids, std::mutex& seen_mutex,
                    koyal::Preset preset, bool strict, bool force_lora) {
  json out = json::object();
  std::string id;
  try {
    const json rec = json::parse(line);
    id = rec.value("id", "");
    out["id"] = id;
    if (id.empty()) {
      throw koyal::Error(koyal::ErrorCode::BadInput, "record has no id");
    }
    {
      std::lock_guard lock(seen_mutex);
      if (!seen_ids.insert(id).second) {
        throw koyal::Error(koyal::ErrorCode::BadInput,
                           "duplicate record id: " + id);
      }
    }
    PlanRequest req;
    req.text = rec.value("text", "");
    if (req.text.empty()) {
      throw koyal::Error(koyal::ErrorCode::BadInput, "record has no text");
    }
    if (rec.contains("lang")) {
      auto lang = koyal::parse_lang(rec["lang"].get<std::string>());
      if (!lang) {
        throw koyal::Error(koyal::ErrorCode::BadInput,
                           "bad lang: " + rec["lang"].get<std::string>());
      }
      req.lang = lang;
    }
    if (rec.contains("voice_prompt_path")) {
      koyal::VoicePrompt vp;
      vp.audio_path = rec["voice_prompt_path"].get<std::string>();
      if (rec.contains("voice_prompt_duration")) {
        vp.duration = rec["voice_prompt_duration"].get<double>();
      } else {
        vp.duration = wav_duration_seconds(vp.audio_path);
      }
      vp.language = rec.value("voice_prompt_lang",
                              req.lang ? std::string(to_string(*req.lang))
                                       : std::string("other"));
      req.voice_prompt = vp;
    }
    req.preset = preset;
    req.strict = strict;
    req.force_lora = force_lora;
    out["plan"] = json::parse(serialise_plan(run_plan(req, deps)));
  } catch (const koyal::Error& e) {
    out["error"] = error_json(e);
  } catch (const json::exception& e) {
    out["error"] = json{{"code", "BadInput"},
                        {"message", std::string("bad record JSON: ") + e.what()}};
  }
  if (id.empty() && !out.contains("id")) {
    out["id"] = nullptr;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"koyal: deterministic Indic TTS text frontend and router"};
  app.set_version_flag("--version", std::string(koyal::kVersion));
  app.require_subcommand(1);

  std::string text;
  std::string lang_code;

  // segment
  auto* seg_cmd = app.add_subcommand("segment", "Split text into script runs");
  seg_cmd->add_option("text", text, "Input text")->required();

  // romanise
  auto* rom_cmd =
      app.add_subcommand("romanise", "ISO-15919 romanisation of Brahmic runs");
  rom_cmd->add_option("text", text, "Input text")->required();

  // normalise
  auto* norm_cmd = app.add_subcommand(
      "normalise", "Expand numbers, currency, dates and single letters");
  norm_cmd->add_option("text", text, "Input text")->required();
  norm_cmd->add_option("--lang", lang_code, "Target language (te|ta|hi)")
      ->required();

  // detect
  auto* det_cmd =
      app.add_subcommand("detect", "Detect language and code-mixing");
  det_cmd->add_option("text", text, "Input text")->required();

  // translit
  auto* tr_cmd = app.add_subcommand(
      "translit", "Rewrite Latin words into native-script spellings");
  tr_cmd->add_option("text", text, "Input text")->required();
  tr_cmd->add_option("--lang", lang_code, "Target language (te|ta|hi)")
      ->required();
  ProviderFlags tr_provider;
  tr_provider.add_to(tr_cmd);

  // plan
  auto* plan_cmd =
      app.add_subcommand("plan", "Emit a synthesis plan for one utterance");
  plan_cmd->add_option("text", text, "Input text")->required();
  plan_cmd->add_option("--lang", lang_code,
                       "Target language (te|ta|hi); detected when absent");
  std::string preset_name = "b";
  plan_cmd->add_option("--preset", preset_name,
                       "Sampling preset: default|a|b|c");
  bool no_strict = false;
  bool force_lora = false;
  plan_cmd->add_flag("--no-strict", no_strict,
                     "Allow Chatterbox branches without a voice prompt");
  plan_cmd->add_flag("--force-lora", force_lora,
                     "Route unvalidated Brahmic languages down the LoRA branch");
  VoicePromptFlags plan_vp;
  plan_vp.add_to(plan_cmd);
  ProviderFlags plan_provider;
  plan_provider.add_to(plan_cmd);

  // batch
  auto* batch_cmd = app.add_subcommand(
      "batch", "Process JSON-lines records (file or stdin) into plans");
  std::string batch_file = "-";
  batch_cmd->add_option("file", batch_file, "JSON-lines input, '-' for stdin");
  std::string batch_preset = "b";
  batch_cmd->add_option("--preset", batch_preset, "Sampling preset");
  bool batch_no_strict = false;
  bool batch_force_lora = false;
  bool batch_stable = false;
  int batch_jobs = 1;
  batch_cmd->add_flag("--no-strict", batch_no_strict,
                      "Allow Chatterbox branches without a voice prompt");
  batch_cmd->add_flag("--force-lora", batch_force_lora,
                      "Route unvalidated languages down the LoRA branch");
  batch_cmd->add_flag("--stable", batch_stable,
                      "Omit timestamps so reruns are byte-identical");
  batch_cmd->add_option("--jobs", batch_jobs, "Concurrent workers")
      ->check(CLI::Range(1, 64));
  ProviderFlags batch_provider;
  batch_provider.add_to(batch_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (seg_cmd->parsed()) {
      json out = json::array();
      for (const auto& run : koyal::segment(text)) {
        out.push_back(json{{"text", run.text},
                           {"class", std::string(to_string(run.script))},
                           {"start", run.start},
                           {"end", run.end}});
      }
      std::cout << out.dump() << "\n";
      return kExitOk;
    }

    if (rom_cmd->parsed()) {
      std::cout << koyal::bups(text) << "\n";
      return kExitOk;
    }

    if (norm_cmd->parsed()) {
      const auto result = koyal::normalise(text, require_lang(lang_code));
      for (const auto& w : result.warnings) {
        std::cerr << "warning: " << w.code << ": " << w.message << "\n";
      }
      std::cout << result.text << "\n";
      return kExitOk;
    }

    if (det_cmd->parsed()) {
      const koyal::Lang lang = koyal::detect_language(text);
      json out{{"language", std::string(to_string(lang))},
               {"codemix", koyal::detect_codemix(text)}};
      std::cout << out.dump() << "\n";
      return kExitOk;
    }

    if (tr_cmd->parsed()) {
      tr_provider.apply_config(tr_cmd);
      auto provider = koyal::make_provider(tr_provider.to_config());
      koyal::TranslitCache cache{
          std::filesystem::path(tr_provider.cache_file)};
      koyal::TranslitRequest req;
      req.text = text;
      req.lang = require_lang(lang_code);
      req.prompt_version = std::string(koyal::kPromptVersion);
      std::cout << koyal::transliterate_codemix(req, cache, *provider) << "\n";
      return kExitOk;
    }

    if (plan_cmd->parsed()) {
      plan_provider.apply_config(plan_cmd);
      auto preset = koyal::parse_preset(preset_name);
      if (!preset) {
        std::cerr << "unknown preset: " << preset_name << "\n";
        return kExitUsage;
      }
      auto provider = koyal::make_provider(plan_provider.to_config());
      koyal::TranslitCache cache{
          std::filesystem::path(plan_provider.cache_file)};
      const auto deps = koyal::default_planner_deps(cache, *provider);

      PlanRequest req;
      req.text = text;
      if (!lang_code.empty()) {
        req.lang = require_lang(lang_code);
      }
      const std::string fallback_lang =
          req.lang ? std::string(to_string(*req.lang)) : std::string("other");
      req.voice_prompt = resolve_voice_prompt(plan_vp, fallback_lang);
      req.preset = *preset;
      req.strict = !no_strict;
      req.force_lora = force_lora;

      const auto plan = run_plan(req, deps);
      for (const auto& w : plan.warnings) {
        std::cerr << "warning: " << w.code << ": " << w.message << "\n";
      }
      std::cout << serialise_plan(plan) << "\n";
      return kExitOk;
    }

    if (batch_cmd->parsed()) {
      batch_provider.apply_config(batch_cmd);
      auto preset = koyal::parse_preset(batch_preset);
      if (!preset) {
        std::cerr << "unknown preset: " << batch_preset << "\n";
        return kExitUsage;
      }
      auto provider = koyal::make_provider(batch_provider.to_config());
      koyal::TranslitCache cache{
          std::filesystem::path(batch_provider.cache_file)};
      const auto deps = koyal::default_planner_deps(cache, *provider);

      std::istream* in = &std::cin;
      std::ifstream file;
      if (batch_file != "-") {
        file.open(batch_file, std::ios::binary);
        if (!file) {
          std::cerr << "cannot open batch file: " << batch_file << "\n";
          return kExitUsage;
        }
        in = &file;
      }
      std::vector<std::string> lines;
      std::string line;
      while (std::getline(*in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
      }

      std::vector<json> results(lines.size());
      std::set<std::string> seen_ids;
      std::mutex seen_mutex;
      const auto worker = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < lines.size(); i += step) {
          results[i] =
              process_record(lines[i], deps, seen_ids, seen_mutex, *preset,
                             !batch_no_strict, batch_force_lora);
        }
      };
      if (batch_jobs <= 1 || lines.size() < 2) {
        worker(0, 1);
      } else {
        // Records are processed concurrently, but output order equals input
        // order regardless: results are written back by index. Note that
        // duplicate-id detection is first-come under concurrency.
        std::vector<std::thread> pool;
        const auto n = static_cast<std::size_t>(batch_jobs);
        pool.reserve(n);
        for (std::size_t t = 0; t < n; ++t) {
          pool.emplace_back(worker, t, n);
        }
        for (auto& t : pool) t.join();
      }

      bool any_error = false;
      for (auto& r : results) {
        if (!batch_stable) {
          r["generated_at"] = utc_now_iso8601();
        }
        any_error |= r.contains("error");
        std::cout << r.dump() << "\n";
      }
      std::cerr << results.size() << " records, "
                << (any_error ? "with errors" : "all ok") << "\n";
      return any_error ? kExitDataError : kExitOk;
    }
  } catch (const koyal::Error& e) {
    json err{{"error", error_json(e)}};
    std::cerr << err.dump() << "\n";
    return exit_code_for(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";  // bad flag values found after parsing
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }

  return kExitUsage;
}
