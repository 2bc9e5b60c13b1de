#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "koyal/errors.hpp"
#include "koyal/translit.hpp"
#include "koyal/utf8.hpp"

namespace koyal {

namespace {

bool is_latin_alpha(char32_t cp) {
  if ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z')) return true;
  if (cp == 0x00D7 || cp == 0x00F7) return false;
  if (cp >= 0x00C0 && cp <= 0x024F) return true;
  if (cp >= 0x1E00 && cp <= 0x1EFF) return true;
  return false;
}

std::string ascii_lower(std::string_view word) {
  std::string out(word);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
  }
  return out;
}

// Built-in test dictionary: the published mappings plus enough everyday
// vocabulary for hermetic runs. Format matches external files:
// "lang TAB word TAB native".
constexpr std::string_view kBuiltinDictionary = R"(# lang	word	native
hi	whatsapp	व्हाट्सऐप
hi	message	मैसेज
hi	ceo	सीईओ
hi	but	बट
hi	notification	नोटिफ़िकेशन
hi	hello	हेलो
hi	phone	फ़ोन
hi	meeting	मीटिंग
hi	ok	ओके
hi	email	ईमेल
hi	online	ऑनलाइन
hi	quarter	क्वार्टर
hi	presentation	प्रेज़ेंटेशन
hi	vitamin	विटामिन
te	whatsapp	వాట్సాప్
te	message	మెసేజ్
te	ceo	సీఈవో
te	but	బట్
te	notification	నోటిఫికేషన్
te	hello	హలో
te	phone	ఫోన్
te	meeting	మీటింగ్
te	ok	ఓకే
te	email	ఈమెయిల్
te	online	ఆన్‌లైన్
te	quarter	క్వార్టర్
te	presentation	ప్రెజెంటేషన్
te	vitamin	విటమిన్
ta	whatsapp	வாட்ஸ்அப்
ta	message	மெசேஜ்
ta	ceo	சிஇஓ
ta	but	பட்
ta	notification	நோட்டிஃபிகேஷன்
ta	hello	ஹலோ
ta	phone	போன்
ta	meeting	மீட்டிங்
ta	ok	ஓகே
ta	email	இமெயில்
ta	online	ஆன்லைன்
ta	quarter	குவார்ட்டர்
ta	presentation	பிரசன்டேஷன்
ta	vitamin	வைட்டமின்
)";

}  // namespace

DictionaryProvider::DictionaryProvider() {
  std::string_view source = kBuiltinDictionary;
  std::size_t pos = 0;
  while (pos < source.size()) {
    std::size_t eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    const std::string_view line = source.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;

    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 = line.find('\t', tab1 + 1);
    auto lang = parse_lang(line.substr(0, tab1));
    if (!lang || tab2 == std::string_view::npos) {
      throw Error(ErrorCode::BadInput,
                  "bad dictionary line: " + std::string(line));
    }
    add(*lang, line.substr(tab1 + 1, tab2 - tab1 - 1), line.substr(tab2 + 1));
  }
}

DictionaryProvider::DictionaryProvider(const std::filesystem::path& dict_file) {
  std::ifstream in(dict_file, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::BadInput,
                "cannot open dictionary: " + dict_file.string());
  }
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 =
        tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw Error(ErrorCode::BadInput, "bad dictionary line: " + line);
    }
    auto lang = parse_lang(std::string_view(line).substr(0, tab1));
    if (!lang) {
      throw Error(ErrorCode::BadInput, "bad dictionary language: " + line);
    }
    add(*lang, std::string_view(line).substr(tab1 + 1, tab2 - tab1 - 1),
        std::string_view(line).substr(tab2 + 1));
  }
}

void DictionaryProvider::add(Lang lang, std::string_view word,
                             std::string_view native) {
  words_[lang][ascii_lower(word)] = std::string(native);
}

std::string DictionaryProvider::do_run(const TranslitRequest& req,
                                       const std::string& /*system_prompt*/) {
  const auto lang_it = words_.find(req.lang);
  const std::u32string cps = utf8::decode(req.text);

  std::string out;
  out.reserve(req.text.size());
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!is_latin_alpha(cps[i])) {
      utf8::append(out, cps[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && is_latin_alpha(cps[j])) ++j;
    const std::string word =
        utf8::encode(std::u32string_view(cps).substr(i, j - i));
    if (j - i >= 2 && lang_it != words_.end()) {
      auto hit = lang_it->second.find(ascii_lower(word));
      if (hit != lang_it->second.end()) {
        out += hit->second;
        i = j;
        continue;
      }
    }
    out += word;  // single letters and unknown words stay as written
    i = j;
  }
  return out;
}

HttpProvider::HttpProvider(ProviderConfig config) : config_(std::move(config)) {
  if (config_.endpoint.empty()) {
    throw Error(ErrorCode::BadInput, "remote provider requires an endpoint");
  }
}

std::string HttpProvider::id() const {
  return config_.model.empty() ? "remote" : "remote:" + config_.model;
}

std::string HttpProvider::do_run(const TranslitRequest& req,
                                 const std::string& system_prompt) {
  // Split the endpoint into origin and path for the client.
  std::string origin = config_.endpoint;
  std::string path = "/";
  const std::size_t scheme_end = origin.find("://");
  if (scheme_end != std::string::npos) {
    const std::size_t path_start = origin.find('/', scheme_end + 3);
    if (path_start != std::string::npos) {
      path = origin.substr(path_start);
      origin = origin.substr(0, path_start);
    }
  }

  nlohmann::json body{{"model", config_.model},
                      {"system", system_prompt},
                      {"user", req.text},
                      {"temperature", 0},
                      {"max_tokens", config_.max_tokens}};

  httplib::Client client(origin);
  client.set_connection_timeout(std::chrono::duration<double>(config_.timeout_s));
  client.set_read_timeout(std::chrono::duration<double>(config_.timeout_s));

  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.api_key_env.c_str())) {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
  }

  std::string last_error;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(200 * attempt));
    }
    auto res = client.Post(path, headers, body.dump(), "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status < 200 || res->status >= 300) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    try {
      const auto doc = nlohmann::json::parse(res->body);
      if (doc.contains("text") && doc["text"].is_string()) {
        return doc["text"].get<std::string>();
      }
      last_error = "response has no text field";
    } catch (const nlohmann::json::exception& e) {
      last_error = std::string("bad response JSON: ") + e.what();
    }
  }
  throw Error(ErrorCode::ProviderUnreachable,
              "provider call failed after retries: " + last_error);
}

std::unique_ptr<TranslitProvider> make_provider(const ProviderConfig& config) {
  switch (config.kind) {
    case ProviderConfig::Kind::Remote:
      return std::make_unique<HttpProvider>(config);
    case ProviderConfig::Kind::OfflineDictionary:
      if (!config.dict_path.empty()) {
        return std::make_unique<DictionaryProvider>(config.dict_path);
      }
      return std::make_unique<DictionaryProvider>();
  }
  return std::make_unique<DictionaryProvider>();
}

}  // namespace koyal
