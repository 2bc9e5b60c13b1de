#include "koyal/translit.hpp"

#include <openssl/evp.h>

#include "koyal/errors.hpp"
#include "koyal/script.hpp"
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

std::string_view language_name(Lang lang) {
  switch (lang) {
    case Lang::Te: return "Telugu";
    case Lang::Ta: return "Tamil";
    case Lang::Hi: return "Hindi";
  }
  return "Hindi";
}

}  // namespace

bool detect_codemix(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  std::size_t run = 0;
  for (char32_t cp : cps) {
    if (is_latin_alpha(cp)) {
      if (++run >= 2) {
        return true;
      }
    } else {
      run = 0;
    }
  }
  return false;
}

std::string cache_key(std::string_view text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);

  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0x0F]);
  }
  return out;
}

ValidationResult validate_translit(std::string_view input,
                                   std::string_view output) {
  const std::u32string in = utf8::decode(input);
  const std::u32string out = utf8::decode(output);

  ValidationResult result;

  // (a) the input's native-script codepoints all appear in the output, in
  // order; the transliterated words add further native codepoints between
  // them, so this is containment, not equality
  std::u32string in_brahmic, out_brahmic;
  for (char32_t cp : in) {
    if (auto sc = classify_char(cp); sc && is_brahmic(*sc)) in_brahmic += cp;
  }
  for (char32_t cp : out) {
    if (auto sc = classify_char(cp); sc && is_brahmic(*sc)) out_brahmic += cp;
  }
  std::size_t matched = 0;
  for (char32_t cp : out_brahmic) {
    if (matched < in_brahmic.size() && cp == in_brahmic[matched]) {
      ++matched;
    }
  }
  if (matched != in_brahmic.size()) {
    result.violations.push_back(
        {'a', "native-script codepoints of the input are dropped or "
              "reordered in the output"});
  }

  // (b) no Latin word of length >= 2 may remain
  if (detect_codemix(utf8::encode(out))) {
    result.violations.push_back(
        {'b', "output still contains a Latin alphabetic word of length >= 2"});
  }

  // (c) ASCII digit sequence unchanged
  std::string in_digits, out_digits;
  for (char32_t cp : in) {
    if (cp >= U'0' && cp <= U'9') in_digits += static_cast<char>(cp);
  }
  for (char32_t cp : out) {
    if (cp >= U'0' && cp <= U'9') out_digits += static_cast<char>(cp);
  }
  if (in_digits != out_digits) {
    result.violations.push_back(
        {'c', "ASCII digit sequence of the output differs from the input"});
  }

  result.ok = result.violations.empty();
  return result;
}

std::string system_prompt(Lang lang) {
  const std::string name(language_name(lang));
  return "You are a transliteration preprocessor for " + name +
         " text-to-speech. Rewrite the user's text so it can be synthesised "
         "by a native-script model. Rules:\n"
         "(a) preserve all native-script characters and their word order "
         "verbatim;\n"
         "(b) replace every Latin alphabetic word of two or more letters "
         "with its " +
         name + " native-script phonetic spelling;\n"
         "(c) keep numbers and punctuation unchanged.\n"
         "Reply with the rewritten text only, no commentary.";
}

std::string transliterate_codemix(const TranslitRequest& req,
                                  TranslitCache& cache,
                                  TranslitProvider& provider) {
  if (!detect_codemix(req.text)) {
    return req.text;  // pure input, no provider call
  }

  if (auto hit = cache.lookup(req)) {
    return hit->output;
  }

  const std::string prompt = system_prompt(req.lang);
  std::string output = provider.run(req, prompt);
  ValidationResult check = validate_translit(req.text, output);

  if (!check.ok) {
    std::string retry_prompt = prompt + "\nYour previous attempt was rejected:";
    for (const auto& v : check.violations) {
      retry_prompt += "\n- clause (";
      retry_prompt += v.clause;
      retry_prompt += "): " + v.message;
    }
    const std::string first_output = output;
    output = provider.run(req, retry_prompt);
    ValidationResult recheck = validate_translit(req.text, output);
    if (!recheck.ok) {
      std::string msg = "transliteration failed validation twice; attempt 1 [" +
                        first_output + "]:";
      for (const auto& v : check.violations) {
        msg += " (";
        msg += v.clause;
        msg += ")";
      }
      msg += "; attempt 2 [" + output + "]:";
      for (const auto& v : recheck.violations) {
        msg += " (";
        msg += v.clause;
        msg += ")";
      }
      throw Error(ErrorCode::ValidationFailed, msg);
    }
  }

  TranslitCacheEntry entry;
  entry.key = cache_key(req.text);
  entry.input = req.text;
  entry.output = output;
  entry.provider_id = provider.id();
  entry.prompt_version = req.prompt_version.empty()
                             ? std::string(kPromptVersion)
                             : req.prompt_version;
  entry.lang = std::string(to_string(req.lang));
  cache.store(entry);
  return output;
}

}  // namespace koyal
