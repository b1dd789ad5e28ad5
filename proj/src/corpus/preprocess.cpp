#include "crex/preprocess.hpp"

#include <cctype>
#include <stdexcept>

namespace crex {
namespace {

constexpr std::string_view kPunct = ",./\\\"'=+-;:()!?<>%&$*|[]{}";

}  // namespace

bool is_punct_token_char(char c) { return kPunct.find(c) != std::string_view::npos; }

void PreprocessConfig::validate() const {
  if (min_token_frequency < 1)
    throw std::invalid_argument("preprocess: min-token-frequency must be >= 1");
  const char c = digit_conflation;
  if (is_punct_token_char(c) || c == ' ' || c == '\t' || c == '\n' || c == '\r')
    throw std::invalid_argument(
        "preprocess: digit-conflation char may not be punctuation or whitespace");
}

std::vector<std::string> preprocess(std::string_view raw_text,
                                    const PreprocessConfig& cfg) {
  cfg.validate();
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  };
  for (char c : raw_text) {
    if (c == '\n') {
      flush();
      out.emplace_back(1, '\n');
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
      continue;
    }
    if (is_punct_token_char(c)) {
      flush();
      out.emplace_back(1, c);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current += cfg.digit_conflation;
    } else if (cfg.lowercase) {
      current += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      current += c;
    }
  }
  flush();
  return out;
}

std::string escape_token(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (char c : token) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_token(std::string_view escaped) {
  std::string out;
  out.reserve(escaped.size());
  for (std::size_t i = 0; i < escaped.size(); ++i) {
    if (escaped[i] == '\\' && i + 1 < escaped.size()) {
      ++i;
      switch (escaped[i]) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case '\\': out += '\\'; break;
        default: out += escaped[i];
      }
    } else {
      out += escaped[i];
    }
  }
  return out;
}

}  // namespace crex
