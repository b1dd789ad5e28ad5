#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace crex {

struct PreprocessConfig {
  bool lowercase = true;
  char digit_conflation = '5';
  int min_token_frequency = 2;

  void validate() const;
};

// Punctuation characters that always form their own token.  Newline is also
// its own token ("\n"); tab and space separate tokens.
bool is_punct_token_char(char c);

// Whitespace-split with punctuation and newlines as individual tokens,
// lowercased, digits conflated.  Empty input gives an empty sequence.
std::vector<std::string> preprocess(std::string_view raw_text,
                                    const PreprocessConfig& cfg = {});

// Escape/unescape for writing tokens into line-oriented text formats
// (vocabulary dumps, embedding files): '\n' <-> "\n", '\t' <-> "\t",
// '\\' <-> "\\".
std::string escape_token(std::string_view token);
std::string unescape_token(std::string_view escaped);

}  // namespace crex
