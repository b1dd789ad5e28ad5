#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "crex/corpus.hpp"
#include "crex/preprocess.hpp"

namespace crex {

// Shared token/POS index space.  Token indices 0..5 are reserved: the
// unknown and padding entries plus the four argument indicator tags that
// candidate construction splices into classifier inputs.
class Vocabulary {
 public:
  static constexpr const char* kUnk = "<unk>";
  static constexpr const char* kPad = "<pad>";
  static constexpr const char* kArg1Open = "<a1>";
  static constexpr const char* kArg1Close = "</a1>";
  static constexpr const char* kArg2Open = "<a2>";
  static constexpr const char* kArg2Close = "</a2>";
  static constexpr std::int32_t kUnkIndex = 0;
  static constexpr std::int32_t kPadIndex = 1;
  static constexpr std::int32_t kArg1OpenIndex = 2;
  static constexpr std::int32_t kArg1CloseIndex = 3;
  static constexpr std::int32_t kArg2OpenIndex = 4;
  static constexpr std::int32_t kArg2CloseIndex = 5;
  static constexpr std::size_t kReservedTokens = 6;

  static constexpr const char* kPosUnk = "<unk>";
  static constexpr const char* kPosIndicator = "<ind>";
  static constexpr std::int32_t kPosUnkIndex = 0;
  static constexpr std::int32_t kPosIndicatorIndex = 1;

  Vocabulary() = default;

  // Counts surfaces over the training corpus plus the raw unlabeled texts
  // (preprocessed with cfg); keeps tokens with frequency >=
  // cfg.min_token_frequency.  POS entries come from the corpus.
  // Throws "empty vocabulary source" when there is nothing to count.
  static Vocabulary build(const Corpus& train_corpus,
                          const std::vector<std::string>& raw_sg_texts,
                          const PreprocessConfig& cfg = {});

  std::int32_t encode(const std::string& surface) const;      // never fails
  std::int32_t encode_pos(const std::string& pos_tag) const;  // never fails

  const std::string& token(std::int32_t index) const { return tokens_.at(index); }
  const std::string& pos_tag(std::int32_t index) const { return pos_tags_.at(index); }

  std::size_t token_count() const { return tokens_.size(); }
  std::size_t pos_count() const { return pos_tags_.size(); }
  bool contains(const std::string& surface) const { return token_index_.count(surface) != 0; }

  // Training-data frequency (labeled + unlabeled counts), 0 if unseen;
  // includes tokens that fell below the threshold.
  std::uint64_t frequency(const std::string& surface) const;

  // "token<TAB>index" per line, reserved entries first; tokens escaped.
  void save(const std::string& path) const;
  static Vocabulary load(const std::string& path);

  void save_pos(const std::string& path) const;
  void load_pos_from(const std::string& path);

  void save_frequencies(const std::string& path) const;
  void load_frequencies_from(const std::string& path);

  std::uint64_t content_hash() const;

 private:
  void insert_reserved();
  std::int32_t add_token(const std::string& t);
  std::int32_t add_pos(const std::string& t);

  std::vector<std::string> tokens_;
  std::vector<std::string> pos_tags_;
  std::unordered_map<std::string, std::int32_t> token_index_;
  std::unordered_map<std::string, std::int32_t> pos_index_;
  std::unordered_map<std::string, std::uint64_t> frequency_;
};

}  // namespace crex
