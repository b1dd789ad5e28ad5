#include "crex/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

namespace crex {

void Vocabulary::insert_reserved() {
  for (const char* t : {kUnk, kPad, kArg1Open, kArg1Close, kArg2Open, kArg2Close})
    add_token(t);
  add_pos(kPosUnk);
  add_pos(kPosIndicator);
}

std::int32_t Vocabulary::add_token(const std::string& t) {
  auto [it, inserted] = token_index_.try_emplace(t, static_cast<std::int32_t>(tokens_.size()));
  if (inserted) tokens_.push_back(t);
  return it->second;
}

std::int32_t Vocabulary::add_pos(const std::string& t) {
  auto [it, inserted] = pos_index_.try_emplace(t, static_cast<std::int32_t>(pos_tags_.size()));
  if (inserted) pos_tags_.push_back(t);
  return it->second;
}

Vocabulary Vocabulary::build(const Corpus& train_corpus,
                             const std::vector<std::string>& raw_sg_texts,
                             const PreprocessConfig& cfg) {
  cfg.validate();
  Vocabulary vocab;
  vocab.insert_reserved();

  std::map<std::string, std::uint64_t> counts;  // ordered: first-seen irrelevant, index by sorted order
  for (const Document& doc : train_corpus.documents)
    for (const Token& tok : doc.tokens) ++counts[tok.surface];
  for (const std::string& raw : raw_sg_texts)
    for (const std::string& tok : preprocess(raw, cfg)) ++counts[tok];

  if (counts.empty()) throw std::runtime_error("build_vocab: empty vocabulary source");

  for (const auto& [surface, n] : counts) {
    vocab.frequency_[surface] = n;
    if (n >= static_cast<std::uint64_t>(cfg.min_token_frequency) &&
        !vocab.token_index_.count(surface))
      vocab.add_token(surface);
  }

  std::map<std::string, std::uint64_t> pos_counts;
  for (const Document& doc : train_corpus.documents)
    for (const Token& tok : doc.tokens) ++pos_counts[tok.pos];
  for (const auto& [tag, n] : pos_counts) vocab.add_pos(tag);

  return vocab;
}

std::int32_t Vocabulary::encode(const std::string& surface) const {
  auto it = token_index_.find(surface);
  return it == token_index_.end() ? kUnkIndex : it->second;
}

std::int32_t Vocabulary::encode_pos(const std::string& pos_tag) const {
  auto it = pos_index_.find(pos_tag);
  return it == pos_index_.end() ? kPosUnkIndex : it->second;
}

std::uint64_t Vocabulary::frequency(const std::string& surface) const {
  auto it = frequency_.find(surface);
  return it == frequency_.end() ? 0 : it->second;
}

void Vocabulary::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write vocabulary: " + path);
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    out << escape_token(tokens_[i]) << "\t" << i << "\n";
}

Vocabulary Vocabulary::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vocabulary: " + path);
  Vocabulary vocab;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("vocabulary " + path + " line " +
                               std::to_string(line_no) + ": missing tab");
    const std::string token = unescape_token(line.substr(0, tab));
    const long idx = std::stol(line.substr(tab + 1));
    if (idx != static_cast<long>(vocab.tokens_.size()))
      throw std::runtime_error("vocabulary " + path + " line " +
                               std::to_string(line_no) + ": indices must be dense");
    vocab.add_token(token);
  }
  for (std::size_t i = 0; i < kReservedTokens; ++i) {
    static const char* expected[] = {kUnk, kPad, kArg1Open, kArg1Close, kArg2Open, kArg2Close};
    if (i >= vocab.tokens_.size() || vocab.tokens_[i] != expected[i])
      throw std::runtime_error("vocabulary " + path + ": reserved entries missing or reordered");
  }
  vocab.add_pos(kPosUnk);
  vocab.add_pos(kPosIndicator);
  return vocab;
}

void Vocabulary::save_pos(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write pos map: " + path);
  for (std::size_t i = 0; i < pos_tags_.size(); ++i)
    out << escape_token(pos_tags_[i]) << "\t" << i << "\n";
}

void Vocabulary::load_pos_from(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pos map: " + path);
  pos_tags_.clear();
  pos_index_.clear();
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string::npos) throw std::runtime_error("pos map " + path + ": missing tab");
    add_pos(unescape_token(line.substr(0, tab)));
  }
  if (pos_tags_.empty() || pos_tags_[0] != kPosUnk || pos_tags_[1] != kPosIndicator)
    throw std::runtime_error("pos map " + path + ": reserved entries missing");
}

void Vocabulary::save_frequencies(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write frequencies: " + path);
  std::map<std::string, std::uint64_t> sorted(frequency_.begin(), frequency_.end());
  for (const auto& [token, n] : sorted) out << escape_token(token) << "\t" << n << "\n";
}

void Vocabulary::load_frequencies_from(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open frequencies: " + path);
  frequency_.clear();
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("frequencies " + path + ": missing tab");
    frequency_[unescape_token(line.substr(0, tab))] =
        std::stoull(line.substr(tab + 1));
  }
}

std::uint64_t Vocabulary::content_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  for (const auto& t : tokens_) feed(t);
  for (const auto& t : pos_tags_) feed(t);
  return h;
}

}  // namespace crex
