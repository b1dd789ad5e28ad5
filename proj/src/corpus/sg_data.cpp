#include "crex/sg_data.hpp"

#include <stdexcept>

namespace crex {

std::string SgDataset::context_name(std::int32_t context, const Vocabulary& vocab) const {
  if (mode == SgMode::sg) return vocab.token(context);
  const auto v = static_cast<std::int32_t>(vocab.token_count());
  return context < v ? "left_" + vocab.token(context)
                     : "right_" + vocab.token(context - v);
}

SgDataset build_sg_dataset(const std::vector<std::vector<std::string>>& texts,
                           const Vocabulary& vocab, int window, SgMode mode) {
  if (window < 1) throw std::invalid_argument("build_sg_dataset: window must be >= 1");
  SgDataset ds;
  ds.mode = mode;
  ds.window = window;
  const auto v = static_cast<std::int32_t>(vocab.token_count());
  ds.context_vocab_size = mode == SgMode::sg ? static_cast<std::size_t>(v)
                                             : static_cast<std::size_t>(2 * v);

  std::vector<std::int32_t> encoded;
  for (const auto& text : texts) {
    encoded.clear();
    encoded.reserve(text.size());
    for (const auto& tok : text) encoded.push_back(vocab.encode(tok));

    const auto n = static_cast<std::ptrdiff_t>(encoded.size());
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      const std::ptrdiff_t lo = j - window < 0 ? 0 : j - window;
      const std::ptrdiff_t hi = j + window >= n ? n - 1 : j + window;
      for (std::ptrdiff_t k = lo; k <= hi; ++k) {
        if (k == j) continue;
        std::int32_t ctx = encoded[k];
        if (mode == SgMode::sglr && k > j) ctx += v;  // right-side prefix
        ds.pairs.push_back({encoded[j], ctx});
      }
    }
  }
  return ds;
}

SgDataset build_sg_dataset_raw(const std::vector<std::string>& raw_texts,
                               const Vocabulary& vocab, int window, SgMode mode,
                               const PreprocessConfig& cfg) {
  std::vector<std::vector<std::string>> texts;
  texts.reserve(raw_texts.size());
  for (const auto& raw : raw_texts) texts.push_back(preprocess(raw, cfg));
  return build_sg_dataset(texts, vocab, window, mode);
}

}  // namespace crex
