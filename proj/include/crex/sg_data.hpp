#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crex/vocab.hpp"

namespace crex {

enum class SgMode { sg, sglr };

// One (center word, context word) sample.  For SGLR the context index lives
// in a doubled vocabulary: [0, V) are left_ contexts, [V, 2V) right_ ones.
struct SgPair {
  std::int32_t center;
  std::int32_t context;
};

struct SgDataset {
  SgMode mode = SgMode::sg;
  int window = 2;
  std::size_t context_vocab_size = 0;
  std::vector<SgPair> pairs;

  // human-readable context label, e.g. "left_scan"
  std::string context_name(std::int32_t context, const Vocabulary& vocab) const;
};

// Enumerates all (center, in-window context) positions over the given
// token sequences; windows truncate at text boundaries.  window >= 1.
SgDataset build_sg_dataset(const std::vector<std::vector<std::string>>& texts,
                           const Vocabulary& vocab, int window, SgMode mode);

// Convenience: preprocesses raw texts with cfg first.
SgDataset build_sg_dataset_raw(const std::vector<std::string>& raw_texts,
                               const Vocabulary& vocab, int window, SgMode mode,
                               const PreprocessConfig& cfg = {});

}  // namespace crex
