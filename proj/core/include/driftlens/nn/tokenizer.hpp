#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace driftlens::nn {

using TokenId = int32_t;
using TokenSeq = std::vector<TokenId>;

// Byte-level tokenizer: ids 0..255 are raw bytes, followed by control ids.
// Round-trips every UTF-8 string byte-exactly.
class ByteTokenizer {
 public:
  static constexpr TokenId kSep = 256;  // document separator / end of text
  static constexpr TokenId kPad = 257;  // padding; excluded from the loss
  static constexpr int kMinVocab = 258;

  TokenSeq encode(std::string_view text) const;

  // Control ids are dropped; byte ids map back to raw bytes.
  std::string decode(std::span<const TokenId> ids) const;

  // Token count of `text` plus one trailing separator, the cost of one
  // document in a packed training stream.
  size_t document_cost(std::string_view text) const { return text.size() + 1; }
};

}  // namespace driftlens::nn
