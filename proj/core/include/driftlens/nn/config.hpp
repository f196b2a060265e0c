#pragma once

#include <cstdint>

namespace driftlens::nn {

// Decoder-only transformer shape. Pre-norm residual blocks, learned absolute
// positional embeddings, untied unembedding.
struct ModelConfig {
  int n_layers = 4;
  int d_model = 128;
  int n_heads = 4;
  int d_ff = 512;
  int vocab_size = 260;
  int max_seq_len = 256;

  int head_dim() const { return d_model / n_heads; }

  // Throws ValidationError on an inconsistent shape. n_layers may be zero
  // (degenerate embedding-only model, useful for lens sanity checks).
  void validate() const;

  bool operator==(const ModelConfig&) const = default;
};

}  // namespace driftlens::nn
