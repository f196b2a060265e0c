#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "driftlens/common/rng.hpp"
#include "driftlens/nn/config.hpp"

namespace driftlens::nn {

struct TensorSpec {
  std::string name;
  std::vector<int64_t> shape;
  int64_t offset = 0;  // in floats, within the flat blob
  int64_t numel = 0;
};

// Flat float32 parameter (or gradient / moment) store with a named tensor
// table. Tensor offsets are padded to 64-byte boundaries so that every view
// has the same SIMD alignment on every run, which keeps results bit-stable.
class ParamStore {
 public:
  explicit ParamStore(const ModelConfig& cfg);

  const ModelConfig& config() const { return cfg_; }
  const std::vector<TensorSpec>& tensors() const { return specs_; }

  std::span<float> tensor(std::string_view name);
  std::span<const float> tensor(std::string_view name) const;
  bool has_tensor(std::string_view name) const;

  std::span<float> flat() { return {data_.data(), data_.size()}; }
  std::span<const float> flat() const { return {data_.data(), data_.size()}; }
  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }
  size_t size() const { return data_.size(); }

  void fill(float value);

  // Gaussian init for embeddings and projections; norm gains start at 1 and
  // norm biases at 0.
  void init_normal(Rng& rng, float stddev);

  // Name of the tensor owning flat index `i`, e.g. "block2.attn.wq[17]".
  // Padding gaps report as "<pad>".
  std::string describe_index(size_t i) const;

  // Throws ComputeError naming the first non-finite entry, if any.
  void check_finite(std::string_view context) const;

 private:
  ModelConfig cfg_;
  std::vector<TensorSpec> specs_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<float> data_;  // 64-byte aligned storage via reserve trick below
  // Alignment: we allocate into an aligned buffer.
  struct Aligned {
    float* ptr = nullptr;
    size_t n = 0;
  };
};

}  // namespace driftlens::nn
