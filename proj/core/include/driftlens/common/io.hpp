#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "driftlens/common/error.hpp"

namespace driftlens {

static_assert(std::endian::native == std::endian::little,
              "blob formats are little-endian; big-endian hosts are unsupported");

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for reading: " + path.string());
  std::string out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure: " + path.string());
  return out;
}

inline void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open file for writing: " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failure: " + path.string());
}

inline std::vector<std::byte> read_binary_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for reading: " + path.string());
  std::vector<std::byte> out((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure: " + path.string());
  return out;
}

inline void write_binary_file(const std::filesystem::path& path, const void* data,
                              size_t len) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open file for writing: " + path.string());
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
  if (!out) throw IoError("write failure: " + path.string());
}

inline void append_u64_le(std::vector<std::byte>& buf, uint64_t v) {
  const size_t n = buf.size();
  buf.resize(n + 8);
  std::memcpy(buf.data() + n, &v, 8);
}

inline uint64_t read_u64_le(const std::byte* p) {
  uint64_t v;
  std::memcpy(&v, p, 8);
  return v;
}

}  // namespace driftlens
