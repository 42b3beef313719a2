#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "siglm/errors.hpp"

namespace siglm {

// --- digests -----------------------------------------------------------

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data);
std::string sha256_hex(std::span<const uint8_t> data);
std::string sha256_hex(std::string_view text);
uint32_t crc32_of(std::span<const uint8_t> data);
uint32_t crc32_of(std::string_view text);

// Seeded FNV-1a, used for feature hashing.
uint64_t fnv1a64(std::string_view data, uint64_t seed);

std::string to_hex(std::span<const uint8_t> data);
std::vector<uint8_t> from_hex(std::string_view hex);

std::string base64_encode(std::span<const uint8_t> data);

// --- little-endian binary io --------------------------------------------

class BinWriter {
 public:
  void u8(uint8_t v) { buf_.push_back(v); }
  void u16(uint16_t v);
  void u32(uint32_t v);
  void u64(uint64_t v);
  void f64(double v);
  void varint(uint64_t v);
  void bytes(std::span<const uint8_t> data);
  void bytes(std::string_view data);

  const std::vector<uint8_t>& data() const { return buf_; }
  std::vector<uint8_t> take() { return std::move(buf_); }
  size_t size() const { return buf_.size(); }

 private:
  std::vector<uint8_t> buf_;
};

// Reader throwing CorruptPayload on truncation.
class BinReader {
 public:
  explicit BinReader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t u8();
  uint16_t u16();
  uint32_t u32();
  uint64_t u64();
  double f64();
  uint64_t varint();
  std::vector<uint8_t> bytes(size_t n);
  std::string str(size_t n);

  size_t pos() const { return pos_; }
  size_t remaining() const { return data_.size() - pos_; }
  bool eof() const { return pos_ >= data_.size(); }

 private:
  void need(size_t n) const;
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

// MSB-first bit stream used by the entropy coder.
class BitWriter {
 public:
  void put(uint64_t code, int nbits);
  uint64_t bit_count() const { return bits_; }
  std::vector<uint8_t> finish();

 private:
  std::vector<uint8_t> buf_;
  uint8_t cur_ = 0;
  int fill_ = 0;
  uint64_t bits_ = 0;
};

class BitReader {
 public:
  BitReader(std::span<const uint8_t> data, uint64_t bit_count)
      : data_(data), bit_count_(bit_count) {}

  // Throws CorruptPayload past the declared bit count.
  int next();
  uint64_t consumed() const { return pos_; }

 private:
  std::span<const uint8_t> data_;
  uint64_t bit_count_;
  uint64_t pos_ = 0;
};

// --- small string/file helpers -------------------------------------------

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
void write_file(const std::string& path, std::span<const uint8_t> content);

std::string lowercase(std::string_view s);
std::vector<std::string> split_lines(std::string_view text);
std::string trim(std::string_view s);

}  // namespace siglm
