#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "siglm/util.hpp"

namespace siglm {

// Static canonical prefix code over sparse uint32 symbols. Codes are assigned
// canonically (shorter lengths first, ascending symbol within a length), so
// the (symbol, length) table alone reproduces the code bit-exactly. A single
// observed symbol gets a 1-bit code.
class CanonicalCode {
 public:
  static CanonicalCode from_frequencies(const std::map<uint32_t, uint64_t>& freq);

  // Table wire format: u8 max_len, varint count per length 1..max_len, then
  // per length the ascending symbols as varint deltas (first absolute, then
  // gap-1 encoded).
  void serialize_table(BinWriter& w) const;
  static CanonicalCode parse_table(BinReader& r);

  size_t symbol_count() const { return symbols_.size(); }
  const std::vector<std::pair<uint32_t, uint8_t>>& symbol_lengths() const {
    return lengths_by_symbol_;
  }

  void encode(std::span<const uint32_t> symbols, BitWriter& w) const;
  // Reads exactly `count` symbols; throws CorruptPayload on any malformed
  // prefix or stream overrun.
  std::vector<uint32_t> decode(BitReader& r, size_t count) const;

  // Total payload bits for a symbol stream (without the table).
  uint64_t encoded_bits(std::span<const uint32_t> symbols) const;

 private:
  CanonicalCode() = default;
  void build_codes();  // from symbols_ (sorted by (len, symbol))

  // Sorted by (length asc, symbol asc) — canonical order.
  std::vector<std::pair<uint32_t, uint8_t>> symbols_;  // (symbol, length)
  std::vector<std::pair<uint32_t, uint8_t>> lengths_by_symbol_;
  std::map<uint32_t, std::pair<uint64_t, uint8_t>> code_of_;  // symbol -> (code, len)
  // Canonical decode tables indexed by length.
  std::vector<uint64_t> first_code_;
  std::vector<uint32_t> first_index_;
  uint8_t max_len_ = 0;
};

}  // namespace siglm
