#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "colcrush/column.hpp"
#include "colcrush/space.hpp"

namespace colcrush {

struct Codeword {
  std::uint64_t bits;  // right-aligned
  std::uint8_t length;
  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Canonical Huffman-coded column. The code table is stored as symbols
/// sorted by (code length, value) with their lengths; codewords follow from
/// the canonical assignment. The bitstream is packed most-significant-bit
/// first. There is no random access: reading any row means decoding the
/// stream from the start.
struct HuffmanColumn {
  Values symbols;
  std::vector<std::uint8_t> lengths;
  std::vector<std::uint8_t> bitstream;
  std::uint64_t bit_count = 0;
  std::uint64_t row_count = 0;

  ValueKind kind() const { return kind_of(symbols); }
  // Parallel to `symbols`.
  std::vector<Codeword> codewords() const;

  friend bool operator==(const HuffmanColumn&, const HuffmanColumn&) = default;
};

/// Optimal prefix-code lengths for the given frequencies (all > 0). Ties
/// merge by (frequency, smallest symbol index, creation order). A single
/// symbol gets length 1.
std::vector<std::uint8_t> huffman_code_lengths(std::span<const std::uint64_t> frequencies);

/// Canonical codewords for lengths already in (length, symbol) order.
std::vector<Codeword> canonical_codewords(std::span<const std::uint8_t> sorted_lengths);

// Throws std::invalid_argument for an empty column.
HuffmanColumn huffman_encode(const Column& col);
// Throws CorruptStreamError when the stream ends early or holds an unused code.
Column huffman_decode(const HuffmanColumn& col, std::string name = "");

/// payload: ceil(bit_count / 8); dictionary: per table entry the value
/// (4 bytes, or 4-byte prefix + text) plus a length byte.
SpaceEstimate huffman_space_bytes(const HuffmanColumn& col);

}  // namespace colcrush
