#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace colcrush {

/// Word-aligned hybrid compressed bit-vector.
///
/// Bits are grouped into 31-bit groups; group g holds bits [31g, 31g + 31).
/// Each 32-bit word is either
///   literal: MSB 0, bit j of the low 31 bits is bit 31g + j, or
///   fill:    MSB 1, bit 30 is the fill bit, low 30 bits count >= 1 groups.
/// Every full group that is all zeros or all ones is absorbed into a fill
/// and adjacent fills never share a fill bit. A trailing partial group
/// (bit_length % 31 != 0) is always a literal with zero slack bits.
class WahBitmap {
 public:
  static constexpr std::uint32_t kGroupBits = 31;
  static constexpr std::uint32_t kFillFlag = 0x80000000u;
  static constexpr std::uint32_t kFillBit = 0x40000000u;
  static constexpr std::uint32_t kCountMask = 0x3FFFFFFFu;
  static constexpr std::uint32_t kLiteralMask = 0x7FFFFFFFu;

  WahBitmap() = default;

  static WahBitmap zeros(std::uint64_t bit_length);
  static WahBitmap from_bits(const std::vector<bool>& bits);
  // `positions` must be strictly ascending and < bit_length.
  static WahBitmap from_positions(std::span<const std::uint32_t> positions,
                                  std::uint64_t bit_length);
  // Validates group accounting and slack bits; throws FormatError.
  static WahBitmap from_words(std::vector<std::uint32_t> words, std::uint64_t bit_length);

  std::uint64_t bit_length() const { return bit_length_; }
  const std::vector<std::uint32_t>& words() const { return words_; }

  std::vector<bool> to_bits() const;
  std::uint64_t popcount() const;
  // Set bit indices, ascending. 0-fills are skipped in O(1).
  std::vector<std::uint32_t> positions() const;
  bool is_canonical() const;

  friend bool operator==(const WahBitmap&, const WahBitmap&) = default;

 private:
  std::vector<std::uint32_t> words_;
  std::uint64_t bit_length_ = 0;

  friend class WahBuilder;
};

// Both operands must have equal bit_length (std::invalid_argument otherwise).
// Streams over the compressed words; the result is canonical.
WahBitmap wah_or(const WahBitmap& a, const WahBitmap& b);
WahBitmap wah_and(const WahBitmap& a, const WahBitmap& b);

}  // namespace colcrush
