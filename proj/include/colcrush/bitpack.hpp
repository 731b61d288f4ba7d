#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace colcrush {

/// max(1, ceil(log2 D)): bits needed to give each of D values its own code.
unsigned min_bit_width(std::uint64_t domain_size);

/// Fixed-width codes packed little-endian into 64-bit words: code i occupies
/// bits [i*b, (i+1)*b) of the word stream, low-order bits first, and may
/// straddle a word boundary. Bits past size()*b are zero.
class BitPackedVector {
 public:
  BitPackedVector() = default;

  // Throws std::invalid_argument when a code does not fit in bit_width bits.
  static BitPackedVector pack(std::span<const std::uint32_t> codes, unsigned bit_width);

  // Rebuilds from the contiguous byte form produced by to_bytes().
  static BitPackedVector from_bytes(std::span<const std::uint8_t> bytes,
                                    unsigned bit_width, std::uint64_t count);

  unsigned bit_width() const { return bit_width_; }
  std::uint64_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  std::uint32_t operator[](std::uint64_t i) const {
    const std::uint64_t bit = i * bit_width_;
    const std::uint64_t word = bit >> 6;
    const unsigned offset = bit & 63;
    std::uint64_t v = words_[word] >> offset;
    if (offset + bit_width_ > 64) v |= words_[word + 1] << (64 - offset);
    return static_cast<std::uint32_t>(v & mask());
  }

  // Bounds-checked; throws std::out_of_range.
  std::uint32_t at(std::uint64_t i) const;

  std::vector<std::uint32_t> unpack() const;

  /// ceil(bit_width * size / 8): the packed payload without word padding.
  std::uint64_t payload_bytes() const { return (count_ * bit_width_ + 7) / 8; }
  std::vector<std::uint8_t> to_bytes() const;

  friend bool operator==(const BitPackedVector&, const BitPackedVector&) = default;

 private:
  std::uint64_t mask() const {
    return bit_width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bit_width_) - 1;
  }

  unsigned bit_width_ = 1;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace colcrush
