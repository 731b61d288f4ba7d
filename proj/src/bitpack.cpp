#include "colcrush/bitpack.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>
#include <string>

namespace colcrush {

unsigned min_bit_width(std::uint64_t domain_size) {
  if (domain_size <= 2) return 1;
  return static_cast<unsigned>(std::bit_width(domain_size - 1));
}

BitPackedVector BitPackedVector::pack(std::span<const std::uint32_t> codes,
                                      unsigned bit_width) {
  if (bit_width == 0 || bit_width > 32) {
    throw std::invalid_argument("bit width must be in [1, 32]");
  }
  BitPackedVector out;
  out.bit_width_ = bit_width;
  out.count_ = codes.size();
  out.words_.assign((codes.size() * bit_width + 63) / 64, 0);
  const std::uint64_t limit = std::uint64_t{1} << bit_width;
  std::uint64_t bit = 0;
  for (auto code : codes) {
    if (code >= limit) {
      throw std::invalid_argument("code " + std::to_string(code) + " needs more than " +
                                  std::to_string(bit_width) + " bits");
    }
    const std::uint64_t word = bit >> 6;
    const unsigned offset = bit & 63;
    out.words_[word] |= std::uint64_t{code} << offset;
    if (offset + bit_width > 64) out.words_[word + 1] |= std::uint64_t{code} >> (64 - offset);
    bit += bit_width;
  }
  return out;
}

BitPackedVector BitPackedVector::from_bytes(std::span<const std::uint8_t> bytes,
                                            unsigned bit_width, std::uint64_t count) {
  if (bit_width == 0 || bit_width > 32) {
    throw std::invalid_argument("bit width must be in [1, 32]");
  }
  BitPackedVector out;
  out.bit_width_ = bit_width;
  out.count_ = count;
  if (bytes.size() != out.payload_bytes()) {
    throw std::invalid_argument("packed payload size does not match count and width");
  }
  out.words_.assign((count * bit_width + 63) / 64, 0);
  std::memcpy(out.words_.data(), bytes.data(), bytes.size());
  const std::uint64_t used = count * bit_width;
  if (used % 64 != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (used % 64)) - 1;
  }
  return out;
}

std::uint32_t BitPackedVector::at(std::uint64_t i) const {
  if (i >= count_) {
    throw std::out_of_range("bit-packed index " + std::to_string(i) + " >= " +
                            std::to_string(count_));
  }
  return (*this)[i];
}

std::vector<std::uint32_t> BitPackedVector::unpack() const {
  std::vector<std::uint32_t> out(count_);
  for (std::uint64_t i = 0; i < count_; ++i) out[i] = (*this)[i];
  return out;
}

std::vector<std::uint8_t> BitPackedVector::to_bytes() const {
  std::vector<std::uint8_t> out(payload_bytes());
  std::memcpy(out.data(), words_.data(), out.size());
  return out;
}

}  // namespace colcrush
