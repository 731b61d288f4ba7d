#include "colcrush/wah.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "colcrush/error.hpp"

namespace colcrush {

// Appends groups in order, keeping the canonical form.
class WahBuilder {
 public:
  explicit WahBuilder(std::uint64_t bit_length)
      : full_groups_(bit_length / WahBitmap::kGroupBits) {
    out_.bit_length_ = bit_length;
  }

  void fill(bool bit, std::uint64_t groups) {
    group_ += groups;
    while (groups > 0) {
      auto& w = out_.words_;
      const std::uint32_t tag = WahBitmap::kFillFlag | (bit ? WahBitmap::kFillBit : 0);
      if (!w.empty() && (w.back() & ~WahBitmap::kCountMask) == tag &&
          (w.back() & WahBitmap::kCountMask) < WahBitmap::kCountMask) {
        std::uint64_t room = WahBitmap::kCountMask - (w.back() & WahBitmap::kCountMask);
        auto take = std::min(room, groups);
        w.back() += static_cast<std::uint32_t>(take);
        groups -= take;
      } else {
        auto take = std::min<std::uint64_t>(WahBitmap::kCountMask, groups);
        w.push_back(tag | static_cast<std::uint32_t>(take));
        groups -= take;
      }
    }
  }

  // One group of payload bits; the partial tail group stays literal.
  void literal(std::uint32_t bits) {
    if (group_ < full_groups_) {
      if (bits == 0) return fill(false, 1);
      if (bits == WahBitmap::kLiteralMask) return fill(true, 1);
    }
    out_.words_.push_back(bits);
    ++group_;
  }

  // Zero groups up to (excluding) `end`, tail included.
  void zeros_until(std::uint64_t end) {
    if (group_ >= end) return;
    auto full_end = std::min(end, full_groups_);
    if (full_end > group_) fill(false, full_end - group_);
    while (group_ < end) literal(0);
  }

  WahBitmap finish() { return std::move(out_); }

 private:
  WahBitmap out_;
  std::uint64_t full_groups_;
  std::uint64_t group_ = 0;
};

namespace {

std::uint64_t group_count(std::uint64_t bit_length) {
  return (bit_length + WahBitmap::kGroupBits - 1) / WahBitmap::kGroupBits;
}

bool is_fill(std::uint32_t w) { return (w & WahBitmap::kFillFlag) != 0; }
bool fill_bit(std::uint32_t w) { return (w & WahBitmap::kFillBit) != 0; }
std::uint32_t fill_count(std::uint32_t w) { return w & WahBitmap::kCountMask; }

// Walks the words of a bitmap as a sequence of groups.
class Cursor {
 public:
  explicit Cursor(const std::vector<std::uint32_t>& words) : words_(words) { load(); }

  bool done() const { return index_ >= words_.size(); }
  bool on_fill() const { return is_fill(words_[index_]); }
  bool bit() const { return fill_bit(words_[index_]); }
  std::uint64_t remaining() const { return remaining_; }
  std::uint32_t group_bits() const {
    auto w = words_[index_];
    if (!is_fill(w)) return w;
    return fill_bit(w) ? WahBitmap::kLiteralMask : 0;
  }

  void advance(std::uint64_t groups) {
    remaining_ -= groups;
    if (remaining_ == 0) {
      ++index_;
      load();
    }
  }

 private:
  void load() {
    if (!done()) remaining_ = on_fill() ? fill_count(words_[index_]) : 1;
  }

  const std::vector<std::uint32_t>& words_;
  std::size_t index_ = 0;
  std::uint64_t remaining_ = 0;
};

template <typename Op>
WahBitmap combine(const WahBitmap& a, const WahBitmap& b, Op op) {
  if (a.bit_length() != b.bit_length()) {
    throw std::invalid_argument("WAH operands differ in bit length");
  }
  WahBuilder out(a.bit_length());
  Cursor ca(a.words()), cb(b.words());
  while (!ca.done() && !cb.done()) {
    if (ca.on_fill() && cb.on_fill()) {
      auto n = std::min(ca.remaining(), cb.remaining());
      out.fill(op(std::uint32_t{ca.bit()}, std::uint32_t{cb.bit()}) != 0, n);
      ca.advance(n);
      cb.advance(n);
    } else {
      out.literal(op(ca.group_bits(), cb.group_bits()) & WahBitmap::kLiteralMask);
      ca.advance(1);
      cb.advance(1);
    }
  }
  return out.finish();
}

}  // namespace

WahBitmap WahBitmap::zeros(std::uint64_t bit_length) {
  WahBuilder b(bit_length);
  b.zeros_until(group_count(bit_length));
  return b.finish();
}

WahBitmap WahBitmap::from_bits(const std::vector<bool>& bits) {
  WahBuilder b(bits.size());
  const auto groups = group_count(bits.size());
  for (std::uint64_t g = 0; g < groups; ++g) {
    std::uint32_t lit = 0;
    const auto base = g * kGroupBits;
    const auto end = std::min<std::uint64_t>(base + kGroupBits, bits.size());
    for (auto i = base; i < end; ++i) {
      if (bits[i]) lit |= std::uint32_t{1} << (i - base);
    }
    b.literal(lit);
  }
  return b.finish();
}

WahBitmap WahBitmap::from_positions(std::span<const std::uint32_t> positions,
                                    std::uint64_t bit_length) {
  WahBuilder b(bit_length);
  std::uint64_t group = 0;
  std::uint32_t lit = 0;
  bool pending = false;
  for (auto p : positions) {
    if (p >= bit_length) throw std::invalid_argument("bit position past bit length");
    const std::uint64_t g = p / kGroupBits;
    if (pending && g != group) {
      b.literal(lit);
      lit = 0;
      pending = false;
    }
    if (!pending) {
      b.zeros_until(g);
      group = g;
      pending = true;
    }
    lit |= std::uint32_t{1} << (p % kGroupBits);
  }
  if (pending) b.literal(lit);
  b.zeros_until(group_count(bit_length));
  return b.finish();
}

WahBitmap WahBitmap::from_words(std::vector<std::uint32_t> words, std::uint64_t bit_length) {
  const auto groups = group_count(bit_length);
  const auto full = bit_length / kGroupBits;
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto w = words[i];
    if (is_fill(w)) {
      if (fill_count(w) == 0) throw FormatError("WAH fill word with zero count");
      seen += fill_count(w);
      if (seen > full) throw FormatError("WAH fill covers the partial tail group");
    } else {
      if (seen == full && full != groups) {
        auto valid = bit_length % kGroupBits;
        if ((w >> valid) != 0) throw FormatError("WAH tail literal has nonzero slack bits");
      }
      ++seen;
    }
  }
  if (seen != groups) throw FormatError("WAH words do not cover the bit length");
  WahBitmap out;
  out.words_ = std::move(words);
  out.bit_length_ = bit_length;
  return out;
}

std::vector<bool> WahBitmap::to_bits() const {
  std::vector<bool> bits;
  bits.reserve(group_count(bit_length_) * kGroupBits);
  for (auto w : words_) {
    if (is_fill(w)) {
      bits.insert(bits.end(), std::uint64_t{fill_count(w)} * kGroupBits, fill_bit(w));
    } else {
      for (std::uint32_t j = 0; j < kGroupBits; ++j) bits.push_back(((w >> j) & 1) != 0);
    }
  }
  bits.resize(bit_length_);
  return bits;
}

std::uint64_t WahBitmap::popcount() const {
  std::uint64_t n = 0;
  for (auto w : words_) {
    if (is_fill(w)) {
      if (fill_bit(w)) n += std::uint64_t{fill_count(w)} * kGroupBits;
    } else {
      n += std::popcount(w);
    }
  }
  return n;
}

std::vector<std::uint32_t> WahBitmap::positions() const {
  std::vector<std::uint32_t> out;
  std::uint64_t base = 0;
  for (auto w : words_) {
    if (is_fill(w)) {
      const std::uint64_t span = std::uint64_t{fill_count(w)} * kGroupBits;
      if (fill_bit(w)) {
        for (std::uint64_t i = 0; i < span; ++i) out.push_back(static_cast<std::uint32_t>(base + i));
      }
      base += span;
    } else {
      for (auto bits = w; bits != 0; bits &= bits - 1) {
        out.push_back(static_cast<std::uint32_t>(base + std::countr_zero(bits)));
      }
      base += kGroupBits;
    }
  }
  return out;
}

bool WahBitmap::is_canonical() const {
  const auto full = bit_length_ / kGroupBits;
  std::uint64_t group = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    if (is_fill(w)) {
      if (i > 0 && is_fill(words_[i - 1]) && fill_bit(words_[i - 1]) == fill_bit(w)) {
        return false;
      }
      group += fill_count(w);
    } else {
      if (group < full && (w == 0 || w == kLiteralMask)) return false;
      ++group;
    }
  }
  return group == group_count(bit_length_);
}

WahBitmap wah_or(const WahBitmap& a, const WahBitmap& b) {
  return combine(a, b, [](std::uint32_t x, std::uint32_t y) { return x | y; });
}

WahBitmap wah_and(const WahBitmap& a, const WahBitmap& b) {
  return combine(a, b, [](std::uint32_t x, std::uint32_t y) { return x & y; });
}

}  // namespace colcrush
