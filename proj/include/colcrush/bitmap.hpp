#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "colcrush/column.hpp"
#include "colcrush/space.hpp"
#include "colcrush/wah.hpp"

namespace colcrush {

/// Compressed bitmaps pay one bit-vector per distinct value; columns with
/// this many distinct values or more are outside their sweet spot.
inline constexpr std::uint64_t kBitmapDomainThreshold = 50;

/// One WAH bitmap per distinct value of an int32 column. bitmaps[i] marks
/// the rows holding domain[i]; every row is set in exactly one bitmap.
struct BitmapIndex {
  Int32Values domain;
  std::vector<WahBitmap> bitmaps;
  std::uint64_t row_count = 0;

  // nullptr for values absent from the column.
  const WahBitmap* find(std::int32_t value) const;
  // All-zeros bitmap for absent values.
  WahBitmap bitmap_for(std::int32_t value) const;
  bool exceeds_domain_threshold() const { return domain.size() >= kBitmapDomainThreshold; }
};

using WarningSink = std::function<void(const std::string&)>;

// Writes to stderr.
void default_warning_sink(const std::string& message);

/// Builds the index; calls `warn` (without failing) when the domain is at
/// or above kBitmapDomainThreshold.
BitmapIndex bitmap_build(const Column& col, const WarningSink& warn = default_warning_sink);
Column bitmap_decode(const BitmapIndex& index, std::string name = "");

/// Measured: 4 bytes per WAH word as payload, plus a 16-byte record header
/// (value i32, bit_length u64, word count u32) per bitmap as dictionary.
SpaceEstimate bitmap_space_bytes(const BitmapIndex& index);

}  // namespace colcrush
