#include "colcrush/bitmap.hpp"

#include <algorithm>
#include <iostream>

#include "colcrush/instrument.hpp"

namespace colcrush {

void default_warning_sink(const std::string& message) {
  std::cerr << "warning: " << message << '\n';
}

const WahBitmap* BitmapIndex::find(std::int32_t value) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), value);
  if (it == domain.end() || *it != value) return nullptr;
  return &bitmaps[it - domain.begin()];
}

WahBitmap BitmapIndex::bitmap_for(std::int32_t value) const {
  if (const auto* b = find(value)) return *b;
  return WahBitmap::zeros(row_count);
}

BitmapIndex bitmap_build(const Column& col, const WarningSink& warn) {
  const auto& values = col.ints();
  BitmapIndex index{col.int_domain(), {}, values.size()};
  const auto d = index.domain.size();
  if (index.exceeds_domain_threshold() && warn) {
    warn("bitmap index over " + std::to_string(d) + " distinct values (threshold " +
         std::to_string(kBitmapDomainThreshold) + ")");
  }

  // Counting sort of row ids by code.
  std::vector<std::uint32_t> codes(values.size());
  std::vector<std::uint64_t> offsets(d + 1, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto it = std::lower_bound(index.domain.begin(), index.domain.end(), values[i]);
    codes[i] = static_cast<std::uint32_t>(it - index.domain.begin());
    ++offsets[codes[i] + 1];
  }
  for (std::size_t c = 0; c < d; ++c) offsets[c + 1] += offsets[c];
  std::vector<std::uint32_t> rows(values.size());
  auto cursor = offsets;
  for (std::size_t i = 0; i < values.size(); ++i) {
    rows[cursor[codes[i]]++] = static_cast<std::uint32_t>(i);
  }

  index.bitmaps.reserve(d);
  for (std::size_t c = 0; c < d; ++c) {
    std::span<const std::uint32_t> mine(rows.data() + offsets[c], offsets[c + 1] - offsets[c]);
    index.bitmaps.push_back(WahBitmap::from_positions(mine, values.size()));
  }
  return index;
}

Column bitmap_decode(const BitmapIndex& index, std::string name) {
  Int32Values values(index.row_count);
  for (std::size_t c = 0; c < index.domain.size(); ++c) {
    for (auto row : index.bitmaps[c].positions()) values[row] = index.domain[c];
  }
  instrument::add_decoded_values(values.size());
  return Column(std::move(name), std::move(values));
}

SpaceEstimate bitmap_space_bytes(const BitmapIndex& index) {
  SpaceEstimate s;
  for (const auto& b : index.bitmaps) s.payload += 4 * b.words().size();
  s.dictionary = 16 * index.bitmaps.size();
  return s;
}

}  // namespace colcrush
