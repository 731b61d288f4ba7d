#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "colcrush/column.hpp"
#include "colcrush/encoded.hpp"

namespace colcrush {

/// Below this many distinct values a string column's dictionary is
/// considered small enough to keep resident.
inline constexpr std::uint64_t kWordDictDomainBound = 50'000;

enum class AdviceBranch {
  kSortedRunLength,    // sorted -> vsb-RLE
  kSmallDomainBitmap,  // unsorted, D < 50 -> compressed bitmap
  kLargeDomainBitDict, // unsorted, D >= 50 -> bit-DICT
};

std::string_view to_string(AdviceBranch branch);

/// Byte predictions from the analytic space models. `raw` is 4 bytes per
/// row of the integer column (after word-DICT for strings).
struct SpacePrediction {
  std::uint64_t raw = 0;
  std::map<Scheme, SpaceEstimate> schemes;

  friend bool operator==(const SpacePrediction&, const SpacePrediction&) = default;
};

struct Recommendation {
  Scheme primary = Scheme::kBitDict;
  std::optional<Scheme> preprocessing;  // word-DICT for string columns
  AdviceBranch branch = AdviceBranch::kLargeDomainBitDict;
  bool exceeds_word_dict_bound = false;
  std::string rationale;
  SpacePrediction predicted;
};

/// Predicted sizes for the modeled schemes: bit-DICT and, for sorted
/// columns, the four run-length variants (word-DICT too for strings).
/// Sorted columns default to one run per distinct value. Bitmap and
/// Huffman sizes depend on the data and are not predicted.
SpacePrediction predict_space(const ColumnStats& stats,
                              std::optional<std::uint64_t> run_count = std::nullopt);

/// Picks the scheme: strings are word-DICT encoded first; then sorted ->
/// vsb-RLE, otherwise a compressed bitmap for small domains and bit-DICT
/// for large ones. Huffman is never chosen.
Recommendation advise(const ColumnStats& stats,
                      std::optional<std::uint64_t> run_count = std::nullopt);

}  // namespace colcrush
