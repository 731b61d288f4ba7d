#include "colcrush/advisor.hpp"

#include "colcrush/bitmap.hpp"
#include "colcrush/dict.hpp"
#include "colcrush/rle.hpp"

namespace colcrush {

std::string_view to_string(AdviceBranch branch) {
  switch (branch) {
    case AdviceBranch::kSortedRunLength: return "sorted";
    case AdviceBranch::kSmallDomainBitmap: return "unsorted/small-domain";
    case AdviceBranch::kLargeDomainBitDict: return "unsorted/large-domain";
  }
  return "?";
}

SpacePrediction predict_space(const ColumnStats& stats, std::optional<std::uint64_t> run_count) {
  SpacePrediction p;
  p.raw = 4 * stats.row_count;
  ColumnStats ints = stats;
  ints.kind = ValueKind::kInt32;
  if (stats.kind == ValueKind::kString) p.schemes[Scheme::kWordDict] = word_dict_space_bytes(stats);
  p.schemes[Scheme::kBitDict] = bit_dict_space_bytes(ints);
  if (stats.is_sorted) {
    const auto runs = run_count.value_or(stats.domain_size);
    for (auto s : {Scheme::kVlRle, Scheme::kVslRle, Scheme::kVsRle, Scheme::kVsbRle}) {
      p.schemes[s] = rle_space_bytes(rle_variant(s), runs, stats.domain_size);
    }
  }
  return p;
}

Recommendation advise(const ColumnStats& stats, std::optional<std::uint64_t> run_count) {
  Recommendation rec;
  std::string prefix;
  if (stats.kind == ValueKind::kString) {
    rec.preprocessing = Scheme::kWordDict;
    rec.exceeds_word_dict_bound = stats.domain_size >= kWordDictDomainBound;
    prefix = "string column: word-dict to int32 codes first";
    if (rec.exceeds_word_dict_bound) {
      prefix += " (warning: " + std::to_string(stats.domain_size) +
                " distinct values, dictionary past the " +
                std::to_string(kWordDictDomainBound) + "-entry comfort bound)";
    }
    prefix += "; then ";
  }

  if (stats.is_sorted) {
    rec.branch = AdviceBranch::kSortedRunLength;
    rec.primary = Scheme::kVsbRle;
    rec.rationale = prefix + "sorted column: vsb-RLE (smallest run-length layout, queries on runs)";
  } else if (stats.domain_size < kBitmapDomainThreshold) {
    rec.branch = AdviceBranch::kSmallDomainBitmap;
    rec.primary = Scheme::kBitmap;
    rec.rationale = prefix + "unsorted, " + std::to_string(stats.domain_size) +
                    " < " + std::to_string(kBitmapDomainThreshold) +
                    " distinct values: WAH-compressed bitmap index";
  } else {
    rec.branch = AdviceBranch::kLargeDomainBitDict;
    rec.primary = Scheme::kBitDict;
    rec.rationale = prefix + "unsorted, " + std::to_string(stats.domain_size) +
                    " >= " + std::to_string(kBitmapDomainThreshold) +
                    " distinct values: bit-dict (" +
                    std::to_string(min_bit_width(stats.domain_size)) + "-bit codes)";
  }
  rec.predicted = predict_space(stats, run_count);
  return rec;
}

}  // namespace colcrush
