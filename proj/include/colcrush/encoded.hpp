#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "colcrush/bitmap.hpp"
#include "colcrush/column.hpp"
#include "colcrush/dict.hpp"
#include "colcrush/huffman.hpp"
#include "colcrush/rle.hpp"
#include "colcrush/space.hpp"

namespace colcrush {

/// Codec identity; the numeric value is the tag byte of the "COLD" format.
enum class Scheme : std::uint8_t {
  kWordDict = 1,
  kBitDict = 2,
  kVlRle = 3,
  kVslRle = 4,
  kVsRle = 5,
  kVsbRle = 6,
  kBitmap = 7,
  kHuffman = 8,
};

inline constexpr Scheme kAllSchemes[] = {
    Scheme::kWordDict, Scheme::kBitDict, Scheme::kVlRle,  Scheme::kVslRle,
    Scheme::kVsRle,    Scheme::kVsbRle,  Scheme::kBitmap, Scheme::kHuffman};

std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);
bool is_rle(Scheme scheme);
RleVariant rle_variant(Scheme scheme);

/// Why `scheme` cannot encode a column with these stats, or nullopt.
std::optional<std::string> inadmissible_reason(const ColumnStats& stats, Scheme scheme);

class EncodedColumn {
 public:
  using Payload = std::variant<WordDictColumn, BitDictColumn, RleColumn, BitmapIndex, HuffmanColumn>;

  explicit EncodedColumn(Payload payload) : payload_(std::move(payload)) {}

  Scheme scheme() const;
  ValueKind value_kind() const;
  std::uint64_t row_count() const;
  const Payload& payload() const { return payload_; }

  template <typename T>
  const T& as() const { return std::get<T>(payload_); }

 private:
  Payload payload_;
};

/// Throws UnsortedColumnError (RLE on unsorted input), TypeMismatchError
/// (wrong value kind), or std::invalid_argument (Huffman on empty input).
EncodedColumn encode(const Column& col, Scheme scheme,
                     const WarningSink& warn = default_warning_sink);
Column decode(const EncodedColumn& col, std::string name = "");

struct Serialized {
  std::vector<std::uint8_t> bytes;
  SpaceEstimate sections;  // measured dictionary / payload byte counts
};

// "COLD" | tag | row_count u64 | codec-specific fields (see README).
Serialized serialize(const EncodedColumn& col);
// Throws FormatError / UnknownCodecError.
EncodedColumn deserialize(std::span<const std::uint8_t> bytes);

SpaceEstimate measured_space(const EncodedColumn& col);

void write_encoded(std::ostream& out, const EncodedColumn& col);
EncodedColumn read_encoded(std::istream& in);
void write_encoded_file(const std::string& path, const EncodedColumn& col);
EncodedColumn read_encoded_file(const std::string& path);

}  // namespace colcrush
