#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "colcrush/bitpack.hpp"
#include "colcrush/column.hpp"
#include "colcrush/space.hpp"

namespace colcrush {

/// Global string dictionary. Codes are dense and 1-based, assigned in
/// ascending lexicographic order, so code order mirrors string order.
class Dictionary {
 public:
  Dictionary() = default;
  // `entries` must be strictly ascending.
  explicit Dictionary(StringValues entries);

  const StringValues& entries() const { return entries_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(entries_.size()); }

  std::optional<std::uint32_t> code_of(std::string_view value) const;
  // Code of the greatest entry <= value.
  std::optional<std::uint32_t> floor_code(std::string_view value) const;
  // Throws std::out_of_range for codes outside [1, size()].
  const std::string& value_of(std::uint32_t code) const;

  /// Content fingerprint; code-space predicates are tagged with it.
  std::uint64_t generation() const { return generation_; }

  // Sum of entry lengths plus a 4-byte length prefix per entry.
  std::uint64_t byte_size() const;

  friend bool operator==(const Dictionary& a, const Dictionary& b) {
    return a.entries_ == b.entries_;
  }

 private:
  StringValues entries_;
  std::unordered_map<std::string, std::uint32_t> codes_;
  std::uint64_t generation_ = 0;
};

struct WordDictColumn {
  Dictionary dict;
  std::vector<std::uint32_t> codes;

  std::uint64_t row_count() const { return codes.size(); }
};

/// 0-based dense codes into `domain`; domain[c] == c when the original
/// integers are already 0..D-1.
struct BitDictColumn {
  BitPackedVector packed;
  Int32Values domain;

  std::uint64_t row_count() const { return packed.size(); }
  std::optional<std::uint32_t> code_of(std::int32_t value) const;
  std::optional<std::uint32_t> floor_code(std::int32_t value) const;
};

WordDictColumn word_dict_encode(const Column& col);
Column word_dict_decode(const WordDictColumn& col, std::string name = "");

BitDictColumn bit_dict_encode(const Column& col);
Column bit_dict_decode(const BitDictColumn& col, std::string name = "");

/// 4 bytes per row plus the dictionary. `entry_bytes` is the summed length
/// of the distinct strings when known; the per-entry 4-byte prefix is
/// always counted.
SpaceEstimate word_dict_space_bytes(const ColumnStats& stats, std::uint64_t entry_bytes = 0);
/// ceil(b * rows / 8) payload plus a 4-byte domain entry per distinct value.
SpaceEstimate bit_dict_space_bytes(const ColumnStats& stats);

}  // namespace colcrush
