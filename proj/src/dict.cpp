#include "colcrush/dict.hpp"

#include <algorithm>
#include <stdexcept>

#include "colcrush/instrument.hpp"

namespace colcrush {

namespace {

// FNV-1a over length-prefixed entries.
std::uint64_t fingerprint(const StringValues& entries) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  for (const auto& e : entries) {
    auto n = e.size();
    for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(n >> (8 * i)));
    for (char c : e) mix(static_cast<unsigned char>(c));
  }
  return h;
}

}  // namespace

Dictionary::Dictionary(StringValues entries) : entries_(std::move(entries)) {
  if (std::adjacent_find(entries_.begin(), entries_.end(),
                         [](const auto& a, const auto& b) { return !(a < b); }) !=
      entries_.end()) {
    throw std::invalid_argument("dictionary entries must be strictly ascending");
  }
  codes_.reserve(entries_.size());
  for (std::uint32_t i = 0; i < entries_.size(); ++i) codes_.emplace(entries_[i], i + 1);
  generation_ = fingerprint(entries_);
}

std::optional<std::uint32_t> Dictionary::code_of(std::string_view value) const {
  auto it = codes_.find(std::string(value));
  if (it == codes_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> Dictionary::floor_code(std::string_view value) const {
  auto it = std::upper_bound(entries_.begin(), entries_.end(), value,
                             [](std::string_view v, const std::string& e) { return v < e; });
  if (it == entries_.begin()) return std::nullopt;
  return static_cast<std::uint32_t>(it - entries_.begin());
}

const std::string& Dictionary::value_of(std::uint32_t code) const {
  if (code == 0 || code > entries_.size()) {
    throw std::out_of_range("dictionary code " + std::to_string(code) + " out of range");
  }
  return entries_[code - 1];
}

std::uint64_t Dictionary::byte_size() const {
  std::uint64_t n = 0;
  for (const auto& e : entries_) n += 4 + e.size();
  return n;
}

std::optional<std::uint32_t> BitDictColumn::code_of(std::int32_t value) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), value);
  if (it == domain.end() || *it != value) return std::nullopt;
  return static_cast<std::uint32_t>(it - domain.begin());
}

std::optional<std::uint32_t> BitDictColumn::floor_code(std::int32_t value) const {
  auto it = std::upper_bound(domain.begin(), domain.end(), value);
  if (it == domain.begin()) return std::nullopt;
  return static_cast<std::uint32_t>(it - domain.begin() - 1);
}

WordDictColumn word_dict_encode(const Column& col) {
  WordDictColumn out{Dictionary(col.string_domain()), {}};
  const auto& values = col.strings();
  out.codes.reserve(values.size());
  for (const auto& v : values) out.codes.push_back(*out.dict.code_of(v));
  return out;
}

Column word_dict_decode(const WordDictColumn& col, std::string name) {
  StringValues values;
  values.reserve(col.codes.size());
  for (auto c : col.codes) values.push_back(col.dict.value_of(c));
  instrument::add_decoded_values(values.size());
  return Column(std::move(name), std::move(values));
}

BitDictColumn bit_dict_encode(const Column& col) {
  BitDictColumn out;
  out.domain = col.int_domain();
  const auto& values = col.ints();
  std::vector<std::uint32_t> codes;
  codes.reserve(values.size());
  for (auto v : values) {
    auto it = std::lower_bound(out.domain.begin(), out.domain.end(), v);
    codes.push_back(static_cast<std::uint32_t>(it - out.domain.begin()));
  }
  out.packed = BitPackedVector::pack(codes, min_bit_width(out.domain.size()));
  return out;
}

Column bit_dict_decode(const BitDictColumn& col, std::string name) {
  Int32Values values(col.packed.size());
  for (std::uint64_t i = 0; i < values.size(); ++i) values[i] = col.domain.at(col.packed[i]);
  instrument::add_decoded_values(values.size());
  return Column(std::move(name), std::move(values));
}

SpaceEstimate word_dict_space_bytes(const ColumnStats& stats, std::uint64_t entry_bytes) {
  return {4 * stats.row_count, 4 * stats.domain_size + entry_bytes};
}

SpaceEstimate bit_dict_space_bytes(const ColumnStats& stats) {
  const std::uint64_t bits = stats.row_count * min_bit_width(stats.domain_size);
  return {(bits + 7) / 8, 4 * stats.domain_size};
}

}  // namespace colcrush
