#pragma once

// Little-endian byte writer/reader shared by the file formats.

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "colcrush/error.hpp"

namespace colcrush::detail {

static_assert(std::endian::native == std::endian::little,
              "file formats assume a little-endian host");

class ByteWriter {
 public:
  template <typename T>
    requires std::is_integral_v<T>
  void put(T v) {
    const auto* p = reinterpret_cast<const std::uint8_t*>(&v);
    bytes_.insert(bytes_.end(), p, p + sizeof(T));
  }

  void put_bytes(std::span<const std::uint8_t> data) {
    bytes_.insert(bytes_.end(), data.begin(), data.end());
  }

  void put_magic(std::string_view magic) {
    bytes_.insert(bytes_.end(), magic.begin(), magic.end());
  }

  // u32 length prefix + UTF-8 bytes.
  void put_string(std::string_view s) {
    put(static_cast<std::uint32_t>(s.size()));
    bytes_.insert(bytes_.end(), s.begin(), s.end());
  }

  template <typename T>
  void put_array(std::span<const T> values) {
    const auto* p = reinterpret_cast<const std::uint8_t*>(values.data());
    bytes_.insert(bytes_.end(), p, p + values.size_bytes());
  }

  std::size_t size() const { return bytes_.size(); }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  template <typename T>
    requires std::is_integral_v<T>
  T get() {
    need(sizeof(T));
    T v;
    std::memcpy(&v, data_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }

  std::span<const std::uint8_t> get_bytes(std::size_t n) {
    need(n);
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::string get_string() {
    auto n = get<std::uint32_t>();
    auto raw = get_bytes(n);
    return {reinterpret_cast<const char*>(raw.data()), raw.size()};
  }

  template <typename T>
  std::vector<T> get_array(std::size_t count) {
    if (count > remaining() / sizeof(T)) throw FormatError("truncated array");
    std::vector<T> out(count);
    auto raw = get_bytes(count * sizeof(T));
    std::memcpy(out.data(), raw.data(), raw.size());
    return out;
  }

  void expect_magic(std::string_view magic) {
    auto raw = get_bytes(magic.size());
    if (std::memcmp(raw.data(), magic.data(), magic.size()) != 0) {
      throw FormatError("bad magic, expected \"" + std::string(magic) + "\"");
    }
  }

  std::size_t remaining() const { return data_.size() - pos_; }
  std::size_t position() const { return pos_; }

 private:
  void need(std::size_t n) const {
    if (remaining() < n) throw FormatError("unexpected end of data");
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> read_all(std::istream& in);

}  // namespace colcrush::detail
