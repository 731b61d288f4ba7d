#pragma once

#include <cstdint>

namespace colcrush {

/// Byte cost of an encoded column, split the way the serialized form is:
/// `payload` is the per-row / per-run data, `dictionary` the code<->value
/// map or per-bitmap headers. Fixed file headers are not counted.
struct SpaceEstimate {
  std::uint64_t payload = 0;
  std::uint64_t dictionary = 0;

  std::uint64_t total() const { return payload + dictionary; }
  friend bool operator==(const SpaceEstimate&, const SpaceEstimate&) = default;
};

}  // namespace colcrush
