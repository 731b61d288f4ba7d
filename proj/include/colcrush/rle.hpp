#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "colcrush/bitpack.hpp"
#include "colcrush/column.hpp"
#include "colcrush/space.hpp"

namespace colcrush {

// Run-length encodings of a sorted int32 column. Row ids are 0-based and a
// run covers the half-open extent [start, start + length).

struct VlRun {
  std::int32_t value;
  std::uint32_t length;
  friend bool operator==(const VlRun&, const VlRun&) = default;
};

struct VslRun {
  std::int32_t value;
  std::uint32_t start;
  std::uint32_t length;
  friend bool operator==(const VslRun&, const VslRun&) = default;
};

struct VsRun {
  std::int32_t value;
  std::uint32_t start;
  friend bool operator==(const VsRun&, const VsRun&) = default;
};

/// (value, run-length) pairs.
struct VlRleColumn {
  std::vector<VlRun> runs;
  std::uint64_t row_count = 0;
  friend bool operator==(const VlRleColumn&, const VlRleColumn&) = default;
};

/// (value, start, run-length) triples.
struct VslRleColumn {
  std::vector<VslRun> runs;
  std::uint64_t row_count = 0;
  friend bool operator==(const VslRleColumn&, const VslRleColumn&) = default;
};

/// (value, start) pairs; the last run ends at row_count.
struct VsRleColumn {
  std::vector<VsRun> runs;
  std::uint64_t row_count = 0;
  friend bool operator==(const VsRleColumn&, const VsRleColumn&) = default;
};

/// vs-RLE whose run values are bit-DICT codes into `domain`. Starts stay
/// plain 32-bit.
struct VsbRleColumn {
  BitPackedVector values;
  std::vector<std::uint32_t> starts;
  Int32Values domain;
  std::uint64_t row_count = 0;
  friend bool operator==(const VsbRleColumn&, const VsbRleColumn&) = default;
};

enum class RleVariant : std::uint8_t { kVl, kVsl, kVs, kVsb };

std::string_view to_string(RleVariant variant);

using RleColumn = std::variant<VlRleColumn, VslRleColumn, VsRleColumn, VsbRleColumn>;

RleVariant variant_of(const RleColumn& col);

struct RunExtent {
  std::uint32_t start;
  std::uint32_t length;
  friend bool operator==(const RunExtent&, const RunExtent&) = default;
};

/// Work done by a run lookup: runs inspected by the binary search and, for
/// vsb-RLE, bit-packed values unpacked along the way.
struct ProbeStats {
  std::uint64_t probes = 0;
  std::uint64_t unpacks = 0;
};

// Throws UnsortedColumnError for unsorted input, TypeMismatchError for strings.
RleColumn rle_encode(const Column& col, RleVariant variant);
Column rle_decode(const RleColumn& col, std::string name = "");

// Lossless re-encodings between variants, from the runs alone.
VlRleColumn to_vl(const RleColumn& col);
VslRleColumn to_vsl(const RleColumn& col);
VsRleColumn to_vs(const RleColumn& col);
VsbRleColumn to_vsb(const RleColumn& col);
RleColumn convert(const RleColumn& col, RleVariant target);

std::uint64_t run_count(const RleColumn& col);
std::uint64_t row_count(const RleColumn& col);

/// The run holding value t, or nullopt. Binary search over the run values.
/// vl-RLE stores no starts, so its start is a prefix sum over earlier runs.
std::optional<RunExtent> rle_locate(const RleColumn& col, std::int32_t t,
                                    ProbeStats* probe = nullptr);

/// COUNT(*) WHERE A = t: the located run's length; never sums for vl-RLE.
std::uint64_t rle_count_eq(const RleColumn& col, std::int32_t t, ProbeStats* probe = nullptr);

/// Rows with value <= k form the prefix [0, end) of a sorted column.
std::uint64_t rle_leq_end(const RleColumn& col, std::int32_t k, ProbeStats* probe = nullptr);

/// Analytic model: vl 8R, vsl 12R, vs 8R, vsb 4R + ceil(R * b / 8) payload
/// with b = max(1, ceil(log2 D)). vsb-RLE also keeps a 4-byte domain entry per
/// distinct value, reported as dictionary bytes.
SpaceEstimate rle_space_bytes(RleVariant variant, std::uint64_t run_count,
                              std::uint64_t domain_size);

}  // namespace colcrush
