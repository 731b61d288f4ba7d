#pragma once

// Scan kernels behind the query operators. Each comes as a serial
// reference and an OpenMP version; the tests hold the two equal and
// bench/ compares their speed.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colcrush/bitpack.hpp"

namespace colcrush::kernels {

using RowIds = std::vector<std::uint32_t>;

template <typename Match>
std::uint64_t count_if_serial(std::uint64_t n, Match match) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) count += match(i) ? 1 : 0;
  return count;
}

template <typename Match>
std::uint64_t count_if_parallel(std::uint64_t n, Match match) {
  std::uint64_t count = 0;
  const auto len = static_cast<std::int64_t>(n);
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t i = 0; i < len; ++i) count += match(static_cast<std::uint64_t>(i)) ? 1 : 0;
  return count;
}

template <typename Match>
RowIds select_if_serial(std::uint64_t n, Match match) {
  RowIds rows;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (match(i)) rows.push_back(static_cast<std::uint32_t>(i));
  }
  return rows;
}

// Each thread collects its contiguous chunk; chunks are joined in order.
template <typename Match>
RowIds select_if_parallel(std::uint64_t n, Match match);

std::uint64_t count_eq_serial(std::span<const std::int32_t> values, std::int32_t t);
std::uint64_t count_eq_parallel(std::span<const std::int32_t> values, std::int32_t t);
std::uint64_t count_leq_serial(std::span<const std::int32_t> values, std::int32_t k);
std::uint64_t count_leq_parallel(std::span<const std::int32_t> values, std::int32_t k);

std::uint64_t count_eq_serial(std::span<const std::uint32_t> codes, std::uint32_t c);
std::uint64_t count_eq_parallel(std::span<const std::uint32_t> codes, std::uint32_t c);
std::uint64_t count_leq_serial(std::span<const std::uint32_t> codes, std::uint32_t c);
std::uint64_t count_leq_parallel(std::span<const std::uint32_t> codes, std::uint32_t c);

std::uint64_t count_eq_serial(std::span<const std::string> values, std::string_view t);
std::uint64_t count_eq_parallel(std::span<const std::string> values, std::string_view t);

std::uint64_t packed_count_eq_serial(const BitPackedVector& packed, std::uint32_t c);
std::uint64_t packed_count_eq_parallel(const BitPackedVector& packed, std::uint32_t c);
std::uint64_t packed_count_leq_serial(const BitPackedVector& packed, std::uint32_t c);
std::uint64_t packed_count_leq_parallel(const BitPackedVector& packed, std::uint32_t c);

int max_threads();

}  // namespace colcrush::kernels

#include "colcrush/kernels_impl.hpp"
