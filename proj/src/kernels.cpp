#include "colcrush/kernels.hpp"

namespace colcrush::kernels {

std::uint64_t count_eq_serial(std::span<const std::int32_t> values, std::int32_t t) {
  return count_if_serial(values.size(), [&](std::uint64_t i) { return values[i] == t; });
}
std::uint64_t count_eq_parallel(std::span<const std::int32_t> values, std::int32_t t) {
  return count_if_parallel(values.size(), [&](std::uint64_t i) { return values[i] == t; });
}
std::uint64_t count_leq_serial(std::span<const std::int32_t> values, std::int32_t k) {
  return count_if_serial(values.size(), [&](std::uint64_t i) { return values[i] <= k; });
}
std::uint64_t count_leq_parallel(std::span<const std::int32_t> values, std::int32_t k) {
  return count_if_parallel(values.size(), [&](std::uint64_t i) { return values[i] <= k; });
}

std::uint64_t count_eq_serial(std::span<const std::uint32_t> codes, std::uint32_t c) {
  return count_if_serial(codes.size(), [&](std::uint64_t i) { return codes[i] == c; });
}
std::uint64_t count_eq_parallel(std::span<const std::uint32_t> codes, std::uint32_t c) {
  return count_if_parallel(codes.size(), [&](std::uint64_t i) { return codes[i] == c; });
}
std::uint64_t count_leq_serial(std::span<const std::uint32_t> codes, std::uint32_t c) {
  return count_if_serial(codes.size(), [&](std::uint64_t i) { return codes[i] <= c; });
}
std::uint64_t count_leq_parallel(std::span<const std::uint32_t> codes, std::uint32_t c) {
  return count_if_parallel(codes.size(), [&](std::uint64_t i) { return codes[i] <= c; });
}

std::uint64_t count_eq_serial(std::span<const std::string> values, std::string_view t) {
  return count_if_serial(values.size(), [&](std::uint64_t i) { return values[i] == t; });
}
std::uint64_t count_eq_parallel(std::span<const std::string> values, std::string_view t) {
  return count_if_parallel(values.size(), [&](std::uint64_t i) { return values[i] == t; });
}

std::uint64_t packed_count_eq_serial(const BitPackedVector& packed, std::uint32_t c) {
  return count_if_serial(packed.size(), [&](std::uint64_t i) { return packed[i] == c; });
}
std::uint64_t packed_count_eq_parallel(const BitPackedVector& packed, std::uint32_t c) {
  return count_if_parallel(packed.size(), [&](std::uint64_t i) { return packed[i] == c; });
}
std::uint64_t packed_count_leq_serial(const BitPackedVector& packed, std::uint32_t c) {
  return count_if_serial(packed.size(), [&](std::uint64_t i) { return packed[i] <= c; });
}
std::uint64_t packed_count_leq_parallel(const BitPackedVector& packed, std::uint32_t c) {
  return count_if_parallel(packed.size(), [&](std::uint64_t i) { return packed[i] <= c; });
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace colcrush::kernels
