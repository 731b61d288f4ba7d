#pragma once

#include <cstdint>

// Process-wide count of values materialized by codec decode routines. The
// compressed query paths never decode, so tests snapshot this around them.
namespace colcrush::instrument {

std::uint64_t decoded_values();
void reset_decoded_values();
void add_decoded_values(std::uint64_t n);

}  // namespace colcrush::instrument
