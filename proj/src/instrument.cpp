#include "colcrush/instrument.hpp"

#include <atomic>

namespace colcrush::instrument {

namespace {
std::atomic<std::uint64_t> g_decoded{0};
}

std::uint64_t decoded_values() { return g_decoded.load(std::memory_order_relaxed); }
void reset_decoded_values() { g_decoded.store(0, std::memory_order_relaxed); }
void add_decoded_values(std::uint64_t n) { g_decoded.fetch_add(n, std::memory_order_relaxed); }

}  // namespace colcrush::instrument
