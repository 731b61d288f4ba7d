#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "colcrush/column.hpp"

namespace colcrush {

namespace {

// Alphabetical, so label order equals rank order.
constexpr std::array<std::string_view, 50> kStates = {
    "Alabama",       "Alaska",         "Arizona",      "Arkansas",
    "California",    "Colorado",       "Connecticut",  "Delaware",
    "Florida",       "Georgia",        "Hawaii",       "Idaho",
    "Illinois",      "Indiana",        "Iowa",         "Kansas",
    "Kentucky",      "Louisiana",      "Maine",        "Maryland",
    "Massachusetts", "Michigan",       "Minnesota",    "Mississippi",
    "Missouri",      "Montana",        "Nebraska",     "Nevada",
    "New Hampshire", "New Jersey",     "New Mexico",   "New York",
    "North Carolina", "North Dakota",  "Ohio",         "Oklahoma",
    "Oregon",        "Pennsylvania",   "Rhode Island", "South Carolina",
    "South Dakota",  "Tennessee",      "Texas",        "Utah",
    "Vermont",       "Virginia",       "Washington",   "West Virginia",
    "Wisconsin",     "Wyoming"};

std::vector<double> zipf_weights(std::uint64_t n, double s) {
  std::vector<double> w(n);
  for (std::uint64_t k = 0; k < n; ++k) w[k] = 1.0 / std::pow(double(k + 1), s);
  return w;
}

}  // namespace

std::string string_label(std::uint64_t index, std::uint64_t domain_size) {
  if (domain_size <= kStates.size()) return std::string(kStates.at(index));
  auto width = std::to_string(domain_size - 1).size();
  auto digits = std::to_string(index);
  return "v" + std::string(width - digits.size(), '0') + digits;
}

Column generate(const GenerateOptions& options) {
  const auto n = options.row_count;
  const auto d = options.domain_size;
  if (n > 0 && d == 0) throw std::invalid_argument("domain_size must be >= 1");
  if (d > std::uint64_t{1} << 31) {
    throw std::invalid_argument("domain_size exceeds int32 range");
  }

  std::mt19937_64 rng(options.seed);
  Int32Values ranks(n);
  if (n > 0) {
    if (options.distribution.kind == DistributionKind::kZipf) {
      auto w = zipf_weights(d, options.distribution.zipf_s);
      std::discrete_distribution<std::int32_t> pick(w.begin(), w.end());
      for (auto& r : ranks) r = pick(rng);
    } else {
      std::uniform_int_distribution<std::int32_t> pick(0, std::int32_t(d - 1));
      for (auto& r : ranks) r = pick(rng);
    }
  }
  if (options.sorted) std::sort(ranks.begin(), ranks.end());

  if (options.kind == ValueKind::kInt32) return Column(options.name, std::move(ranks));

  StringValues out;
  out.reserve(n);
  if (d > n) {
    for (auto r : ranks) out.push_back(string_label(r, d));
  } else {
    std::vector<std::string> labels(d);
    for (std::uint64_t i = 0; i < d; ++i) labels[i] = string_label(i, d);
    for (auto r : ranks) out.push_back(labels[r]);
  }
  return Column(options.name, std::move(out));
}

}  // namespace colcrush
