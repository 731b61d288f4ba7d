#include "colcrush/rle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "colcrush/error.hpp"
#include "colcrush/instrument.hpp"

namespace colcrush {

std::string_view to_string(RleVariant variant) {
  switch (variant) {
    case RleVariant::kVl: return "vl";
    case RleVariant::kVsl: return "vsl";
    case RleVariant::kVs: return "vs";
    case RleVariant::kVsb: return "vsb";
  }
  return "?";
}

RleVariant variant_of(const RleColumn& col) { return static_cast<RleVariant>(col.index()); }

namespace {

// (value, start, length) view of any variant.
std::vector<VslRun> full_runs(const RleColumn& col) {
  std::vector<VslRun> out;
  std::visit(
      [&out](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, VlRleColumn>) {
          std::uint32_t start = 0;
          for (const auto& r : c.runs) {
            out.push_back({r.value, start, r.length});
            start += r.length;
          }
        } else if constexpr (std::is_same_v<T, VslRleColumn>) {
          out = c.runs;
        } else if constexpr (std::is_same_v<T, VsRleColumn>) {
          for (std::size_t i = 0; i < c.runs.size(); ++i) {
            auto end = i + 1 < c.runs.size() ? c.runs[i + 1].start : c.row_count;
            out.push_back({c.runs[i].value, c.runs[i].start,
                           static_cast<std::uint32_t>(end - c.runs[i].start)});
          }
        } else {
          for (std::size_t i = 0; i < c.starts.size(); ++i) {
            auto end = i + 1 < c.starts.size() ? c.starts[i + 1] : c.row_count;
            out.push_back({c.domain.at(c.values[i]), c.starts[i],
                           static_cast<std::uint32_t>(end - c.starts[i])});
          }
        }
      },
      col);
  return out;
}

VsbRleColumn vsb_from_runs(const std::vector<VslRun>& runs, std::uint64_t rows) {
  VsbRleColumn out;
  out.row_count = rows;
  for (const auto& r : runs) {
    out.domain.push_back(r.value);
    out.starts.push_back(r.start);
  }
  // Runs of a sorted column have strictly increasing values, so run i gets
  // code i; kept general in case the domain list is ever shared.
  std::vector<std::uint32_t> codes(runs.size());
  for (std::size_t i = 0; i < runs.size(); ++i) {
    auto it = std::lower_bound(out.domain.begin(), out.domain.end(), runs[i].value);
    codes[i] = static_cast<std::uint32_t>(it - out.domain.begin());
  }
  out.values = BitPackedVector::pack(codes, min_bit_width(out.domain.size()));
  return out;
}

RleColumn from_runs(const std::vector<VslRun>& runs, std::uint64_t rows, RleVariant v) {
  switch (v) {
    case RleVariant::kVl: {
      VlRleColumn out{{}, rows};
      out.runs.reserve(runs.size());
      for (const auto& r : runs) out.runs.push_back({r.value, r.length});
      return out;
    }
    case RleVariant::kVsl:
      return VslRleColumn{runs, rows};
    case RleVariant::kVs: {
      VsRleColumn out{{}, rows};
      out.runs.reserve(runs.size());
      for (const auto& r : runs) out.runs.push_back({r.value, r.start});
      return out;
    }
    case RleVariant::kVsb:
      return vsb_from_runs(runs, rows);
  }
  throw std::invalid_argument("unknown RLE variant");
}

// Uniform run accessors for the binary search.
std::size_t runs_in(const VlRleColumn& c) { return c.runs.size(); }
std::size_t runs_in(const VslRleColumn& c) { return c.runs.size(); }
std::size_t runs_in(const VsRleColumn& c) { return c.runs.size(); }
std::size_t runs_in(const VsbRleColumn& c) { return c.starts.size(); }

std::int32_t value_of_run(const VlRleColumn& c, std::size_t i, ProbeStats*) { return c.runs[i].value; }
std::int32_t value_of_run(const VslRleColumn& c, std::size_t i, ProbeStats*) { return c.runs[i].value; }
std::int32_t value_of_run(const VsRleColumn& c, std::size_t i, ProbeStats*) { return c.runs[i].value; }
std::int32_t value_of_run(const VsbRleColumn& c, std::size_t i, ProbeStats* p) {
  if (p) ++p->unpacks;
  return c.domain[c.values[i]];
}

// First run whose value is >= t (lower_bound) or > t (upper_bound).
template <typename C>
std::size_t search_runs(const C& c, std::int32_t t, bool upper, ProbeStats* p) {
  std::size_t lo = 0, hi = runs_in(c);
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (p) ++p->probes;
    auto v = value_of_run(c, mid, p);
    if (upper ? v <= t : v < t) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

template <typename C>
bool run_holds(const C& c, std::size_t i, std::int32_t t) {
  return i < runs_in(c) && value_of_run(c, i, nullptr) == t;
}

std::uint32_t start_of_run(const VlRleColumn& c, std::size_t i) {
  std::uint32_t s = 0;
  for (std::size_t j = 0; j < i; ++j) s += c.runs[j].length;
  return s;
}
std::uint32_t start_of_run(const VslRleColumn& c, std::size_t i) { return c.runs[i].start; }
std::uint32_t start_of_run(const VsRleColumn& c, std::size_t i) { return c.runs[i].start; }
std::uint32_t start_of_run(const VsbRleColumn& c, std::size_t i) { return c.starts[i]; }

std::uint32_t length_of_run(const VlRleColumn& c, std::size_t i) { return c.runs[i].length; }
std::uint32_t length_of_run(const VslRleColumn& c, std::size_t i) { return c.runs[i].length; }
std::uint32_t length_of_run(const VsRleColumn& c, std::size_t i) {
  auto end = i + 1 < c.runs.size() ? std::uint64_t{c.runs[i + 1].start} : c.row_count;
  return static_cast<std::uint32_t>(end - c.runs[i].start);
}
std::uint32_t length_of_run(const VsbRleColumn& c, std::size_t i) {
  auto end = i + 1 < c.starts.size() ? std::uint64_t{c.starts[i + 1]} : c.row_count;
  return static_cast<std::uint32_t>(end - c.starts[i]);
}

}  // namespace

RleColumn rle_encode(const Column& col, RleVariant variant) {
  const auto& values = col.ints();
  if (!col.is_sorted()) throw UnsortedColumnError();
  if (values.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("RLE columns are limited to 2^32 - 1 rows");
  }
  std::vector<VslRun> runs;
  for (std::uint32_t i = 0; i < values.size(); ++i) {
    if (runs.empty() || runs.back().value != values[i]) {
      runs.push_back({values[i], i, 1});
    } else {
      ++runs.back().length;
    }
  }
  return from_runs(runs, values.size(), variant);
}

Column rle_decode(const RleColumn& col, std::string name) {
  Int32Values values;
  values.reserve(row_count(col));
  for (const auto& r : full_runs(col)) values.insert(values.end(), r.length, r.value);
  instrument::add_decoded_values(values.size());
  return Column(std::move(name), std::move(values));
}

RleColumn convert(const RleColumn& col, RleVariant target) {
  if (variant_of(col) == target) return col;
  return from_runs(full_runs(col), row_count(col), target);
}

VlRleColumn to_vl(const RleColumn& col) { return std::get<VlRleColumn>(convert(col, RleVariant::kVl)); }
VslRleColumn to_vsl(const RleColumn& col) { return std::get<VslRleColumn>(convert(col, RleVariant::kVsl)); }
VsRleColumn to_vs(const RleColumn& col) { return std::get<VsRleColumn>(convert(col, RleVariant::kVs)); }
VsbRleColumn to_vsb(const RleColumn& col) { return std::get<VsbRleColumn>(convert(col, RleVariant::kVsb)); }

std::uint64_t run_count(const RleColumn& col) {
  return std::visit([](const auto& c) -> std::uint64_t { return runs_in(c); }, col);
}

std::uint64_t row_count(const RleColumn& col) {
  return std::visit([](const auto& c) { return c.row_count; }, col);
}

std::optional<RunExtent> rle_locate(const RleColumn& col, std::int32_t t, ProbeStats* probe) {
  return std::visit(
      [t, probe](const auto& c) -> std::optional<RunExtent> {
        auto i = search_runs(c, t, false, probe);
        if (!run_holds(c, i, t)) return std::nullopt;
        return RunExtent{start_of_run(c, i), length_of_run(c, i)};
      },
      col);
}

std::uint64_t rle_count_eq(const RleColumn& col, std::int32_t t, ProbeStats* probe) {
  return std::visit(
      [t, probe](const auto& c) -> std::uint64_t {
        auto i = search_runs(c, t, false, probe);
        return run_holds(c, i, t) ? length_of_run(c, i) : 0;
      },
      col);
}

std::uint64_t rle_leq_end(const RleColumn& col, std::int32_t k, ProbeStats* probe) {
  return std::visit(
      [k, probe](const auto& c) -> std::uint64_t {
        auto i = search_runs(c, k, true, probe);
        if (i == 0) return 0;
        return std::uint64_t{start_of_run(c, i - 1)} + length_of_run(c, i - 1);
      },
      col);
}

SpaceEstimate rle_space_bytes(RleVariant variant, std::uint64_t runs, std::uint64_t domain_size) {
  switch (variant) {
    case RleVariant::kVl: return {8 * runs, 0};
    case RleVariant::kVsl: return {12 * runs, 0};
    case RleVariant::kVs: return {8 * runs, 0};
    case RleVariant::kVsb:
      return {4 * runs + (runs * min_bit_width(domain_size) + 7) / 8, 4 * domain_size};
  }
  throw std::invalid_argument("unknown RLE variant");
}

}  // namespace colcrush
