// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <bitset>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "colcrush/advisor.hpp"
#include "colcrush/error.hpp"
#include "colcrush/instrument.hpp"
#include "colcrush/kernels.hpp"
#include "colcrush/query.hpp"
#include "oracles.hpp"

using namespace colcrush;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* name, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Median of `runs` timings after one warm-up call.
double median_seconds(const std::function<void()>& fn, int runs = 5) {
  fn();
  std::vector<double> t;
  for (int i = 0; i < runs; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    t.push_back(seconds_since(t0));
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const WarningSink kQuiet = [](const std::string&) {};

Outcome rle_space_billion_rows() {
  ColumnStats s{ValueKind::kInt32, 1'000'000'000, 1'000'000, true};
  auto p = predict_space(s, 1'000'000);
  auto at = [&](Scheme sc) { return p.schemes.at(sc).payload; };
  bool ok = p.raw == 4'000'000'000u && at(Scheme::kVlRle) == 8'000'000u &&
            at(Scheme::kVslRle) == 12'000'000u && at(Scheme::kVsRle) == 8'000'000u &&
            at(Scheme::kVsbRle) == 6'500'000u && advise(s).primary == Scheme::kVsbRle;
  std::ostringstream d;
  d << "raw " << p.raw << " B, vl " << at(Scheme::kVlRle) << ", vsl " << at(Scheme::kVslRle)
    << ", vs " << at(Scheme::kVsRle) << ", vsb " << at(Scheme::kVsbRle);
  return {ok, d.str()};
}

Outcome rle_space_measured() {
  auto t0 = std::chrono::steady_clock::now();
  auto col = generate({ValueKind::kInt32, 1'000'000, 1000, Distribution::uniform(), true, 1});
  const std::uint64_t r = 1000;
  const std::uint64_t expect[] = {8 * r, 12 * r, 8 * r, 4 * r + (10 * r + 7) / 8};
  const Scheme schemes[] = {Scheme::kVlRle, Scheme::kVslRle, Scheme::kVsRle, Scheme::kVsbRle};
  bool ok = col.domain_size() == r;
  std::ostringstream d;
  for (int i = 0; i < 4; ++i) {
    auto enc = encode(col, schemes[i]);
    auto ser = serialize(enc);
    ok = ok && run_count(enc.as<RleColumn>()) == r && ser.sections.payload == expect[i] &&
         decode(deserialize(ser.bytes), "A") == col;
    d << to_string(schemes[i]) << " " << ser.sections.payload << "/" << expect[i] << " B, ";
  }
  double secs = seconds_since(t0);
  ok = ok && secs < 10.0;
  d << fmt("%.2f s", secs);
  return {ok, d.str()};
}

Outcome bit_dict_anchor() {
  Int32Values v(50);
  for (int i = 0; i < 50; ++i) v[i] = (i * 13) % 50;
  auto enc = bit_dict_encode(Column("A", v));
  auto b = enc.packed.bit_width();
  auto pattern = [&](std::int32_t x) {
    return std::bitset<6>(*enc.code_of(x)).to_string();
  };
  auto p8 = pattern(8), p22 = pattern(22);
  bool ok = b == 6 && min_bit_width(50) == 6 && p8 == "001000" && p22 == "010110";
  return {ok, "width " + std::to_string(b) + ", 8 -> " + p8 + ", 22 -> " + p22};
}

// Runs every admissible codec and predicate shape against the oracle.
struct TransparencyTally {
  std::uint64_t columns = 0, checks = 0, mismatches = 0, decoded_on_compressed = 0;
  std::string first_mismatch;
};

void check_column(const Column& col, const Column& other, const std::vector<Value>& operands,
                  TransparencyTally& tally) {
  ++tally.columns;
  for (auto s : kAllSchemes) {
    if (inadmissible_reason(stats(col), s)) continue;
    auto enc = encode(col, s, kQuiet);
    const bool compressed_path = s != Scheme::kHuffman;
    for (const auto& t : operands) {
      for (auto pred : {Predicate::eq(col.name(), t), Predicate::leq(col.name(), t)}) {
        auto truth = brute_force_query(col, pred, &other);
        instrument::reset_decoded_values();
        auto c = execute(enc, {pred, QueryOutput::kCount});
        auto r = execute(enc, {pred, QueryOutput::kRows});
        auto p = execute(enc, {pred, QueryOutput::kProject, &other});
        if (compressed_path) tally.decoded_on_compressed += instrument::decoded_values();
        tally.checks += 3;
        bool ok = c.count == truth.count && r.rows == truth.rows && p.projected == truth.projected;
        if (!ok) {
          ++tally.mismatches;
          if (tally.first_mismatch.empty()) {
            tally.first_mismatch = std::string(to_string(s)) + " " + to_string(pred) + " n=" +
                                   std::to_string(col.row_count());
          }
        }
      }
    }
    if (s == Scheme::kBitmap && col.row_count() > 0) {
      instrument::reset_decoded_values();
      auto k = col.ints()[col.row_count() / 2];
      auto got = select_leq(enc.as<BitmapIndex>(), other, k);
      tally.decoded_on_compressed += instrument::decoded_values();
      ++tally.checks;
      if (got != *brute_force_query(col, Predicate::leq(col.name(), k), &other).projected) {
        ++tally.mismatches;
      }
    }
  }
}

TransparencyTally run_transparency() {
  TransparencyTally tally;
  const std::uint64_t domains[] = {1, 2, 10, 49, 50, 1000, 100'000};
  const std::uint64_t rows[] = {0, 1, 31, 32, 10'000};
  std::uint64_t seed = 1000;
  for (bool sorted : {false, true}) {
    for (auto d : domains) {
      for (auto n : rows) {
        for (int rep = 0; rep < 3; ++rep) {
          auto dist = rep == 2 ? Distribution::zipf(1.0) : Distribution::uniform();
          auto col = generate({ValueKind::kInt32, n, d, dist, sorted, ++seed});
          auto other = generate({ValueKind::kString, n, 50, Distribution::uniform(), false, ++seed, "B"});
          std::vector<Value> ops{std::int32_t(-1), std::int32_t(0), std::int32_t(d / 2),
                                 std::int32_t(d), std::int32_t(d - 1)};
          if (n > 0) ops.push_back(col.ints()[n / 3]);
          check_column(col, other, ops, tally);
        }
        auto scol = generate({ValueKind::kString, n, d, Distribution::uniform(), sorted, ++seed, "S"});
        auto other = generate({ValueKind::kInt32, n, 7, Distribution::uniform(), false, ++seed, "B"});
        std::vector<Value> ops{std::string("Alabama"), std::string("Alaska"), std::string(""),
                               std::string("Zzz"), string_label(d / 2, d)};
        if (n > 0) ops.push_back(scol.strings()[n / 3]);
        check_column(scol, other, ops, tally);
      }
    }
  }
  return tally;
}

Outcome wah_suite() {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> len(0, 10'000);
  const double densities[] = {0.0, 0.01, 0.5, 0.99, 1.0};
  std::uint64_t pairs = 0, bad = 0;
  for (double da : densities) {
    for (double db : densities) {
      for (int i = 0; i < 48; ++i) {
        auto n = i == 0 ? 0 : i == 1 ? 10'000 : len(rng);
        auto a = i % 2 ? oracles::clustered_bits(n, da, rng) : oracles::random_bits(n, da, rng);
        auto b = i % 3 ? oracles::random_bits(n, db, rng) : oracles::clustered_bits(n, db, rng);
        auto wa = WahBitmap::from_bits(a), wb = WahBitmap::from_bits(b);
        auto o = wah_or(wa, wb), x = wah_and(wa, wb);
        std::vector<bool> no(n), nx(n);
        for (std::size_t k = 0; k < n; ++k) {
          no[k] = a[k] || b[k];
          nx[k] = a[k] && b[k];
        }
        bool ok = wa.to_bits() == a && wb.to_bits() == b && o.to_bits() == no &&
                  x.to_bits() == nx && wa.is_canonical() && wb.is_canonical() &&
                  o.is_canonical() && x.is_canonical() &&
                  wa.positions() == oracles::naive_positions(a);
        ++pairs;
        if (!ok) ++bad;
      }
    }
  }
  return {pairs >= 1000 && bad == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(bad) + " failures"};
}

Outcome huffman_suite() {
  std::vector<std::uint64_t> freq{5, 2, 1, 1};
  auto lens = huffman_code_lengths(freq);
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < freq.size(); ++i) bits += freq[i] * lens[i];
  auto exhaustive = oracles::exhaustive_min_prefix_code_bits(freq);
  auto example = huffman_encode(Column("A", Int32Values{1, 1, 1, 1, 1, 2, 2, 3, 4}));

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint64_t> rows(1, 20'000), dom(1, 400);
  std::uniform_real_distribution<double> skew(0.0, 2.0);
  int inputs = 0, roundtrip_bad = 0, bound_bad = 0, single_symbol = 0;
  for (int i = 0; i < 300; ++i) {
    auto n = rows(rng);
    auto d = i < 10 ? 1 : dom(rng);
    auto dist = i % 2 ? Distribution::zipf(skew(rng)) : Distribution::uniform();
    auto kind = i % 5 == 0 ? ValueKind::kString : ValueKind::kInt32;
    auto col = generate({kind, n, d, dist, false, rng()});
    auto enc = huffman_encode(col);
    ++inputs;
    if (huffman_decode(enc, col.name()) != col) ++roundtrip_bad;
    auto f = std::visit([](const auto& v) { return oracles::frequencies(v); }, col.values());
    double h = oracles::entropy_bits(f);
    double l = double(enc.bit_count) / double(n);
    if (f.size() == 1) {
      // One symbol: H = 0 and the mandated 1-bit code gives L = 1 exactly.
      ++single_symbol;
      if (l != 1.0) ++bound_bad;
    } else if (!(h <= l + 1e-9 && l < h + 1)) {
      ++bound_bad;
    }
  }
  bool ok = bits == 15 && exhaustive == 15 && example.bit_count == 15 && roundtrip_bad == 0 &&
            bound_bad == 0;
  std::ostringstream d;
  d << "{5,2,1,1} -> " << example.bit_count << " bits (exhaustive " << exhaustive << "); "
    << inputs << " fuzzed inputs, " << roundtrip_bad << " roundtrip failures, " << bound_bad
    << " entropy-bound failures (H <= L < H+1 for D >= 2; " << single_symbol
    << " single-symbol inputs at L = H + 1 = 1 by the 1-bit rule)";
  return {ok, d.str()};
}

Outcome performance() {
  std::ostringstream d;
  bool ok = true;

  // vsb-RLE count versus a raw scan over 10^7 sorted rows.
  {
    auto col = generate({ValueKind::kInt32, 10'000'000, 1000, Distribution::uniform(), true, 3});
    auto enc = encode(col, Scheme::kVsbRle);
    const auto& raw = col.ints();
    std::int32_t t = 517;
    std::uint64_t a = 0, b = 0;
    double scan = median_seconds([&] { a = kernels::count_eq_parallel(raw, t); });
    const int batch = 1000;
    double rle = median_seconds([&] {
                   for (int i = 0; i < batch; ++i) b = count_eq(enc, t);
                 }) / batch;
    bool fast = a == b && scan >= 10 * rle;
    ok = ok && fast;
    d << fmt("vsb %.2e s vs scan %.2e s (%.0fx); ", rle, scan, scan / rle);
  }

  // word-dict codes versus string comparison.
  {
    auto col = generate({ValueKind::kString, 2'000'000, 50, Distribution::uniform(), false, 4, "State"});
    auto enc = encode(col, Scheme::kWordDict);
    const std::string t = "Alaska";
    std::uint64_t a = 0, b = 0;
    double strings = median_seconds([&] { a = kernels::count_eq_parallel(col.strings(), t); });
    double codes = median_seconds([&] { b = count_eq(enc, t); });
    ok = ok && a == b && codes < strings;
    d << fmt("word-dict %.2e s vs strings %.2e s (%.1fx); ", codes, strings, strings / codes);
  }

  // Huffman latency tracks rows, not selectivity; vsb-RLE latency does not grow with rows.
  {
    auto small = generate({ValueKind::kInt32, 200'000, 100, Distribution::zipf(1.0), true, 5});
    auto large = generate({ValueKind::kInt32, 1'000'000, 100, Distribution::zipf(1.0), true, 5});
    auto hs = encode(small, Scheme::kHuffman), hl = encode(large, Scheme::kHuffman);
    auto rs = encode(small, Scheme::kVsbRle), rl = encode(large, Scheme::kVsbRle);
    const std::int32_t frequent = 0, rare = 99;
    double h_small = median_seconds([&] { count_eq(hs, frequent); });
    double h_large = median_seconds([&] { count_eq(hl, frequent); });
    double h_rare = median_seconds([&] { count_eq(hl, rare); });
    const int batch = 2000;
    double r_small = median_seconds([&] { for (int i = 0; i < batch; ++i) count_eq(rs, frequent); });
    double r_large = median_seconds([&] { for (int i = 0; i < batch; ++i) count_eq(rl, frequent); });
    double h_growth = h_large / h_small;        // 5x rows
    double h_selectivity = h_rare / h_large;    // ~19% vs ~0.2% selectivity
    double r_growth = r_large / r_small;
    bool linear = h_growth > 2.5 && h_growth < 10.0;
    bool flat_selectivity = h_selectivity > 0.67 && h_selectivity < 1.5;
    bool rle_flat = r_growth < 2.0;
    ok = ok && linear && flat_selectivity && rle_flat;
    d << fmt("huffman 5x rows -> %.2fx time, rare/frequent %.2fx; ", h_growth, h_selectivity);
    d << fmt("vsb 5x rows -> %.2fx time", r_growth);
  }
  return {ok, d.str()};
}

Outcome advisor_totality() {
  const std::uint64_t domains[] = {0, 1, 2, 49, 50, 51, 1000, 49'999, 50'000, 100'000, 1u << 31};
  const std::uint64_t rows[] = {0, 1, 1000, 1'000'000'000};
  int combos = 0, bad = 0;
  for (auto kind : {ValueKind::kInt32, ValueKind::kString}) {
    for (bool sorted : {false, true}) {
      for (auto d : domains) {
        for (auto n : rows) {
          ColumnStats s{kind, n, d, sorted};
          auto rec = advise(s);
          ++combos;
          // Expected branch, written out independently of the advisor.
          AdviceBranch want = sorted ? AdviceBranch::kSortedRunLength
                              : d < 50 ? AdviceBranch::kSmallDomainBitmap
                                       : AdviceBranch::kLargeDomainBitDict;
          Scheme scheme = sorted ? Scheme::kVsbRle : d < 50 ? Scheme::kBitmap : Scheme::kBitDict;
          bool string_first = kind == ValueKind::kString;
          bool ok = rec.branch == want && rec.primary == scheme &&
                    rec.preprocessing.has_value() == string_first &&
                    (!string_first || *rec.preprocessing == Scheme::kWordDict) &&
                    rec.primary != Scheme::kHuffman &&
                    rec.exceeds_word_dict_bound == (string_first && d >= 50'000) &&
                    rec.rationale.find(to_string(scheme)) != std::string::npos && advise(s).rationale == rec.rationale;
          if (!ok) ++bad;
        }
      }
    }
  }
  return {bad == 0, std::to_string(combos) + " stat combinations, " + std::to_string(bad) +
                        " off-branch"};
}

}  // namespace

int main() {
  report("rle-space-billion-rows", rle_space_billion_rows);
  report("rle-space-measured", rle_space_measured);
  report("bit-dict-anchor", bit_dict_anchor);

  TransparencyTally tally;
  report("codec-transparency", [&] {
    tally = run_transparency();
    std::ostringstream d;
    d << tally.columns << " columns, " << tally.checks << " checks, " << tally.mismatches
      << " mismatches" << (tally.first_mismatch.empty() ? "" : " (first: " + tally.first_mismatch + ")");
    return Outcome{tally.columns >= 200 && tally.mismatches == 0, d.str()};
  });
  report("wah-suite", wah_suite);
  report("huffman-suite", huffman_suite);
  report("no-decode", [&] {
    return Outcome{tally.columns > 0 && tally.decoded_on_compressed == 0,
                   std::to_string(tally.decoded_on_compressed) +
                       " values decoded on dict/RLE/bitmap paths across the transparency suite"};
  });
  report("performance-direction", performance);
  report("advisor-totality", advisor_totality);

  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
