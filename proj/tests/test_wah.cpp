#include <gtest/gtest.h>

#include <random>

#include "colcrush/bitmap.hpp"
#include "colcrush/error.hpp"
#include "colcrush/wah.hpp"
#include "oracles.hpp"

using namespace colcrush;
using colcrush::oracles::naive_positions;

namespace {

std::vector<bool> bits_of(const char* s) {
  std::vector<bool> v;
  for (; *s; ++s) v.push_back(*s == '1');
  return v;
}

std::vector<bool> naive_op(const std::vector<bool>& a, const std::vector<bool>& b, bool is_or) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = is_or ? (a[i] || b[i]) : (a[i] && b[i]);
  return out;
}

}  // namespace

TEST(Wah, EmptyAndZeros) {
  auto empty = WahBitmap::from_bits({});
  EXPECT_TRUE(empty.words().empty());
  EXPECT_TRUE(empty.positions().empty());
  auto z = WahBitmap::zeros(100);
  EXPECT_EQ(z.to_bits(), std::vector<bool>(100, false));
  EXPECT_TRUE(z.positions().empty());
  EXPECT_TRUE(z.is_canonical());
}

TEST(Wah, WordLayout) {
  // 62 ones then 5 mixed bits: one 1-fill of 2 groups and a tail literal.
  std::vector<bool> bits(62, true);
  for (bool b : {true, false, true, false, false}) bits.push_back(b);
  auto w = WahBitmap::from_bits(bits);
  ASSERT_EQ(w.words().size(), 2u);
  EXPECT_EQ(w.words()[0], 0xC0000002u);
  EXPECT_EQ(w.words()[1], 0b00101u);
  EXPECT_EQ(w.to_bits(), bits);
}

TEST(Wah, ConstantColumnSingleFill) {
  auto exact = WahBitmap::from_bits(std::vector<bool>(31 * 1000, true));
  ASSERT_EQ(exact.words().size(), 1u);
  EXPECT_EQ(exact.words()[0], 0x80000000u | 0x40000000u | 1000u);

  auto with_tail = WahBitmap::from_bits(std::vector<bool>(100000, true));
  ASSERT_EQ(with_tail.words().size(), 2u);  // 3225 groups + 25-bit tail
  EXPECT_EQ(with_tail.words()[0] & WahBitmap::kCountMask, 3225u);
  EXPECT_EQ(with_tail.words()[1], (1u << 25) - 1);
}

TEST(Wah, PositionsExample) {
  auto w = WahBitmap::from_bits(bits_of("1101"));
  EXPECT_EQ(w.positions(), (std::vector<std::uint32_t>{0, 1, 3}));
}

TEST(Wah, OrExampleAnswersLeqTwo) {
  auto b1 = WahBitmap::from_bits(bits_of("1001"));
  auto b2 = WahBitmap::from_bits(bits_of("0100"));
  EXPECT_EQ(wah_or(b1, b2).to_bits(), bits_of("1101"));
  EXPECT_EQ(wah_and(b1, b2).to_bits(), bits_of("0000"));
}

TEST(Wah, OrWithZerosIsIdentity) {
  std::mt19937_64 rng(2);
  auto x = WahBitmap::from_bits(oracles::clustered_bits(5000, 0.3, rng));
  EXPECT_EQ(wah_or(x, WahBitmap::zeros(5000)), x);
  EXPECT_EQ(wah_and(x, WahBitmap::from_bits(std::vector<bool>(5000, true))), x);
}

TEST(Wah, LengthMismatch) {
  EXPECT_THROW(wah_or(WahBitmap::zeros(10), WahBitmap::zeros(11)), std::invalid_argument);
}

TEST(Wah, FuzzedRoundTripAndHomomorphism) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> len(0, 2048);
  const double densities[] = {0.0, 0.01, 0.5, 0.99, 1.0};
  for (int i = 0; i < 1000; ++i) {
    auto n = len(rng);
    double da = densities[i % 5], db = densities[(i / 5) % 5];
    auto a = (i % 2) ? oracles::clustered_bits(n, da, rng) : oracles::random_bits(n, da, rng);
    auto b = oracles::random_bits(n, db, rng);
    auto wa = WahBitmap::from_bits(a), wb = WahBitmap::from_bits(b);
    ASSERT_EQ(wa.to_bits(), a);
    ASSERT_TRUE(wa.is_canonical());
    ASSERT_EQ(wa.positions(), naive_positions(a));
    ASSERT_EQ(WahBitmap::from_positions(naive_positions(a), n), wa);
    auto o = wah_or(wa, wb), x = wah_and(wa, wb);
    ASSERT_EQ(o.to_bits(), naive_op(a, b, true));
    ASSERT_EQ(x.to_bits(), naive_op(a, b, false));
    ASSERT_TRUE(o.is_canonical());
    ASSERT_TRUE(x.is_canonical());
    // Canonical encodings of equal vectors are word-identical.
    ASSERT_EQ(o, WahBitmap::from_bits(naive_op(a, b, true)));
  }
}

TEST(Wah, FromWordsValidates) {
  auto w = WahBitmap::from_bits(bits_of("1101"));
  EXPECT_EQ(WahBitmap::from_words(w.words(), 4), w);
  EXPECT_THROW(WahBitmap::from_words({0x80000000u}, 31), FormatError);  // zero-count fill
  EXPECT_THROW(WahBitmap::from_words({0b10000u}, 4), FormatError);      // slack bit set
  EXPECT_THROW(WahBitmap::from_words({0xC0000001u}, 62), FormatError);  // short
  EXPECT_THROW(WahBitmap::from_words({0xC0000001u}, 20), FormatError);  // fill over tail
}

TEST(Wah, CanonicalCheckDetectsSplitFills) {
  auto split = WahBitmap::from_words({0xC0000001u, 0xC0000001u}, 62);
  EXPECT_FALSE(split.is_canonical());
  auto literal_zero = WahBitmap::from_words({0u, 0u}, 62);
  EXPECT_FALSE(literal_zero.is_canonical());
}

TEST(Bitmap, BuildExample) {
  auto idx = bitmap_build(Column("A", Int32Values{1, 2, 3, 1}));
  EXPECT_EQ(idx.find(1)->to_bits(), bits_of("1001"));
  EXPECT_EQ(idx.find(2)->to_bits(), bits_of("0100"));
  EXPECT_EQ(idx.find(3)->to_bits(), bits_of("0010"));
  EXPECT_EQ(idx.find(4), nullptr);
  EXPECT_EQ(idx.bitmap_for(4).to_bits(), bits_of("0000"));
}

TEST(Bitmap, ConstantColumn) {
  auto idx = bitmap_build(Column("A", Int32Values(100000, 5)));
  ASSERT_EQ(idx.bitmaps.size(), 1u);
  EXPECT_EQ(idx.bitmaps[0], WahBitmap::from_bits(std::vector<bool>(100000, true)));
  EXPECT_EQ(idx.bitmaps[0].words().size(), 2u);
}

TEST(Bitmap, PartitionOnRandomColumn) {
  auto col = generate({ValueKind::kInt32, 10000, 10, Distribution::uniform(), false, 12});
  auto idx = bitmap_build(col);
  auto all = WahBitmap::zeros(col.row_count());
  for (std::size_t i = 0; i < idx.domain.size(); ++i) {
    EXPECT_EQ(idx.bitmaps[i].to_bits(), oracles::naive_bitmap(col.ints(), idx.domain[i]));
    all = wah_or(all, idx.bitmaps[i]);
    for (std::size_t j = i + 1; j < idx.domain.size(); ++j) {
      EXPECT_EQ(wah_and(idx.bitmaps[i], idx.bitmaps[j]).popcount(), 0u);
    }
  }
  EXPECT_EQ(all.popcount(), col.row_count());
}

TEST(Bitmap, WarnsOnWideDomain) {
  std::vector<std::string> warnings;
  auto sink = [&](const std::string& m) { warnings.push_back(m); };
  Int32Values v(100);
  for (int i = 0; i < 100; ++i) v[i] = i % 49;
  bitmap_build(Column("A", v), sink);
  EXPECT_TRUE(warnings.empty());
  for (int i = 0; i < 100; ++i) v[i] = i % 50;
  auto idx = bitmap_build(Column("A", v), sink);
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_EQ(idx.bitmaps.size(), 50u);
}

TEST(BitmapSpace, Measured) {
  auto constant = bitmap_build(Column("A", Int32Values(31 * 1000, 1)));
  EXPECT_EQ(bitmap_space_bytes(constant).payload, 4u);
  EXPECT_EQ(bitmap_space_bytes(bitmap_build(Column("A", Int32Values{}))).payload, 0u);

  auto col = generate({ValueKind::kInt32, 10000, 10, Distribution::uniform(), false, 3});
  auto idx = bitmap_build(col);
  std::uint64_t words = 0;
  for (const auto& b : idx.bitmaps) words += b.words().size();
  EXPECT_EQ(bitmap_space_bytes(idx).payload, 4 * words);
}
