#include <gtest/gtest.h>

#include <map>
#include <random>

#include "colcrush/error.hpp"
#include "colcrush/huffman.hpp"
#include "colcrush/instrument.hpp"
#include "oracles.hpp"

using namespace colcrush;

namespace {

bool is_prefix_free(const std::vector<Codeword>& cw) {
  for (std::size_t i = 0; i < cw.size(); ++i) {
    for (std::size_t j = 0; j < cw.size(); ++j) {
      if (i == j || cw[i].length > cw[j].length) continue;
      if ((cw[j].bits >> (cw[j].length - cw[i].length)) == cw[i].bits) return false;
    }
  }
  return true;
}

std::uint64_t total_bits(const std::vector<std::uint64_t>& freq,
                         const std::vector<std::uint8_t>& len) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < freq.size(); ++i) bits += freq[i] * len[i];
  return bits;
}

}  // namespace

TEST(Huffman, SmallExampleIsOptimal) {
  std::vector<std::uint64_t> freq{5, 2, 1, 1};
  auto len = huffman_code_lengths(freq);
  EXPECT_EQ(total_bits(freq, len), 15u);
  EXPECT_EQ(total_bits(freq, len), oracles::exhaustive_min_prefix_code_bits(freq));
}

TEST(Huffman, OptimalAgainstExhaustiveSearch) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> size(2, 6);
  std::uniform_int_distribution<std::uint64_t> f(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> freq(size(rng));
    for (auto& x : freq) x = f(rng);
    auto len = huffman_code_lengths(freq);
    ASSERT_EQ(total_bits(freq, len), oracles::exhaustive_min_prefix_code_bits(freq));
  }
}

TEST(Huffman, SingleSymbolGetsOneBit) {
  std::vector<std::uint64_t> freq{9};
  EXPECT_EQ(huffman_code_lengths(freq), (std::vector<std::uint8_t>{1}));
  Column col("A", Int32Values(9, 4));
  auto enc = huffman_encode(col);
  EXPECT_EQ(enc.bit_count, 9u);
  EXPECT_EQ(huffman_decode(enc), col);
}

TEST(Huffman, CanonicalCodewords) {
  std::vector<std::uint8_t> lengths{1, 2, 3, 3};
  auto cw = canonical_codewords(lengths);
  EXPECT_EQ(cw[0], (Codeword{0b0, 1}));
  EXPECT_EQ(cw[1], (Codeword{0b10, 2}));
  EXPECT_EQ(cw[2], (Codeword{0b110, 3}));
  EXPECT_EQ(cw[3], (Codeword{0b111, 3}));
  std::vector<std::uint8_t> unsorted{2, 1};
  EXPECT_THROW(canonical_codewords(unsorted), CorruptStreamError);
  std::vector<std::uint8_t> oversubscribed{1, 1, 1};
  EXPECT_THROW(canonical_codewords(oversubscribed), CorruptStreamError);
}

TEST(Huffman, BitstreamIsMsbFirst) {
  // Frequencies 5,2,1,1 on values 1..4: code 0 for 1, 10 for 2, 110, 111.
  auto enc = huffman_encode(Column("A", Int32Values{1, 1, 1, 1, 1, 2, 2, 3, 4}));
  EXPECT_EQ(enc.bit_count, 15u);
  // 0 0 0 0 0 10 10 110 111
  EXPECT_EQ(enc.bitstream[0], 0b00000101u);
  EXPECT_EQ(enc.bitstream[1], 0b01101110u);
}

TEST(Huffman, ZipfColumnRoundTripAndBounds) {
  auto col = generate({ValueKind::kInt32, 1'000'000, 100, Distribution::zipf(1.0), false, 5});
  auto enc = huffman_encode(col);
  instrument::reset_decoded_values();
  EXPECT_EQ(huffman_decode(enc), col);
  EXPECT_EQ(instrument::decoded_values(), 1'000'000u);
  EXPECT_TRUE(is_prefix_free(enc.codewords()));

  auto freq = oracles::frequencies(col.ints());
  double h = oracles::entropy_bits(freq);
  double l = double(enc.bit_count) / 1e6;
  EXPECT_LE(h, l + 1e-9);
  EXPECT_LT(l, h + 1);

  // More frequent values never get longer codes.
  const auto& syms = std::get<Int32Values>(enc.symbols);
  std::map<std::int32_t, std::uint8_t> len_of;
  for (std::size_t i = 0; i < syms.size(); ++i) len_of[syms[i]] = enc.lengths[i];
  const auto& dom = col.int_domain();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (freq[i] > freq[j]) {
        ASSERT_LE(len_of[dom[i]], len_of[dom[j]]);
      }
    }
  }
}

TEST(Huffman, StringColumn) {
  Column col("State", StringValues{"Alaska", "Alabama", "Alaska", "Ohio", "Alaska"});
  auto enc = huffman_encode(col);
  EXPECT_EQ(enc.kind(), ValueKind::kString);
  EXPECT_EQ(huffman_decode(enc), col);
}

TEST(Huffman, TruncatedStream) {
  auto col = generate({ValueKind::kInt32, 1000, 20, Distribution::zipf(1.0), false, 2});
  auto enc = huffman_encode(col);
  enc.bit_count -= 1;
  EXPECT_THROW(huffman_decode(enc), CorruptStreamError);
}

TEST(Huffman, RejectsEmpty) {
  EXPECT_THROW(huffman_encode(Column("A", Int32Values{})), std::invalid_argument);
}

TEST(HuffmanSpace, Measured) {
  auto enc = huffman_encode(Column("A", Int32Values{1, 1, 1, 1, 1, 2, 2, 3, 4}));
  auto s = huffman_space_bytes(enc);
  EXPECT_EQ(s.payload, 2u);
  EXPECT_EQ(s.dictionary, 4u * 5);
}
