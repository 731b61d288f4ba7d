#include <gtest/gtest.h>

#include "colcrush/advisor.hpp"

using namespace colcrush;

TEST(Advisor, TotalOverGrid) {
  for (auto kind : {ValueKind::kInt32, ValueKind::kString}) {
    for (bool sorted : {false, true}) {
      for (std::uint64_t d : {0u, 1u, 2u, 49u, 50u, 51u, 1000u, 49'999u, 50'000u, 1'000'000u}) {
        for (std::uint64_t n : {0u, 1u, 1000u, 1'000'000'000u}) {
          ColumnStats s{kind, n, d, sorted};
          auto rec = advise(s);
          EXPECT_FALSE(rec.rationale.empty());
          EXPECT_NE(rec.primary, Scheme::kHuffman);
          EXPECT_EQ(rec.preprocessing.has_value(), kind == ValueKind::kString);
          if (sorted) {
            EXPECT_EQ(rec.primary, Scheme::kVsbRle);
          } else if (d < 50) {
            EXPECT_EQ(rec.primary, Scheme::kBitmap);
          } else {
            EXPECT_EQ(rec.primary, Scheme::kBitDict);
          }
          EXPECT_EQ(rec.exceeds_word_dict_bound, kind == ValueKind::kString && d >= 50'000);
          EXPECT_EQ(rec.predicted.raw, 4 * n);
        }
      }
    }
  }
}

TEST(Advisor, BillionRowPrediction) {
  ColumnStats s{ValueKind::kInt32, 100'000'000, 1'000'000, true};
  auto p = predict_space(s, 1'000'000);
  EXPECT_EQ(p.raw, 400'000'000u);
  EXPECT_EQ(p.schemes.at(Scheme::kVlRle).payload, 8'000'000u);
  EXPECT_EQ(p.schemes.at(Scheme::kVslRle).payload, 12'000'000u);
  EXPECT_EQ(p.schemes.at(Scheme::kVsRle).payload, 8'000'000u);
  EXPECT_EQ(p.schemes.at(Scheme::kVsbRle).payload, 6'500'000u);
  EXPECT_EQ(p.schemes.at(Scheme::kBitDict).payload, 250'000'000u);
  EXPECT_EQ(advise(s).branch, AdviceBranch::kSortedRunLength);
}

TEST(Advisor, UnsortedOmitsRunLength) {
  auto p = predict_space({ValueKind::kInt32, 1000, 10, false});
  EXPECT_FALSE(p.schemes.contains(Scheme::kVsbRle));
  EXPECT_TRUE(p.schemes.contains(Scheme::kBitDict));
}

TEST(Advisor, StringsIncludeWordDict) {
  auto rec = advise({ValueKind::kString, 10, 60'000, false});
  EXPECT_TRUE(rec.exceeds_word_dict_bound);
  EXPECT_NE(rec.rationale.find("warning"), std::string::npos);
  EXPECT_TRUE(rec.predicted.schemes.contains(Scheme::kWordDict));
}
