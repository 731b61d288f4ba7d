#pragma once

#include <cstdint>

#include "colcrush/bitmap.hpp"
#include "colcrush/column.hpp"
#include "colcrush/dict.hpp"
#include "colcrush/encoded.hpp"
#include "colcrush/predicate.hpp"

namespace colcrush {

/// Rewrites a value-space string predicate into the dictionary's code
/// space. EQ on an absent value, or LEQ below the first entry, yields a
/// predicate that matches nothing; LEQ on an absent value uses the code of
/// the greatest entry below it.
Predicate rewrite(const Predicate& pred, const Dictionary& dict);

enum class QueryOutput { kCount, kRows, kProject };

/// A predicate on the encoded column plus what to return. kProject gathers
/// the matching rows of `projection`, which must have the same row count.
struct QueryPlan {
  Predicate predicate;
  QueryOutput output = QueryOutput::kCount;
  const Column* projection = nullptr;
};

/// Runs the plan on the compressed representation. Dictionary, run-length
/// and bitmap columns are answered without decoding; Huffman columns are
/// decoded in full and scanned.
///
/// Throws TypeMismatchError when the operand kind does not match the
/// column, or for a code-space predicate from another dictionary.
QueryResult execute(const EncodedColumn& col, const QueryPlan& plan);

std::uint64_t count_eq(const EncodedColumn& col, const Value& t);
std::uint64_t count_leq(const EncodedColumn& col, const Value& k);
Values project_eq(const EncodedColumn& col_a, const Column& col_b, const Value& t);

/// SELECT B WHERE A <= k: ORs the bitmaps of every domain value <= k, then
/// gathers B at the set positions.
Values select_leq(const BitmapIndex& col_a, const Column& col_b, std::int32_t k);
WahBitmap leq_bitmap(const BitmapIndex& index, std::int32_t k);

}  // namespace colcrush
