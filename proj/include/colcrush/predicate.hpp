#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colcrush/column.hpp"

namespace colcrush {

enum class CompareOp : std::uint8_t { kEq, kLeq };

enum class OperandSpace : std::uint8_t { kValue, kCode };

/// `column op operand`. Code-space predicates are produced by rewriting a
/// value-space predicate against a dictionary and remember that dictionary's
/// generation; `matches_nothing` marks a rewrite whose operand has no code
/// (EQ on an absent value, LEQ below the smallest entry).
struct Predicate {
  std::string column;
  CompareOp op = CompareOp::kEq;
  Value operand = std::int32_t{0};
  OperandSpace space = OperandSpace::kValue;
  std::uint64_t dictionary_generation = 0;
  bool matches_nothing = false;

  static Predicate eq(std::string column, Value operand) {
    return {std::move(column), CompareOp::kEq, std::move(operand)};
  }
  static Predicate leq(std::string column, Value operand) {
    return {std::move(column), CompareOp::kLeq, std::move(operand)};
  }

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

/// Parses "name=value" or "name<=value". The operand is an int32 when
/// `kind` is kInt32, otherwise the raw text.
Predicate parse_predicate(const std::string& text, ValueKind kind);
std::string to_string(const Predicate& pred);

using RowIds = std::vector<std::uint32_t>;

/// Answer of a query plan. `count` is always filled; `rows` (ascending,
/// unique) and `projected` (in row order) only when the plan asks for them.
struct QueryResult {
  std::uint64_t count = 0;
  std::optional<RowIds> rows;
  std::optional<Values> projected;

  friend bool operator==(const QueryResult&, const QueryResult&) = default;
};

/// Full scan of the uncompressed column. Ground truth for every codec:
/// fills count and rows, plus projected values of `project` when given.
QueryResult brute_force_query(const Column& col, const Predicate& pred,
                              const Column* project = nullptr);

// Shared by the oracle and the decode-then-scan route.
bool value_matches(const Value& value, const Predicate& pred);

}  // namespace colcrush
