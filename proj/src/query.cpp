#include "colcrush/query.hpp"

#include <numeric>

#include "colcrush/error.hpp"
#include "colcrush/kernels.hpp"

namespace colcrush {

Predicate rewrite(const Predicate& pred, const Dictionary& dict) {
  if (pred.space != OperandSpace::kValue) {
    throw TypeMismatchError("predicate is already in code space");
  }
  const auto* operand = std::get_if<std::string>(&pred.operand);
  if (operand == nullptr) throw TypeMismatchError("dictionary rewrite needs a string operand");

  Predicate out = pred;
  out.space = OperandSpace::kCode;
  out.dictionary_generation = dict.generation();
  auto code = pred.op == CompareOp::kEq ? dict.code_of(*operand) : dict.floor_code(*operand);
  out.operand = static_cast<std::int32_t>(code.value_or(0));
  out.matches_nothing = pred.matches_nothing || !code.has_value();
  return out;
}

namespace {

Values empty_like(const Column& col) {
  return std::visit([](const auto& v) -> Values { return std::decay_t<decltype(v)>{}; },
                    col.values());
}

Values gather(const Column& src, const RowIds& rows) {
  return std::visit(
      [&rows](const auto& v) -> Values {
        std::decay_t<decltype(v)> out;
        out.reserve(rows.size());
        for (auto r : rows) out.push_back(v[r]);
        return out;
      },
      src.values());
}

Values slice(const Column& src, std::uint64_t begin, std::uint64_t end) {
  return std::visit(
      [&](const auto& v) -> Values {
        return std::decay_t<decltype(v)>(v.begin() + begin, v.begin() + end);
      },
      src.values());
}

QueryResult empty_result(const QueryPlan& plan) {
  QueryResult r;
  if (plan.output == QueryOutput::kRows) r.rows = RowIds{};
  if (plan.output == QueryOutput::kProject) r.projected = empty_like(*plan.projection);
  return r;
}

// Matching rows form the contiguous extent [begin, end).
QueryResult from_extent(std::uint64_t begin, std::uint64_t end, const QueryPlan& plan) {
  QueryResult r;
  r.count = end - begin;
  if (plan.output == QueryOutput::kRows) {
    RowIds rows(end - begin);
    std::iota(rows.begin(), rows.end(), static_cast<std::uint32_t>(begin));
    r.rows = std::move(rows);
  } else if (plan.output == QueryOutput::kProject) {
    r.projected = slice(*plan.projection, begin, end);
  }
  return r;
}

QueryResult from_rows(RowIds rows, const QueryPlan& plan) {
  QueryResult r;
  r.count = rows.size();
  if (plan.output == QueryOutput::kProject) {
    r.projected = gather(*plan.projection, rows);
  } else if (plan.output == QueryOutput::kRows) {
    r.rows = std::move(rows);
  }
  return r;
}

std::int32_t int_operand(const Predicate& pred) {
  if (const auto* v = std::get_if<std::int32_t>(&pred.operand)) return *v;
  throw TypeMismatchError("predicate operand is a string, column is int32");
}

void require_value_space(const Predicate& pred, std::string_view codec) {
  if (pred.space != OperandSpace::kValue) {
    throw TypeMismatchError("code-space predicate cannot run on a " + std::string(codec) +
                            " column");
  }
}

QueryResult run(const WordDictColumn& col, const QueryPlan& plan) {
  Predicate pred = plan.predicate;
  if (pred.space == OperandSpace::kValue) {
    pred = rewrite(pred, col.dict);
  } else if (pred.dictionary_generation != col.dict.generation()) {
    throw TypeMismatchError("predicate was rewritten against a different dictionary");
  }
  if (pred.matches_nothing) return empty_result(plan);
  const auto code = static_cast<std::uint32_t>(int_operand(pred));
  const std::span<const std::uint32_t> codes(col.codes);

  if (plan.output == QueryOutput::kCount) {
    QueryResult r;
    r.count = pred.op == CompareOp::kEq ? kernels::count_eq_parallel(codes, code)
                                        : kernels::count_leq_parallel(codes, code);
    return r;
  }
  auto rows = pred.op == CompareOp::kEq
                  ? kernels::select_if_parallel(codes.size(), [&](std::uint64_t i) { return codes[i] == code; })
                  : kernels::select_if_parallel(codes.size(), [&](std::uint64_t i) { return codes[i] <= code; });
  return from_rows(std::move(rows), plan);
}

QueryResult run(const BitDictColumn& col, const QueryPlan& plan) {
  const auto& pred = plan.predicate;
  require_value_space(pred, "bit-dict");
  const auto t = int_operand(pred);
  if (pred.matches_nothing) return empty_result(plan);
  const bool eq = pred.op == CompareOp::kEq;
  const auto code = eq ? col.code_of(t) : col.floor_code(t);
  if (!code) return empty_result(plan);
  const auto c = *code;
  const auto& packed = col.packed;

  if (plan.output == QueryOutput::kCount) {
    QueryResult r;
    r.count = eq ? kernels::packed_count_eq_parallel(packed, c)
                 : kernels::packed_count_leq_parallel(packed, c);
    return r;
  }
  auto rows = eq ? kernels::select_if_parallel(packed.size(), [&](std::uint64_t i) { return packed[i] == c; })
                 : kernels::select_if_parallel(packed.size(), [&](std::uint64_t i) { return packed[i] <= c; });
  return from_rows(std::move(rows), plan);
}

QueryResult run(const RleColumn& col, const QueryPlan& plan) {
  const auto& pred = plan.predicate;
  require_value_space(pred, "run-length");
  const auto t = int_operand(pred);
  if (pred.matches_nothing) return empty_result(plan);
  if (pred.op == CompareOp::kLeq) return from_extent(0, rle_leq_end(col, t), plan);
  if (plan.output == QueryOutput::kCount) {
    QueryResult r;
    r.count = rle_count_eq(col, t);
    return r;
  }
  auto run = rle_locate(col, t);
  if (!run) return empty_result(plan);
  return from_extent(run->start, std::uint64_t{run->start} + run->length, plan);
}

QueryResult run(const BitmapIndex& index, const QueryPlan& plan) {
  const auto& pred = plan.predicate;
  require_value_space(pred, "bitmap");
  const auto t = int_operand(pred);
  if (pred.matches_nothing) return empty_result(plan);

  if (pred.op == CompareOp::kEq) {
    const auto* bitmap = index.find(t);
    if (bitmap == nullptr) return empty_result(plan);
    if (plan.output == QueryOutput::kCount) return QueryResult{bitmap->popcount(), {}, {}};
    return from_rows(bitmap->positions(), plan);
  }
  if (plan.output == QueryOutput::kCount) {
    // Bitmaps partition the rows, so popcounts of disjoint bitmaps add up.
    QueryResult r;
    for (std::size_t i = 0; i < index.domain.size() && index.domain[i] <= t; ++i) {
      r.count += index.bitmaps[i].popcount();
    }
    return r;
  }
  return from_rows(leq_bitmap(index, t).positions(), plan);
}

QueryResult run(const HuffmanColumn& col, const QueryPlan& plan) {
  auto decoded = huffman_decode(col);
  auto full = brute_force_query(decoded, plan.predicate, plan.projection);
  QueryResult r;
  r.count = full.count;
  if (plan.output == QueryOutput::kRows) r.rows = std::move(full.rows);
  if (plan.output == QueryOutput::kProject) r.projected = std::move(full.projected);
  return r;
}

}  // namespace

QueryResult execute(const EncodedColumn& col, const QueryPlan& plan) {
  if (plan.output == QueryOutput::kProject) {
    if (plan.projection == nullptr) throw std::invalid_argument("projection plan without column");
    if (plan.projection->row_count() != col.row_count()) {
      throw std::invalid_argument("projection column row count differs");
    }
  }
  const auto& pred = plan.predicate;
  if (pred.space == OperandSpace::kValue && kind_of(pred.operand) != col.value_kind()) {
    throw TypeMismatchError("predicate operand is " + std::string(to_string(kind_of(pred.operand))) +
                            ", column is " + std::string(to_string(col.value_kind())));
  }
  return std::visit([&plan](const auto& p) { return run(p, plan); }, col.payload());
}

std::uint64_t count_eq(const EncodedColumn& col, const Value& t) {
  return execute(col, {Predicate::eq("", t), QueryOutput::kCount, nullptr}).count;
}

std::uint64_t count_leq(const EncodedColumn& col, const Value& k) {
  return execute(col, {Predicate::leq("", k), QueryOutput::kCount, nullptr}).count;
}

Values project_eq(const EncodedColumn& col_a, const Column& col_b, const Value& t) {
  return *execute(col_a, {Predicate::eq("", t), QueryOutput::kProject, &col_b}).projected;
}

WahBitmap leq_bitmap(const BitmapIndex& index, std::int32_t k) {
  WahBitmap acc = WahBitmap::zeros(index.row_count);
  for (std::size_t i = 0; i < index.domain.size() && index.domain[i] <= k; ++i) {
    acc = wah_or(acc, index.bitmaps[i]);
  }
  return acc;
}

Values select_leq(const BitmapIndex& col_a, const Column& col_b, std::int32_t k) {
  if (col_b.row_count() != col_a.row_count) {
    throw std::invalid_argument("projection column row count differs");
  }
  return gather(col_b, leq_bitmap(col_a, k).positions());
}

}  // namespace colcrush
