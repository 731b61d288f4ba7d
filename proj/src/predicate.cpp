#include "colcrush/predicate.hpp"

#include <charconv>

#include "colcrush/error.hpp"

namespace colcrush {

Predicate parse_predicate(const std::string& text, ValueKind kind) {
  Predicate pred;
  std::size_t op_pos = text.find("<=");
  std::size_t operand_pos;
  if (op_pos != std::string::npos) {
    pred.op = CompareOp::kLeq;
    operand_pos = op_pos + 2;
  } else {
    op_pos = text.find('=');
    if (op_pos == std::string::npos) {
      throw std::invalid_argument("predicate must look like name=value or name<=value");
    }
    pred.op = CompareOp::kEq;
    operand_pos = op_pos + 1;
  }
  pred.column = text.substr(0, op_pos);
  auto operand = text.substr(operand_pos);
  if (kind == ValueKind::kInt32) {
    std::int32_t v = 0;
    auto [end, ec] = std::from_chars(operand.data(), operand.data() + operand.size(), v);
    if (operand.empty() || ec != std::errc() || end != operand.data() + operand.size()) {
      throw TypeMismatchError("operand '" + operand + "' is not an int32");
    }
    pred.operand = v;
  } else {
    pred.operand = operand;
  }
  return pred;
}

std::string to_string(const Predicate& pred) {
  std::string out = pred.column;
  out += pred.op == CompareOp::kEq ? "=" : "<=";
  out += format_value(pred.operand);
  if (pred.space == OperandSpace::kCode) out += " [code]";
  if (pred.matches_nothing) out += " [empty]";
  return out;
}

bool value_matches(const Value& value, const Predicate& pred) {
  if (pred.matches_nothing) return false;
  return pred.op == CompareOp::kEq ? value == pred.operand : value <= pred.operand;
}

namespace {

template <typename T>
QueryResult scan(const std::vector<T>& values, const T& operand, CompareOp op,
                 const Column* project) {
  QueryResult result;
  RowIds rows;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool hit = op == CompareOp::kEq ? values[i] == operand : values[i] <= operand;
    if (hit) rows.push_back(static_cast<std::uint32_t>(i));
  }
  result.count = rows.size();
  if (project != nullptr) {
    result.projected = std::visit(
        [&rows](const auto& src) -> Values {
          std::decay_t<decltype(src)> out;
          out.reserve(rows.size());
          for (auto r : rows) out.push_back(src[r]);
          return out;
        },
        project->values());
  }
  result.rows = std::move(rows);
  return result;
}

}  // namespace

QueryResult brute_force_query(const Column& col, const Predicate& pred,
                              const Column* project) {
  if (pred.space != OperandSpace::kValue) {
    throw TypeMismatchError("brute-force scan needs a value-space predicate");
  }
  if (kind_of(pred.operand) != col.kind()) {
    throw TypeMismatchError("predicate operand is " +
                            std::string(to_string(kind_of(pred.operand))) +
                            ", column is " + std::string(to_string(col.kind())));
  }
  if (project != nullptr && project->row_count() != col.row_count()) {
    throw std::invalid_argument("projection column row count differs");
  }
  if (pred.matches_nothing) {
    QueryResult empty{0, RowIds{}, std::nullopt};
    if (project != nullptr) {
      empty.projected = std::visit(
          [](const auto& v) -> Values { return std::decay_t<decltype(v)>{}; },
          project->values());
    }
    return empty;
  }
  if (col.kind() == ValueKind::kInt32) {
    return scan(col.ints(), std::get<std::int32_t>(pred.operand), pred.op, project);
  }
  return scan(col.strings(), std::get<std::string>(pred.operand), pred.op, project);
}

}  // namespace colcrush
