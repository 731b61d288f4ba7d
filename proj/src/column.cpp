#include "colcrush/column.hpp"

#include <algorithm>
#include <istream>
#include <iterator>

#include "bytes.hpp"
#include "colcrush/error.hpp"

namespace colcrush {

std::string_view to_string(ValueKind kind) {
  return kind == ValueKind::kInt32 ? "int32" : "string";
}

ValueKind kind_of(const Values& values) {
  return std::holds_alternative<Int32Values>(values) ? ValueKind::kInt32
                                                     : ValueKind::kString;
}

ValueKind kind_of(const Value& value) {
  return std::holds_alternative<std::int32_t>(value) ? ValueKind::kInt32
                                                     : ValueKind::kString;
}

std::string format_value(const Value& value) {
  if (const auto* i = std::get_if<std::int32_t>(&value)) return std::to_string(*i);
  return std::get<std::string>(value);
}

namespace {

template <typename T>
std::vector<T> sorted_domain(const std::vector<T>& values, bool sorted) {
  std::vector<T> domain;
  if (sorted) {
    std::unique_copy(values.begin(), values.end(), std::back_inserter(domain));
    return domain;
  }
  domain = values;
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  return domain;
}

}  // namespace

Column::Column(std::string name, Values values)
    : name_(std::move(name)), values_(std::move(values)) {
  std::visit(
      [this](const auto& v) {
        sorted_ = std::is_sorted(v.begin(), v.end());
        domain_ = sorted_domain(v, sorted_);
      },
      values_);
}

std::uint64_t Column::row_count() const {
  return std::visit([](const auto& v) -> std::uint64_t { return v.size(); }, values_);
}

std::uint64_t Column::domain_size() const {
  return std::visit([](const auto& v) -> std::uint64_t { return v.size(); }, domain_);
}

const Int32Values& Column::ints() const {
  if (const auto* v = std::get_if<Int32Values>(&values_)) return *v;
  throw TypeMismatchError("column '" + name_ + "' is not int32");
}

const StringValues& Column::strings() const {
  if (const auto* v = std::get_if<StringValues>(&values_)) return *v;
  throw TypeMismatchError("column '" + name_ + "' is not string");
}

const Int32Values& Column::int_domain() const {
  if (const auto* v = std::get_if<Int32Values>(&domain_)) return *v;
  throw TypeMismatchError("column '" + name_ + "' is not int32");
}

const StringValues& Column::string_domain() const {
  if (const auto* v = std::get_if<StringValues>(&domain_)) return *v;
  throw TypeMismatchError("column '" + name_ + "' is not string");
}

Value Column::at(std::uint64_t row) const {
  return std::visit([row](const auto& v) -> Value { return v.at(row); }, values_);
}

ColumnStats stats(const Column& col) {
  return {col.kind(), col.row_count(), col.domain_size(), col.is_sorted()};
}

namespace detail {

std::vector<std::uint8_t> read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace detail

}  // namespace colcrush
