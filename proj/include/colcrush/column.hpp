#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace colcrush {

enum class ValueKind : std::uint8_t { kInt32 = 0, kString = 1 };

std::string_view to_string(ValueKind kind);

using Int32Values = std::vector<std::int32_t>;
using StringValues = std::vector<std::string>;
using Values = std::variant<Int32Values, StringValues>;
using Value = std::variant<std::int32_t, std::string>;

ValueKind kind_of(const Values& values);
ValueKind kind_of(const Value& value);
std::string format_value(const Value& value);

struct ColumnStats {
  ValueKind kind = ValueKind::kInt32;
  std::uint64_t row_count = 0;
  std::uint64_t domain_size = 0;
  bool is_sorted = true;

  friend bool operator==(const ColumnStats&, const ColumnStats&) = default;
};

/// An immutable, uncompressed typed column.
///
/// The distinct-value domain (ascending) and the sortedness flag are derived
/// once at construction.
class Column {
 public:
  Column() : Column("", Int32Values{}) {}
  Column(std::string name, Values values);

  const std::string& name() const { return name_; }
  ValueKind kind() const { return kind_of(values_); }
  std::uint64_t row_count() const;
  bool is_sorted() const { return sorted_; }

  const Values& values() const { return values_; }
  const Values& domain() const { return domain_; }
  std::uint64_t domain_size() const;

  // Throws TypeMismatchError when the column is of the other kind.
  const Int32Values& ints() const;
  const StringValues& strings() const;
  const Int32Values& int_domain() const;
  const StringValues& string_domain() const;

  Value at(std::uint64_t row) const;

  friend bool operator==(const Column& a, const Column& b) {
    return a.values_ == b.values_;
  }

 private:
  std::string name_;
  Values values_;
  Values domain_;
  bool sorted_ = true;
};

ColumnStats stats(const Column& col);

enum class DistributionKind { kUniform, kZipf };

struct Distribution {
  DistributionKind kind = DistributionKind::kUniform;
  double zipf_s = 1.0;

  static Distribution uniform() { return {}; }
  static Distribution zipf(double s = 1.0) { return {DistributionKind::kZipf, s}; }
};

struct GenerateOptions {
  ValueKind kind = ValueKind::kInt32;
  std::uint64_t row_count = 0;
  std::uint64_t domain_size = 0;
  Distribution distribution;
  bool sorted = false;
  std::uint64_t seed = 0;
  std::string name = "A";
};

/// Deterministic synthetic column. Integer values are drawn from the dense
/// range [0, domain_size); string values from a fixed label set of the same
/// size whose lexicographic order matches the integer rank. Requested domain
/// values may be absent from the result; Column::domain() is authoritative.
Column generate(const GenerateOptions& options);

/// Label used for the i-th string domain value by generate().
std::string string_label(std::uint64_t index, std::uint64_t domain_size);

// Binary column file: "COLC", version, kind, row_count (u64 LE), values.
inline constexpr std::uint8_t kColumnFileVersion = 1;

void write_column(std::ostream& out, const Column& col);
Column read_column(std::istream& in, std::string name = "");
void write_column_file(const std::string& path, const Column& col);
Column read_column_file(const std::string& path);

/// One column per CSV file, first line is the column name. Rows parse as
/// int32 when every row is an integer literal in range, otherwise strings.
Column read_csv_column(std::istream& in);
Column read_csv_column_file(const std::string& path);

}  // namespace colcrush
