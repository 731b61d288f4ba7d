#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "bytes.hpp"
#include "colcrush/column.hpp"
#include "colcrush/error.hpp"

namespace colcrush {

namespace {

constexpr std::string_view kColumnMagic = "COLC";

std::string stem_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  auto base = slash == std::string::npos ? path : path.substr(slash + 1);
  return base.substr(0, base.find('.'));
}

}  // namespace

void write_column(std::ostream& out, const Column& col) {
  detail::ByteWriter w;
  w.put_magic(kColumnMagic);
  w.put(kColumnFileVersion);
  w.put(static_cast<std::uint8_t>(col.kind()));
  w.put(col.row_count());
  if (col.kind() == ValueKind::kInt32) {
    w.put_array(std::span<const std::int32_t>(col.ints()));
  } else {
    for (const auto& s : col.strings()) w.put_string(s);
  }
  const auto& bytes = w.bytes();
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

Column read_column(std::istream& in, std::string name) {
  auto data = detail::read_all(in);
  detail::ByteReader r(data);
  r.expect_magic(kColumnMagic);
  auto version = r.get<std::uint8_t>();
  if (version != kColumnFileVersion) {
    throw FormatError("unsupported column file version " + std::to_string(version));
  }
  auto kind = r.get<std::uint8_t>();
  auto rows = r.get<std::uint64_t>();
  Values values;
  if (kind == static_cast<std::uint8_t>(ValueKind::kInt32)) {
    values = r.get_array<std::int32_t>(rows);
  } else if (kind == static_cast<std::uint8_t>(ValueKind::kString)) {
    // Each string takes at least its 4-byte prefix.
    if (rows > r.remaining() / 4) throw FormatError("truncated string column");
    StringValues strings;
    strings.reserve(rows);
    for (std::uint64_t i = 0; i < rows; ++i) strings.push_back(r.get_string());
    values = std::move(strings);
  } else {
    throw FormatError("unknown column kind byte " + std::to_string(kind));
  }
  if (r.remaining() != 0) throw FormatError("trailing bytes after column data");
  return Column(std::move(name), std::move(values));
}

void write_column_file(const std::string& path, const Column& col) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_column(out, col);
  if (!out) throw Error("write to '" + path + "' failed");
}

Column read_column_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_column(in, stem_of(path));
}

Column read_csv_column(std::istream& in) {
  std::string name;
  if (!std::getline(in, name)) throw FormatError("CSV file has no header line");
  if (!name.empty() && name.back() == '\r') name.pop_back();

  StringValues rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(std::move(line));
  }

  Int32Values ints;
  ints.reserve(rows.size());
  for (const auto& row : rows) {
    std::int32_t v = 0;
    auto [end, ec] = std::from_chars(row.data(), row.data() + row.size(), v);
    if (row.empty() || ec != std::errc() || end != row.data() + row.size()) {
      return Column(std::move(name), std::move(rows));
    }
    ints.push_back(v);
  }
  return Column(std::move(name), std::move(ints));
}

Column read_csv_column_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_csv_column(in);
}

}  // namespace colcrush
