#include "colcrush/encoded.hpp"

#include <algorithm>
#include <fstream>

#include "bytes.hpp"
#include "colcrush/error.hpp"

namespace colcrush {

namespace {

constexpr std::string_view kEncodedMagic = "COLD";

struct SchemeName {
  Scheme scheme;
  std::string_view name;
};

constexpr SchemeName kSchemeNames[] = {
    {Scheme::kWordDict, "word-dict"}, {Scheme::kBitDict, "bit-dict"},
    {Scheme::kVlRle, "vl"},           {Scheme::kVslRle, "vsl"},
    {Scheme::kVsRle, "vs"},           {Scheme::kVsbRle, "vsb"},
    {Scheme::kBitmap, "bitmap"},      {Scheme::kHuffman, "huffman"},
};

}  // namespace

std::string_view to_string(Scheme scheme) {
  for (const auto& s : kSchemeNames) {
    if (s.scheme == scheme) return s.name;
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (const auto& s : kSchemeNames) {
    if (s.name == name) return s.scheme;
  }
  return std::nullopt;
}

bool is_rle(Scheme scheme) {
  return scheme == Scheme::kVlRle || scheme == Scheme::kVslRle || scheme == Scheme::kVsRle ||
         scheme == Scheme::kVsbRle;
}

RleVariant rle_variant(Scheme scheme) {
  switch (scheme) {
    case Scheme::kVlRle: return RleVariant::kVl;
    case Scheme::kVslRle: return RleVariant::kVsl;
    case Scheme::kVsRle: return RleVariant::kVs;
    case Scheme::kVsbRle: return RleVariant::kVsb;
    default: throw std::invalid_argument(std::string(to_string(scheme)) + " is not an RLE scheme");
  }
}

std::optional<std::string> inadmissible_reason(const ColumnStats& stats, Scheme scheme) {
  const bool ints = stats.kind == ValueKind::kInt32;
  switch (scheme) {
    case Scheme::kWordDict:
      if (ints) return "word-dict encodes string columns";
      return std::nullopt;
    case Scheme::kHuffman:
      if (stats.row_count == 0) return "huffman needs at least one row";
      return std::nullopt;
    case Scheme::kBitDict:
    case Scheme::kBitmap:
      if (!ints) return std::string(to_string(scheme)) + " encodes int32 columns";
      return std::nullopt;
    default:
      if (!ints) return "run-length encodings take int32 columns";
      if (!stats.is_sorted) return "run-length encoding requires sorted column";
      return std::nullopt;
  }
}

Scheme EncodedColumn::scheme() const {
  switch (payload_.index()) {
    case 0: return Scheme::kWordDict;
    case 1: return Scheme::kBitDict;
    case 2:
      switch (variant_of(std::get<RleColumn>(payload_))) {
        case RleVariant::kVl: return Scheme::kVlRle;
        case RleVariant::kVsl: return Scheme::kVslRle;
        case RleVariant::kVs: return Scheme::kVsRle;
        case RleVariant::kVsb: return Scheme::kVsbRle;
      }
      break;
    case 3: return Scheme::kBitmap;
    default: break;
  }
  return Scheme::kHuffman;
}

ValueKind EncodedColumn::value_kind() const {
  if (const auto* h = std::get_if<HuffmanColumn>(&payload_)) return h->kind();
  if (std::holds_alternative<WordDictColumn>(payload_)) return ValueKind::kString;
  return ValueKind::kInt32;
}

std::uint64_t EncodedColumn::row_count() const {
  return std::visit(
      [](const auto& p) -> std::uint64_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RleColumn>) {
          return colcrush::row_count(p);
        } else if constexpr (std::is_same_v<T, HuffmanColumn> || std::is_same_v<T, BitmapIndex>) {
          return p.row_count;
        } else {
          return p.row_count();
        }
      },
      payload_);
}

EncodedColumn encode(const Column& col, Scheme scheme, const WarningSink& warn) {
  switch (scheme) {
    case Scheme::kWordDict: return EncodedColumn(word_dict_encode(col));
    case Scheme::kBitDict: return EncodedColumn(bit_dict_encode(col));
    case Scheme::kBitmap: return EncodedColumn(bitmap_build(col, warn));
    case Scheme::kHuffman: return EncodedColumn(huffman_encode(col));
    default: return EncodedColumn(rle_encode(col, rle_variant(scheme)));
  }
}

Column decode(const EncodedColumn& col, std::string name) {
  return std::visit(
      [&name](const auto& p) -> Column {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, WordDictColumn>) return word_dict_decode(p, name);
        if constexpr (std::is_same_v<T, BitDictColumn>) return bit_dict_decode(p, name);
        if constexpr (std::is_same_v<T, RleColumn>) return rle_decode(p, name);
        if constexpr (std::is_same_v<T, BitmapIndex>) return bitmap_decode(p, name);
        if constexpr (std::is_same_v<T, HuffmanColumn>) return huffman_decode(p, name);
      },
      col.payload());
}

namespace {

using detail::ByteReader;
using detail::ByteWriter;

// Tallies bytes written inside a scope into a section counter.
class Section {
 public:
  Section(const ByteWriter& w, std::uint64_t& counter) : w_(w), counter_(counter), start_(w.size()) {}
  ~Section() { counter_ += w_.size() - start_; }

 private:
  const ByteWriter& w_;
  std::uint64_t& counter_;
  std::size_t start_;
};

void put_packed(ByteWriter& w, const BitPackedVector& v) {
  auto bytes = v.to_bytes();
  w.put_bytes(bytes);
}

void write_payload(ByteWriter& w, SpaceEstimate& s, const WordDictColumn& c) {
  w.put(c.dict.size());
  {
    Section dict(w, s.dictionary);
    for (const auto& e : c.dict.entries()) w.put_string(e);
  }
  Section payload(w, s.payload);
  w.put_array(std::span<const std::uint32_t>(c.codes));
}

void write_payload(ByteWriter& w, SpaceEstimate& s, const BitDictColumn& c) {
  w.put(static_cast<std::uint32_t>(c.domain.size()));
  w.put(static_cast<std::uint8_t>(c.packed.bit_width()));
  {
    Section dict(w, s.dictionary);
    w.put_array(std::span<const std::int32_t>(c.domain));
  }
  Section payload(w, s.payload);
  put_packed(w, c.packed);
}

void write_payload(ByteWriter& w, SpaceEstimate& s, const RleColumn& col) {
  w.put(static_cast<std::uint32_t>(run_count(col)));
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, VsbRleColumn>) {
          w.put(static_cast<std::uint32_t>(c.domain.size()));
          w.put(static_cast<std::uint8_t>(c.values.bit_width()));
          {
            Section dict(w, s.dictionary);
            w.put_array(std::span<const std::int32_t>(c.domain));
          }
          Section payload(w, s.payload);
          w.put_array(std::span<const std::uint32_t>(c.starts));
          put_packed(w, c.values);
        } else {
          Section payload(w, s.payload);
          for (const auto& r : c.runs) {
            w.put(r.value);
            if constexpr (std::is_same_v<T, VlRleColumn>) {
              w.put(r.length);
            } else if constexpr (std::is_same_v<T, VslRleColumn>) {
              w.put(r.start);
              w.put(r.length);
            } else {
              w.put(r.start);
            }
          }
        }
      },
      col);
}

void write_payload(ByteWriter& w, SpaceEstimate& s, const BitmapIndex& c) {
  w.put(static_cast<std::uint32_t>(c.domain.size()));
  for (std::size_t i = 0; i < c.domain.size(); ++i) {
    const auto& b = c.bitmaps[i];
    {
      Section dict(w, s.dictionary);
      w.put(c.domain[i]);
      w.put(b.bit_length());
      w.put(static_cast<std::uint32_t>(b.words().size()));
    }
    Section payload(w, s.payload);
    w.put_array(std::span<const std::uint32_t>(b.words()));
  }
}

void write_payload(ByteWriter& w, SpaceEstimate& s, const HuffmanColumn& c) {
  w.put(static_cast<std::uint8_t>(c.kind()));
  w.put(static_cast<std::uint32_t>(c.lengths.size()));
  w.put(c.bit_count);
  {
    Section dict(w, s.dictionary);
    std::visit(
        [&](const auto& symbols) {
          for (std::size_t i = 0; i < symbols.size(); ++i) {
            if constexpr (std::is_same_v<std::decay_t<decltype(symbols)>, StringValues>) {
              w.put_string(symbols[i]);
            } else {
              w.put(symbols[i]);
            }
            w.put(c.lengths[i]);
          }
        },
        c.symbols);
  }
  Section payload(w, s.payload);
  w.put_bytes(c.bitstream);
}

// --- reading -------------------------------------------------------------

Int32Values read_domain(ByteReader& r, std::uint32_t d) {
  auto domain = r.get_array<std::int32_t>(d);
  if (std::adjacent_find(domain.begin(), domain.end(), std::greater_equal<>()) != domain.end()) {
    throw FormatError("domain list is not strictly ascending");
  }
  return domain;
}

BitPackedVector read_packed(ByteReader& r, unsigned width, std::uint64_t count,
                            std::uint64_t domain_size) {
  if (width != min_bit_width(domain_size)) throw FormatError("bit width does not match domain");
  auto bytes = r.get_bytes((count * width + 7) / 8);
  auto packed = BitPackedVector::from_bytes(bytes, width, count);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (packed[i] >= domain_size) throw FormatError("bit-packed code outside the domain");
  }
  return packed;
}

WordDictColumn read_word_dict(ByteReader& r, std::uint64_t rows) {
  auto d = r.get<std::uint32_t>();
  StringValues entries;
  if (d > r.remaining() / 4) throw FormatError("truncated dictionary");
  entries.reserve(d);
  for (std::uint32_t i = 0; i < d; ++i) entries.push_back(r.get_string());
  WordDictColumn out;
  try {
    out.dict = Dictionary(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  out.codes = r.get_array<std::uint32_t>(rows);
  for (auto c : out.codes) {
    if (c == 0 || c > d) throw FormatError("word-dict code outside the dictionary");
  }
  return out;
}

BitDictColumn read_bit_dict(ByteReader& r, std::uint64_t rows) {
  auto d = r.get<std::uint32_t>();
  auto width = r.get<std::uint8_t>();
  BitDictColumn out;
  out.domain = read_domain(r, d);
  out.packed = read_packed(r, width, rows, d);
  return out;
}

void check_runs(const std::vector<VslRun>& runs, std::uint64_t rows) {
  std::uint64_t next = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].length == 0) throw FormatError("empty run");
    if (runs[i].start != next) throw FormatError("run starts are not contiguous");
    if (i > 0 && runs[i].value <= runs[i - 1].value) {
      throw FormatError("run values are not strictly ascending");
    }
    next += runs[i].length;
  }
  if (next != rows) throw FormatError("runs do not cover the row count");
}

RleColumn read_rle(ByteReader& r, Scheme scheme, std::uint64_t rows) {
  auto count = r.get<std::uint32_t>();
  std::vector<VslRun> runs;
  RleColumn out;
  switch (scheme) {
    case Scheme::kVlRle: {
      VlRleColumn c{{}, rows};
      std::uint32_t start = 0;
      for (std::uint32_t i = 0; i < count; ++i) {
        auto v = r.get<std::int32_t>();
        auto l = r.get<std::uint32_t>();
        c.runs.push_back({v, l});
        runs.push_back({v, start, l});
        start += l;
      }
      out = std::move(c);
      break;
    }
    case Scheme::kVslRle: {
      VslRleColumn c{{}, rows};
      for (std::uint32_t i = 0; i < count; ++i) {
        auto v = r.get<std::int32_t>();
        auto s = r.get<std::uint32_t>();
        auto l = r.get<std::uint32_t>();
        c.runs.push_back({v, s, l});
      }
      runs = c.runs;
      out = std::move(c);
      break;
    }
    case Scheme::kVsRle: {
      VsRleColumn c{{}, rows};
      for (std::uint32_t i = 0; i < count; ++i) {
        auto v = r.get<std::int32_t>();
        auto s = r.get<std::uint32_t>();
        c.runs.push_back({v, s});
      }
      out = std::move(c);
      break;
    }
    default: {
      VsbRleColumn c;
      c.row_count = rows;
      auto d = r.get<std::uint32_t>();
      auto width = r.get<std::uint8_t>();
      c.domain = read_domain(r, d);
      c.starts = r.get_array<std::uint32_t>(count);
      c.values = read_packed(r, width, count, d);
      out = std::move(c);
      break;
    }
  }
  if (scheme == Scheme::kVsRle || scheme == Scheme::kVsbRle) {
    // Derived lengths: starts must ascend strictly from 0 and stay below rows.
    std::uint64_t prev = 0;
    for (std::uint32_t i = 0; i < count; ++i) {
      std::uint64_t s = scheme == Scheme::kVsRle ? std::get<VsRleColumn>(out).runs[i].start
                                                 : std::get<VsbRleColumn>(out).starts[i];
      if ((i == 0 && s != 0) || (i > 0 && s <= prev) || s >= rows) {
        throw FormatError("run starts are not strictly ascending from 0");
      }
      prev = s;
    }
    if (count == 0 && rows != 0) throw FormatError("runs do not cover the row count");
    runs = to_vsl(out).runs;
  }
  check_runs(runs, rows);
  return out;
}

BitmapIndex read_bitmap(ByteReader& r, std::uint64_t rows) {
  BitmapIndex out;
  out.row_count = rows;
  auto d = r.get<std::uint32_t>();
  std::uint64_t ones = 0;
  for (std::uint32_t i = 0; i < d; ++i) {
    auto value = r.get<std::int32_t>();
    auto bits = r.get<std::uint64_t>();
    auto words = r.get<std::uint32_t>();
    if (bits != rows) throw FormatError("bitmap length differs from row count");
    if (!out.domain.empty() && value <= out.domain.back()) {
      throw FormatError("bitmap values are not strictly ascending");
    }
    out.domain.push_back(value);
    out.bitmaps.push_back(WahBitmap::from_words(r.get_array<std::uint32_t>(words), bits));
    ones += out.bitmaps.back().popcount();
  }
  if (ones != rows) throw FormatError("bitmaps do not partition the rows");
  return out;
}

HuffmanColumn read_huffman(ByteReader& r, std::uint64_t rows) {
  HuffmanColumn out;
  out.row_count = rows;
  auto kind = r.get<std::uint8_t>();
  auto d = r.get<std::uint32_t>();
  out.bit_count = r.get<std::uint64_t>();
  if (d > r.remaining() / 5) throw FormatError("truncated code table");
  if (kind == static_cast<std::uint8_t>(ValueKind::kInt32)) {
    Int32Values symbols;
    for (std::uint32_t i = 0; i < d; ++i) {
      symbols.push_back(r.get<std::int32_t>());
      out.lengths.push_back(r.get<std::uint8_t>());
    }
    out.symbols = std::move(symbols);
  } else if (kind == static_cast<std::uint8_t>(ValueKind::kString)) {
    StringValues symbols;
    for (std::uint32_t i = 0; i < d; ++i) {
      symbols.push_back(r.get_string());
      out.lengths.push_back(r.get<std::uint8_t>());
    }
    out.symbols = std::move(symbols);
  } else {
    throw FormatError("unknown Huffman value kind");
  }
  try {
    out.codewords();
  } catch (const CorruptStreamError& e) {
    throw FormatError(e.what());
  }
  if (rows > 0 && d == 0) throw FormatError("Huffman column without a code table");
  auto bytes = r.get_bytes((out.bit_count + 7) / 8);
  out.bitstream.assign(bytes.begin(), bytes.end());
  return out;
}

}  // namespace

Serialized serialize(const EncodedColumn& col) {
  ByteWriter w;
  SpaceEstimate sections;
  w.put_magic(kEncodedMagic);
  w.put(static_cast<std::uint8_t>(col.scheme()));
  w.put(col.row_count());
  std::visit([&](const auto& p) { write_payload(w, sections, p); }, col.payload());
  return {w.take(), sections};
}

EncodedColumn deserialize(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  r.expect_magic(kEncodedMagic);
  const auto tag = r.get<std::uint8_t>();
  if (tag < static_cast<std::uint8_t>(Scheme::kWordDict) ||
      tag > static_cast<std::uint8_t>(Scheme::kHuffman)) {
    throw UnknownCodecError("unknown codec tag " + std::to_string(tag));
  }
  const auto scheme = static_cast<Scheme>(tag);
  const auto rows = r.get<std::uint64_t>();
  std::optional<EncodedColumn> out;
  switch (scheme) {
    case Scheme::kWordDict: out.emplace(read_word_dict(r, rows)); break;
    case Scheme::kBitDict: out.emplace(read_bit_dict(r, rows)); break;
    case Scheme::kBitmap: out.emplace(read_bitmap(r, rows)); break;
    case Scheme::kHuffman: out.emplace(read_huffman(r, rows)); break;
    default: out.emplace(read_rle(r, scheme, rows)); break;
  }
  if (r.remaining() != 0) throw FormatError("trailing bytes after encoded column");
  return std::move(*out);
}

SpaceEstimate measured_space(const EncodedColumn& col) { return serialize(col).sections; }

void write_encoded(std::ostream& out, const EncodedColumn& col) {
  auto s = serialize(col);
  out.write(reinterpret_cast<const char*>(s.bytes.data()),
            static_cast<std::streamsize>(s.bytes.size()));
}

EncodedColumn read_encoded(std::istream& in) {
  auto data = detail::read_all(in);
  return deserialize(data);
}

void write_encoded_file(const std::string& path, const EncodedColumn& col) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_encoded(out, col);
  if (!out) throw Error("write to '" + path + "' failed");
}

EncodedColumn read_encoded_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_encoded(in);
}

}  // namespace colcrush
