#include "colcrush/huffman.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "colcrush/error.hpp"
#include "colcrush/instrument.hpp"

namespace colcrush {

std::vector<std::uint8_t> huffman_code_lengths(std::span<const std::uint64_t> frequencies) {
  const std::size_t n = frequencies.size();
  if (n == 0) return {};
  if (n == 1) return {1};

  // (frequency, smallest symbol in subtree, creation order, node id)
  using Key = std::tuple<std::uint64_t, std::size_t, std::size_t, std::size_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  std::vector<std::size_t> parent(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (frequencies[i] == 0) throw std::invalid_argument("zero symbol frequency");
    heap.emplace(frequencies[i], i, i, i);
  }
  std::size_t next = n;
  while (heap.size() > 1) {
    auto [fa, ma, ca, a] = heap.top();
    heap.pop();
    auto [fb, mb, cb, b] = heap.top();
    heap.pop();
    parent[a] = parent[b] = next;
    heap.emplace(fa + fb, std::min(ma, mb), next, next);
    ++next;
  }

  // Children have smaller ids than parents, so walk ids downward.
  const std::size_t root = next - 1;
  std::vector<std::uint8_t> depth(next, 0);
  for (std::size_t id = root; id-- > 0;) depth[id] = depth[parent[id]] + 1;
  return {depth.begin(), depth.begin() + n};
}

std::vector<Codeword> canonical_codewords(std::span<const std::uint8_t> sorted_lengths) {
  std::vector<Codeword> out;
  out.reserve(sorted_lengths.size());
  std::uint64_t code = 0;
  std::uint8_t prev = 0;
  for (std::size_t i = 0; i < sorted_lengths.size(); ++i) {
    auto len = sorted_lengths[i];
    if (len == 0 || len > 64 || len < prev) {
      throw CorruptStreamError("code lengths not in canonical order");
    }
    if (i > 0) code = (code + 1) << (len - prev);
    if (len < 64 && (code >> len) != 0) throw CorruptStreamError("code lengths oversubscribed");
    out.push_back({code, len});
    prev = len;
  }
  return out;
}

std::vector<Codeword> HuffmanColumn::codewords() const { return canonical_codewords(lengths); }

namespace {

template <typename T>
HuffmanColumn encode_values(const std::vector<T>& values, const std::vector<T>& domain) {
  const std::size_t d = domain.size();
  std::vector<std::uint32_t> sym(values.size());
  std::vector<std::uint64_t> freq(d, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    sym[i] = static_cast<std::uint32_t>(
        std::lower_bound(domain.begin(), domain.end(), values[i]) - domain.begin());
    ++freq[sym[i]];
  }
  auto lengths = huffman_code_lengths(freq);

  std::vector<std::uint32_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return lengths[a] < lengths[b]; });

  HuffmanColumn out;
  std::vector<T> symbols;
  symbols.reserve(d);
  for (auto s : order) {
    symbols.push_back(domain[s]);
    out.lengths.push_back(lengths[s]);
  }
  out.symbols = std::move(symbols);
  auto codes = canonical_codewords(out.lengths);
  std::vector<Codeword> by_symbol(d);
  for (std::size_t i = 0; i < d; ++i) by_symbol[order[i]] = codes[i];

  std::uint64_t bits = 0;
  for (auto s : sym) bits += by_symbol[s].length;
  out.bitstream.assign((bits + 7) / 8, 0);
  std::uint64_t pos = 0;
  for (auto s : sym) {
    const auto& cw = by_symbol[s];
    for (int b = cw.length - 1; b >= 0; --b, ++pos) {
      if ((cw.bits >> b) & 1) out.bitstream[pos >> 3] |= std::uint8_t(0x80u >> (pos & 7));
    }
  }
  out.bit_count = bits;
  out.row_count = values.size();
  return out;
}

template <typename T>
std::vector<T> decode_values(const HuffmanColumn& col, const std::vector<T>& symbols) {
  if (symbols.size() != col.lengths.size()) {
    throw CorruptStreamError("code table symbol/length count mismatch");
  }
  if (col.bit_count > std::uint64_t{col.bitstream.size()} * 8) {
    throw CorruptStreamError("bitstream shorter than its bit count");
  }
  const auto codes = col.codewords();
  const std::uint8_t max_len = codes.empty() ? 0 : codes.back().length;
  // Per length: first canonical code and the table index it starts at.
  std::vector<std::uint64_t> first(max_len + 2, 0), count(max_len + 2, 0), offset(max_len + 2, 0);
  for (std::size_t i = codes.size(); i-- > 0;) {
    first[codes[i].length] = codes[i].bits;
    offset[codes[i].length] = i;
    ++count[codes[i].length];
  }

  std::vector<T> out;
  out.reserve(col.row_count);
  std::uint64_t pos = 0;
  for (std::uint64_t row = 0; row < col.row_count; ++row) {
    std::uint64_t code = 0;
    for (std::uint8_t len = 1;; ++len) {
      if (len > max_len) throw CorruptStreamError("bitstream holds a code not in the table");
      if (pos >= col.bit_count) throw CorruptStreamError("bitstream ended mid-column");
      code = (code << 1) | ((col.bitstream[pos >> 3] >> (7 - (pos & 7))) & 1);
      ++pos;
      if (count[len] != 0 && code >= first[len] && code - first[len] < count[len]) {
        out.push_back(symbols[offset[len] + (code - first[len])]);
        break;
      }
    }
  }
  return out;
}

}  // namespace

HuffmanColumn huffman_encode(const Column& col) {
  if (col.row_count() == 0) throw std::invalid_argument("cannot Huffman-encode an empty column");
  return std::visit(
      [&col](const auto& values) {
        using V = std::decay_t<decltype(values)>;
        return encode_values(values, std::get<V>(col.domain()));
      },
      col.values());
}

Column huffman_decode(const HuffmanColumn& col, std::string name) {
  Values values = std::visit(
      [&col](const auto& symbols) -> Values { return decode_values(col, symbols); },
      col.symbols);
  instrument::add_decoded_values(col.row_count);
  return Column(std::move(name), std::move(values));
}

SpaceEstimate huffman_space_bytes(const HuffmanColumn& col) {
  SpaceEstimate s{(col.bit_count + 7) / 8, 0};
  std::visit(
      [&s](const auto& symbols) {
        for (const auto& v : symbols) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) {
            s.dictionary += 4 + v.size() + 1;
          } else {
            s.dictionary += 4 + 1;
          }
        }
      },
      col.symbols);
  return s;
}

}  // namespace colcrush
