#include "qsum/graph6.hpp"

#include <cstdint>

#include "qsum/error.hpp"

namespace qsum {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void put_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  // Orders up to 258047 use 126 followed by three 6-bit groups.
  out.push_back(static_cast<char>(126));
  for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_order(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6 text truncated", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) throw ParseError("byte outside graph6 range 63..126", i);
    return c - kBias;
  };

  long n = byte_at(pos);
  std::size_t order_start = pos;
  ++pos;
  if (n == 63) {
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
      throw ParseError("graph6 orders above 258047 are not supported", pos);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
  }
  if (n < 1 || n > kMaxVertices)
    throw ParseError("graph6 order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices),
                     order_start);

  const long bits = n * (n - 1) / 2;
  const std::size_t data_bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < pos + data_bytes) throw ParseError("graph6 text truncated", text.size());
  if (text.size() > pos + data_bytes) throw ParseError("trailing bytes after graph6 record", pos + data_bytes);

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      const int chunk = byte_at(at);
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + data_bytes - 1;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((byte_at(last) & ((1 << pad) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", last);
  }
  return g;
}

}  // namespace qsum
