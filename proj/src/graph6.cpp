#include "ramsey/graph6.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

std::string graph6_encode(const Graph &g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  // Upper triangle in column-major order: (0,1),(0,2),(1,2),(0,3),...
  int chunk = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header)
    text.remove_prefix(header.size());
  if (!text.empty() && text.back() == '\n')
    text.remove_suffix(1);
  if (text.empty())
    throw Graph6Error("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126)
      throw Graph6Error("graph6: byte outside 63..126");

  std::size_t pos = 0;
  long long n = text[pos++] - 63;
  if (n == 63) {
    if (text.size() < 4)
      throw Graph6Error("graph6: truncated size field");
    if (text[1] == 126)
      throw Graph6Error("graph6: orders above 258047 are not supported");
    n = 0;
    for (int i = 0; i < 3; ++i)
      n = (n << 6) | (text[pos++] - 63);
    if (n <= 62)
      throw Graph6Error("graph6: non-minimal size field");
  }
  if (n > kMaxOrder)
    throw LimitError("graph6: order " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxOrder));

  const long long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != bytes)
    throw Graph6Error("graph6: expected " + std::to_string(bytes) +
                      " adjacency bytes, got " +
                      std::to_string(text.size() - pos));

  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1)
        b.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw Graph6Error("graph6: nonzero padding bits");
  }
  return b.build();
}

} // namespace ramsey
