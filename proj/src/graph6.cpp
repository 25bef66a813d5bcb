#include "cubic/graph6.hpp"

#include <cstdint>

#include "cubic/errors.hpp"

namespace cubic {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kHeader)) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 input", base);

  for (std::size_t i = 0; i < line.size(); ++i) {
    auto c = static_cast<unsigned char>(line[i]);
    if (c < kBias || c > 126) throw ParseError("byte outside graph6 range 63..126", base + i);
  }

  auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(line[i] - kBias); };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = value(0);
    pos = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw ParseError("truncated 18-bit size header", base + line.size());
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    if (n <= 62) throw ParseError("non-canonical size header", base);
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError("truncated 36-bit size header", base + line.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    if (n <= 258047) throw ParseError("non-canonical size header", base);
    pos = 8;
  }
  if (n > 100000) throw ParseError("graph order " + std::to_string(n) + " exceeds supported 100000", base);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t groups = (bits + 5) / 6;
  if (line.size() - pos != groups)
    throw ParseError("expected " + std::to_string(groups) + " data bytes, found " +
                         std::to_string(line.size() - pos),
                     base + pos);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      std::uint64_t byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  for (; k < groups * 6; ++k) {
    std::uint64_t byte = value(pos + k / 6);
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("nonzero padding bits", base + pos + k / 6);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  put_size(out, n);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    // Column-major upper triangle: bit index of (i, j), i < j, is j(j-1)/2 + i.
    std::uint64_t k = static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
    packed[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
  }
  for (unsigned char b : packed) out.push_back(static_cast<char>(b + kBias));
  return out;
}

}  // namespace cubic
