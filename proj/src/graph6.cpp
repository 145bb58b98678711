#include "ckbound/graph6.hpp"

#include "ckbound/errors.hpp"

namespace ckbound {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::size_t sextet(std::string_view text, std::size_t pos, std::size_t offset) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("invalid graph6 character " + std::to_string(c), offset + pos);
  }
  return c - 63;
}

}  // namespace

Graph g6_decode(std::string_view text) {
  std::size_t offset = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    offset = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", offset);

  std::size_t n = 0;
  std::size_t pos = 0;
  if (sextet(text, 0, offset) == 63) {
    if (text.size() >= 2 && sextet(text, 1, offset) == 63) {
      throw ParseError("8-byte graph6 size form is not supported", offset + 1);
    }
    if (text.size() < 4) throw ParseError("truncated graph6 size header", offset + text.size());
    n = (sextet(text, 1, offset) << 12) | (sextet(text, 2, offset) << 6) | sextet(text, 3, offset);
    pos = 4;
  } else {
    n = sextet(text, 0, offset);
    pos = 1;
  }
  if (n == 0) throw ParseError("graph6 string encodes zero vertices", offset);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos < need) {
    throw ParseError("truncated graph6 payload: need " + std::to_string(need) + " bytes, have " +
                         std::to_string(text.size() - pos),
                     offset + text.size());
  }
  if (text.size() - pos > need) throw ParseError("trailing bytes after graph6 payload", offset + pos + need);

  GraphBuilder b(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::size_t value = sextet(text, pos + k / 6, offset);
      if ((value >> (5 - k % 6)) & 1U) b.set_edge(i, j, true);
    }
  }
  if (need > 0) {
    const std::size_t pad = need * 6 - bits;
    if (sextet(text, pos + need - 1, offset) & ((1U << pad) - 1)) {
      throw ParseError("nonzero padding bits in graph6 payload", offset + pos + need - 1);
    }
  }
  return b.build();
}

std::string g6_encode(const Graph& g) {
  const std::size_t n = g.n();
  if (n > kGraph6MaxOrder) throw InvalidArgument("graph too large for graph6 (n > 258047)");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace ckbound
