#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ckbound/graph.hpp"

namespace ckbound {

/// Largest order representable in the 4-byte graph6 size header.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Decodes one graph6 string. An optional ">>graph6<<" header and trailing
/// line terminators are accepted; the 8-byte size form is rejected.
Graph g6_decode(std::string_view text);

/// Canonical graph6 encoding, without header or newline.
std::string g6_encode(const Graph& g);

}  // namespace ckbound
