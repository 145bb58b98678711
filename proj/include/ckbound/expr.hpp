#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ckbound/families.hpp"

namespace ckbound {

/// Parsed graph/descriptor name.
///
/// Grammar:
///   expr := complete:n | cycle:n | johnson:m,r | paley:q | petersen
///         | icosahedron | gosset | srg:v,k,l,m | drg:b0,...;c1,...
///         | g6:<graph6> | union:expr+expr | complement:expr
///         | blowup:expr,t
struct GraphExpr {
  enum class Kind {
    Complete, Cycle, Johnson, Paley, Petersen, Icosahedron, Gosset,
    Srg, Drg, Graph6, Union, Complement, Blowup,
  };

  Kind kind = Kind::Petersen;
  std::vector<std::int64_t> args;
  IntersectionArray array;
  std::string graph6;
  std::vector<GraphExpr> operands;

  /// Canonical text; parse(to_string()) reproduces the expression.
  std::string to_string() const;
};

/// Throws ParseError carrying the byte offset of the problem.
GraphExpr parse_graph_expr(std::string_view text);

/// Builds the descriptor. Explicit graphs stay explicit through the
/// combinators; parameter-level operands give a DerivedSource descriptor.
SpectralDescriptor resolve(const GraphExpr& expr);

inline SpectralDescriptor resolve_graph_expr(std::string_view text) { return resolve(parse_graph_expr(text)); }

/// Complement spectrum of a regular graph: n-1-r once, -1-lambda for the
/// remaining eigenvalues. Throws InvalidArgument if the spectrum is not
/// exact or not that of a regular graph.
Spectrum regular_complement_spectrum(const Spectrum& s);

}  // namespace ckbound
