#include "ckbound/expr.hpp"

#include <algorithm>
#include <limits>

#include "ckbound/bounds.hpp"
#include "ckbound/errors.hpp"
#include "ckbound/graph6.hpp"

namespace ckbound {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GraphExpr parse() {
    GraphExpr e = expr();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    const std::size_t start = pos_;
    auto lower = [&](std::size_t i) { return text_[i] >= 'a' && text_[i] <= 'z'; };
    auto digit = [&](std::size_t i) { return text_[i] >= '0' && text_[i] <= '9'; };
    if (pos_ < text_.size() && lower(pos_)) ++pos_;
    if (pos_ == start) fail("expected a graph name");
    while (pos_ < text_.size() && (lower(pos_) || digit(pos_))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a non-negative integer");
    return v;
  }

  std::vector<std::int64_t> integers(std::size_t count) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) expect(',');
      out.push_back(integer());
    }
    return out;
  }

  GraphExpr expr() {
    using K = GraphExpr::Kind;
    const std::size_t start = pos_;
    const std::string name = word();
    GraphExpr e;
    if (name == "petersen") return with_kind(e, K::Petersen);
    if (name == "icosahedron") return with_kind(e, K::Icosahedron);
    if (name == "gosset") return with_kind(e, K::Gosset);
    expect(':');
    if (name == "complete" || name == "cycle" || name == "paley") {
      e.kind = name == "complete" ? K::Complete : name == "cycle" ? K::Cycle : K::Paley;
      e.args = integers(1);
    } else if (name == "johnson") {
      e.kind = K::Johnson;
      e.args = integers(2);
    } else if (name == "srg") {
      e.kind = K::Srg;
      e.args = integers(4);
    } else if (name == "drg") {
      e.kind = K::Drg;
      e.array.b.push_back(integer());
      while (at(',')) {
        ++pos_;
        e.array.b.push_back(integer());
      }
      expect(';');
      e.array.c = integers(e.array.b.size());
    } else if (name == "g6") {
      e.kind = K::Graph6;
      const std::size_t s = pos_;
      while (pos_ < text_.size() && static_cast<unsigned char>(text_[pos_]) >= 63 &&
             static_cast<unsigned char>(text_[pos_]) <= 126) {
        ++pos_;
      }
      if (pos_ == s) fail("expected a graph6 string");
      e.graph6 = std::string(text_.substr(s, pos_ - s));
    } else if (name == "union") {
      e.kind = K::Union;
      e.operands.push_back(expr());
      expect('+');
      e.operands.push_back(expr());
    } else if (name == "complement") {
      e.kind = K::Complement;
      e.operands.push_back(expr());
    } else if (name == "blowup") {
      e.kind = K::Blowup;
      e.operands.push_back(expr());
      expect(',');
      e.args.push_back(integer());
    } else {
      pos_ = start;
      fail("unknown graph name '" + name + "'");
    }
    return e;
  }

  static GraphExpr with_kind(GraphExpr e, GraphExpr::Kind k) {
    e.kind = k;
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Verification weakest(Verification a, Verification b) {
  auto rank = [](Verification v) {
    switch (v) {
      case Verification::Asserted: return 0;
      case Verification::ExactFormula: return 1;
      case Verification::Verified: return 2;
    }
    return 0;
  };
  return rank(a) <= rank(b) ? a : b;
}

std::size_t positive(std::int64_t v, const char* what) {
  if (v <= 0) throw InvalidArgument(std::string(what) + " must be positive");
  return static_cast<std::size_t>(v);
}

SpectralDescriptor explicit_with(std::string name, Graph g, Spectrum s) {
  if (s.is_exact()) return explicit_descriptor(std::move(name), std::move(g), std::move(s));
  return explicit_descriptor(std::move(name), std::move(g));
}

}  // namespace

std::string GraphExpr::to_string() const {
  switch (kind) {
    case Kind::Complete: return "complete:" + join(args);
    case Kind::Cycle: return "cycle:" + join(args);
    case Kind::Johnson: return "johnson:" + join(args);
    case Kind::Paley: return "paley:" + join(args);
    case Kind::Petersen: return "petersen";
    case Kind::Icosahedron: return "icosahedron";
    case Kind::Gosset: return "gosset";
    case Kind::Srg: return "srg:" + join(args);
    case Kind::Drg: return "drg:" + join(array.b) + ";" + join(array.c);
    case Kind::Graph6: return "g6:" + graph6;
    case Kind::Union: return "union:" + operands[0].to_string() + "+" + operands[1].to_string();
    case Kind::Complement: return "complement:" + operands[0].to_string();
    case Kind::Blowup: return "blowup:" + operands[0].to_string() + "," + join(args);
  }
  return {};
}

GraphExpr parse_graph_expr(std::string_view text) { return Parser(text).parse(); }

Spectrum regular_complement_spectrum(const Spectrum& s) {
  if (!s.is_exact()) throw InvalidArgument("complement of a spectrum needs exact values");
  const auto n = static_cast<std::int64_t>(s.size());
  const EigenValue top = s.kth_largest(1);
  if (!exactly_equal(top * EigenValue(n), s.power_sum(2))) {
    throw InvalidArgument("complement needs an explicit graph or a regular spectrum");
  }
  std::vector<SpectrumEntry> out{{EigenValue(n - 1) - top, 1}};
  bool dropped = false;
  for (const auto& e : s.entries()) {
    std::size_t m = e.multiplicity;
    if (!dropped) {
      --m;
      dropped = true;
    }
    if (m > 0) out.push_back({EigenValue(-1) - e.value, m});
  }
  return Spectrum(std::move(out));
}

SpectralDescriptor resolve(const GraphExpr& e) {
  using K = GraphExpr::Kind;
  switch (e.kind) {
    case K::Complete: return complete_descriptor(positive(e.args[0], "complete: n"));
    case K::Cycle: return explicit_descriptor("C" + std::to_string(e.args[0]), cycle(static_cast<std::size_t>(e.args[0])));
    case K::Johnson: return johnson_descriptor(e.args[0], e.args[1]);
    case K::Paley: return paley_descriptor(e.args[0]);
    case K::Petersen: return petersen_descriptor();
    case K::Icosahedron: return icosahedron_descriptor();
    case K::Gosset: return gosset_descriptor();
    case K::Srg: return srg_spectrum({e.args[0], e.args[1], e.args[2], e.args[3]});
    case K::Drg: return drg_spectrum(e.array);
    case K::Graph6: return explicit_descriptor("g6:" + e.graph6, g6_decode(e.graph6));
    case K::Union: {
      const SpectralDescriptor a = resolve(e.operands[0]);
      const SpectralDescriptor b = resolve(e.operands[1]);
      const std::string name = "union(" + a.name + ", " + b.name + ")";
      Spectrum s = spectrum_union(a.spectrum, b.spectrum);
      if (a.graph() != nullptr && b.graph() != nullptr) {
        return explicit_with(name, disjoint_union(*a.graph(), *b.graph()), std::move(s));
      }
      SpectralDescriptor d{name, a.n + b.n, std::move(s),
                           DerivedSource{"disjoint union", weakest(a.verification(), b.verification())}};
      check_descriptor_invariants(d);
      return d;
    }
    case K::Complement: {
      const SpectralDescriptor a = resolve(e.operands[0]);
      const std::string name = "complement(" + a.name + ")";
      if (const Graph* g = a.graph()) {
        Graph c = complement(*g);
        if (a.spectrum.is_exact() && g->regular_degree()) {
          return explicit_with(name, std::move(c), regular_complement_spectrum(a.spectrum));
        }
        return explicit_descriptor(name, std::move(c));
      }
      if (const auto* p = std::get_if<SrgParams>(&a.provenance)) {
        // complement of srg(v,k,l,m) is srg(v, v-k-1, v-2-2k+m, v-2k+l)
        SpectralDescriptor d = srg_spectrum({p->v, p->v - p->k - 1, p->v - 2 - 2 * p->k + p->mu, p->v - 2 * p->k + p->lambda});
        d.name = name;
        return d;
      }
      SpectralDescriptor d{name, a.n, regular_complement_spectrum(a.spectrum),
                           DerivedSource{"complement of a regular graph", a.verification()}};
      check_descriptor_invariants(d);
      return d;
    }
    case K::Blowup: {
      const SpectralDescriptor a = resolve(e.operands[0]);
      const std::size_t t = positive(e.args[0], "blowup: t");
      const std::string name = "blowup(" + a.name + "," + std::to_string(t) + ")";
      Spectrum s = blowup_spectrum(a.spectrum, t);
      if (const Graph* g = a.graph()) return explicit_with(name, closed_blowup_graph(*g, t), std::move(s));
      SpectralDescriptor d{name, a.n * t, std::move(s), DerivedSource{"closed blowup", a.verification()}};
      check_descriptor_invariants(d);
      return d;
    }
  }
  throw InvalidArgument("unhandled expression");
}

}  // namespace ckbound
