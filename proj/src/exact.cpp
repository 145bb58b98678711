#include "ckbound/exact.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ckbound/errors.hpp"

namespace ckbound {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("exact arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("rational division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

// Exact value in the field Q(sqrt(d)); d == 1 marks a plain rational.
struct FieldElem {
  Rational a;
  Rational b;
  std::int64_t d = 1;
};

FieldElem to_field(const EigenValue& v) {
  if (const auto* r = v.as_rational()) return {*r, 0, 1};
  const auto& q = *v.as_quadratic();
  return {q.a, q.b, q.d};
}

EigenValue from_field(const FieldElem& f) {
  if (f.b.sign() == 0 || f.d == 1) return EigenValue(f.a + (f.d == 1 ? f.b : Rational{}));
  return EigenValue::quadratic(f.a, f.b, f.d);
}

// Common field of two exact values, or 0 when they live in different fields.
std::int64_t common_field(const FieldElem& x, const FieldElem& y) {
  if (x.d == 1) return y.d;
  if (y.d == 1 || x.d == y.d) return x.d;
  return 0;
}

int sign_of(const Rational& x, const Rational& y, std::int64_t d) {
  const int sx = x.sign();
  const int sy = y.sign();
  if (sy == 0 || d == 1) return (x + (d == 1 ? y : Rational{})).sign();
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  const Rational lhs = x * x;
  const Rational rhs = y * y * Rational(d);
  if (lhs > rhs) return sx;
  if (lhs < rhs) return sy;
  return 0;
}

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() ||
        den == std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("exact arithmetic overflow");
    }
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s, std::size_t base_offset) -> std::int64_t {
    if (s.empty()) throw ParseError("expected integer", base_offset);
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw ParseError("expected digits", base_offset + i);
    Wide v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("unexpected character", base_offset + i);
      v = v * 10 + (s[i] - '0');
      if (v > std::numeric_limits<std::int64_t>::max()) {
        throw ParseError("integer out of range", base_offset + i);
      }
    }
    return narrow(neg ? -v : v);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  const std::int64_t n = parse_int(text.substr(0, slash), 0);
  const std::int64_t d = parse_int(text.substr(slash + 1), slash + 1);
  if (d == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(n, d);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

Rational Rational::operator-() const { return make(-Wide(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t m) {
  if (m <= 0) throw InvalidArgument("squarefree_split requires a positive integer");
  std::int64_t s = 1;
  std::int64_t d = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) d *= p;
  }
  d *= m;
  return {s, d};
}

EigenValue EigenValue::quadratic(const Rational& a, const Rational& b, std::int64_t m) {
  if (m < 0) throw InvalidArgument("quadratic irrational requires a non-negative radicand");
  if (m == 0 || b.sign() == 0) return EigenValue(a);
  const auto [s, d] = squarefree_split(m);
  const Rational coeff = b * Rational(s);
  if (d == 1) return EigenValue(a + coeff);
  EigenValue v;
  v.repr_ = QuadIrrational{a, coeff, d};
  return v;
}

double EigenValue::to_double() const noexcept {
  if (const auto* r = std::get_if<Rational>(&repr_)) return r->to_double();
  if (const auto* q = std::get_if<QuadIrrational>(&repr_)) {
    return q->a.to_double() + q->b.to_double() * std::sqrt(static_cast<double>(q->d));
  }
  return std::get<double>(repr_);
}

std::string EigenValue::to_string() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return r->to_string();
  if (const auto* x = std::get_if<double>(&repr_)) return format_double(*x, 17);
  const auto& q = std::get<QuadIrrational>(repr_);
  std::string out;
  if (q.a.sign() != 0) out = q.a.to_string();
  const std::string root = "sqrt(" + std::to_string(q.d) + ")";
  if (q.b == Rational(1)) {
    out += (out.empty() ? "" : "+") + root;
  } else if (q.b == Rational(-1)) {
    out += "-" + root;
  } else {
    if (q.b.sign() > 0 && !out.empty()) out += "+";
    out += q.b.to_string() + "*" + root;
  }
  return out;
}

std::string EigenValue::pretty() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return r->to_string();
  if (const auto* x = std::get_if<double>(&repr_)) return format_double(*x, 6);
  const auto& q = std::get<QuadIrrational>(repr_);
  const std::int64_t lcm = std::lcm(q.a.den(), q.b.den());
  const std::int64_t big_a = q.a.num() * (lcm / q.a.den());
  const std::int64_t big_b = q.b.num() * (lcm / q.b.den());
  std::string num;
  if (big_a != 0) num = std::to_string(big_a);
  num += big_b < 0 ? "-" : (num.empty() ? "" : "+");
  const std::int64_t mag = big_b < 0 ? -big_b : big_b;
  if (mag != 1) num += std::to_string(mag);
  num += "sqrt" + std::to_string(q.d);
  if (lcm == 1) return num;
  if (big_a == 0 && big_b > 0) return num + "/" + std::to_string(lcm);
  return "(" + num + ")/" + std::to_string(lcm);
}

EigenValue EigenValue::parse(std::string_view text) {
  const auto root = text.find("sqrt(");
  if (root == std::string_view::npos) return EigenValue(Rational::parse(text));
  if (text.back() != ')') throw ParseError("expected ')' after radicand", text.size());
  const std::string_view radicand = text.substr(root + 5, text.size() - root - 6);
  const Rational d = Rational::parse(radicand);
  if (!d.is_integer() || d.sign() <= 0) throw ParseError("radicand must be a positive integer", root + 5);

  std::string_view prefix = text.substr(0, root);
  const bool has_star = !prefix.empty() && prefix.back() == '*';
  if (has_star) prefix.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = prefix.size(); i-- > 1;) {
    if (prefix[i] == '+' || prefix[i] == '-') {
      split = i;
      break;
    }
  }
  Rational a;
  std::string_view coeff = prefix;
  if (split != std::string_view::npos) {
    a = Rational::parse(prefix.substr(0, split));
    coeff = prefix.substr(split);
  }
  Rational b = 1;
  if (coeff == "-") {
    b = -1;
  } else if (!coeff.empty() && coeff != "+") {
    if (coeff.front() == '+') coeff.remove_prefix(1);
    b = Rational::parse(coeff);
  }
  return quadratic(a, b, d.num());
}

EigenValue operator+(const EigenValue& x, const EigenValue& y) {
  if (x.is_exact() && y.is_exact()) {
    const FieldElem fx = to_field(x), fy = to_field(y);
    if (const auto d = common_field(fx, fy)) return from_field({fx.a + fy.a, fx.b + fy.b, d});
  }
  return EigenValue::real(x.to_double() + y.to_double());
}

EigenValue operator-(const EigenValue& x, const EigenValue& y) { return x + (-y); }

EigenValue operator*(const EigenValue& x, const EigenValue& y) {
  if (x.is_exact() && y.is_exact()) {
    const FieldElem fx = to_field(x), fy = to_field(y);
    if (const auto d = common_field(fx, fy)) {
      return from_field({fx.a * fy.a + fx.b * fy.b * Rational(d), fx.a * fy.b + fx.b * fy.a, d});
    }
  }
  return EigenValue::real(x.to_double() * y.to_double());
}

EigenValue operator/(const EigenValue& x, const EigenValue& y) {
  if (x.is_exact() && y.is_exact()) {
    const FieldElem fx = to_field(x), fy = to_field(y);
    if (const auto d = common_field(fx, fy)) {
      const Rational norm = fy.a * fy.a - fy.b * fy.b * Rational(d);
      if (norm.sign() == 0) throw std::domain_error("division by zero");
      const FieldElem inv{fy.a / norm, -fy.b / norm, d};
      return x * from_field(inv);
    }
  }
  return EigenValue::real(x.to_double() / y.to_double());
}

EigenValue EigenValue::operator-() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return EigenValue(-*r);
  if (const auto* q = std::get_if<QuadIrrational>(&repr_)) {
    EigenValue v;
    v.repr_ = QuadIrrational{-q->a, -q->b, q->d};
    return v;
  }
  return real(-std::get<double>(repr_));
}

bool exactly_equal(const EigenValue& x, const EigenValue& y) {
  if (!x.is_exact() || !y.is_exact()) return false;
  return x.repr_ == y.repr_;
}

int sign(const EigenValue& x, double tol) {
  if (const auto* r = x.as_rational()) return r->sign();
  if (const auto* q = x.as_quadratic()) return sign_of(q->a, q->b, q->d);
  const double v = x.to_double();
  if (std::abs(v) <= tol) return 0;
  return v > 0 ? 1 : -1;
}

int compare(const EigenValue& x, const EigenValue& y, double tol) {
  if (x.is_exact() && y.is_exact()) {
    const FieldElem fx = to_field(x), fy = to_field(y);
    if (const auto d = common_field(fx, fy)) return sign_of(fx.a - fy.a, fx.b - fy.b, d);
  }
  const double diff = x.to_double() - y.to_double();
  if (std::abs(diff) <= tol) return 0;
  return diff > 0 ? 1 : -1;
}

}  // namespace ckbound
