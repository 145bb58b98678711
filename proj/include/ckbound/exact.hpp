#pragma once

// Exact numbers used for eigenvalues and bound ratios: rationals and
// elements a + b*sqrt(d) of real quadratic fields, plus a floating fallback.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace ckbound {

/// Rational number in lowest terms with positive denominator. Arithmetic
/// throws std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT: implicit from integers

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p" or "p/q".
  std::string to_string() const;
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// a + b*sqrt(d) with b != 0 and d squarefree, d >= 2.
struct QuadIrrational {
  Rational a;
  Rational b;
  std::int64_t d = 2;

  friend bool operator==(const QuadIrrational&, const QuadIrrational&) = default;
};

/// Writes m = s^2 * d with d squarefree; returns {s, d}. Requires m > 0.
std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t m);

/// One eigenvalue (or any derived quantity such as a bound ratio).
///
/// Exact values compare exactly with each other when they live in a common
/// field; anything involving a Float is compared numerically.
class EigenValue {
 public:
  using Repr = std::variant<Rational, QuadIrrational, double>;

  EigenValue() : repr_(Rational{}) {}
  EigenValue(Rational r) : repr_(r) {}  // NOLINT
  EigenValue(std::int64_t v) : repr_(Rational{v}) {}  // NOLINT
  EigenValue(int v) : repr_(Rational{v}) {}  // NOLINT

  /// a + b*sqrt(m), normalised: square factors of m are pulled into b and
  /// the result collapses to a Rational when the irrational part vanishes.
  static EigenValue quadratic(const Rational& a, const Rational& b, std::int64_t m);
  static EigenValue sqrt_of(std::int64_t m) { return quadratic(0, 1, m); }
  static EigenValue real(double x) {
    EigenValue v;
    v.repr_ = x;
    return v;
  }

  const Repr& repr() const noexcept { return repr_; }
  bool is_exact() const noexcept { return !std::holds_alternative<double>(repr_); }
  bool is_rational() const noexcept { return std::holds_alternative<Rational>(repr_); }
  const Rational* as_rational() const noexcept { return std::get_if<Rational>(&repr_); }
  const QuadIrrational* as_quadratic() const noexcept {
    return std::get_if<QuadIrrational>(&repr_);
  }

  double to_double() const noexcept;
  /// Exact rendering, "p/q" or "a+b*sqrt(d)"; Floats print with 17 digits.
  std::string to_string() const;
  /// Human rendering: "sqrt5", "(1+sqrt5)/12", "-3"; Floats to 6 significant digits.
  std::string pretty() const;
  /// Parses the exact form produced by to_string().
  static EigenValue parse(std::string_view text);

  friend EigenValue operator+(const EigenValue& x, const EigenValue& y);
  friend EigenValue operator-(const EigenValue& x, const EigenValue& y);
  friend EigenValue operator*(const EigenValue& x, const EigenValue& y);
  friend EigenValue operator/(const EigenValue& x, const EigenValue& y);
  EigenValue operator-() const;

  /// True only when both are exact and equal as field elements.
  friend bool exactly_equal(const EigenValue& x, const EigenValue& y);

 private:
  Repr repr_;
};

/// Default tolerance for comparisons involving a Float.
inline constexpr double kCompareTolerance = 1e-9;

/// -1, 0 or 1. Exact when both operands are exact in a common field,
/// otherwise numeric with absolute tolerance `tol`.
int compare(const EigenValue& x, const EigenValue& y, double tol = kCompareTolerance);

/// Sign of an exact value; for Floats, 0 within `tol`.
int sign(const EigenValue& x, double tol = kCompareTolerance);

}  // namespace ckbound
