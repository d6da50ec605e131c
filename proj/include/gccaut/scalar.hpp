#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gccaut {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Intermediate products are carried in 128 bits and reduced; a result that
/// does not fit back into 64 bits raises ArithmeticError rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "n/d", always with an explicit denominator.
  std::string to_string() const;

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Exact real number a + b*sqrt(d) with rational a, b and square-free d > 0.
///
/// A value with b == 0 is plain rational and combines with any field. Mixing
/// two irrational values from different fields raises ArithmeticError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t a) : a_(a) {}  // NOLINT(implicit)
  Scalar(Rational a) : a_(a) {}      // NOLINT(implicit)
  Scalar(Rational a, Rational b, int d);

  /// (1 + sqrt 5) / 2.
  static Scalar golden();

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& radical_part() const noexcept { return b_; }
  int radicand() const noexcept { return d_; }

  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  /// Sign of the real embedding with sqrt(d) > 0.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  /// "a/b" for rationals, "a/b+c/d√5" otherwise (sign folded into c).
  std::string to_string() const;
  /// Shorter label form: integers without denominator.
  std::string to_label() const;

  std::size_t hash() const noexcept;

 private:
  static int join_radicand(const Scalar& x, const Scalar& y);
  void normalize() noexcept;

  Rational a_;
  Rational b_;
  int d_ = 1;
};

using ScalarVector = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarVector>;

/// Rank by exact Gaussian elimination.
std::size_t matrix_rank(ScalarMatrix m);

struct ScalarVectorHash {
  std::size_t operator()(const ScalarVector& v) const noexcept;
};

}  // namespace gccaut
