#include "gccaut/scalar.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include "gccaut/errors.hpp"

namespace gccaut {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw ArithmeticError("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (!fits64(n) || !fits64(d)) throw ArithmeticError("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<__int128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& o) {
  *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw ArithmeticError("division by zero");
  *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar::Scalar(Rational a, Rational b, int d) : a_(a), b_(b), d_(d) {
  if (d <= 0) throw ArithmeticError("radicand must be positive");
  if (d == 1) {
    a_ += b_;
    b_ = Rational();
  }
  normalize();
}

Scalar Scalar::golden() { return Scalar(Rational(1, 2), Rational(1, 2), 5); }

void Scalar::normalize() noexcept {
  if (b_.is_zero()) d_ = 1;
}

int Scalar::join_radicand(const Scalar& x, const Scalar& y) {
  if (x.b_.is_zero()) return y.d_;
  if (y.b_.is_zero()) return x.d_;
  if (x.d_ != y.d_) throw ArithmeticError("mixing incompatible quadratic fields");
  return x.d_;
}

int Scalar::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with d*b^2.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  auto c = lhs <=> rhs;
  if (c == std::strong_ordering::greater) return sa;
  if (c == std::strong_ordering::less) return sb;
  return 0;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = join_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  int d = join_radicand(*this, o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  // x / y = x * conj(y) / N(y)
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.d_);
  Scalar conj = o;
  conj.b_ = -conj.b_;
  *this *= conj;
  a_ /= norm;
  b_ /= norm;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  std::string out = a_.to_string();
  if (!b_.is_zero()) {
    if (b_.sign() > 0) out += "+";
    out += b_.to_string() + "√" + std::to_string(d_);
  }
  return out;
}

std::string Scalar::to_label() const {
  auto part = [](const Rational& r) {
    return r.is_integer() ? std::to_string(r.num()) : r.to_string();
  };
  if (b_.is_zero()) return part(a_);
  std::string out;
  if (!a_.is_zero()) out = part(a_) + (b_.sign() > 0 ? "+" : "");
  return out + part(b_) + "√" + std::to_string(d_);
}

std::size_t Scalar::hash() const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(a_.num());
  auto mix = [&h](std::int64_t v) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(a_.den());
  mix(b_.num());
  mix(b_.den());
  return h;
}

std::size_t ScalarVectorHash::operator()(const ScalarVector& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& s : v) h ^= s.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t matrix_rank(ScalarMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace gccaut
