#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gccaut {

/// Bijection of {0, ..., n-1} stored as its image array.
///
/// Composition follows function notation: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  using value_type = std::uint32_t;

  Permutation() = default;
  explicit Permutation(std::vector<value_type> images);
  static Permutation identity(std::size_t n);

  std::size_t degree() const noexcept { return img_.size(); }
  value_type operator()(std::size_t x) const { return img_[x]; }
  value_type operator[](std::size_t x) const { return img_[x]; }
  std::span<const value_type> images() const noexcept { return img_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long e) const;
  /// Order as a group element (lcm of cycle lengths).
  std::uint64_t order() const;
  std::vector<std::vector<value_type>> cycles() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

 private:
  std::vector<value_type> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace gccaut
