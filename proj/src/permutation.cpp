#include "gccaut/permutation.hpp"

#include <numeric>

#include "gccaut/errors.hpp"

namespace gccaut {

Permutation::Permutation(std::vector<value_type> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw InvalidArgument("image array is not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), value_type{0});
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<value_type>(i);
  return r;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result = identity(img_.size());
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
  return o;
}

std::vector<std::vector<Permutation::value_type>> Permutation::cycles() const {
  std::vector<std::vector<value_type>> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<value_type> cyc;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      cyc.push_back(static_cast<value_type>(j));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw IncompatibleDegree("composing permutations of different degree");
  Permutation r;
  r.img_.resize(q.img_.size());
  for (std::size_t i = 0; i < q.img_.size(); ++i) r.img_[i] = p.img_[q.img_[i]];
  return r;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (auto v : p.images()) h = h * 1000003u ^ v;
  return h;
}

}  // namespace gccaut
