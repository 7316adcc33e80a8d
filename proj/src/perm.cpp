#include "ef/perm.hpp"

#include <numeric>

#include "ef/errors.hpp"

namespace ef {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int v : img_) {
    if (v < 0 || v >= n || seen[v])
      throw InvalidInput("image table is not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw InvalidInput("negative degree");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::smallest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return -1;
}

std::vector<int> Permutation::moved_points() const {
  std::vector<int> pts;
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) pts.push_back(i);
  return pts;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    const std::uint64_t g = std::gcd(ord, len);
    const std::uint64_t f = len / g;
    if (ord > UINT64_MAX / f) throw TooLarge("element order overflows");
    ord *= f;
  }
  return ord;
}

Permutation Permutation::power(std::uint64_t e) const {
  Permutation acc = identity(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("degree mismatch in compose");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = b(a(i));
  return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  if (g.degree() != x.degree())
    throw InvalidInput("degree mismatch in conjugate");
  // (x^-1 g x)(x(i)) = x(g(i))
  std::vector<int> img(g.degree());
  for (int i = 0; i < g.degree(); ++i) img[x(i)] = x(g(i));
  return Permutation(std::move(img));
}

Permutation commutator(const Permutation& g, const Permutation& x) {
  if (g.degree() != x.degree())
    throw InvalidInput("degree mismatch in commutator");
  // [g,x](i) = x(g(x^-1(g^-1(i)))); evaluate via the inverse images.
  const Permutation gi = g.inverse();
  const Permutation xi = x.inverse();
  std::vector<int> img(g.degree());
  for (int i = 0; i < g.degree(); ++i) img[i] = x(g(xi(gi(i))));
  return Permutation(std::move(img));
}

std::uint64_t hash_value(const Permutation& p) {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace ef
