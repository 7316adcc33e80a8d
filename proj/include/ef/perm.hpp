#pragma once

#include <cstdint>
#include <vector>

namespace ef {

/// A permutation of {0, ..., degree-1}, stored as its image table.
///
/// Composition is left-to-right throughout the library:
///   (p * q)(i) == q(p(i))      -- "apply p, then q".
/// Conjugation and commutators follow the same convention:
///   conj(g, x) == x^-1 * g * x,   comm(g, x) == g^-1 * x^-1 * g * x.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_[point]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  /// Smallest point moved, or -1 for the identity.
  int smallest_moved_point() const;
  std::vector<int> moved_points() const;

  Permutation inverse() const;
  /// Element order (lcm of cycle lengths); throws on uint64 overflow.
  std::uint64_t order() const;
  /// p^e for e >= 0.
  Permutation power(std::uint64_t e) const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  /// Lexicographic comparison of image tables (used for canonical ordering).
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> img_;
};

/// apply a, then b; degrees must match.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

/// x^-1 * g * x
Permutation conjugate(const Permutation& g, const Permutation& x);
/// g^-1 * x^-1 * g * x
Permutation commutator(const Permutation& g, const Permutation& x);

std::uint64_t hash_value(const Permutation& p);

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    return static_cast<std::size_t>(hash_value(p));
  }
};

}  // namespace ef
