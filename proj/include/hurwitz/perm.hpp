#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

// Permutation of {0,...,d-1}. Points are 0-based internally; all text I/O
// uses 1-based cycle notation, e.g. "(1 2)(3 4)", with "()" for the
// identity.
//
// Composition is right-to-left throughout: (p * q)(x) = p(q(x)), i.e. the
// right factor acts first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // throws InvalidInput if not a bijection
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  int order() const;
  Perm inverse() const;

  friend Perm operator*(const Perm& p, const Perm& q);

  auto operator<=>(const Perm&) const = default;

  std::string cycles() const;
  static Perm from_cycles(std::string_view text, int degree);

 private:
  std::vector<int> images_;
};

inline Perm compose(const Perm& p, const Perm& q) { return p * q; }

std::uint64_t hash_ints(const std::vector<int>& v);

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    return static_cast<std::size_t>(hash_ints(p.images()));
  }
};

struct IntVecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    return static_cast<std::size_t>(hash_ints(v));
  }
};

}  // namespace hurwitz
