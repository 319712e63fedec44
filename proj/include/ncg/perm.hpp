#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ncg {

/// Permutation of the points 1..n, stored as a 0-based image array.
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(std::size_t degree);
  /// `images[k]` is the image of point k+1, given 1-based. Throws MalformedPermutation.
  static Permutation from_images(const std::vector<std::uint32_t>& images);
  /// Cycle notation such as "(1 2)(3 4)" or "(1,3)(2,4)"; "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  /// Image of 0-based point p.
  std::uint32_t operator()(std::uint32_t p) const noexcept { return images_[p]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_bijection() const;
  bool is_even() const;
  Permutation inverse() const;
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  friend Permutation compose(const Permutation&, const Permutation&);
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}
  std::vector<std::uint32_t> images_;
};

/// (p ∘ q)(x) = p(q(x)). Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

enum class PermKind { Symmetric, Alternating };

/// S_n or A_n viewed through element arithmetic only; nothing is enumerated.
class LazyPermGroup {
public:
  LazyPermGroup(std::size_t degree, PermKind kind);

  std::size_t degree() const noexcept { return degree_; }
  PermKind kind() const noexcept { return kind_; }
  /// Group order, saturating at UINT64_MAX.
  std::uint64_t order() const noexcept;
  std::string spec() const;

  /// Throws MalformedPermutation or ParityViolation.
  void validate(const Permutation& p) const;
  bool contains(const Permutation& p) const noexcept;

  Permutation multiply(const Permutation& p, const Permutation& q) const;
  bool perm_commutes(const Permutation& p, const Permutation& q) const;
  Permutation random_element(std::mt19937_64& rng) const;

private:
  std::size_t degree_;
  PermKind kind_;
};

}  // namespace ncg

#include <array>
#include <optional>

namespace ncg {

using PermTriple = std::array<Permutation, 3>;

/// A built-in triple (x, y, z) with [x,y] = 1, [y,z] = 1 and [x,z] != 1 for
/// the lazily viewed group, when one is known: S_n for n >= 4 and A_n for n >= 6.
std::optional<PermTriple> known_transitivity_witness(const LazyPermGroup& g);

struct TripleCommutation {
  bool xy = false;
  bool yz = false;
  bool xz = false;
  /// The triple breaks transitivity of commutation.
  bool violates() const noexcept { return xy && yz && !xz; }
};

/// Checks the three commutation relations with perm_commutes.
TripleCommutation check_triple(const LazyPermGroup& g, const PermTriple& t);

}  // namespace ncg
