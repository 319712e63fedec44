#include "ncg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "ncg/error.hpp"

namespace ncg {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(const std::vector<std::uint32_t>& images) {
  std::vector<std::uint32_t> zero_based(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (images[k] < 1 || images[k] > images.size())
      fail(ErrorCode::MalformedPermutation,
           "image " + std::to_string(images[k]) + " of point " + std::to_string(k + 1) + " is outside 1.." +
               std::to_string(images.size()));
    zero_based[k] = images[k] - 1;
  }
  Permutation p(std::move(zero_based));
  if (!p.is_bijection()) fail(ErrorCode::MalformedPermutation, "image array is not a bijection");
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<bool> used(degree, false);
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail(ErrorCode::MalformedPermutation, "expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail(ErrorCode::MalformedPermutation, "expected a point at offset " + std::to_string(pos));
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v > degree) fail(ErrorCode::MalformedPermutation, "point exceeds degree " + std::to_string(degree));
        ++pos;
      }
      if (v == 0) fail(ErrorCode::MalformedPermutation, "points are numbered from 1");
      if (used[v - 1]) fail(ErrorCode::MalformedPermutation, "point " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

bool Permutation::is_bijection() const {
  std::vector<bool> hit(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool Permutation::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k]] = static_cast<std::uint32_t>(k);
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == s) continue;
    out += '(';
    for (std::size_t x = s; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (x != s) out += ' ';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) fail(ErrorCode::MalformedPermutation, "degree mismatch in composition");
  std::vector<std::uint32_t> out(p.degree());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.images_[q.images_[k]];
  return Permutation(std::move(out));
}

LazyPermGroup::LazyPermGroup(std::size_t degree, PermKind kind) : degree_(degree), kind_(kind) {
  if (degree == 0) fail(ErrorCode::ParameterError, "permutation degree must be positive");
}

std::uint64_t LazyPermGroup::order() const noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  for (std::uint64_t k = 2; k <= degree_; ++k) {
    if (n > kMax / k) return kMax;
    n *= k;
  }
  if (kind_ == PermKind::Alternating && degree_ >= 2) n /= 2;
  return n;
}

std::string LazyPermGroup::spec() const {
  return (kind_ == PermKind::Symmetric ? "S:" : "A:") + std::to_string(degree_);
}

void LazyPermGroup::validate(const Permutation& p) const {
  if (p.degree() != degree_)
    fail(ErrorCode::MalformedPermutation,
         "permutation of degree " + std::to_string(p.degree()) + " in a group of degree " + std::to_string(degree_));
  if (!p.is_bijection()) fail(ErrorCode::MalformedPermutation, "image array is not a bijection");
  if (kind_ == PermKind::Alternating && !p.is_even())
    fail(ErrorCode::ParityViolation, p.to_cycles() + " is odd and not in " + spec());
}

bool LazyPermGroup::contains(const Permutation& p) const noexcept {
  return p.degree() == degree_ && p.is_bijection() && (kind_ == PermKind::Symmetric || p.is_even());
}

Permutation LazyPermGroup::multiply(const Permutation& p, const Permutation& q) const {
  validate(p);
  validate(q);
  return compose(p, q);
}

bool LazyPermGroup::perm_commutes(const Permutation& p, const Permutation& q) const {
  validate(p);
  validate(q);
  return compose(p, q) == compose(q, p);
}

Permutation LazyPermGroup::random_element(std::mt19937_64& rng) const {
  std::vector<std::uint32_t> images(degree_);
  std::iota(images.begin(), images.end(), 1u);
  std::shuffle(images.begin(), images.end(), rng);
  Permutation p = Permutation::from_images(images);
  if (kind_ == PermKind::Alternating && !p.is_even() && degree_ >= 2) {
    // Fix parity by swapping the images of points 1 and 2.
    std::swap(images[0], images[1]);
    p = Permutation::from_images(images);
  }
  return p;
}

}  // namespace ncg

namespace ncg {

std::optional<PermTriple> known_transitivity_witness(const LazyPermGroup& g) {
  const std::size_t n = g.degree();
  auto p = [n](const char* cycles) { return Permutation::from_cycles(cycles, n); };
  if (g.kind() == PermKind::Symmetric) {
    if (n < 4) return std::nullopt;
    return PermTriple{p("(3 4)"), p("(1 2)(3 4)"), p("(1 3)(2 4)")};
  }
  if (n >= 10) return PermTriple{p("(1 2)(3 4)"), p("(5 6)(7 8)"), p("(2 3)(9 10)")};
  if (n >= 6) return PermTriple{p("(1 2)(3 4)"), p("(1 3)(2 4)"), p("(1 3)(5 6)")};
  return std::nullopt;
}

TripleCommutation check_triple(const LazyPermGroup& g, const PermTriple& t) {
  return {g.perm_commutes(t[0], t[1]), g.perm_commutes(t[1], t[2]), g.perm_commutes(t[0], t[2])};
}

}  // namespace ncg
