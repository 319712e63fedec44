#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncg/error.hpp"
#include "ncg/group.hpp"
#include "ncg/perm.hpp"

namespace ncg {

/// Default materialization cap (largest order built as a Cayley table).
inline constexpr std::size_t kDefaultMaxOrder = 5000;

enum class Family { S, A, D, Q, C, H };

char family_tag(Family f) noexcept;

struct FamilyTerm {
  Family family;
  std::uint64_t parameter;

  /// Order of this factor, saturating at UINT64_MAX.
  std::uint64_t order() const noexcept;
  friend bool operator==(const FamilyTerm&, const FamilyTerm&) = default;
};

/// Direct product of family terms, associating left.
struct GroupSpec {
  std::vector<FamilyTerm> terms;
  std::string source;

  /// Canonical form: uppercase tags, no spaces, "x" separator ("Q:16xC:3").
  std::string render() const;
  std::uint64_t order() const noexcept;
};

/// Syntax errors carry the 0-based offset and the tokens that would have
/// been accepted there.
class SpecError : public Error {
public:
  SpecError(std::size_t position, std::vector<std::string> expected, const std::string& message)
      : Error(ErrorCode::SyntaxError, message), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// spec := term ("x" term)* ; term := FAMILY ":" INTEGER
/// Throws SpecError on bad syntax and Error(ParameterError) on illegal parameters.
GroupSpec parse_spec(std::string_view text);

using BuiltGroup = std::variant<FiniteGroup, LazyPermGroup>;

/// Materializes the spec, or returns a lazy view for a single S/A term whose
/// order exceeds `max_order`. Throws CapExceeded or ProductOfLazy.
BuiltGroup build(const GroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);
/// As build(), but a lazy result is reported as CapExceeded.
FiniteGroup build_finite(const GroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);
FiniteGroup build_finite(std::string_view text, std::size_t max_order = kDefaultMaxOrder);

FiniteGroup make_cyclic(std::size_t m);
/// Dihedral group of order 2n: pairs (i, e) = b^i a^e.
FiniteGroup make_dihedral(std::size_t n);
/// Generalized quaternion group of the given order (divisible by 4, at least 8):
/// pairs (i, e) = x^i y^e with i mod order/2.
FiniteGroup make_quaternion(std::size_t order);
/// Unitriangular triples (a, b, c) mod p.
FiniteGroup make_heisenberg(std::size_t p);
FiniteGroup make_symmetric(std::size_t degree);
FiniteGroup make_alternating(std::size_t degree);
FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right);

struct FamilyInfo {
  char tag;
  std::string constraints;
  std::string description;
};

const std::vector<FamilyInfo>& family_catalog();

bool is_prime(std::uint64_t p) noexcept;

}  // namespace ncg
