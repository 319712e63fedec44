#include "ncg/families.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace ncg {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kMaxParameter = 1'000'000;
// Permutation groups are tabulated through a 4-bit-per-point encoding.
constexpr std::size_t kMaxTabulatedDegree = 16;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

std::string word_label(const std::string& base, std::size_t k, const std::string& tail, bool has_tail) {
  std::string s = power_label(base, k) + (has_tail ? tail : "");
  return s.empty() ? "1" : s;
}

void check_parameter(Family f, std::uint64_t v) {
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::ParameterError, std::string(1, family_tag(f)) + ":" + std::to_string(v) + " " + why);
  };
  if (v > kMaxParameter) bad("exceeds the largest supported parameter " + std::to_string(kMaxParameter));
  switch (f) {
    case Family::S:
    case Family::A:
      if (v < 1) bad("needs degree >= 1");
      if (v > 10'000) bad("degree too large");
      break;
    case Family::D:
      if (v < 1) bad("needs n >= 1 (order 2n)");
      break;
    case Family::Q:
      if (v % 4 != 0) bad("order must be divisible by 4");
      if (v < 8) bad("order must be at least 8");
      break;
    case Family::C:
      if (v < 1) bad("needs order >= 1");
      break;
    case Family::H:
      if (!is_prime(v)) bad("parameter must be prime");
      break;
  }
}

[[noreturn]] void syntax(std::size_t pos, std::vector<std::string> expected, std::string_view text) {
  std::string msg = "SyntaxError: at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\", expected ";
  for (std::size_t k = 0; k < expected.size(); ++k) msg += (k ? " or " : "") + expected[k];
  throw SpecError(pos, std::move(expected), msg);
}

std::uint64_t encode(const std::vector<std::uint32_t>& images) {
  std::uint64_t key = 0;
  for (auto v : images) key = (key << 4) | v;
  return key;
}

FiniteGroup make_perm_group(std::size_t degree, bool even_only) {
  if (degree > kMaxTabulatedDegree)
    fail(ErrorCode::CapExceeded, "permutation groups above degree 16 cannot be tabulated");
  std::vector<Permutation> elements;
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  // Lexicographic order puts the identity first.
  do {
    std::vector<std::uint32_t> one_based(images);
    for (auto& v : one_based) ++v;
    Permutation p = Permutation::from_images(one_based);
    if (!even_only || p.is_even()) elements.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));

  std::unordered_map<std::uint64_t, Element> index;
  index.reserve(elements.size() * 2);
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    index.emplace(encode(elements[k].images()), static_cast<Element>(k));
    labels.push_back(elements[k].to_cycles());
  }
  std::string spec = std::string(even_only ? "A:" : "S:") + std::to_string(degree);
  return FiniteGroup::from_law(
      elements.size(),
      [&](std::size_t i, std::size_t j) { return index.at(encode(compose(elements[i], elements[j]).images())); },
      std::move(labels), std::move(spec));
}

FiniteGroup build_term(const FamilyTerm& t) {
  const auto p = static_cast<std::size_t>(t.parameter);
  switch (t.family) {
    case Family::S: return make_symmetric(p);
    case Family::A: return make_alternating(p);
    case Family::D: return make_dihedral(p);
    case Family::Q: return make_quaternion(p);
    case Family::C: return make_cyclic(p);
    case Family::H: return make_heisenberg(p);
  }
  fail(ErrorCode::ParameterError, "unknown family");
}

}  // namespace

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

char family_tag(Family f) noexcept {
  switch (f) {
    case Family::S: return 'S';
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::Q: return 'Q';
    case Family::C: return 'C';
    case Family::H: return 'H';
  }
  return '?';
}

std::uint64_t FamilyTerm::order() const noexcept {
  switch (family) {
    case Family::S:
    case Family::A: return LazyPermGroup(static_cast<std::size_t>(parameter),
                                         family == Family::S ? PermKind::Symmetric : PermKind::Alternating)
        .order();
    case Family::D: return sat_mul(2, parameter);
    case Family::Q:
    case Family::C: return parameter;
    case Family::H: return sat_mul(sat_mul(parameter, parameter), parameter);
  }
  return 0;
}

std::string GroupSpec::render() const {
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) out += 'x';
    out += family_tag(terms[k].family);
    out += ':';
    out += std::to_string(terms[k].parameter);
  }
  return out;
}

std::uint64_t GroupSpec::order() const noexcept {
  std::uint64_t n = 1;
  for (const auto& t : terms) n = sat_mul(n, t.order());
  return n;
}

GroupSpec parse_spec(std::string_view text) {
  GroupSpec spec;
  spec.source = std::string(text);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const std::vector<std::string> family_tokens{"S", "A", "D", "Q", "C", "H"};

  while (true) {
    skip_ws();
    if (pos >= text.size()) syntax(pos, family_tokens, text);
    Family fam;
    switch (std::toupper(static_cast<unsigned char>(text[pos]))) {
      case 'S': fam = Family::S; break;
      case 'A': fam = Family::A; break;
      case 'D': fam = Family::D; break;
      case 'Q': fam = Family::Q; break;
      case 'C': fam = Family::C; break;
      case 'H': fam = Family::H; break;
      default: syntax(pos, family_tokens, text);
    }
    ++pos;
    skip_ws();
    if (pos >= text.size() || text[pos] != ':') syntax(pos, {"\":\""}, text);
    ++pos;
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) syntax(pos, {"INTEGER"}, text);
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = std::min<std::uint64_t>(value * 10 + static_cast<std::uint64_t>(text[pos] - '0'), kMaxParameter + 1);
      ++pos;
    }
    check_parameter(fam, value);
    spec.terms.push_back({fam, value});
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X') syntax(pos, {"\"x\"", "end of input"}, text);
    ++pos;
  }
  return spec;
}

FiniteGroup make_cyclic(std::size_t m) {
  if (m < 1) fail(ErrorCode::ParameterError, "C:m needs m >= 1");
  std::vector<std::string> labels(m);
  for (std::size_t k = 0; k < m; ++k) labels[k] = word_label("g", k, "", false);
  return FiniteGroup::from_law(
      m, [m](std::size_t i, std::size_t j) { return (i + j) % m; }, std::move(labels), "C:" + std::to_string(m));
}

FiniteGroup make_dihedral(std::size_t n) {
  if (n < 1) fail(ErrorCode::ParameterError, "D:n needs n >= 1");
  // index = e*n + i  <->  b^i a^e
  std::vector<std::string> labels(2 * n);
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t i = 0; i < n; ++i) labels[e * n + i] = word_label("b", i, "a", e == 1);
  auto mul = [n](std::size_t x, std::size_t y) {
    const std::size_t i = x % n, ex = x / n, j = y % n, ey = y / n;
    if (ex == 0) return ey * n + (i + j) % n;
    return (1 - ey) * n + (i + n - j) % n;
  };
  return FiniteGroup::from_law(2 * n, mul, std::move(labels), "D:" + std::to_string(n));
}

FiniteGroup make_quaternion(std::size_t order) {
  if (order % 4 != 0 || order < 8) fail(ErrorCode::ParameterError, "Q:m needs m divisible by 4 and m >= 8");
  const std::size_t half = order / 2;  // 2n: order of x
  const std::size_t n = order / 4;
  // index = e*2n + i  <->  x^i y^e
  std::vector<std::string> labels(order);
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t i = 0; i < half; ++i) labels[e * half + i] = word_label("x", i, "y", e == 1);
  auto mul = [half, n](std::size_t a, std::size_t b) {
    const std::size_t i = a % half, ea = a / half, j = b % half, eb = b / half;
    if (ea == 0) return eb * half + (i + j) % half;
    if (eb == 0) return half + (i + half - j) % half;
    return (i + half - j + n) % half;
  };
  return FiniteGroup::from_law(order, mul, std::move(labels), "Q:" + std::to_string(order));
}

FiniteGroup make_heisenberg(std::size_t p) {
  if (!is_prime(p)) fail(ErrorCode::ParameterError, "H:p needs p prime");
  const std::size_t order = p * p * p;
  // index = a*p^2 + b*p + c
  std::vector<std::string> labels(order);
  for (std::size_t k = 0; k < order; ++k)
    labels[k] = "(" + std::to_string(k / (p * p)) + "," + std::to_string((k / p) % p) + "," + std::to_string(k % p) + ")";
  auto mul = [p](std::size_t x, std::size_t y) {
    const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
    return ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p;
  };
  return FiniteGroup::from_law(order, mul, std::move(labels), "H:" + std::to_string(p));
}

FiniteGroup make_symmetric(std::size_t degree) {
  if (degree < 1) fail(ErrorCode::ParameterError, "S:n needs n >= 1");
  return make_perm_group(degree, false);
}

FiniteGroup make_alternating(std::size_t degree) {
  if (degree < 1) fail(ErrorCode::ParameterError, "A:n needs n >= 1");
  return make_perm_group(degree, true);
}

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right) {
  const std::size_t m = right.order();
  const std::size_t order = left.order() * m;
  std::vector<std::string> labels(order);
  for (std::size_t k = 0; k < order; ++k)
    labels[k] = left.labels()[k / m] + "," + right.labels()[k % m];
  auto mul = [&](std::size_t x, std::size_t y) {
    return static_cast<std::size_t>(left.mul(static_cast<Element>(x / m), static_cast<Element>(y / m))) * m +
           right.mul(static_cast<Element>(x % m), static_cast<Element>(y % m));
  };
  return FiniteGroup::from_law(order, mul, std::move(labels), left.spec() + "x" + right.spec());
}

BuiltGroup build(const GroupSpec& spec, std::size_t max_order) {
  if (spec.terms.empty()) fail(ErrorCode::ParameterError, "empty group spec");
  const std::uint64_t order = spec.order();
  auto is_perm = [](const FamilyTerm& t) { return t.family == Family::S || t.family == Family::A; };
  if (order > max_order) {
    if (spec.terms.size() == 1 && is_perm(spec.terms[0])) {
      const auto& t = spec.terms[0];
      return LazyPermGroup(static_cast<std::size_t>(t.parameter),
                           t.family == Family::S ? PermKind::Symmetric : PermKind::Alternating);
    }
    for (const auto& t : spec.terms)
      if (is_perm(t) && t.order() > max_order)
        fail(ErrorCode::ProductOfLazy, spec.render() + ": factor " + std::string(1, family_tag(t.family)) + ":" +
                                           std::to_string(t.parameter) +
                                           " is only available lazily, and products require materialization");
    fail(ErrorCode::CapExceeded, spec.render() + " has order " +
                                     (order == kSaturated ? std::string("> 2^64") : std::to_string(order)) +
                                     " above the cap " + std::to_string(max_order));
  }
  FiniteGroup g = build_term(spec.terms[0]);
  for (std::size_t k = 1; k < spec.terms.size(); ++k) g = direct_product(g, build_term(spec.terms[k]));
  return g;
}

FiniteGroup build_finite(const GroupSpec& spec, std::size_t max_order) {
  BuiltGroup g = build(spec, max_order);
  if (auto* finite = std::get_if<FiniteGroup>(&g)) return *finite;
  fail(ErrorCode::CapExceeded, spec.render() + " has order " + std::to_string(spec.order()) + " above the cap " +
                                   std::to_string(max_order) + " (only a lazy view is available)");
}

FiniteGroup build_finite(std::string_view text, std::size_t max_order) {
  return build_finite(parse_spec(text), max_order);
}

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog{
      {'S', "degree n >= 1", "symmetric group S_n of degree n, order n!"},
      {'A', "degree n >= 1", "alternating group A_n of degree n, order n!/2"},
      {'D', "n >= 1 (group order is 2n)", "dihedral group D_2n = <a,b | a^2 = b^n = 1, ab = b^-1 a> of order 2n"},
      {'Q', "order ≡ 0 mod 4, ≥ 8",
       "generalized quaternion group of order m = 4n: <x,y | x^2n = 1, y^2 = x^n, y^-1 x y = x^-1>"},
      {'C', "order m >= 1", "cyclic group C_m, integers mod m"},
      {'H', "parameter prime", "Heisenberg group of order p^3: unitriangular triples (a,b,c) mod p"},
  };
  return catalog;
}

}  // namespace ncg
