#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chevkit/gf2m.hpp"

namespace chevkit {

/// Natural ordering of variable names: digit runs compare numerically, so
/// b4 < b11 and a < a' < b.
bool variable_less(std::string_view x, std::string_view y);

/// A power product of named variables, kept sorted by variable_less.
class Monomial {
 public:
  using Factor = std::pair<std::string, uint32_t>;

  Monomial() = default;
  static Monomial variable(std::string name, uint32_t exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  uint32_t degree() const noexcept;
  bool is_one() const noexcept { return factors_.empty(); }
  /// Exponent of `name` (0 when absent).
  uint32_t exponent(std::string_view name) const noexcept;
  bool all_exponents_even() const noexcept;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic order: higher total degree first, then the
  /// exponent vector compared lexicographically along variable_less.
  /// Returns true when x is strictly earlier in display order than y.
  static bool grlex_before(const Monomial& x, const Monomial& y);

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Polynomial over GF(2) in finitely many named variables.
///
/// Terms are stored once each (coefficient 1), sorted in grlex display order.
/// Because the characteristic is 2, addition is symmetric difference of term
/// sets and negation is the identity.
class SparsePoly {
 public:
  SparsePoly() = default;
  static SparsePoly zero() { return SparsePoly(); }
  static SparsePoly one();
  static SparsePoly constant(bool bit) { return bit ? one() : zero(); }
  static SparsePoly variable(const std::string& name);
  static SparsePoly from_monomial(Monomial m);
  /// Inverse of to_string; accepts "0", "1", sums of products like
  /// "a^2 + b*c + 1". Integer constants are read mod 2 and '-' as '+'.
  /// Throws ParseError.
  static SparsePoly parse(std::string_view text);

  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_.front().is_one(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.front().is_one()); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool has_constant_term() const noexcept { return !terms_.empty() && terms_.back().is_one(); }
  /// Variables occurring in some term, ordered by variable_less.
  std::vector<std::string> variables() const;
  bool contains_variable(std::string_view name) const;

  friend SparsePoly operator+(const SparsePoly& x, const SparsePoly& y);
  friend SparsePoly operator-(const SparsePoly& x, const SparsePoly& y) { return x + y; }
  friend SparsePoly operator-(const SparsePoly& x) { return x; }
  friend SparsePoly operator*(const SparsePoly& x, const SparsePoly& y);
  SparsePoly& operator+=(const SparsePoly& y) { return *this = *this + y; }
  SparsePoly& operator*=(const SparsePoly& y) { return *this = *this * y; }
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  SparsePoly pow(uint32_t e) const;
  /// Frobenius p -> p^2 (squares every monomial, since char 2).
  SparsePoly square() const;

  /// Replaces every occurrence of `name` by `value`.
  SparsePoly substitute(const std::string& name, const SparsePoly& value) const;
  /// Simultaneous substitution; variables not in the map are kept.
  SparsePoly substitute(const std::map<std::string, SparsePoly>& values) const;
  /// Renames variables (unlisted names are kept).
  SparsePoly rename(const std::map<std::string, std::string>& names) const;

  /// Sum of the degree-1 terms.
  SparsePoly linear_part() const;

  std::string to_string() const;

 private:
  explicit SparsePoly(std::vector<Monomial> sorted_terms) : terms_(std::move(sorted_terms)) {}
  static SparsePoly from_unsorted(std::vector<Monomial> terms);

  std::vector<Monomial> terms_;
};

inline bool is_zero(const SparsePoly& p) { return p.is_zero(); }

/// Square root of a polynomial all of whose exponents are even. Over GF(2)
/// the Frobenius map is injective on polynomials, so the root is unique.
/// Throws NotAPerfectSquare if some exponent is odd.
SparsePoly sqrt_linearize(const SparsePoly& p);

/// Evaluates p under `assignment`. Throws MissingVariable if p mentions a
/// variable that is not assigned; `field` fixes the ring of the result.
FieldElem specialize(const SparsePoly& p, const std::map<std::string, FieldElem>& assignment,
                     const GF2m& field);

}  // namespace chevkit
