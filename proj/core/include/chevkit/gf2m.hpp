#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chevkit {

class FieldElem;

/// The finite field GF(2^m), 1 <= m <= 16, realized as GF(2)[t]/(f).
///
/// Elements are bit patterns of length m; bit i is the coefficient of t^i.
/// The descriptor is a small value type: two fields compare equal iff they
/// have the same degree and modulus.
class GF2m {
 public:
  static constexpr unsigned kMaxDegree = 16;

  /// Field with the bundled default (primitive) modulus for degree m.
  static GF2m with_degree(unsigned m);
  /// Parses "gf2", "gf4", "gf8", ... "gf65536".
  static GF2m parse(const std::string& name);
  static uint32_t default_modulus(unsigned m);

  /// Throws std::invalid_argument unless `modulus` is irreducible of degree m.
  GF2m(unsigned m, uint32_t modulus);

  unsigned degree() const noexcept { return degree_; }
  uint32_t modulus() const noexcept { return modulus_; }
  uint32_t size() const noexcept { return uint32_t{1} << degree_; }
  std::string name() const { return "gf" + std::to_string(size()); }

  FieldElem zero() const;
  FieldElem one() const;
  /// The class of t.
  FieldElem gen() const;
  FieldElem elem(uint32_t bits) const;
  /// All elements in increasing bit-pattern order (0 first).
  std::vector<FieldElem> elements() const;

  // Raw arithmetic on bit patterns.
  uint32_t add(uint32_t x, uint32_t y) const noexcept { return x ^ y; }
  uint32_t mul(uint32_t x, uint32_t y) const noexcept;
  uint32_t pow(uint32_t x, uint64_t e) const noexcept;
  /// Throws std::domain_error on zero.
  uint32_t inv(uint32_t x) const;
  /// Unique square root (Frobenius is bijective on a finite field of char 2).
  uint32_t sqrt(uint32_t x) const noexcept;

  bool operator==(const GF2m&) const = default;

 private:
  unsigned degree_;
  uint32_t modulus_;
};

/// Reports whether `modulus` (degree m, bit m set) is irreducible over GF(2).
bool is_irreducible_gf2(unsigned m, uint32_t modulus);

class FieldElem {
 public:
  FieldElem(const GF2m& field, uint32_t bits);

  const GF2m& field() const noexcept { return field_; }
  uint32_t bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  bool is_one() const noexcept { return bits_ == 1; }

  FieldElem inverse() const;
  FieldElem pow(uint64_t e) const;
  FieldElem square() const { return *this * *this; }
  FieldElem sqrt() const;

  friend FieldElem operator+(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y) { return x + y; }
  friend FieldElem operator-(const FieldElem& x) { return x; }
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
  FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
  FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }

  /// Compares values; elements of different fields throw RingMismatch.
  friend bool operator==(const FieldElem& x, const FieldElem& y);

  /// Polynomial in t, e.g. "t^2 + 1", "0", "1".
  std::string to_string() const;

 private:
  GF2m field_;
  uint32_t bits_;
};

inline bool is_zero(const FieldElem& x) { return x.is_zero(); }

}  // namespace chevkit
