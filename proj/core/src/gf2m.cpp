#include "chevkit/gf2m.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "chevkit/errors.hpp"

namespace chevkit {

namespace {

// Primitive polynomials over GF(2), indexed by degree.
constexpr std::array<uint32_t, GF2m::kMaxDegree + 1> kDefaultModuli = {
    0x0,      // unused
    0x3,      // t + 1
    0x7,      // t^2 + t + 1
    0xB,      // t^3 + t + 1
    0x13,     // t^4 + t + 1
    0x25,     // t^5 + t^2 + 1
    0x5B,     // t^6 + t^4 + t^3 + t + 1
    0x83,     // t^7 + t + 1
    0x11D,    // t^8 + t^4 + t^3 + t^2 + 1
    0x211,    // t^9 + t^4 + 1
    0x409,    // t^10 + t^3 + 1
    0x805,    // t^11 + t^2 + 1
    0x1053,   // t^12 + t^6 + t^4 + t + 1
    0x201B,   // t^13 + t^4 + t^3 + t + 1
    0x4443,   // t^14 + t^10 + t^6 + t + 1
    0x8003,   // t^15 + t + 1
    0x1002D,  // t^16 + t^5 + t^3 + t^2 + 1
};

unsigned bit_degree(uint64_t x) { return x == 0 ? 0 : 63u - static_cast<unsigned>(std::countl_zero(x)); }

uint64_t clmul(uint32_t x, uint32_t y) {
  uint64_t r = 0;
  uint64_t a = x;
  while (y != 0) {
    if (y & 1u) r ^= a;
    a <<= 1;
    y >>= 1;
  }
  return r;
}

uint64_t poly_mod(uint64_t x, uint64_t m) {
  const unsigned dm = bit_degree(m);
  while (x != 0 && bit_degree(x) >= dm) x ^= m << (bit_degree(x) - dm);
  return x;
}

}  // namespace

bool is_irreducible_gf2(unsigned m, uint32_t modulus) {
  if (m == 0 || m > GF2m::kMaxDegree || bit_degree(modulus) != m) return false;
  // Trial division by every polynomial of degree 1..m/2.
  for (uint64_t d = 2; bit_degree(d) * 2 <= m; ++d) {
    if (poly_mod(modulus, d) == 0) return false;
  }
  return true;
}

uint32_t GF2m::default_modulus(unsigned m) {
  if (m == 0 || m > kMaxDegree) throw std::invalid_argument("GF(2^m) supports 1 <= m <= 16");
  return kDefaultModuli[m];
}

GF2m GF2m::with_degree(unsigned m) { return GF2m(m, default_modulus(m)); }

GF2m GF2m::parse(const std::string& name) {
  if (name.size() > 2 && (name.rfind("gf", 0) == 0 || name.rfind("GF", 0) == 0)) {
    const auto order = std::stoul(name.substr(2));
    if (order >= 2 && std::has_single_bit(order)) {
      return with_degree(static_cast<unsigned>(std::countr_zero(order)));
    }
  }
  throw std::invalid_argument("unknown field '" + name + "' (expected gf2, gf4, gf8, ...)");
}

GF2m::GF2m(unsigned m, uint32_t modulus) : degree_(m), modulus_(modulus) {
  if (!is_irreducible_gf2(m, modulus)) {
    throw std::invalid_argument("modulus is not irreducible of degree " + std::to_string(m));
  }
}

uint32_t GF2m::mul(uint32_t x, uint32_t y) const noexcept {
  return static_cast<uint32_t>(poly_mod(clmul(x, y), modulus_));
}

uint32_t GF2m::pow(uint32_t x, uint64_t e) const noexcept {
  uint32_t r = 1;
  while (e != 0) {
    if (e & 1u) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

uint32_t GF2m::inv(uint32_t x) const {
  if (x == 0) throw std::domain_error("inverse of zero in " + name());
  return pow(x, size() - 2);
}

uint32_t GF2m::sqrt(uint32_t x) const noexcept { return pow(x, size() / 2); }

FieldElem GF2m::zero() const { return FieldElem(*this, 0); }
FieldElem GF2m::one() const { return FieldElem(*this, 1); }
FieldElem GF2m::gen() const { return FieldElem(*this, degree_ == 1 ? 1u : 2u); }
FieldElem GF2m::elem(uint32_t bits) const { return FieldElem(*this, bits); }

std::vector<FieldElem> GF2m::elements() const {
  std::vector<FieldElem> out;
  out.reserve(size());
  for (uint32_t v = 0; v < size(); ++v) out.emplace_back(*this, v);
  return out;
}

FieldElem::FieldElem(const GF2m& field, uint32_t bits) : field_(field), bits_(bits) {
  if (bits >= field.size()) throw std::invalid_argument("bit pattern out of range for " + field.name());
}

namespace {
void require_same(const FieldElem& x, const FieldElem& y) {
  if (!(x.field() == y.field())) {
    throw RingMismatch("operands in " + x.field().name() + " and " + y.field().name());
  }
}
}  // namespace

FieldElem operator+(const FieldElem& x, const FieldElem& y) {
  require_same(x, y);
  return FieldElem(x.field_, x.bits_ ^ y.bits_);
}

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  require_same(x, y);
  return FieldElem(x.field_, x.field_.mul(x.bits_, y.bits_));
}

bool operator==(const FieldElem& x, const FieldElem& y) {
  require_same(x, y);
  return x.bits_ == y.bits_;
}

FieldElem FieldElem::inverse() const { return FieldElem(field_, field_.inv(bits_)); }
FieldElem FieldElem::pow(uint64_t e) const { return FieldElem(field_, field_.pow(bits_, e)); }
FieldElem FieldElem::sqrt() const { return FieldElem(field_, field_.sqrt(bits_)); }

std::string FieldElem::to_string() const {
  if (bits_ == 0) return "0";
  std::string out;
  for (int i = static_cast<int>(field_.degree()) - 1; i >= 0; --i) {
    if (!((bits_ >> i) & 1u)) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "t";
    } else {
      out += "t^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace chevkit
