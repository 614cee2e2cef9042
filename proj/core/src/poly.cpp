#include "chevkit/poly.hpp"

#include <algorithm>
#include <cctype>

#include "chevkit/errors.hpp"

namespace chevkit {

bool variable_less(std::string_view x, std::string_view y) {
  size_t i = 0;
  size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const bool dx = std::isdigit(static_cast<unsigned char>(x[i])) != 0;
    const bool dy = std::isdigit(static_cast<unsigned char>(y[j])) != 0;
    if (dx && dy) {
      size_t ie = i;
      size_t je = j;
      while (ie < x.size() && std::isdigit(static_cast<unsigned char>(x[ie]))) ++ie;
      while (je < y.size() && std::isdigit(static_cast<unsigned char>(y[je]))) ++je;
      // Compare numerically without overflow: strip leading zeros, then length.
      auto xs = x.substr(i, ie - i);
      auto ys = y.substr(j, je - j);
      while (xs.size() > 1 && xs.front() == '0') xs.remove_prefix(1);
      while (ys.size() > 1 && ys.front() == '0') ys.remove_prefix(1);
      if (xs.size() != ys.size()) return xs.size() < ys.size();
      if (xs != ys) return xs < ys;
      i = ie;
      j = je;
      continue;
    }
    if (x[i] != y[j]) return x[i] < y[j];
    ++i;
    ++j;
  }
  if ((x.size() - i) != (y.size() - j)) return (x.size() - i) < (y.size() - j);
  return x < y;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::string name, uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

uint32_t Monomial::degree() const noexcept {
  uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

uint32_t Monomial::exponent(std::string_view name) const noexcept {
  for (const auto& f : factors_) {
    if (f.first == name) return f.second;
  }
  return 0;
}

bool Monomial::all_exponents_even() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second % 2 == 0; });
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.factors_.reserve(x.factors_.size() + y.factors_.size());
  auto i = x.factors_.begin();
  auto j = y.factors_.begin();
  while (i != x.factors_.end() || j != y.factors_.end()) {
    if (j == y.factors_.end() || (i != x.factors_.end() && variable_less(i->first, j->first))) {
      out.factors_.push_back(*i++);
    } else if (i == x.factors_.end() || variable_less(j->first, i->first)) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::grlex_before(const Monomial& x, const Monomial& y) {
  const auto dx = x.degree();
  const auto dy = y.degree();
  if (dx != dy) return dx > dy;
  // Lex on exponent vectors: the monomial with the larger exponent on the
  // earliest variable where they differ comes first.
  auto i = x.factors_.begin();
  auto j = y.factors_.begin();
  while (i != x.factors_.end() && j != y.factors_.end()) {
    if (i->first != j->first) return variable_less(i->first, j->first);
    if (i->second != j->second) return i->second > j->second;
    ++i;
    ++j;
  }
  return i != x.factors_.end() && j == y.factors_.end();
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : factors_) {
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------- SparsePoly

SparsePoly SparsePoly::one() { return SparsePoly(std::vector<Monomial>{Monomial()}); }

SparsePoly SparsePoly::variable(const std::string& name) {
  return SparsePoly(std::vector<Monomial>{Monomial::variable(name)});
}

SparsePoly SparsePoly::from_monomial(Monomial m) { return SparsePoly(std::vector<Monomial>{std::move(m)}); }

SparsePoly SparsePoly::from_unsorted(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), Monomial::grlex_before);
  // Cancel equal pairs (coefficients live in GF(2)).
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back() == t) {
      out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return SparsePoly(std::move(out));
}

int SparsePoly::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().degree());
}

std::vector<std::string> SparsePoly::variables() const {
  std::vector<std::string> names;
  for (const auto& t : terms_) {
    for (const auto& f : t.factors()) names.push_back(f.first);
  }
  std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) { return variable_less(a, b); });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

bool SparsePoly::contains_variable(std::string_view name) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Monomial& m) { return m.exponent(name) > 0; });
}

SparsePoly operator+(const SparsePoly& x, const SparsePoly& y) {
  std::vector<Monomial> out;
  out.reserve(x.terms_.size() + y.terms_.size());
  auto i = x.terms_.begin();
  auto j = y.terms_.begin();
  while (i != x.terms_.end() && j != y.terms_.end()) {
    if (*i == *j) {
      ++i;
      ++j;
    } else if (Monomial::grlex_before(*i, *j)) {
      out.push_back(*i++);
    } else {
      out.push_back(*j++);
    }
  }
  out.insert(out.end(), i, x.terms_.end());
  out.insert(out.end(), j, y.terms_.end());
  return SparsePoly(std::move(out));
}

SparsePoly operator*(const SparsePoly& x, const SparsePoly& y) {
  if (x.is_zero() || y.is_zero()) return SparsePoly();
  if (x.is_one()) return y;
  if (y.is_one()) return x;
  std::vector<Monomial> prods;
  prods.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& a : x.terms_) {
    for (const auto& b : y.terms_) prods.push_back(a * b);
  }
  return SparsePoly::from_unsorted(std::move(prods));
}

SparsePoly SparsePoly::pow(uint32_t e) const {
  SparsePoly result = one();
  SparsePoly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base = base.square();
  }
  return result;
}

SparsePoly SparsePoly::square() const {
  // (sum m)^2 = sum m^2 in characteristic 2; squaring preserves grlex order.
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t * t);
  return SparsePoly(std::move(out));
}

SparsePoly SparsePoly::substitute(const std::string& name, const SparsePoly& value) const {
  return substitute(std::map<std::string, SparsePoly>{{name, value}});
}

SparsePoly SparsePoly::substitute(const std::map<std::string, SparsePoly>& values) const {
  SparsePoly out;
  for (const auto& t : terms_) {
    Monomial kept;
    SparsePoly replaced = one();
    for (const auto& [name, e] : t.factors()) {
      auto it = values.find(name);
      if (it == values.end()) {
        kept = kept * Monomial::variable(name, e);
      } else {
        replaced *= it->second.pow(e);
      }
    }
    out += replaced * from_monomial(std::move(kept));
  }
  return out;
}

SparsePoly SparsePoly::rename(const std::map<std::string, std::string>& names) const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (const auto& [name, e] : t.factors()) {
      auto it = names.find(name);
      m = m * Monomial::variable(it == names.end() ? name : it->second, e);
    }
    out.push_back(std::move(m));
  }
  return from_unsorted(std::move(out));
}

SparsePoly SparsePoly::linear_part() const {
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    if (t.degree() == 1) out.push_back(t);
  }
  return SparsePoly(std::move(out));
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += t.to_string();
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  SparsePoly parse() {
    SparsePoly p = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  SparsePoly sum() {
    SparsePoly p = product();
    for (;;) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        ++pos_;
        p += product();
      } else {
        return p;
      }
    }
  }

  SparsePoly product() {
    SparsePoly p = power();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        p *= power();
      } else {
        return p;
      }
    }
  }

  SparsePoly power() {
    SparsePoly base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  SparsePoly atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      SparsePoly p = sum();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      // Integer constants reduce mod 2.
      const char last = text_[pos_ - 1];
      return SparsePoly::constant(((last - '0') & 1) != 0);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '\'') ++pos_;
      return SparsePoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

SparsePoly SparsePoly::parse(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------- free functions

SparsePoly sqrt_linearize(const SparsePoly& p) {
  SparsePoly root;
  for (const auto& t : p.terms()) {
    if (!t.all_exponents_even()) {
      throw NotAPerfectSquare("term " + t.to_string() + " of " + p.to_string() + " has an odd exponent");
    }
    Monomial half;
    for (const auto& [name, e] : t.factors()) half = half * Monomial::variable(name, e / 2);
    root += SparsePoly::from_monomial(std::move(half));
  }
  return root;
}

FieldElem specialize(const SparsePoly& p, const std::map<std::string, FieldElem>& assignment,
                     const GF2m& field) {
  FieldElem acc = field.zero();
  for (const auto& t : p.terms()) {
    FieldElem term = field.one();
    for (const auto& [name, e] : t.factors()) {
      auto it = assignment.find(name);
      if (it == assignment.end()) throw MissingVariable("no value for variable '" + name + "'");
      term *= it->second.pow(e);
    }
    acc += term;
  }
  return acc;
}

}  // namespace chevkit
