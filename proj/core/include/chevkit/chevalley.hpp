#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chevkit/errors.hpp"
#include "chevkit/gf2m.hpp"
#include "chevkit/parabolic.hpp"
#include "chevkit/poly.hpp"
#include "chevkit/weyl.hpp"

namespace chevkit {

/// Coefficient rings of characteristic 2 usable in root elements.
template <class R>
concept Coefficient = std::copyable<R> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <Coefficient R>
using Factor = std::pair<int, R>;

template <Coefficient R>
class Unipotent;

/// Rewrites an arbitrary product of radical root elements into normal order
/// (ascending label).
///
/// Uses ε_ζ(c)·ε_ξ(a)·ε_ζ(c) = ε_ξ(a)·ε_{ξ+ζ}(ac) when ξ+ζ is a root and
/// plain commutation otherwise: every simply-laced structure constant is ±1,
/// hence 1 in characteristic 2, and ε_ζ(c) is an involution. Corrections
/// have strictly larger height, so the rewriting terminates.
template <Coefficient R>
std::vector<Factor<R>> collect(const ParabolicDecomposition& ctx, std::vector<Factor<R>> word) {
  const RootSystem& sys = ctx.system();
  std::vector<Factor<R>> result;
  std::vector<Factor<R>> pending(std::make_move_iterator(word.rbegin()), std::make_move_iterator(word.rend()));
  std::vector<Factor<R>> moved;
  while (!pending.empty()) {
    Factor<R> f = std::move(pending.back());
    pending.pop_back();
    if (is_zero(f.second)) continue;
    if (!ctx.in_radical(f.first)) {
      throw DomainNotStable("root element e" + std::to_string(f.first) + " is not in the unipotent radical");
    }
    auto split = std::upper_bound(result.begin(), result.end(), f.first,
                                  [](int l, const Factor<R>& x) { return l < x.first; });
    moved.assign(std::make_move_iterator(split), std::make_move_iterator(result.end()));
    result.erase(split, result.end());
    if (!result.empty() && result.back().first == f.first) {
      result.back().second = result.back().second + f.second;
      if (is_zero(result.back().second)) result.pop_back();
    } else {
      result.push_back(f);
    }
    // f·(moved factors)·f, pushed back so they are re-inserted in order.
    for (auto it = moved.rbegin(); it != moved.rend(); ++it) {
      const int s = sys.sum_label(it->first, f.first);
      if (s != 0) pending.emplace_back(s, it->second * f.second);
      pending.push_back(std::move(*it));
    }
  }
  return result;
}

/// An element ∏ ε_i(c_i) of R_u(P_λ) in normal order (ascending label).
template <Coefficient R>
class Unipotent {
 public:
  explicit Unipotent(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Unipotent identity(ContextPtr ctx) { return Unipotent(std::move(ctx)); }
  static Unipotent root_element(ContextPtr ctx, int label, R c) {
    return from_word(std::move(ctx), {Factor<R>{label, std::move(c)}});
  }
  /// Normal form of an arbitrary product of root elements.
  static Unipotent from_word(ContextPtr ctx, std::vector<Factor<R>> word) {
    Unipotent u(ctx);
    for (auto& f : collect(*ctx, std::move(word))) u.coeffs_.emplace(f.first, std::move(f.second));
    return u;
  }

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::map<int, R>& coeffs() const noexcept { return coeffs_; }
  std::vector<Factor<R>> factors() const { return {coeffs_.begin(), coeffs_.end()}; }
  bool is_identity() const noexcept { return coeffs_.empty(); }
  /// Coefficient at `label`, or nullptr when it is 0.
  const R* coeff(int label) const {
    auto it = coeffs_.find(label);
    return it == coeffs_.end() ? nullptr : &it->second;
  }
  std::vector<int> support() const {
    std::vector<int> out;
    for (const auto& [l, c] : coeffs_) out.push_back(l);
    return out;
  }

  friend bool operator==(const Unipotent& x, const Unipotent& y) { return x.coeffs_ == y.coeffs_; }

  /// "e1(a)*e2(a)*e42(b4*b7 + b42)"; "1" for the identity.
  std::string to_string() const {
    if (coeffs_.empty()) return "1";
    std::string out;
    for (const auto& [l, c] : coeffs_) {
      if (!out.empty()) out += "*";
      out += "e" + std::to_string(l) + "(" + c.to_string() + ")";
    }
    return out;
  }

  template <class F>
  auto map_coefficients(F&& fn) const {
    using S = std::decay_t<decltype(fn(std::declval<const R&>()))>;
    std::vector<Factor<S>> word;
    for (const auto& [l, c] : coeffs_) word.emplace_back(l, fn(c));
    return Unipotent<S>::from_word(ctx_, std::move(word));
  }

 private:
  ContextPtr ctx_;
  std::map<int, R> coeffs_;
};

namespace detail {
inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a.get() != b.get()) throw ContextMismatch("elements belong to different parabolic contexts");
}
}  // namespace detail

template <Coefficient R>
Unipotent<R> collect_product(const Unipotent<R>& left, const Unipotent<R>& right) {
  detail::require_same_context(left.context(), right.context());
  auto word = left.factors();
  for (const auto& f : right.coeffs()) word.push_back(f);
  return Unipotent<R>::from_word(left.context(), std::move(word));
}

template <Coefficient R>
Unipotent<R> operator*(const Unipotent<R>& left, const Unipotent<R>& right) {
  return collect_product(left, right);
}

/// Reversed product; ε_i(c)⁻¹ = ε_i(−c) = ε_i(c) in characteristic 2.
template <Coefficient R>
Unipotent<R> invert(const Unipotent<R>& u) {
  auto word = u.factors();
  std::reverse(word.begin(), word.end());
  return Unipotent<R>::from_word(u.context(), std::move(word));
}

/// w·u·w⁻¹: relabels every factor by the permutation (n_ξ ε_ζ(a) n_ξ⁻¹ =
/// ε_{s_ξ·ζ}(a) in characteristic 2) and re-collects.
template <Coefficient R>
Unipotent<R> conjugate_by_permutation(const RootPermutation& w, const Unipotent<R>& u) {
  const auto& ctx = *u.context();
  std::vector<Factor<R>> word;
  for (const auto& [l, c] : u.coeffs()) {
    const int img = w(l);
    if (!ctx.in_radical(img)) {
      throw DomainNotStable("conjugation sends label " + std::to_string(l) + " to " + std::to_string(img) +
                            " outside the radical");
    }
    word.emplace_back(img, c);
  }
  return Unipotent<R>::from_word(u.context(), std::move(word));
}

template <Coefficient R>
Unipotent<R> conjugate_by_word(const WeylWord& w, const Unipotent<R>& u) {
  return conjugate_by_permutation(word_to_permutation(w, u.context()->system()), u);
}

/// The element w·u of P_λ with w a word in Levi reflections.
template <Coefficient R>
class Mixed {
 public:
  Mixed(WeylWord word, Unipotent<R> unip) : word_(std::move(word)), unip_(std::move(unip)) {
    const auto& ctx = *unip_.context();
    if (!ctx.levi_word(word_)) throw NotInParabolic("Weyl part uses a reflection outside the Levi subgroup");
    perm_ = word_to_permutation(word_, ctx.system());
  }
  /// As above with the permutation of `word` already known.
  Mixed(WeylWord word, RootPermutation perm, Unipotent<R> unip)
      : word_(std::move(word)), perm_(std::move(perm)), unip_(std::move(unip)) {}
  static Mixed weyl(ContextPtr ctx, WeylWord word) { return Mixed(std::move(word), Unipotent<R>(std::move(ctx))); }
  static Mixed radical(Unipotent<R> u) { return Mixed(WeylWord(), std::move(u)); }

  const WeylWord& word() const noexcept { return word_; }
  const RootPermutation& permutation() const noexcept { return perm_; }
  const Unipotent<R>& unip() const noexcept { return unip_; }
  const ContextPtr& context() const noexcept { return unip_.context(); }

  /// Equality as group elements: the Weyl parts act identically and the
  /// radical parts agree.
  friend bool operator==(const Mixed& x, const Mixed& y) { return x.perm_ == y.perm_ && x.unip_ == y.unip_; }

  std::string to_string() const {
    const auto& datum = context()->system().datum();
    if (word_.empty()) return unip_.to_string();
    if (unip_.is_identity()) return "[" + word_.to_string(datum) + "]";
    return "[" + word_.to_string(datum) + "]*" + unip_.to_string();
  }

 private:
  WeylWord word_;
  RootPermutation perm_;
  Unipotent<R> unip_;
};

/// (w₁,u₁)(w₂,u₂) = (w₁w₂, (w₂⁻¹u₁w₂)·u₂).
template <Coefficient R>
Mixed<R> mixed_multiply(const Mixed<R>& x, const Mixed<R>& y) {
  detail::require_same_context(x.context(), y.context());
  auto moved = conjugate_by_permutation(y.permutation().inverse(), x.unip());
  return Mixed<R>(x.word() * y.word(), x.permutation() * y.permutation(), collect_product(moved, y.unip()));
}

template <Coefficient R>
Mixed<R> operator*(const Mixed<R>& x, const Mixed<R>& y) {
  return mixed_multiply(x, y);
}

/// (w,u)⁻¹ = (w⁻¹, w·u⁻¹·w⁻¹).
template <Coefficient R>
Mixed<R> mixed_inverse(const Mixed<R>& x) {
  return Mixed<R>(x.word().inverse(), x.permutation().inverse(),
                  conjugate_by_permutation(x.permutation(), invert(x.unip())));
}

/// Applies `fn` to every coefficient of the radical part.
template <Coefficient R, class F>
auto map_mixed(const Mixed<R>& x, F&& fn) {
  auto u = x.unip().map_coefficients(std::forward<F>(fn));
  using S = std::decay_t<decltype(fn(std::declval<const R&>()))>;
  return Mixed<S>(x.word(), x.permutation(), std::move(u));
}

/// Labels ζ of the radical such that ζ+ξ is not a root for any radical ξ;
/// these root subgroups generate Z(R_u(P_λ)).
std::vector<int> center_of_radical(const ParabolicDecomposition& ctx);

using PolyUnipotent = Unipotent<SparsePoly>;
using FieldUnipotent = Unipotent<FieldElem>;
using PolyMixed = Mixed<SparsePoly>;
using FieldMixed = Mixed<FieldElem>;

}  // namespace chevkit
