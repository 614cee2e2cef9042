#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "chevkit/rootsys.hpp"

namespace chevkit {

/// A word n_{i1} n_{i2} ... n_{ik} in the simple reflections. Letters are
/// simple-root indices; the word acts on roots right-to-left.
class WeylWord {
 public:
  WeylWord() = default;
  explicit WeylWord(std::vector<int> letters) : letters_(std::move(letters)) {}

  /// Parses "e,b,c,a,b" (comma or space separated names, symbols, or
  /// letters of the datum). Throws UnknownLetter.
  static WeylWord parse(const std::string& text, const CartanDatum& datum);

  const std::vector<int>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }
  /// Concatenation (this word applied after `rhs`).
  friend WeylWord operator*(const WeylWord& lhs, const WeylWord& rhs);
  /// Reversed word; each n_ξ is an involution on roots.
  WeylWord inverse() const;
  friend bool operator==(const WeylWord&, const WeylWord&) = default;

  /// "n_ε n_β n_γ n_α n_β" style (using datum symbols), or "1" if empty.
  std::string to_string(const CartanDatum& datum) const;

 private:
  std::vector<int> letters_;
};

/// A permutation of the signed labels ±1..±N of a root system that commutes
/// with negation.
class RootPermutation {
 public:
  RootPermutation() = default;
  static RootPermutation identity(int n);
  /// From positive-label images (index 0 unused; images are signed).
  static RootPermutation from_images(std::vector<int> positive_images);

  int degree() const noexcept { return n_; }
  int operator()(int label) const;
  /// (this ∘ rhs)(x) = this(rhs(x)).
  friend RootPermutation operator*(const RootPermutation& lhs, const RootPermutation& rhs);
  RootPermutation inverse() const;
  RootPermutation pow(int e) const;
  bool is_identity() const;
  friend bool operator==(const RootPermutation&, const RootPermutation&) = default;
  friend bool operator<(const RootPermutation& x, const RootPermutation& y) { return x.images_ < y.images_; }

  /// True when the label set is mapped onto itself.
  bool stabilizes(const std::vector<int>& domain) const;
  /// Canonical cycle notation on `domain`: each cycle starts at its least
  /// element, cycles ordered by that element, fixed points omitted; "()"
  /// for the identity. Throws DomainNotStable.
  std::string cycles(const std::vector<int>& domain) const;

 private:
  int n_ = 0;
  std::vector<int> images_;  // images of 1..n (index 0 unused)
};

/// Parses canonical cycle notation like "(1 2)(3 6)" into a permutation of
/// labels 1..n (entries not mentioned are fixed). Test and CLI helper.
RootPermutation parse_cycles(const std::string& text, int n);

RootPermutation word_to_permutation(const WeylWord& word, const RootSystem& system);

/// The labels lo..hi inclusive.
std::vector<int> label_range(int lo, int hi);

struct OrbitPartition {
  /// Keyed by the least label of each orbit; orbit members sorted.
  std::map<int, std::vector<int>> orbits;

  std::size_t count() const noexcept { return orbits.size(); }
  /// Key of the orbit containing `label`; throws std::out_of_range.
  int key_of(int label) const;
  std::vector<std::size_t> sizes() const;
};

/// Orbits of the group generated by `generators` on `domain`. Throws
/// DomainNotStable naming the first escaping label.
OrbitPartition orbits(const std::vector<RootPermutation>& generators, const std::vector<int>& domain);

struct GroupDescription {
  std::vector<RootPermutation> generators;
  /// Sorted elements of the generated group.
  std::vector<RootPermutation> elements;

  std::size_t order() const noexcept { return elements.size(); }
  /// Evaluates a word in the generators: entry k>0 is generator k (1-based),
  /// −k its inverse. The empty word is the identity.
  RootPermutation evaluate(const std::vector<int>& word) const;
  /// True when the word evaluates to the identity.
  bool relation_holds(const std::vector<int>& word) const;
};

/// Closure of the generators under composition. Throws OrderBound when the
/// group exceeds `max_order` elements.
GroupDescription group_closure(const std::vector<RootPermutation>& generators, std::size_t max_order = 100000);

}  // namespace chevkit
