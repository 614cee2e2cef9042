#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace chevkit {

using Coords = std::vector<int>;

/// Cartan data of a simply-laced root system.
///
/// `names` are ASCII identifiers ("alpha"), `symbols` the display names
/// ("α"), `letters` the one-character abbreviations used in Weyl words.
struct CartanDatum {
  int rank = 0;
  std::vector<std::vector<int>> matrix;
  std::vector<std::string> names;
  std::vector<std::string> symbols;
  std::vector<std::string> letters;

  /// Throws NonSimplyLaced (or std::invalid_argument for shape errors).
  void validate() const;

  /// Index of a simple root given by name, symbol, or letter; -1 if unknown.
  int simple_index(const std::string& id) const;

  /// E7 with simple roots α β γ δ ε η σ: the chain α-β-γ-δ-ε-η with σ
  /// attached to δ.
  static CartanDatum e7();
  /// Type A_n (path graph) with generic names.
  static CartanDatum type_a(int n);
  /// Builds a datum from the edges of a simply-laced Dynkin diagram.
  static CartanDatum from_edges(int rank, const std::vector<std::pair<int, int>>& edges,
                                std::vector<std::string> names = {});
};

/// A root as an integer vector in the simple-root basis.
struct Root {
  Coords coords;

  int height() const;
  bool is_positive() const;
  bool is_negative() const;
  Root operator-() const;
  friend Root operator+(const Root& x, const Root& y);
  friend bool operator==(const Root&, const Root&) = default;
  std::string to_string() const;
};

/// ⟨ζ, ξ∨⟩ = coords(ζ)ᵀ · A · coords(ξ) (simply-laced).
int pairing(const Root& zeta, const Root& xi, const CartanDatum& datum);
/// s_ξ·ζ = ζ − ⟨ζ, ξ∨⟩ ξ.
Root reflect(const Root& zeta, const Root& xi, const CartanDatum& datum);

/// A row of a root-labelling table: a label and coefficients in table
/// column order.
struct LabelRow {
  int label = 0;
  std::vector<int> coeffs;
};

/// External labelling of positive roots, e.g. the bundled E7 table. Column
/// names must match the datum's `names`.
struct LabelTable {
  std::vector<std::string> columns;
  std::vector<LabelRow> rows;

  /// Reads `label,<col>,<col>,...` CSV. Throws ParseError.
  static LabelTable read_csv(const std::string& path);
  static LabelTable parse_csv(const std::string& text);
  std::string to_csv() const;
};

/// Weight band check: labels [first, last] must have coefficient `value` on
/// the simple root `simple`.
struct WeightBand {
  int first = 0;
  int last = 0;
  int simple = 0;
  int value = 0;
};

struct ValidationReport {
  bool valid = false;
  int matched = 0;
  int expected = 0;
  std::vector<std::string> notes;
};

/// Positive and negative roots of a simply-laced system with a labelling.
///
/// Positive roots carry labels 1..N, negative roots −1..−N (label(−ζ) =
/// −label(ζ)). The default labelling follows the internal order (height,
/// then coordinates in decreasing lexicographic order, so the simple
/// roots come first in index order); `relabel` installs an external one.
/// Immutable after construction.
class RootSystem {
 public:
  static constexpr std::size_t kDefaultBound = 10000;

  /// Closes the simple roots under simple reflections. Throws
  /// NonSimplyLaced or NonFinite (more than `bound` positive roots).
  static RootSystem generate(const CartanDatum& datum, std::size_t bound = kDefaultBound);

  /// Returns a copy whose labels follow `table` (validated first; throws
  /// LabelMismatch).
  RootSystem relabel(const LabelTable& table, const std::vector<WeightBand>& bands = {}) const;

  const CartanDatum& datum() const noexcept { return datum_; }
  int rank() const noexcept { return datum_.rank; }
  /// Number of positive roots.
  int size() const noexcept { return static_cast<int>(by_label_.size()) - 1; }
  /// Positive roots in internal order (height, then lexicographic).
  const std::vector<Root>& positive_roots() const noexcept { return internal_; }

  /// Root with the given signed label (throws std::out_of_range).
  Root root(int label) const;
  /// Signed label of a root, or nullopt if not a root.
  std::optional<int> label_of(const Coords& coords) const;
  std::optional<int> label_of(const Root& r) const { return label_of(r.coords); }
  /// Label of the i-th simple root.
  int simple_label(int i) const;
  /// Label of ζ+ξ when that is a root, else 0. Precomputed for all signed labels.
  int sum_label(int x, int y) const;
  bool is_label(int label) const noexcept { return label != 0 && label >= -size() && label <= size(); }

  /// ⟨root(x), root(y)∨⟩ by label.
  int pairing(int x, int y) const;
  /// Label of s_{root(y)}·root(x).
  int reflect(int x, int y) const;
  /// Coefficient of simple root i in root(label).
  int coefficient(int label, int i) const;

 private:
  RootSystem() = default;
  void build_index();

  CartanDatum datum_;
  std::vector<Root> internal_;
  std::vector<Root> by_label_;  // index = positive label; [0] unused
  std::map<Coords, int> index_;
  std::vector<int> sums_;  // (2N+1)^2 table
};

/// Checks a label table against a generated system: every row is a
/// generated positive root, the map is a bijection, bands hold. Throws
/// LabelMismatch on the first violation.
ValidationReport validate_labeling(const RootSystem& system, const LabelTable& table,
                                   const std::vector<WeightBand>& bands = {});

}  // namespace chevkit
