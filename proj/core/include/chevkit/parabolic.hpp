#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "chevkit/rootsys.hpp"
#include "chevkit/weyl.hpp"

namespace chevkit {

/// λ = Σ_j c_j α_j∨, stored as the coroot coefficients c_j.
struct Cocharacter {
  std::vector<int> coroot_coeffs;

  /// ⟨ζ, λ⟩ = Σ_j c_j ⟨ζ, α_j∨⟩.
  int pairing(const Root& zeta, const CartanDatum& datum) const;
};

/// Exact pairings ⟨ζ, λ⟩ for every positive label; index 0 unused.
std::vector<int> lambda_weights(const Cocharacter& lambda, const RootSystem& system);

/// P_λ = L_λ ⋉ R_u(P_λ) described through the λ-weights of the positive
/// roots. Levi roots have weight 0, radical roots positive weight. λ must
/// be dominant for the chosen positive system (no positive root has
/// negative weight).
class ParabolicDecomposition {
 public:
  /// Throws std::invalid_argument if λ is not dominant or `m_radical` is
  /// not a subset of the radical.
  static std::shared_ptr<const ParabolicDecomposition> create(std::shared_ptr<const RootSystem> system,
                                                             Cocharacter lambda,
                                                             std::optional<std::vector<int>> m_radical = std::nullopt);

  const RootSystem& system() const noexcept { return *system_; }
  std::shared_ptr<const RootSystem> system_ptr() const noexcept { return system_; }
  const Cocharacter& lambda() const noexcept { return lambda_; }

  /// λ-weight of a positive label.
  int weight(int label) const { return weights_.at(label); }
  const std::vector<int>& weights() const noexcept { return weights_; }
  /// Levi labels (weight 0), ascending.
  const std::vector<int>& levi_labels() const noexcept { return levi_; }
  /// Radical labels (weight > 0), ascending; this is the normal order.
  const std::vector<int>& radical_labels() const noexcept { return radical_; }
  bool in_radical(int label) const noexcept { return label > 0 && label < static_cast<int>(weights_.size()) && weights_[label] > 0; }
  /// Radical labels of the smallest positive weight.
  std::vector<int> lowest_layer() const;
  /// Radical ∩ M, when a reductive subgroup M was supplied.
  const std::optional<std::vector<int>>& m_radical() const noexcept { return m_radical_; }

  /// True iff the simple root with index i lies in the Levi.
  bool levi_letter(int i) const;
  /// True iff every letter of the word is a Levi simple root.
  bool levi_word(const WeylWord& w) const;

 private:
  ParabolicDecomposition() = default;

  std::shared_ptr<const RootSystem> system_;
  Cocharacter lambda_;
  std::vector<int> weights_;
  std::vector<int> levi_;
  std::vector<int> radical_;
  std::optional<std::vector<int>> m_radical_;
};

using ContextPtr = std::shared_ptr<const ParabolicDecomposition>;

}  // namespace chevkit
