#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chevkit/centralizer.hpp"
#include "chevkit/chevalley.hpp"

namespace chevkit {

/// c_λ(x) = lim_{a→0} λ(a)·x·λ(a)⁻¹. On w·u with w Levi and u radical the
/// limit kills u and keeps w.
template <Coefficient R>
Mixed<R> c_lambda(const Mixed<R>& x) {
  if (!x.context()->levi_word(x.word())) throw NotInParabolic("Weyl part is not in the Levi subgroup");
  return Mixed<R>(x.word(), x.permutation(), Unipotent<R>(x.context()));
}

template <Coefficient R>
std::vector<Mixed<R>> c_lambda(const std::vector<Mixed<R>>& tuple) {
  std::vector<Mixed<R>> out;
  out.reserve(tuple.size());
  for (const auto& x : tuple) out.push_back(c_lambda(x));
  return out;
}

/// g·x·g⁻¹ entrywise.
template <Coefficient R>
std::vector<Mixed<R>> conjugate_tuple(const Mixed<R>& g, const std::vector<Mixed<R>>& tuple) {
  const auto gi = mixed_inverse(g);
  std::vector<Mixed<R>> out;
  out.reserve(tuple.size());
  for (const auto& x : tuple) out.push_back(g * x * gi);
  return out;
}

/// Labels closed under root addition: ζ, ξ in the set and ζ+ξ a root
/// imply ζ+ξ in the set. Signed labels allowed.
bool is_closed_subsystem(const RootSystem& system, const std::vector<int>& labels);

enum class Verdict { Conjugate, NotConjugate, Conditional };

std::string to_string(Verdict v);

struct ConjugacyDecision {
  Verdict verdict = Verdict::Conditional;
  /// A conjugator (unconstrained unknowns set to 0) when one exists.
  std::optional<PolyUnipotent> conjugator;
  /// Relations among the tuple's parameters that a conjugator forces.
  std::vector<SparsePoly> obstructions;
  /// Human-readable derivation, one step per line.
  std::vector<std::string> certificate;
  /// Value of the centralizer relation on the coset, when requested.
  std::optional<SparsePoly> coset_invariant;

  bool conjugate() const noexcept { return verdict == Verdict::Conjugate; }
};

struct ConjugacyOptions {
  /// Parameters of the tuples known to be nonzero (e.g. "a").
  std::vector<std::string> nonzero;
  /// Centralizer family and coset representative v (source = v·target·v⁻¹
  /// with target centralized by the family); adds the coset invariant to
  /// the certificate.
  const CentralizerDescription* desc = nullptr;
  std::optional<PolyUnipotent> coset_element;
  /// Prefix of the conjugator's unknowns.
  std::string unknown_prefix = "m";
};

/// Decides whether some m = ∏_{i∈conj_support} ε_i(m_i) satisfies
/// m·source_j·m⁻¹ = target_j for all j, by solving for the m_i with the
/// tuple parameters held fixed. The support must lie in Z(R_u(P_λ)).
/// Throws SupportNotCentralInContext otherwise, and SolverIncomplete if
/// the equations leave the method's scope.
ConjugacyDecision ru_conjugacy_decision(const std::vector<PolyMixed>& source, const std::vector<PolyMixed>& target,
                                        const std::vector<int>& conj_support, const ConjugacyOptions& options = {});

struct BruteForceResult {
  bool conjugate = false;
  /// Lexicographically least conjugator (coefficients compared in label
  /// order as bit patterns).
  std::optional<FieldUnipotent> conjugator;
  uint64_t search_space = 0;
  uint64_t checked = 0;
};

inline constexpr uint64_t kMaxSearchSpace = uint64_t{1} << 24;

/// Tries every m supported on `conj_support` with coefficients in `field`.
/// Throws SearchSpaceTooLarge above `max_space` candidates.
BruteForceResult brute_force_conjugacy(const std::vector<FieldMixed>& source, const std::vector<FieldMixed>& target,
                                       const std::vector<int>& conj_support, const GF2m& field,
                                       uint64_t max_space = kMaxSearchSpace);

/// Specializes every coefficient of a tuple. Throws MissingVariable.
std::vector<FieldMixed> specialize_tuple(const std::vector<PolyMixed>& tuple,
                                         const std::map<std::string, FieldElem>& assignment, const GF2m& field);

struct ClassRelation {
  /// Relations between a′ and b′ forced by a conjugator; empty means none.
  std::vector<SparsePoly> relations;
  std::vector<std::string> certificate;
};

/// For tuples 𝐦(x) = (v(x)·K·v(x)⁻¹, F) with F central: a unipotent m
/// supported on `m_support` conjugating 𝐦(b′) to 𝐦(a′) makes
/// v(a′)⁻¹·m·v(b′) a member of the centralizer family `desc`. Solves that
/// membership for the m_i and the family parameters and returns what is
/// left on a′, b′. `v_template` is v(s) in the indeterminate `s`.
/// Conjugators with a nontrivial Levi part are outside the computation.
ClassRelation infinite_classes_obstruction(const CentralizerDescription& desc, const PolyUnipotent& v_template,
                                           const std::string& s, const std::vector<int>& m_support,
                                           const std::string& a_prime = "a'", const std::string& b_prime = "b'");

}  // namespace chevkit
