#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chevkit/chevalley.hpp"
#include "chevkit/poly.hpp"
#include "chevkit/weyl.hpp"

namespace chevkit {

/// ∏ ε_i(prefix_i) over `labels` (default: the whole radical), with pairwise
/// distinct indeterminates.
PolyUnipotent generic_unipotent(const ContextPtr& ctx, const std::string& prefix = "b",
                                const std::vector<int>& labels = {});

/// Name of the indeterminate attached to `label`.
std::string coefficient_variable(const std::string& prefix, int label);

/// Polynomial equations (each required to vanish) in the coefficients of a
/// generic radical element.
struct ConstraintSystem {
  ContextPtr ctx;
  std::string prefix = "b";
  std::vector<int> labels;
  std::vector<SparsePoly> equations;

  std::vector<std::string> variables() const;
};

/// For each generator w, the coefficient-wise differences between
/// w·u·w⁻¹ and u for the generic u. Equations are emitted in generator
/// order, then label order. Throws DomainNotStable.
ConstraintSystem centralizer_equations(const std::vector<RootPermutation>& generators, const ContextPtr& ctx);

struct SolveOptions {
  /// Never eliminated; equations left in these alone become residual
  /// relations.
  std::vector<std::string> protected_vars;
  /// Variables of the system that do not appear in any equation but should
  /// be reported as free.
  std::vector<std::string> declared_vars;
};

/// Result of triangular elimination over GF(2).
struct Solution {
  /// Unconstrained variables, ordered by variable_less.
  std::vector<std::string> free;
  /// Eliminated variable -> polynomial in free and protected variables.
  std::map<std::string, SparsePoly> assignments;
  /// Linear relations obtained by taking square roots of pure-square
  /// equations, in the variables current at that step.
  std::vector<SparsePoly> square_relations;
  /// Relations among protected variables that must vanish.
  std::vector<SparsePoly> residual;
  /// Human-readable record of the nonlinear steps.
  std::vector<std::string> log;
};

/// Eliminates one variable per step from an equation in which it occurs
/// only as a lone linear term (preferring the largest variable in
/// variable_less order), replaces an equation whose exponents are all even
/// by its square root, and sets aside equations in protected variables.
/// Throws SolverIncomplete when an equation fits none of these shapes.
Solution solve_system(std::vector<SparsePoly> equations, const SolveOptions& options = {});

/// Parametrized solution of a centralizer system (the form every
/// centralizing element must take).
struct CentralizerDescription {
  ContextPtr ctx;
  std::string prefix = "b";
  /// Parameter names: a, b, c, ... for free coefficients on the lowest
  /// λ-weight layer, a<label> for the others.
  std::vector<std::string> free_params;
  /// Coefficient variable of each parameter (e.g. a <- b1).
  std::map<std::string, std::string> param_source;
  /// Every radical label -> its coefficient as a polynomial in the parameters.
  std::map<int, SparsePoly> coefficient_forms;
  /// Linear relations among coefficient variables implied by the system
  /// (square roots of its pure-square consequences), e.g. b1 + b8 + b15 + b29.
  std::vector<SparsePoly> relations;
  std::vector<std::string> derived_relations;

  int dimension() const noexcept { return static_cast<int>(free_params.size()); }
  /// The general member of the family.
  PolyUnipotent element() const;
  /// The member with parameters replaced by the given polynomials.
  PolyUnipotent element(const std::map<std::string, SparsePoly>& params) const;
  /// Tangent vectors at the identity (one per parameter) as label -> bit.
  std::vector<std::vector<int>> tangent_basis() const;
};

/// Solves a centralizer system. Throws SolverIncomplete.
CentralizerDescription solve(const ConstraintSystem& system);

/// Infinitesimal centralizer c_{Lie R_u(P)}(K) in characteristic 2: one
/// orbit sum Σ_{ζ∈O} e_ζ per K-orbit on the radical labels.
struct LieCentralizer {
  std::vector<std::vector<int>> basis;
  int dimension() const noexcept { return static_cast<int>(basis.size()); }
};

LieCentralizer lie_centralizer(const std::vector<RootPermutation>& generators, const ContextPtr& ctx);

struct SeparabilityReport {
  int dim_lie_c = 0;  // tangent dimension of C_{R_u(P)}(K)
  int dim_inf_c = 0;  // dimension of c_{Lie R_u(P)}(K)
  bool separable = false;
  /// An orbit sum lying in the infinitesimal centralizer but not in the
  /// tangent space of the group centralizer.
  std::optional<std::vector<int>> witness;
};

/// Compares the tangent space of the solved centralizer with the orbit-sum
/// space. The solved family is the graph of a polynomial map on its free
/// parameters, hence isomorphic to affine space; its tangent space at 1 is
/// spanned by the linear parts of the coefficient forms and has dimension
/// the parameter count.
SeparabilityReport separability_report(const std::vector<RootPermutation>& generators, const ContextPtr& ctx);
SeparabilityReport separability_report(const CentralizerDescription& desc, const LieCentralizer& lie);

/// Evaluates every relation of `desc` on the coset element v·z for the
/// general z of the family. Each value is independent of z. Throws
/// UnsupportedSupport if v has support off the lowest λ-weight layer, and
/// SolverIncomplete if a value still depends on the parameters.
std::vector<SparsePoly> coset_weight_invariants(const PolyUnipotent& v, const CentralizerDescription& desc);
/// The single invariant (throws UnsupportedSupport if there is not exactly one relation).
SparsePoly coset_weight_invariant(const PolyUnipotent& v, const CentralizerDescription& desc);

}  // namespace chevkit
