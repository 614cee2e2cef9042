#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chevkit/chevalley.hpp"
#include "chevkit/expr.hpp"
#include "chevkit/parabolic.hpp"
#include "chevkit/rootsys.hpp"
#include "chevkit/weyl.hpp"

/// The E7 instance: bundled root labelling, the words q1 and q2 generating
/// K ≅ D14, the cocharacter λ and the reductive subgroup M.
namespace chevkit::e7 {

/// Contents of the bundled e7_roots.csv.
const std::string& bundled_csv();
LabelTable table();
/// σ-coefficient bands: labels 1-35 have 1, 36-42 have 2, 43-63 have 0.
std::vector<WeightBand> bands();

/// Generated and relabelled system (built once).
std::shared_ptr<const RootSystem> system();
/// Same, from another table (throws LabelMismatch).
std::shared_ptr<const RootSystem> system_from(const LabelTable& table);

/// q1 = n_ε n_β n_γ n_α n_β.
WeylWord q1();
/// q2 = n_ε n_β n_γ n_α n_β n_η n_δ n_β.
WeylWord q2();

/// Cycle decompositions of π(q1), π(q2) on labels 1..42 as printed in the
/// reference computation.
inline constexpr const char* kPrintedQ1 =
    "(1 2)(3 6)(4 7)(9 10)(11 12)(13 14)(15 20)(16 17)(18 21)(19 23)(22 25)(24 26)(27 28)(29 32)(31 33)(34 35)"
    "(36 38)(37 39)(40 41)";
inline constexpr const char* kPrintedQ2 =
    "(1 6 7 5 4 3 2)(8 10 12 14 13 11 9)(15 16 21 23 26 27 22)(17 20 25 28 24 19 18)(29 30 32 33 35 34 31)"
    "(36 38 39 41 42 40 37)";

/// λ = 3α∨ + 6β∨ + 9γ∨ + 12δ∨ + 8ε∨ + 4η∨ + 7σ∨.
Cocharacter lambda();
/// Radical labels 1..42.
std::vector<int> radical();
/// Radical ∩ M: labels 36..42.
std::vector<int> m_radical();
/// Ψ(M) = ±36..±63.
std::vector<int> psi_m();

/// P_λ for the bundled system with M's radical part recorded.
ContextPtr context();
ContextPtr context_for(std::shared_ptr<const RootSystem> system);

/// ∏_{i=lo}^{hi} ε_i(s); v(s) for the default range 1..7.
PolyUnipotent v(const ContextPtr& ctx, const SparsePoly& s, int lo = 1, int hi = 7);

/// q1, q2 and v(s) for parse_mixed.
ExprNames names(const ContextPtr& ctx);

}  // namespace chevkit::e7
