#include "chevkit/centralizer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "chevkit/errors.hpp"

namespace chevkit {

std::string coefficient_variable(const std::string& prefix, int label) { return prefix + std::to_string(label); }

namespace {
void require_context(const ContextPtr& ctx) {
  if (!ctx) throw std::invalid_argument("no parabolic context");
}
}  // namespace

PolyUnipotent generic_unipotent(const ContextPtr& ctx, const std::string& prefix, const std::vector<int>& labels) {
  require_context(ctx);
  const auto& use = labels.empty() ? ctx->radical_labels() : labels;
  std::vector<Factor<SparsePoly>> word;
  for (int l : use) word.emplace_back(l, SparsePoly::variable(coefficient_variable(prefix, l)));
  return PolyUnipotent::from_word(ctx, std::move(word));
}

std::vector<std::string> ConstraintSystem::variables() const {
  std::vector<std::string> out;
  for (int l : labels) out.push_back(coefficient_variable(prefix, l));
  return out;
}

ConstraintSystem centralizer_equations(const std::vector<RootPermutation>& generators, const ContextPtr& ctx) {
  require_context(ctx);
  ConstraintSystem sys;
  sys.ctx = ctx;
  sys.labels = ctx->radical_labels();
  for (const auto& g : generators) {
    if (!g.stabilizes(sys.labels)) throw DomainNotStable("generator does not stabilize the radical labels");
  }
  const auto u = generic_unipotent(ctx, sys.prefix);
  for (const auto& g : generators) {
    const auto conj = conjugate_by_permutation(g, u);
    for (int l : sys.labels) {
      SparsePoly diff;
      if (const auto* c = conj.coeff(l)) diff += *c;
      if (const auto* c = u.coeff(l)) diff += *c;
      if (!diff.is_zero()) sys.equations.push_back(std::move(diff));
    }
  }
  return sys;
}

// ---------------------------------------------------------------- solver

namespace {

bool is_protected(const std::set<std::string>& prot, const std::string& v) { return prot.count(v) > 0; }

// Variables occurring only as a lone degree-1 term of `eq`.
std::vector<std::string> lone_linear_variables(const SparsePoly& eq, const std::set<std::string>& prot) {
  std::vector<std::string> out;
  for (const auto& t : eq.terms()) {
    if (t.degree() != 1) continue;
    const std::string& v = t.factors().front().first;
    if (is_protected(prot, v)) continue;
    int occurrences = 0;
    for (const auto& s : eq.terms()) occurrences += s.exponent(v) > 0 ? 1 : 0;
    if (occurrences == 1) out.push_back(v);
  }
  return out;
}

bool only_protected(const SparsePoly& eq, const std::set<std::string>& prot) {
  const auto vars = eq.variables();
  return std::all_of(vars.begin(), vars.end(), [&](const std::string& v) { return is_protected(prot, v); });
}

bool pure_square(const SparsePoly& eq) {
  return std::all_of(eq.terms().begin(), eq.terms().end(), [](const Monomial& m) { return m.all_exponents_even(); });
}

// Repeated square roots; a relation r with r^(2^k) = 0 is equivalent to r = 0.
SparsePoly reduce_squares(SparsePoly p) {
  while (!p.is_zero() && !p.is_one() && pure_square(p)) p = sqrt_linearize(p);
  return p;
}

}  // namespace

Solution solve_system(std::vector<SparsePoly> equations, const SolveOptions& options) {
  const std::set<std::string> prot(options.protected_vars.begin(), options.protected_vars.end());
  std::set<std::string> all_vars(options.declared_vars.begin(), options.declared_vars.end());
  for (const auto& e : equations) {
    for (auto& v : e.variables()) all_vars.insert(v);
  }
  Solution sol;
  auto drop_zeros = [&] {
    equations.erase(std::remove_if(equations.begin(), equations.end(), [](const SparsePoly& p) { return p.is_zero(); }),
                    equations.end());
  };
  drop_zeros();
  while (!equations.empty()) {
    // 1. Equations purely in protected variables become residual relations.
    bool progressed = false;
    for (size_t i = 0; i < equations.size(); ++i) {
      if (!only_protected(equations[i], prot)) continue;
      SparsePoly r = reduce_squares(equations[i]);
      if (std::find(sol.residual.begin(), sol.residual.end(), r) == sol.residual.end()) {
        if (!(r == equations[i])) sol.log.push_back(equations[i].to_string() + " = 0  =>  " + r.to_string() + " = 0");
        sol.residual.push_back(r);
      }
      equations.erase(equations.begin() + static_cast<std::ptrdiff_t>(i));
      progressed = true;
      break;
    }
    if (progressed) continue;

    // 2. Eliminate a lone linear variable, from the simplest equation.
    std::optional<size_t> best;
    std::string pivot;
    for (size_t i = 0; i < equations.size(); ++i) {
      auto cands = lone_linear_variables(equations[i], prot);
      if (cands.empty()) continue;
      const auto& e = equations[i];
      if (best) {
        const auto& b = equations[*best];
        if (std::make_pair(e.degree(), e.terms().size()) >= std::make_pair(b.degree(), b.terms().size())) continue;
      }
      best = i;
      pivot = *std::max_element(cands.begin(), cands.end(),
                                [](const std::string& x, const std::string& y) { return variable_less(x, y); });
    }
    if (best) {
      const SparsePoly form = equations[*best] + SparsePoly::variable(pivot);
      equations.erase(equations.begin() + static_cast<std::ptrdiff_t>(*best));
      for (auto& e : equations) e = e.substitute(pivot, form);
      for (auto& [v, f] : sol.assignments) f = f.substitute(pivot, form);
      if (form.degree() > 1) sol.log.push_back(pivot + " = " + form.to_string());
      sol.assignments.emplace(pivot, form);
      drop_zeros();
      continue;
    }

    // 3. A pure square: p = q^2 = 0 iff q = 0.
    for (auto& e : equations) {
      if (!pure_square(e)) continue;
      const SparsePoly root = sqrt_linearize(e);
      sol.log.push_back(e.to_string() + " = 0  =>  " + root.to_string() + " = 0");
      sol.square_relations.push_back(root);
      e = root;
      progressed = true;
      break;
    }
    if (progressed) continue;

    std::string what;
    for (const auto& e : equations) what += "\n  " + e.to_string() + " = 0";
    throw SolverIncomplete("cannot triangularize the remaining equations:" + what);
  }
  for (const auto& v : all_vars) {
    if (!sol.assignments.count(v) && !prot.count(v)) sol.free.push_back(v);
  }
  std::sort(sol.free.begin(), sol.free.end(), [](const auto& x, const auto& y) { return variable_less(x, y); });
  return sol;
}

// ---------------------------------------------------------------- description

CentralizerDescription solve(const ConstraintSystem& system) {
  SolveOptions opts;
  opts.declared_vars = system.variables();
  Solution sol = solve_system(system.equations, opts);
  if (!sol.residual.empty()) {
    throw SolverIncomplete("centralizer system has relations without free variables: " + sol.residual.front().to_string());
  }
  CentralizerDescription desc;
  desc.ctx = system.ctx;
  desc.prefix = system.prefix;

  const auto lowest = system.ctx->lowest_layer();
  const std::set<int> low(lowest.begin(), lowest.end());
  std::map<std::string, std::string> rename;
  char next = 'a';
  for (int l : system.labels) {
    const auto var = coefficient_variable(system.prefix, l);
    if (std::find(sol.free.begin(), sol.free.end(), var) == sol.free.end()) continue;
    std::string name;
    if (low.count(l) && next <= 'z') {
      name = std::string(1, next++);
    } else {
      name = "a" + std::to_string(l);
    }
    rename[var] = name;
    desc.free_params.push_back(name);
    desc.param_source[name] = var;
  }
  for (int l : system.labels) {
    const auto var = coefficient_variable(system.prefix, l);
    auto it = sol.assignments.find(var);
    const SparsePoly form = it == sol.assignments.end() ? SparsePoly::variable(var) : it->second;
    desc.coefficient_forms[l] = form.rename(rename);
  }
  desc.relations = sol.square_relations;
  desc.derived_relations = sol.log;
  return desc;
}

PolyUnipotent CentralizerDescription::element() const { return element({}); }

PolyUnipotent CentralizerDescription::element(const std::map<std::string, SparsePoly>& params) const {
  std::vector<Factor<SparsePoly>> word;
  for (const auto& [l, form] : coefficient_forms) word.emplace_back(l, params.empty() ? form : form.substitute(params));
  return PolyUnipotent::from_word(ctx, std::move(word));
}

std::vector<std::vector<int>> CentralizerDescription::tangent_basis() const {
  std::vector<std::vector<int>> basis;
  for (const auto& p : free_params) {
    std::vector<int> vec;
    for (const auto& [l, form] : coefficient_forms) {
      if (form.has_constant_term()) throw SolverIncomplete("family does not pass through the identity");
      const auto lin = form.linear_part();
      if (lin.contains_variable(p)) vec.push_back(l);
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

// ---------------------------------------------------------------- Lie side

LieCentralizer lie_centralizer(const std::vector<RootPermutation>& generators, const ContextPtr& ctx) {
  require_context(ctx);
  const auto part = orbits(generators, ctx->radical_labels());
  LieCentralizer lc;
  for (const auto& [key, members] : part.orbits) lc.basis.push_back(members);
  return lc;
}

namespace {

// Rank of a set of GF(2) vectors given as sorted label lists.
int gf2_rank(std::vector<std::set<int>> rows) {
  int rank = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    const int pivot = *rows[i].begin();
    ++rank;
    for (size_t j = i + 1; j < rows.size(); ++j) {
      if (!rows[j].count(pivot)) continue;
      for (int x : rows[i]) {
        if (!rows[j].erase(x)) rows[j].insert(x);
      }
    }
  }
  return rank;
}

}  // namespace

SeparabilityReport separability_report(const CentralizerDescription& desc, const LieCentralizer& lie) {
  SeparabilityReport rep;
  rep.dim_lie_c = desc.dimension();
  rep.dim_inf_c = lie.dimension();
  std::vector<std::set<int>> tangent;
  for (const auto& v : desc.tangent_basis()) tangent.emplace_back(v.begin(), v.end());
  const int base = gf2_rank(tangent);
  for (const auto& orbit : lie.basis) {
    auto rows = tangent;
    rows.emplace_back(orbit.begin(), orbit.end());
    if (gf2_rank(rows) > base) {
      rep.witness = orbit;
      break;
    }
  }
  rep.separable = rep.dim_lie_c == rep.dim_inf_c && !rep.witness;
  return rep;
}

SeparabilityReport separability_report(const std::vector<RootPermutation>& generators, const ContextPtr& ctx) {
  return separability_report(solve(centralizer_equations(generators, ctx)), lie_centralizer(generators, ctx));
}

// ---------------------------------------------------------------- invariants

std::vector<SparsePoly> coset_weight_invariants(const PolyUnipotent& v, const CentralizerDescription& desc) {
  const auto lowest = desc.ctx->lowest_layer();
  for (int l : v.support()) {
    if (!std::binary_search(lowest.begin(), lowest.end(), l)) {
      throw UnsupportedSupport("label " + std::to_string(l) + " is not on the lowest weight layer");
    }
  }
  // Family parameters renamed apart from the variables of v.
  std::map<std::string, SparsePoly> fresh;
  for (size_t i = 0; i < desc.free_params.size(); ++i) {
    fresh[desc.free_params[i]] = SparsePoly::variable("_z" + std::to_string(i + 1));
  }
  const auto coset = collect_product(v, desc.element(fresh));
  std::map<std::string, SparsePoly> values;
  for (int l : desc.ctx->radical_labels()) {
    const auto* c = coset.coeff(l);
    values[coefficient_variable(desc.prefix, l)] = c ? *c : SparsePoly();
  }
  std::vector<SparsePoly> out;
  for (const auto& rel : desc.relations) {
    SparsePoly value = rel.substitute(values);
    for (const auto& [p, z] : fresh) {
      if (value.contains_variable(z.variables().front())) {
        throw SolverIncomplete("relation " + rel.to_string() + " is not constant on the coset: " + value.to_string());
      }
    }
    out.push_back(std::move(value));
  }
  return out;
}

SparsePoly coset_weight_invariant(const PolyUnipotent& v, const CentralizerDescription& desc) {
  auto all = coset_weight_invariants(v, desc);
  if (all.size() != 1) {
    throw UnsupportedSupport("centralizer has " + std::to_string(all.size()) + " square-root relations, expected 1");
  }
  return all.front();
}

}  // namespace chevkit
