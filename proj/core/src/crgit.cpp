#include "chevkit/crgit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "chevkit/errors.hpp"

namespace chevkit {

bool is_closed_subsystem(const RootSystem& system, const std::vector<int>& labels) {
  const std::set<int> in(labels.begin(), labels.end());
  for (int x : labels) {
    for (int y : labels) {
      const int s = system.sum_label(x, y);
      if (s != 0 && !in.count(s)) return false;
    }
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Conjugate:
      return "conjugate";
    case Verdict::NotConjugate:
      return "not conjugate";
    case Verdict::Conditional:
      return "conditional";
  }
  return "?";
}

namespace {

void require_tuples(const auto& source, const auto& target) {
  if (source.empty() || source.size() != target.size()) {
    throw std::invalid_argument("source and target tuples must be non-empty and of equal length");
  }
  for (const auto& x : source) detail::require_same_context(x.context(), source.front().context());
  for (const auto& x : target) detail::require_same_context(x.context(), source.front().context());
}

std::set<std::string> tuple_variables(const std::vector<PolyMixed>& tuple) {
  std::set<std::string> out;
  for (const auto& x : tuple) {
    for (const auto& [l, c] : x.unip().coeffs()) {
      for (auto& v : c.variables()) out.insert(v);
    }
  }
  return out;
}

// A nonzero relation that cannot vanish: 1, or a product of nonzero parameters.
bool impossible(const SparsePoly& r, const std::set<std::string>& nonzero) {
  if (r.is_one()) return true;
  if (r.terms().size() != 1) return false;
  const auto& f = r.terms().front().factors();
  return std::all_of(f.begin(), f.end(), [&](const auto& p) { return nonzero.count(p.first) > 0; });
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

ConjugacyDecision ru_conjugacy_decision(const std::vector<PolyMixed>& source, const std::vector<PolyMixed>& target,
                                        const std::vector<int>& conj_support, const ConjugacyOptions& options) {
  require_tuples(source, target);
  const ContextPtr ctx = source.front().context();
  const auto center = center_of_radical(*ctx);
  for (int l : conj_support) {
    if (!std::binary_search(center.begin(), center.end(), l)) {
      throw SupportNotCentralInContext("label " + std::to_string(l) + " is not central in the unipotent radical");
    }
  }
  ConjugacyDecision out;
  const auto m = generic_unipotent(ctx, options.unknown_prefix, conj_support);
  const auto m_left = PolyMixed::radical(m);
  const auto m_right = PolyMixed::radical(invert(m));
  out.certificate.push_back("unknown conjugator m = " + m.to_string());

  std::vector<SparsePoly> equations;
  for (size_t j = 0; j < source.size(); ++j) {
    if (!(source[j].permutation() == target[j].permutation())) {
      out.verdict = Verdict::NotConjugate;
      out.certificate.push_back("entry " + std::to_string(j + 1) +
                                ": Weyl parts act differently, and conjugation by a unipotent element keeps the Weyl part");
      return out;
    }
    const auto lhs = (m_left * source[j] * m_right).unip();
    std::set<int> labels;
    for (const auto& [l, c] : lhs.coeffs()) labels.insert(l);
    for (const auto& [l, c] : target[j].unip().coeffs()) labels.insert(l);
    for (int l : labels) {
      SparsePoly diff;
      if (const auto* c = lhs.coeff(l)) diff += *c;
      if (const auto* c = target[j].unip().coeff(l)) diff += *c;
      if (!diff.is_zero()) {
        out.certificate.push_back("entry " + std::to_string(j + 1) + ", e" + std::to_string(l) + ": " +
                                  diff.to_string() + " = 0");
        equations.push_back(std::move(diff));
      }
    }
  }

  const auto params = tuple_variables(source);
  const auto tparams = tuple_variables(target);
  SolveOptions opts;
  opts.protected_vars.assign(params.begin(), params.end());
  opts.protected_vars.insert(opts.protected_vars.end(), tparams.begin(), tparams.end());
  for (int l : conj_support) opts.declared_vars.push_back(coefficient_variable(options.unknown_prefix, l));
  const Solution sol = solve_system(equations, opts);
  for (const auto& line : sol.log) out.certificate.push_back(line);
  out.obstructions = sol.residual;

  const std::set<std::string> nonzero(options.nonzero.begin(), options.nonzero.end());
  if (sol.residual.empty()) {
    out.verdict = Verdict::Conjugate;
    std::map<std::string, SparsePoly> values;
    for (const auto& v : sol.free) values[v] = SparsePoly();
    for (const auto& [v, form] : sol.assignments) values[v] = form.substitute(values);
    std::vector<Factor<SparsePoly>> word;
    for (int l : conj_support) {
      word.emplace_back(l, values.at(coefficient_variable(options.unknown_prefix, l)));
    }
    out.conjugator = PolyUnipotent::from_word(ctx, std::move(word));
    out.certificate.push_back("conjugator: " + out.conjugator->to_string());
  } else {
    std::vector<std::string> forced;
    bool contradiction = false;
    for (const auto& r : sol.residual) {
      forced.push_back(r.to_string() + " = 0");
      contradiction = contradiction || impossible(r, nonzero);
    }
    out.verdict = contradiction ? Verdict::NotConjugate : Verdict::Conditional;
    std::string line = "any conjugator forces " + join(forced, ", ");
    if (contradiction) line += ", contradicting " + join(options.nonzero, " != 0, ") + " != 0";
    out.certificate.push_back(line);
  }

  if (options.desc && options.coset_element) {
    const auto& desc = *options.desc;
    const auto& v = *options.coset_element;
    out.coset_invariant = coset_weight_invariant(v, desc);
    const auto& rel = desc.relations.front();
    std::vector<std::string> names, values;
    for (const auto& var : rel.variables()) {
      const int l = std::stoi(var.substr(desc.prefix.size()));
      const auto* c = v.coeff(l);
      names.push_back(var);
      values.push_back(c ? c->to_string() : "0");
    }
    out.certificate.push_back("m*v would centralize the tuple's Levi part, but every centralizing element satisfies " +
                              rel.to_string() + " = 0 while m*v has (" + join(names, ", ") + ") = (" +
                              join(values, ", ") + "), giving " + out.coset_invariant->to_string());
    if (impossible(*out.coset_invariant, nonzero) && out.verdict == Verdict::Conjugate) {
      throw std::logic_error("coset invariant contradicts the solved conjugator");
    }
  }
  return out;
}

std::vector<FieldMixed> specialize_tuple(const std::vector<PolyMixed>& tuple,
                                         const std::map<std::string, FieldElem>& assignment, const GF2m& field) {
  std::vector<FieldMixed> out;
  out.reserve(tuple.size());
  for (const auto& x : tuple) {
    out.push_back(map_mixed(x, [&](const SparsePoly& p) { return specialize(p, assignment, field); }));
  }
  return out;
}

BruteForceResult brute_force_conjugacy(const std::vector<FieldMixed>& source, const std::vector<FieldMixed>& target,
                                       const std::vector<int>& conj_support, const GF2m& field, uint64_t max_space) {
  require_tuples(source, target);
  const ContextPtr ctx = source.front().context();
  BruteForceResult res;
  const uint64_t q = field.size();
  res.search_space = 1;
  for (size_t i = 0; i < conj_support.size(); ++i) {
    if (res.search_space > max_space / q) {
      throw SearchSpaceTooLarge(std::to_string(q) + "^" + std::to_string(conj_support.size()) +
                                " candidates exceed the limit of " + std::to_string(max_space));
    }
    res.search_space *= q;
  }
  for (int l : conj_support) {
    if (!ctx->in_radical(l)) throw DomainNotStable("label " + std::to_string(l) + " is not in the unipotent radical");
  }
  std::vector<RootPermutation> winv;
  for (size_t j = 0; j < source.size(); ++j) {
    if (!(source[j].permutation() == target[j].permutation())) return res;
    winv.push_back(source[j].permutation().inverse());
  }

  auto sorted = conj_support;
  std::sort(sorted.begin(), sorted.end());
  const size_t n = sorted.size();
  std::vector<uint32_t> digits(n, 0);
  for (uint64_t idx = 0; idx < res.search_space; ++idx) {
    uint64_t rest = idx;
    for (size_t k = n; k-- > 0;) {
      digits[k] = static_cast<uint32_t>(rest % q);
      rest /= q;
    }
    std::vector<Factor<FieldElem>> word;
    for (size_t k = 0; k < n; ++k) word.emplace_back(sorted[k], field.elem(digits[k]));
    const auto m = FieldUnipotent::from_word(ctx, std::move(word));
    const auto mi = invert(m);
    ++res.checked;
    bool ok = true;
    for (size_t j = 0; j < source.size() && ok; ++j) {
      // m·(w,u)·m⁻¹ = (w, (w⁻¹ m w)·u·m⁻¹)
      const auto u = conjugate_by_permutation(winv[j], m) * source[j].unip() * mi;
      ok = u == target[j].unip();
    }
    if (ok) {
      res.conjugate = true;
      res.conjugator = m;
      break;
    }
  }
  return res;
}

ClassRelation infinite_classes_obstruction(const CentralizerDescription& desc, const PolyUnipotent& v_template,
                                           const std::string& s, const std::vector<int>& m_support,
                                           const std::string& a_prime, const std::string& b_prime) {
  const ContextPtr ctx = desc.ctx;
  detail::require_same_context(ctx, v_template.context());
  auto at = [&](const std::string& x) {
    const auto value = SparsePoly::variable(x);
    return v_template.map_coefficients([&](const SparsePoly& p) { return p.substitute(s, value); });
  };
  const auto va = at(a_prime);
  const auto vb = at(b_prime);
  const auto m = generic_unipotent(ctx, "m", m_support);
  const auto y = invert(va) * m * vb;
  const auto z = desc.element();

  ClassRelation out;
  out.certificate.push_back("m = " + m.to_string() + " conjugates the tuple at " + b_prime + " to the tuple at " +
                            a_prime + " only if v(" + a_prime + ")^-1 * m * v(" + b_prime +
                            ") centralizes the Levi part");
  out.certificate.push_back("conjugators with a nontrivial Levi part are not considered");
  std::vector<SparsePoly> equations;
  for (int l : ctx->radical_labels()) {
    SparsePoly diff;
    if (const auto* c = y.coeff(l)) diff += *c;
    if (const auto* c = z.coeff(l)) diff += *c;
    if (!diff.is_zero()) equations.push_back(std::move(diff));
  }
  SolveOptions opts;
  opts.protected_vars = {a_prime, b_prime};
  for (int l : m_support) opts.declared_vars.push_back(coefficient_variable("m", l));
  opts.declared_vars.insert(opts.declared_vars.end(), desc.free_params.begin(), desc.free_params.end());
  const Solution sol = solve_system(equations, opts);
  for (const auto& line : sol.log) out.certificate.push_back(line);
  for (const auto& p : desc.free_params) {
    if (auto it = sol.assignments.find(p); it != sol.assignments.end()) {
      out.certificate.push_back(p + " = " + it->second.to_string());
    }
  }
  out.relations = sol.residual;
  if (out.relations.empty()) {
    out.certificate.push_back("no relation: 0 = 0");
  } else {
    for (const auto& r : out.relations) out.certificate.push_back("forced: " + r.to_string() + " = 0");
  }
  return out;
}

}  // namespace chevkit
