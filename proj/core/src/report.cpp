#include "chevkit/report.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "chevkit/centralizer.hpp"
#include "chevkit/crgit.hpp"
#include "chevkit/e7.hpp"
#include "chevkit/modrep.hpp"

namespace chevkit {

int VerificationReport::passed() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

int VerificationReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::string VerificationReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back(
        {{"id", c.id}, {"anchor", c.anchor}, {"status", c.pass ? "PASS" : "FAIL"}, {"details", c.details}});
  }
  j["summary"] = {{"pass", passed()}, {"fail", failed()}};
  if (with_timing) {
    nlohmann::ordered_json t;
    for (const auto& c : checks) t[c.id] = c.elapsed_ms;
    j["timing"] = {{"elapsed_ms", t}};
  }
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text(bool with_timing) const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.description << "\n    " << c.details << "\n";
  }
  out << passed() << " passed, " << failed() << " failed\n";
  if (with_timing) {
    for (const auto& c : checks) out << "  " << c.id << " " << c.elapsed_ms << " ms\n";
  }
  return out.str();
}

namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

// Shared state built lazily; a failure to build it fails every dependent check.
struct Pipeline {
  VerifyOptions options;
  std::shared_ptr<const RootSystem> system;
  ContextPtr ctx;
  RootPermutation p1, p2;
  std::optional<CentralizerDescription> desc;

  void ensure_context() {
    if (ctx) return;
    system = options.table ? e7::system_from(*options.table) : e7::system();
    ctx = options.table ? e7::context_for(system) : e7::context();
    p1 = word_to_permutation(e7::q1(), *system);
    p2 = word_to_permutation(e7::q2(), *system);
  }
  const CentralizerDescription& centralizer() {
    ensure_context();
    if (!desc) desc = solve(centralizer_equations({p1, p2}, ctx));
    return *desc;
  }
  PolyMixed q(int which) {
    ensure_context();
    return PolyMixed::weyl(ctx, which == 1 ? e7::q1() : e7::q2());
  }
  // (v(x) q1 v(x)⁻¹, v(x) q2 v(x)⁻¹)
  std::vector<PolyMixed> h(const SparsePoly& x) {
    const auto v = PolyMixed::radical(e7::v(ctx, x));
    const auto vi = mixed_inverse(v);
    return {v * q(1) * vi, v * q(2) * vi};
  }
};

struct CheckSpec {
  std::string id;
  std::string description;
  std::string anchor;
  std::function<std::string(Pipeline&)> run;
};

std::vector<CheckSpec> catalogue() {
  std::vector<CheckSpec> c;
  c.push_back({"roots", "E7 root closure matches the bundled labelling and sigma bands", "table of positive roots",
               [](Pipeline& p) {
                 const auto generated = RootSystem::generate(CartanDatum::e7());
                 const auto table = p.options.table ? *p.options.table : e7::table();
                 const auto rep = validate_labeling(generated, table, e7::bands());
                 require(generated.size() == 63, "expected 63 positive roots, got " + std::to_string(generated.size()));
                 return std::to_string(generated.size()) + " positive roots, " + std::to_string(rep.matched) +
                        " labels matched, sigma bands 1-35:1, 36-42:2, 43-63:0 hold";
               }});
  c.push_back({"weyl-cycles", "pi(q1) and pi(q2) match the printed cycle decompositions",
               "cycle decompositions of pi(q1), pi(q2)", [](Pipeline& p) {
                 p.ensure_context();
                 const auto c1 = p.p1.cycles(e7::radical());
                 const auto c2 = p.p2.cycles(e7::radical());
                 require(c1 == e7::kPrintedQ1, "pi(q1) = " + c1);
                 require(c2 == e7::kPrintedQ2, "pi(q2) = " + c2);
                 return "pi(q1) = " + c1 + "; pi(q2) = " + c2;
               }});
  c.push_back({"orbits", "K-orbits on labels 1..42", "orbits O1, O8, O15, O29, O36", [](Pipeline& p) {
                 p.ensure_context();
                 const auto part = orbits({p.p1, p.p2}, e7::radical());
                 const std::map<int, std::vector<int>> expected = {{1, label_range(1, 7)},
                                                                   {8, label_range(8, 14)},
                                                                   {15, label_range(15, 28)},
                                                                   {29, label_range(29, 35)},
                                                                   {36, label_range(36, 42)}};
                 require(part.orbits == expected, "orbit partition differs");
                 return std::string("O1={1..7}, O8={8..14}, O15={15..28}, O29={29..35}, O36={36..42}");
               }});
  c.push_back({"d14-closure", "<pi(q1), pi(q2)> is dihedral of order 14", "K is dihedral of order 14",
               [](Pipeline& p) {
                 p.ensure_context();
                 const auto g = group_closure({p.p1, p.p2});
                 require(g.order() == 14, "group order " + std::to_string(g.order()));
                 require(g.relation_holds({1, 1}), "q1^2 != 1");
                 require(g.relation_holds(std::vector<int>(7, 2)), "q2^7 != 1");
                 require(!g.evaluate({2}).is_identity(), "q2 = 1");
                 require(!g.evaluate({1}).is_identity(), "q1 = 1");
                 require(g.relation_holds({1, 2, 1, 2}), "(q1 q2)^2 != 1");
                 return std::string("order 14; q1^2 = q2^7 = (q1 q2)^2 = 1");
               }});
  c.push_back({"conjugation-identities", "v(a) q_i v(a)^-1 for indeterminate a", "generators h1, h2",
               [](Pipeline& p) {
                 p.ensure_context();
                 const auto a = SparsePoly::variable("a");
                 const auto a2 = a * a;
                 const auto h = p.h(a);
                 const auto u1 = PolyUnipotent::from_word(p.ctx, {{40, a2}, {41, a2}, {42, a2}});
                 const auto u2 = PolyUnipotent::from_word(p.ctx, {{36, a2}, {39, a2}});
                 require(h[0] == PolyMixed(e7::q1(), u1), "v q1 v^-1 = " + h[0].to_string());
                 require(h[1] == PolyMixed(e7::q2(), u2), "v q2 v^-1 = " + h[1].to_string());
                 const auto v = PolyMixed::radical(e7::v(p.ctx, a));
                 const auto comm = p.q(1) * v * mixed_inverse(p.q(1)) * mixed_inverse(v);
                 require(comm == PolyMixed::radical(u1), "q1 v q1^-1 v^-1 = " + comm.to_string());
                 return "v q1 v^-1 = q1*" + u1.to_string() + "; v q2 v^-1 = q2*" + u2.to_string();
               }});
  c.push_back({"generic-conjugation", "e42 coefficient of q1 u q1^-1 for generic u", "e42 coefficient identity",
               [](Pipeline& p) {
                 p.ensure_context();
                 const auto u = conjugate_by_permutation(p.p1, generic_unipotent(p.ctx));
                 const auto expected = SparsePoly::parse("b4*b7 + b11*b12 + b22*b25 + b34*b35 + b42");
                 const auto* got = u.coeff(42);
                 require(got && *got == expected, "e42 coefficient " + (got ? got->to_string() : "0"));
                 return "e42: " + got->to_string();
               }});
  c.push_back({"centralizer-form", "solved centralizer of K in the radical", "form of centralizing elements",
               [](Pipeline& p) {
                 const auto& d = p.centralizer();
                 const auto abc = SparsePoly::parse("a + b + c");
                 for (int l = 1; l <= 35; ++l) {
                   const SparsePoly want = l <= 7    ? SparsePoly::variable("a")
                                           : l <= 14 ? SparsePoly::variable("b")
                                           : l <= 28 ? SparsePoly::variable("c")
                                                     : abc;
                   require(d.coefficient_forms.at(l) == want,
                           "e" + std::to_string(l) + " coefficient " + d.coefficient_forms.at(l).to_string());
                 }
                 require(d.relations.size() == 1 && d.relations[0] == SparsePoly::parse("b1 + b8 + b15 + b29"),
                         "unexpected square-root relations");
                 const std::map<std::string, std::string> orbit_names = {
                     {"b1", "a"}, {"b8", "b"}, {"b15", "c"}, {"b29", "d"}};
                 const auto named = d.relations[0].rename(orbit_names);
                 const auto squared = named.square();
                 require(named == SparsePoly::parse("a + b + c + d"), "relation " + named.to_string());
                 return "weight-1 coefficients a on O1, b on O8, c on O15, a + b + c on O29; " + squared.to_string() +
                        " = 0 gives " + named.to_string() + " = 0; parameters " + std::to_string(d.dimension());
               }});
  c.push_back({"separability", "dimension of the centralizer vs its infinitesimal analogue",
               "non-separable action of K", [](Pipeline& p) {
                 const auto lie = lie_centralizer({p.p1, p.p2}, p.ctx);
                 const auto rep = separability_report(p.centralizer(), lie);
                 require(rep.dim_inf_c == 5, "infinitesimal dimension " + std::to_string(rep.dim_inf_c));
                 require(rep.dim_lie_c == 4, "group centralizer dimension " + std::to_string(rep.dim_lie_c));
                 require(!rep.separable, "reported separable");
                 require(rep.witness && *rep.witness == label_range(1, 7), "witness differs");
                 return "dim Lie C = 4, dim c = 5, non-separable, witness e1+...+e7";
               }});
  c.push_back({"lambda-pairings", "pairings of lambda with simple roots and labels 36..42", "cocharacter lambda",
               [](Pipeline& p) {
                 p.ensure_context();
                 const auto& w = p.ctx->weights();
                 for (int i = 0; i < 6; ++i) {
                   require(w[p.system->simple_label(i)] == 0, "simple root " + std::to_string(i) + " has nonzero weight");
                 }
                 require(w[p.system->simple_label(6)] == 2, "sigma has weight " + std::to_string(w[p.system->simple_label(6)]));
                 for (int l = 36; l <= 42; ++l) require(w[l] == 4, "label " + std::to_string(l) + " weight " + std::to_string(w[l]));
                 return std::string("alpha..eta -> 0, sigma -> 2, labels 36..42 -> 4");
               }});
  c.push_back({"c-lambda-limit", "limit map on (h1, h2) and on v(a)", "c_lambda((h1, h2)) = (q1, q2)",
               [](Pipeline& p) {
                 p.ensure_context();
                 const auto h = p.h(SparsePoly::variable("a"));
                 const auto lim = c_lambda(h);
                 require(lim[0] == p.q(1) && lim[1] == p.q(2), "c_lambda((h1,h2)) differs from (q1,q2)");
                 const auto lv = c_lambda(PolyMixed::radical(e7::v(p.ctx, SparsePoly::variable("a"))));
                 require(lv.unip().is_identity() && lv.permutation().is_identity(), "c_lambda(v(a)) != 1");
                 return std::string("c_lambda((h1,h2)) = (q1,q2); c_lambda(v(a)) = 1");
               }});
  c.push_back({"non-conjugacy-symbolic", "(h1,h2) vs (q1,q2) under conjugators on labels 36..42",
               "contradiction with the centralizer form", [](Pipeline& p) {
                 p.ensure_context();
                 const auto a = SparsePoly::variable("a");
                 const auto h = p.h(a);
                 ConjugacyOptions o;
                 o.nonzero = {"a"};
                 o.desc = &p.centralizer();
                 o.coset_element = e7::v(p.ctx, a);
                 const auto d = ru_conjugacy_decision(h, c_lambda(h), e7::m_radical(), o);
                 require(d.verdict == Verdict::NotConjugate, "verdict " + to_string(d.verdict));
                 require(d.coset_invariant && *d.coset_invariant == a, "coset invariant differs");
                 return "not conjugate: " + d.certificate.back();
               }});
  auto brute = [](const GF2m& field) {
    return [field](Pipeline& p) {
      p.ensure_context();
      const auto h = p.h(SparsePoly::variable("a"));
      const auto target = specialize_tuple(c_lambda(h), {}, field);
      uint64_t space = 0;
      int cases = 0;
      for (const auto& x : field.elements()) {
        if (x.is_zero()) continue;
        const auto r = brute_force_conjugacy(specialize_tuple(h, {{"a", x}}, field), target, e7::m_radical(), field);
        require(!r.conjugate, "a = " + x.to_string() + " is conjugate by " + r.conjugator->to_string());
        space = r.search_space;
        ++cases;
      }
      return "no conjugator among " + std::to_string(space) + " candidates for each of " + std::to_string(cases) +
             " nonzero a in " + field.name();
    };
  };
  c.push_back({"non-conjugacy-gf2", "exhaustive conjugator search over GF(2)", "non-conjugacy, finite check",
               brute(GF2m::with_degree(1))});
  c.push_back({"non-conjugacy-field", "exhaustive conjugator search over the chosen field",
               "non-conjugacy, finite check", [brute](Pipeline& p) { return brute(p.options.brute_field)(p); }});
  c.push_back({"center-of-radical", "center of the unipotent radical", "Z(R_u(P_lambda))", [](Pipeline& p) {
                 p.ensure_context();
                 const auto z = center_of_radical(*p.ctx);
                 require(z == label_range(36, 42), "center labels " + join_ints(z));
                 return "{" + join_ints(z) + "}";
               }});
  c.push_back({"coset-invariant", "orbit-coefficient relation on C, v(s)C and the C8 variant",
               "w = v(a~) z, the C8 variant", [](Pipeline& p) {
                 const auto& d = p.centralizer();
                 const auto s = SparsePoly::variable("s");
                 const auto on_c = coset_weight_invariant(PolyUnipotent(p.ctx), d);
                 const auto on_c1 = coset_weight_invariant(e7::v(p.ctx, s), d);
                 const auto on_c8 = coset_weight_invariant(e7::v(p.ctx, s, 8, 14), d);
                 require(on_c.is_zero(), "on C: " + on_c.to_string());
                 require(on_c1 == s, "on v(s)C: " + on_c1.to_string());
                 require(on_c8 == s, "on C8 variant: " + on_c8.to_string());
                 return std::string("C: 0; v(s)C: s; C8 variant: s");
               }});
  c.push_back({"infinite-classes", "conjugating m(b') to m(a') forces a' = b'", "a' = b'", [](Pipeline& p) {
                 const auto& d = p.centralizer();
                 const auto rel = infinite_classes_obstruction(d, e7::v(p.ctx, SparsePoly::variable("s")), "s",
                                                               e7::m_radical());
                 require(rel.relations.size() == 1 && rel.relations[0] == SparsePoly::parse("a' + b'"),
                         "relations differ");
                 // Finite cross-check: a' = 1, b' = t over GF(4) with F = {e36(1),...,e42(1)}.
                 const auto f4 = GF2m::with_degree(2);
                 auto tuple = [&](const FieldElem& x) {
                   auto t = specialize_tuple(p.h(SparsePoly::variable("x")), {{"x", x}}, f4);
                   for (int l : e7::m_radical()) {
                     t.push_back(FieldMixed::radical(FieldUnipotent::root_element(p.ctx, l, f4.one())));
                   }
                   return t;
                 };
                 const auto r = brute_force_conjugacy(tuple(f4.gen()), tuple(f4.one()), e7::m_radical(), f4);
                 require(!r.conjugate, "m(t) conjugate to m(1) over GF(4)");
                 return "forced relation " + rel.relations[0].to_string() + " = 0; GF(4) a'=1, b'=t: no conjugator among " +
                        std::to_string(r.search_space);
               }});
  c.push_back({"modrep", "permutation module of K on O1 over GF(8)", "trivial plus three irreducible 2-dimensionals",
               [](Pipeline& p) {
                 p.ensure_context();
                 const auto rep = permutation_module({p.p1, p.p2}, label_range(1, 7), GF2m::with_degree(3));
                 const auto v = is_completely_reducible(rep);
                 const auto& s = v.certificate.summands;
                 require(v.certificate.dims() == std::vector<int>({1, 2, 2, 2}), "dims " + join_ints(v.certificate.dims()));
                 std::set<int> classes;
                 for (const auto& x : s) {
                   require(x.irreducible, "reducible summand");
                   classes.insert(x.iso_class);
                 }
                 require(classes.size() == 4, "isomorphic summands");
                 require(v.completely_reducible, "not completely reducible");
                 return std::string("dims [1,2,2,2], all irreducible, pairwise non-isomorphic, completely reducible");
               }});
  return c;
}

}  // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : catalogue()) ids.push_back(c.id);
  return ids;
}

VerificationReport verify_paper(const VerifyOptions& options) {
  Pipeline p{options, nullptr, nullptr, {}, {}, std::nullopt};
  VerificationReport report;
  for (const auto& spec : catalogue()) {
    CheckResult r{spec.id, spec.description, spec.anchor, false, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      if (spec.id != "roots") p.ensure_context();
      r.details = spec.run(p);
      r.pass = true;
    } catch (const std::exception& e) {
      r.details = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace chevkit
