// chevkit: command-line front end for the E7 characteristic-2 toolkit.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chevkit/centralizer.hpp"
#include "chevkit/crgit.hpp"
#include "chevkit/e7.hpp"
#include "chevkit/errors.hpp"
#include "chevkit/modrep.hpp"
#include "chevkit/report.hpp"

using namespace chevkit;
using json = nlohmann::ordered_json;

namespace {

bool use_color() {
  const char* c = std::getenv("CHEVKIT_COLOR");
  return c && std::string(c) != "0" && std::string(c) != "never";
}

std::string status_word(bool pass) {
  if (!use_color()) return pass ? "PASS" : "FAIL";
  return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

// "1..42", "36-42", "1,2,5..7"
std::vector<int> parse_labels(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    const auto dash = part.find('-', 1);
    if (dots != std::string::npos) {
      const auto r = label_range(std::stoi(part.substr(0, dots)), std::stoi(part.substr(dots + 2)));
      out.insert(out.end(), r.begin(), r.end());
    } else if (dash != std::string::npos) {
      const auto r = label_range(std::stoi(part.substr(0, dash)), std::stoi(part.substr(dash + 1)));
      out.insert(out.end(), r.begin(), r.end());
    } else if (!part.empty()) {
      out.push_back(std::stoi(part));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

WeylWord resolve_word(const std::string& name) {
  if (name == "q1") return e7::q1();
  if (name == "q2") return e7::q2();
  if (name == "1" || name.empty()) return WeylWord();
  return WeylWord::parse(name, CartanDatum::e7());
}

// Words separated by ';' or, when every piece is q1/q2-like, by ','.
std::vector<WeylWord> resolve_words(const std::string& text) {
  std::vector<WeylWord> out;
  const char sep = text.find(';') != std::string::npos ? ';' : ',';
  std::stringstream ss(text);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  const bool named = std::all_of(parts.begin(), parts.end(), [](const std::string& p) {
    return p == "q1" || p == "q2" || p == "1";
  });
  if (sep == ',' && !named) return {resolve_word(text)};
  for (const auto& p : parts) out.push_back(resolve_word(p));
  return out;
}

std::vector<RootPermutation> permutations(const std::vector<WeylWord>& words, const RootSystem& sys) {
  std::vector<RootPermutation> out;
  for (const auto& w : words) out.push_back(word_to_permutation(w, sys));
  return out;
}

// Field element from "1", "t", "t^2 + 1" or a bit pattern like "0b101".
FieldElem parse_field_elem(const std::string& text, const GF2m& field) {
  if (text.rfind("0b", 0) == 0) return field.elem(static_cast<uint32_t>(std::stoul(text.substr(2), nullptr, 2)));
  const auto p = SparsePoly::parse(text);
  for (const auto& v : p.variables()) {
    if (v != "t") throw ParseError("field elements are polynomials in t, got variable " + v);
  }
  return specialize(p, {{"t", field.gen()}}, field);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_roots(const std::string& type, const std::string& format, const std::string& table_path) {
  if (type != "E7") throw std::invalid_argument("only --type E7 is bundled");
  const auto table = table_path.empty() ? e7::table() : LabelTable::read_csv(table_path);
  const auto sys = e7::system_from(table);
  if (format == "csv") {
    std::cout << table.to_csv();
    return 0;
  }
  const auto& d = sys->datum();
  if (format == "json") {
    json roots = json::array();
    for (int l = 1; l <= sys->size(); ++l) {
      json coeffs;
      for (int i = 0; i < d.rank; ++i) coeffs[d.names[i]] = sys->coefficient(l, i);
      roots.push_back({{"label", l}, {"height", sys->root(l).height()}, {"coefficients", coeffs}});
    }
    print({{"type", type}, {"count", sys->size()}, {"roots", roots}});
    return 0;
  }
  for (int l = 1; l <= sys->size(); ++l) std::cout << l << "\t" << sys->root(l).to_string() << "\n";
  return 0;
}

int cmd_weyl_perm(const std::string& word, const std::string& restrict, const std::string& format) {
  const auto sys = e7::system();
  const auto w = resolve_word(word);
  const auto p = word_to_permutation(w, *sys);
  const auto domain = parse_labels(restrict);
  const auto cycles = p.cycles(domain);
  if (format == "json") {
    print({{"word", w.to_string(sys->datum())}, {"domain", restrict}, {"cycles", cycles}});
  } else {
    std::cout << cycles << "\n";
  }
  return 0;
}

int cmd_weyl_orbits(const std::string& words, const std::string& restrict, const std::string& format) {
  const auto sys = e7::system();
  const auto gens = permutations(resolve_words(words), *sys);
  const auto part = orbits(gens, parse_labels(restrict));
  const auto group = group_closure(gens);
  if (format == "json") {
    json o = json::array();
    for (const auto& [k, members] : part.orbits) o.push_back({{"key", k}, {"members", members}});
    print({{"orbits", o}, {"group_order", group.order()}});
  } else {
    for (const auto& [k, members] : part.orbits) {
      std::cout << "O" << k << " = {";
      for (size_t i = 0; i < members.size(); ++i) std::cout << (i ? ", " : "") << members[i];
      std::cout << "}\n";
    }
    std::cout << "group order " << group.order() << "\n";
  }
  return 0;
}

ContextPtr checked_context(const std::string& group, const std::string& radical) {
  if (group != "E7") throw std::invalid_argument("only --group E7 is bundled");
  const auto ctx = e7::context();
  if (!radical.empty() && parse_labels(radical) != ctx->radical_labels()) {
    throw std::invalid_argument("--radical must be the full radical 1..42 of the bundled parabolic");
  }
  return ctx;
}

int cmd_centralizer(const std::string& group, const std::string& words, const std::string& radical,
                    const std::string& format) {
  const auto ctx = checked_context(group, radical);
  const auto gens = permutations(resolve_words(words), ctx->system());
  const auto desc = solve(centralizer_equations(gens, ctx));
  if (format == "json") {
    json forms;
    for (const auto& [l, f] : desc.coefficient_forms) forms[std::to_string(l)] = f.to_string();
    json rel = json::array();
    for (const auto& r : desc.relations) rel.push_back(r.to_string());
    print({{"free_params", desc.free_params},
           {"dimension", desc.dimension()},
           {"coefficient_forms", forms},
           {"relations", rel},
           {"derived_relations", desc.derived_relations}});
  } else {
    std::cout << "parameters:";
    for (const auto& p : desc.free_params) std::cout << " " << p;
    std::cout << "\nu = " << desc.element().to_string() << "\n";
    for (const auto& r : desc.derived_relations) std::cout << "  " << r << "\n";
  }
  return 0;
}

int cmd_separability(const std::string& group, const std::string& words, const std::string& format) {
  const auto ctx = checked_context(group, "");
  const auto gens = permutations(resolve_words(words), ctx->system());
  const auto rep = separability_report(gens, ctx);
  if (format == "json") {
    json w = rep.witness ? json(*rep.witness) : json(nullptr);
    print({{"dim_lie_C", rep.dim_lie_c}, {"dim_inf_c", rep.dim_inf_c}, {"separable", rep.separable}, {"witness", w}});
  } else {
    std::cout << "dim Lie C = " << rep.dim_lie_c << ", dim c = " << rep.dim_inf_c << ", "
              << (rep.separable ? "separable" : "non-separable");
    if (rep.witness) {
      std::cout << ", witness";
      for (size_t i = 0; i < rep.witness->size(); ++i) std::cout << (i ? " + " : " ") << "e" << (*rep.witness)[i];
    }
    std::cout << "\n";
  }
  return 0;
}

std::vector<PolyMixed> h_tuple(const ContextPtr& ctx, const SparsePoly& a) {
  const auto v = PolyMixed::radical(e7::v(ctx, a));
  const auto vi = mixed_inverse(v);
  return {v * PolyMixed::weyl(ctx, e7::q1()) * vi, v * PolyMixed::weyl(ctx, e7::q2()) * vi};
}

int cmd_noncr(const std::string& a_text, const std::string& field_name, const std::string& format) {
  const auto ctx = e7::context();
  const auto field = GF2m::parse(field_name);
  const auto a = parse_field_elem(a_text, field);
  const auto sym_a = SparsePoly::variable("a");
  const auto h = h_tuple(ctx, sym_a);
  const auto desc = solve(centralizer_equations(
      {word_to_permutation(e7::q1(), ctx->system()), word_to_permutation(e7::q2(), ctx->system())}, ctx));
  ConjugacyOptions opts;
  if (!a.is_zero()) opts.nonzero = {"a"};
  opts.desc = &desc;
  opts.coset_element = e7::v(ctx, sym_a);
  const auto symbolic = ru_conjugacy_decision(h, c_lambda(h), e7::m_radical(), opts);

  const auto t0 = std::chrono::steady_clock::now();
  const auto brute = brute_force_conjugacy(specialize_tuple(h, {{"a", a}}, field),
                                           specialize_tuple(c_lambda(h), {}, field), e7::m_radical(), field);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (format == "json") {
    json j = {{"a", a.to_string()},
              {"field", field.name()},
              {"conjugate", brute.conjugate},
              {"symbolic_verdict", to_string(symbolic.verdict)},
              {"certificate", symbolic.certificate},
              {"search_space", brute.search_space},
              {"elapsed_ms", ms}};
    if (brute.conjugator) j["witness"] = brute.conjugator->to_string();
    print(j);
  } else {
    std::cout << "symbolic: " << to_string(symbolic.verdict) << "\n";
    for (const auto& line : symbolic.certificate) std::cout << "  " << line << "\n";
    std::cout << "brute force over " << field.name() << " (" << brute.search_space << " candidates): "
              << (brute.conjugate ? "conjugate by " + brute.conjugator->to_string() : std::string("not conjugate"))
              << "\n";
  }
  return 0;
}

int cmd_infinite_classes(const std::string& format) {
  const auto ctx = e7::context();
  const auto desc = solve(centralizer_equations(
      {word_to_permutation(e7::q1(), ctx->system()), word_to_permutation(e7::q2(), ctx->system())}, ctx));
  const auto t0 = std::chrono::steady_clock::now();
  const auto rel = infinite_classes_obstruction(desc, e7::v(ctx, SparsePoly::variable("s")), "s", e7::m_radical());
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::vector<std::string> rels;
  for (const auto& r : rel.relations) rels.push_back(r.to_string() + " = 0");
  if (format == "json") {
    print({{"relations", rels}, {"certificate", rel.certificate}, {"elapsed_ms", ms}});
  } else {
    for (const auto& line : rel.certificate) std::cout << line << "\n";
  }
  return 0;
}

int cmd_climit(const std::string& element, const std::string& format) {
  const auto ctx = e7::context();
  const auto x = parse_mixed(element, ctx, e7::names(ctx));
  const auto lim = c_lambda(x);
  if (format == "json") {
    print({{"element", x.to_string()}, {"c_lambda", lim.to_string()}});
  } else {
    std::cout << x.to_string() << "\n  -> " << lim.to_string() << "\n";
  }
  return 0;
}

int cmd_modrep(const std::string& group, const std::string& field_name, const std::string& format) {
  if (group != "D14-perm7") throw std::invalid_argument("only --group D14-perm7 is bundled");
  const auto sys = e7::system();
  const auto field = GF2m::parse(field_name);
  const auto rep = permutation_module(permutations({e7::q1(), e7::q2()}, *sys), label_range(1, 7), field);
  const auto verdict = is_completely_reducible(rep);
  const auto& d = verdict.certificate;
  if (format == "json") {
    json summands = json::array();
    for (const auto& s : d.summands) {
      std::vector<std::vector<uint32_t>> basis;
      for (int r = 0; r < s.module.dim(); ++r) basis.push_back(s.module.basis.row(r));
      summands.push_back(
          {{"dim", s.module.dim()}, {"irreducible", s.irreducible}, {"iso_class", s.iso_class}, {"basis", basis}});
    }
    print({{"group", group},
           {"field", field.name()},
           {"dims", d.dims()},
           {"summands", summands},
           {"completely_reducible", verdict.completely_reducible}});
  } else {
    for (const auto& s : d.summands) {
      std::cout << "dim " << s.module.dim() << (s.irreducible ? " irreducible" : " reducible") << " class "
                << s.iso_class << "\n";
    }
    std::cout << (verdict.completely_reducible ? "completely reducible" : "not completely reducible") << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& field_name, const std::string& table_path, bool timing, const std::string& format) {
  VerifyOptions opts;
  opts.brute_field = GF2m::parse(field_name);
  if (!table_path.empty()) opts.table = LabelTable::read_csv(table_path);
  const auto report = verify_paper(opts);
  if (format == "json") {
    std::cout << report.to_json(timing);
  } else {
    for (const auto& c : report.checks) {
      std::cout << status_word(c.pass) << " " << c.id << ": " << c.details << "\n";
    }
    std::cout << report.passed() << " passed, " << report.failed() << " failed\n";
    if (timing) {
      for (const auto& c : report.checks) std::cout << "  " << c.id << " " << c.elapsed_ms << " ms\n";
    }
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact characteristic-2 computations in the E7 Chevalley group"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  std::function<int()> action;

  auto* roots = app.add_subcommand("roots", "List the labelled positive roots");
  std::string type = "E7", table;
  roots->add_option("--type", type, "Root system type")->capture_default_str();
  roots->add_option("--table", table, "Alternative label table (CSV)");
  roots->add_option("--format", format, "text, json or csv");
  roots->callback([&] { action = [&] { return cmd_roots(type, format, table); }; });

  auto* weyl = app.add_subcommand("weyl", "Root permutations of Weyl words");
  weyl->require_subcommand(1);
  std::string word, restrict = "1..42", words = "q1,q2";
  auto* perm = weyl->add_subcommand("perm", "Cycle decomposition of a word on a label set");
  perm->add_option("--word", word, "q1, q2 or letters like e,b,c,a,b")->required();
  perm->add_option("--restrict", restrict, "Label set, e.g. 1..42")->capture_default_str();
  perm->add_option("--format", format, "text or json");
  perm->callback([&] { action = [&] { return cmd_weyl_perm(word, restrict, format); }; });
  auto* orb = weyl->add_subcommand("orbits", "Orbits of the group generated by words");
  orb->add_option("--words", words, "Generators, e.g. q1,q2 or e,b,c;a,b")->capture_default_str();
  orb->add_option("--restrict", restrict, "Label set")->capture_default_str();
  orb->add_option("--format", format, "text or json");
  orb->callback([&] { action = [&] { return cmd_weyl_orbits(words, restrict, format); }; });

  std::string group = "E7", radical = "1..42";
  auto* cen = app.add_subcommand("centralizer", "Solve for the centralizer of K in the unipotent radical");
  cen->add_option("--group", group)->capture_default_str();
  cen->add_option("--words", words)->capture_default_str();
  cen->add_option("--radical", radical)->capture_default_str();
  cen->add_option("--report,--format", format, "text or json");
  cen->callback([&] { action = [&] { return cmd_centralizer(group, words, radical, format); }; });

  auto* sep = app.add_subcommand("separability", "Compare group and infinitesimal centralizers");
  sep->add_option("--group", group)->capture_default_str();
  sep->add_option("--words", words)->capture_default_str();
  sep->add_option("--format", format, "text or json");
  sep->callback([&] { action = [&] { return cmd_separability(group, words, format); }; });

  auto* git = app.add_subcommand("gitcheck", "Conjugacy obstructions");
  git->require_subcommand(1);
  std::string a_text = "1", field = "gf4", element;
  auto* noncr = git->add_subcommand("noncr", "Is (h1,h2) conjugate to (q1,q2) by R_u(P_lambda(M))?");
  noncr->add_option("--a", a_text, "Field element: 1, t, t^2 + 1 or 0b101")->capture_default_str();
  noncr->add_option("--field", field)->capture_default_str();
  noncr->add_option("--format", format, "text or json");
  noncr->callback([&] { action = [&] { return cmd_noncr(a_text, field, format); }; });
  auto* inf = git->add_subcommand("infinite-classes", "Relation forced on a', b'");
  inf->add_option("--format", format, "text or json");
  inf->callback([&] { action = [&] { return cmd_infinite_classes(format); }; });
  auto* cl = git->add_subcommand("climit", "Evaluate c_lambda on an element");
  cl->add_option("--element", element, "e.g. v(a)*q1*v(a)^-1")->required();
  cl->add_option("--format", format, "text or json");
  cl->callback([&] { action = [&] { return cmd_climit(element, format); }; });

  auto* mod = app.add_subcommand("modrep", "Modular representations");
  mod->require_subcommand(1);
  std::string mgroup = "D14-perm7", mfield = "gf8";
  auto* dec = mod->add_subcommand("decompose", "Decompose the permutation module of K on O1");
  dec->add_option("--group", mgroup)->capture_default_str();
  dec->add_option("--field", mfield)->capture_default_str();
  dec->add_option("--format", format, "text or json");
  dec->callback([&] { action = [&] { return cmd_modrep(mgroup, mfield, format); }; });

  auto* ver = app.add_subcommand("verify-paper", "Run every E7 check; exit 0 iff all pass");
  std::string vfield = "gf4", vtable;
  bool timing = false;
  ver->add_option("--field", vfield, "Field of the second brute-force search")->capture_default_str();
  ver->add_option("--table", vtable, "Alternative label table (CSV)");
  ver->add_flag("--timing", timing, "Append per-check times");
  ver->add_option("--format", format, "text or json");
  ver->callback([&] { action = [&] { return cmd_verify(vfield, vtable, timing, format); }; });

  CLI11_PARSE(app, argc, argv);
  try {
    return action ? action() : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
