#include "chevkit/e7.hpp"

namespace chevkit::e7 {

// Defined in the generated e7_table.cpp.
extern const char* const kBundledCsv;

const std::string& bundled_csv() {
  static const std::string csv(kBundledCsv);
  return csv;
}

LabelTable table() { return LabelTable::parse_csv(bundled_csv()); }

std::vector<WeightBand> bands() {
  constexpr int sigma = 6;
  return {{1, 35, sigma, 1}, {36, 42, sigma, 2}, {43, 63, sigma, 0}};
}

std::shared_ptr<const RootSystem> system_from(const LabelTable& t) {
  return std::make_shared<const RootSystem>(RootSystem::generate(CartanDatum::e7()).relabel(t, bands()));
}

std::shared_ptr<const RootSystem> system() {
  static const auto sys = system_from(table());
  return sys;
}

WeylWord q1() { return WeylWord::parse("e,b,c,a,b", CartanDatum::e7()); }
WeylWord q2() { return WeylWord::parse("e,b,c,a,b,h,d,b", CartanDatum::e7()); }

Cocharacter lambda() { return Cocharacter{{3, 6, 9, 12, 8, 4, 7}}; }

std::vector<int> radical() { return label_range(1, 42); }
std::vector<int> m_radical() { return label_range(36, 42); }

std::vector<int> psi_m() {
  std::vector<int> out;
  for (int l = 36; l <= 63; ++l) {
    out.push_back(l);
    out.push_back(-l);
  }
  return out;
}

ContextPtr context_for(std::shared_ptr<const RootSystem> sys) {
  return ParabolicDecomposition::create(std::move(sys), lambda(), m_radical());
}

ContextPtr context() {
  static const auto ctx = context_for(system());
  return ctx;
}

PolyUnipotent v(const ContextPtr& ctx, const SparsePoly& s, int lo, int hi) {
  std::vector<Factor<SparsePoly>> word;
  for (int l = lo; l <= hi; ++l) word.emplace_back(l, s);
  return PolyUnipotent::from_word(ctx, std::move(word));
}

ExprNames names(const ContextPtr& ctx) {
  ExprNames n;
  n.words = {{"q1", q1()}, {"q2", q2()}};
  n.unipotents["v"] = [ctx](const SparsePoly& s) { return v(ctx, s); };
  return n;
}

}  // namespace chevkit::e7
