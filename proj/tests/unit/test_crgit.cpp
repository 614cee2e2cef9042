#include <doctest.h>

#include <chevkit/crgit.hpp>
#include <chevkit/e7.hpp>
#include <chevkit/errors.hpp>

#include "oracles.hpp"

using namespace chevkit;

namespace {

SparsePoly P(const std::string& s) { return SparsePoly::parse(s); }

struct Fixture {
  ContextPtr ctx = e7::context();
  PolyMixed q1 = PolyMixed::weyl(ctx, e7::q1());
  PolyMixed q2 = PolyMixed::weyl(ctx, e7::q2());

  std::vector<PolyMixed> h(const SparsePoly& x) const {
    const auto v = PolyMixed::radical(e7::v(ctx, x));
    return conjugate_tuple(v, {q1, q2});
  }
  // (v(x) q1 v(x)⁻¹, v(x) q2 v(x)⁻¹, e36(1), ..., e42(1))
  std::vector<PolyMixed> m_tuple(const SparsePoly& x) const {
    auto t = h(x);
    for (int l = 36; l <= 42; ++l) t.push_back(PolyMixed::radical(PolyUnipotent::root_element(ctx, l, SparsePoly::one())));
    return t;
  }
};

}  // namespace

TEST_CASE("lambda pairings") {
  const auto sys = e7::system();
  const auto w = lambda_weights(e7::lambda(), *sys);
  for (int i = 0; i < 6; ++i) CHECK(w[sys->simple_label(i)] == 0);
  CHECK(w[sys->simple_label(6)] == 2);
  for (int l = 1; l <= 35; ++l) CHECK(w[l] == 2);
  for (int l = 36; l <= 42; ++l) CHECK(w[l] == 4);
  for (int l = 43; l <= 63; ++l) CHECK(w[l] == 0);
  const auto zero = lambda_weights(Cocharacter{std::vector<int>(7, 0)}, *sys);
  for (int l = 1; l <= 63; ++l) CHECK(zero[l] == 0);
  const auto ctx = e7::context();
  CHECK(ctx->radical_labels() == label_range(1, 42));
  CHECK(ctx->levi_labels() == label_range(43, 63));
  CHECK(ctx->lowest_layer() == label_range(1, 35));
  CHECK(*ctx->m_radical() == label_range(36, 42));
}

TEST_CASE("parabolic construction errors") {
  const auto sys = e7::system();
  CHECK_THROWS_AS(ParabolicDecomposition::create(sys, Cocharacter{{-1, 0, 0, 0, 0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ParabolicDecomposition::create(sys, e7::lambda(), std::vector<int>{43}), std::invalid_argument);
}

TEST_CASE("c_lambda examples") {
  Fixture fx;
  const auto h = fx.h(P("a"));
  CHECK(c_lambda(h) == std::vector<PolyMixed>{fx.q1, fx.q2});
  CHECK(c_lambda(fx.q1) == fx.q1);
  CHECK(c_lambda(PolyMixed::radical(e7::v(fx.ctx, P("a")))).unip().is_identity());
  CHECK(c_lambda(PolyMixed::radical(e7::v(fx.ctx, P("a")))).permutation().is_identity());
  const PolyMixed bad(WeylWord({6}), word_to_permutation(WeylWord({6}), *e7::system()), PolyUnipotent(fx.ctx));
  CHECK_THROWS_AS(c_lambda(bad), NotInParabolic);
}

TEST_CASE("property suite: c_lambda on 100 random pairs") {
  const auto t = oracle::c_lambda_properties(100, 77);
  CHECK_MESSAGE(t.failures == 0, t.first_failure);
  CHECK(t.cases == 300);
}

TEST_CASE("conjugating by radical elements preserves c_lambda of tuples") {
  Fixture fx;
  const auto f = GF2m::with_degree(3);
  std::mt19937_64 rng(8);
  const std::vector<FieldMixed> tuple{FieldMixed::weyl(fx.ctx, e7::q1()), FieldMixed::weyl(fx.ctx, e7::q2())};
  for (int i = 0; i < 50; ++i) {
    const auto g = FieldMixed::radical(oracle::random_unipotent(rng, fx.ctx, f));
    CHECK(c_lambda(conjugate_tuple(g, tuple)) == tuple);
  }
}

TEST_CASE("closed subsystems") {
  const auto sys = e7::system();
  CHECK(is_closed_subsystem(*sys, e7::psi_m()));
  CHECK(e7::psi_m().size() == 56);
  CHECK(is_closed_subsystem(*sys, label_range(1, 42)));
  CHECK(is_closed_subsystem(*sys, label_range(36, 42)));
  CHECK_FALSE(is_closed_subsystem(*sys, {4, 7}));
}

TEST_CASE("symbolic non-conjugacy of (h1, h2) and (q1, q2)") {
  Fixture fx;
  const auto desc = solve(centralizer_equations({fx.q1.permutation(), fx.q2.permutation()}, fx.ctx));
  ConjugacyOptions opts;
  opts.nonzero = {"a"};
  opts.desc = &desc;
  opts.coset_element = e7::v(fx.ctx, P("a"));
  const auto d = ru_conjugacy_decision(fx.h(P("a")), {fx.q1, fx.q2}, e7::m_radical(), opts);
  CHECK(d.verdict == Verdict::NotConjugate);
  CHECK_FALSE(d.conjugator);
  REQUIRE(d.obstructions.size() == 1);
  CHECK(d.obstructions[0] == P("a"));
  REQUIRE(d.coset_invariant);
  CHECK(*d.coset_invariant == P("a"));
  bool forced = false, coset_line = false;
  for (const auto& line : d.certificate) {
    forced = forced || line == "any conjugator forces a = 0, contradicting a != 0";
    coset_line = coset_line || line.find("b1 + b8 + b15 + b29 = 0") != std::string::npos;
  }
  CHECK(forced);
  CHECK(coset_line);
  CHECK(to_string(d.verdict) == "not conjugate");
}

TEST_CASE("trivial conjugacy instances") {
  Fixture fx;
  const auto same = ru_conjugacy_decision({fx.q1, fx.q2}, {fx.q1, fx.q2}, e7::m_radical());
  CHECK(same.conjugate());
  REQUIRE(same.conjugator);
  CHECK(same.conjugator->is_identity());
  const auto zero = ru_conjugacy_decision(fx.h(SparsePoly()), {fx.q1, fx.q2}, e7::m_radical());
  CHECK(zero.conjugate());
  CHECK(zero.conjugator->is_identity());
  const auto one = ru_conjugacy_decision(fx.h(SparsePoly::one()), {fx.q1, fx.q2}, e7::m_radical());
  CHECK(one.verdict == Verdict::NotConjugate);
  const auto conditional = ru_conjugacy_decision(fx.h(P("a")), {fx.q1, fx.q2}, e7::m_radical());
  CHECK(conditional.verdict == Verdict::Conditional);
  const auto weyl = ru_conjugacy_decision({fx.q1}, {fx.q2}, e7::m_radical());
  CHECK(weyl.verdict == Verdict::NotConjugate);
}

TEST_CASE("conjugacy errors") {
  Fixture fx;
  CHECK_THROWS_AS(ru_conjugacy_decision({fx.q1}, {fx.q1}, {1, 36}), SupportNotCentralInContext);
  CHECK_THROWS_AS(ru_conjugacy_decision({}, {}, {36}), std::invalid_argument);
  CHECK_THROWS_AS(ru_conjugacy_decision({fx.q1}, {fx.q1, fx.q2}, {36}), std::invalid_argument);
  const auto f16 = GF2m::with_degree(4);
  const auto t = specialize_tuple({fx.q1}, {}, f16);
  CHECK_THROWS_AS(brute_force_conjugacy(t, t, e7::m_radical(), f16), SearchSpaceTooLarge);
  CHECK_THROWS_AS(specialize_tuple(fx.h(P("a")), {}, f16), MissingVariable);
  const auto f2 = GF2m::with_degree(1);
  const auto t2 = specialize_tuple({fx.q1}, {}, f2);
  CHECK_THROWS_AS(brute_force_conjugacy(t2, t2, {43}, f2), DomainNotStable);
}

TEST_CASE("exhaustive search over GF(2) and GF(4)") {
  Fixture fx;
  for (unsigned m : {1u, 2u}) {
    const auto f = GF2m::with_degree(m);
    const auto src = specialize_tuple(fx.h(P("a")), {{"a", f.one()}}, f);
    const auto tgt = specialize_tuple({fx.q1, fx.q2}, {}, f);
    const auto r = brute_force_conjugacy(src, tgt, e7::m_radical(), f);
    CHECK_FALSE(r.conjugate);
    CHECK(r.search_space == (m == 1 ? 128u : 16384u));
    CHECK(r.checked == r.search_space);
    const auto same = brute_force_conjugacy(tgt, tgt, e7::m_radical(), f);
    CHECK(same.conjugate);
    CHECK(same.conjugator->is_identity());
    CHECK(same.checked == 1);
  }
}

TEST_CASE("exhaustive search reports the lexicographically least conjugator") {
  Fixture fx;
  const auto f = GF2m::with_degree(1);
  const auto tgt = specialize_tuple({fx.q1, fx.q2}, {}, f);
  const auto m0 = FieldMixed::radical(FieldUnipotent::root_element(fx.ctx, 36, f.one()));
  const auto src = conjugate_tuple(m0, tgt);
  // Conjugators are m0·z for z in {1, e36(1)···e42(1)}; the one with a zero e36 digit is smaller.
  const auto r = brute_force_conjugacy(src, tgt, e7::m_radical(), f);
  REQUIRE(r.conjugate);
  std::vector<Factor<FieldElem>> expect;
  for (int l = 37; l <= 42; ++l) expect.emplace_back(l, f.one());
  CHECK(*r.conjugator == FieldUnipotent::from_word(fx.ctx, expect));
}

TEST_CASE("property suite: symbolic and exhaustive verdicts agree") {
  const auto t = oracle::conjugacy_agreement(99);
  CHECK_MESSAGE(t.failures == 0, t.first_failure);
  CHECK(t.cases == (2 + 4) * 3 + 8);
}

TEST_CASE("infinite classes: a conjugator forces a' = b'") {
  Fixture fx;
  const auto desc = solve(centralizer_equations({fx.q1.permutation(), fx.q2.permutation()}, fx.ctx));
  const auto rel = infinite_classes_obstruction(desc, e7::v(fx.ctx, P("s")), "s", e7::m_radical());
  REQUIRE(rel.relations.size() == 1);
  CHECK(rel.relations[0].to_string() == "a' + b'");
  bool trust = false;
  for (const auto& line : rel.certificate) trust = trust || line == "conjugators with a nontrivial Levi part are not considered";
  CHECK(trust);

  const auto degenerate = infinite_classes_obstruction(desc, PolyUnipotent::identity(fx.ctx), "s", e7::m_radical());
  CHECK(degenerate.relations.empty());

  const auto f = GF2m::with_degree(2);
  const auto ma = specialize_tuple(fx.m_tuple(P("x")), {{"x", f.one()}}, f);
  const auto mb = specialize_tuple(fx.m_tuple(P("x")), {{"x", f.gen()}}, f);
  CHECK_FALSE(brute_force_conjugacy(mb, ma, e7::m_radical(), f).conjugate);
  CHECK(brute_force_conjugacy(mb, mb, e7::m_radical(), f).conjugate);
}
