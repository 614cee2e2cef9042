#include <doctest.h>

#include <chevkit/e7.hpp>
#include <chevkit/errors.hpp>
#include <chevkit/modrep.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace chevkit;

namespace {

MatRep k_module(const GF2m& f) {
  const auto sys = e7::system();
  return permutation_module({word_to_permutation(e7::q1(), *sys), word_to_permutation(e7::q2(), *sys)},
                            label_range(1, 7), f);
}

// Independent row reduction over GF(2^m) on raw vectors.
int rank_of(const GF2m& f, std::vector<std::vector<uint32_t>> rows) {
  int r = 0;
  const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c]) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const uint32_t inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || !rows[i][c]) continue;
      const uint32_t k = rows[i][c];
      for (int j = 0; j < n; ++j) rows[i][j] ^= f.mul(k, rows[r][j]);
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<uint32_t>> rows_of(const Matrix& m) {
  std::vector<std::vector<uint32_t>> out;
  for (int i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

bool same_row_space(const Matrix& a, const std::vector<std::vector<uint32_t>>& b) {
  auto both = rows_of(a);
  both.insert(both.end(), b.begin(), b.end());
  return rank_of(a.field(), rows_of(a)) == rank_of(a.field(), b) && rank_of(a.field(), both) == rank_of(a.field(), b);
}

// GF(2) submodules of a permutation module as sets of vectors (n = 7 gives 128 flags).
using VecSet = std::vector<bool>;

VecSet span_closure(const std::vector<uint32_t>& gens, int n) {
  VecSet s(1u << n, false);
  s[0] = true;
  for (uint32_t g : gens) {
    VecSet t = s;
    for (uint32_t v = 0; v < (1u << n); ++v) {
      if (s[v]) t[v ^ g] = true;
    }
    s = t;
  }
  return s;
}

VecSet cyclic_submodule(uint32_t v, const std::vector<std::vector<int>>& perms, int n) {
  std::vector<uint32_t> orbit{v};
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& p : perms) {
      uint32_t w = 0;
      for (int k = 0; k < n; ++k) {
        if ((orbit[i] >> k) & 1) w |= 1u << p[k];
      }
      if (std::find(orbit.begin(), orbit.end(), w) == orbit.end()) orbit.push_back(w);
    }
  }
  return span_closure(orbit, n);
}

std::vector<uint32_t> members(const VecSet& s) {
  std::vector<uint32_t> out;
  for (uint32_t v = 0; v < s.size(); ++v) {
    if (s[v]) out.push_back(v);
  }
  return out;
}

std::set<VecSet> all_submodules(const std::vector<std::vector<int>>& perms, int n) {
  std::set<VecSet> subs;
  for (uint32_t v = 0; v < (1u << n); ++v) subs.insert(cyclic_submodule(v, perms, n));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<VecSet> cur(subs.begin(), subs.end());
    for (const auto& a : cur) {
      for (const auto& b : cur) {
        auto gens = members(a);
        const auto mb = members(b);
        gens.insert(gens.end(), mb.begin(), mb.end());
        grew |= subs.insert(span_closure(gens, n)).second;
      }
    }
  }
  return subs;
}

std::vector<std::vector<int>> k_perms_on_o1() {
  const auto sys = e7::system();
  std::vector<std::vector<int>> out;
  for (const auto& w : {e7::q1(), e7::q2()}) {
    const auto p = word_to_permutation(w, *sys);
    std::vector<int> img(7);
    for (int i = 0; i < 7; ++i) img[i] = p(i + 1) - 1;
    out.push_back(img);
  }
  return out;
}

}  // namespace

TEST_CASE("permutation modules") {
  const auto f8 = GF2m::with_degree(3);
  const auto rep = k_module(f8);
  CHECK(rep.dim == 7);
  REQUIRE(rep.generators.size() == 2);
  const auto& g2 = rep.generators[1].second;
  CHECK(g2.pow(7) == Matrix::identity(f8, 7));
  CHECK_FALSE(g2 == Matrix::identity(f8, 7));
  CHECK(rep.generators[0].second.pow(2) == Matrix::identity(f8, 7));
  // Row i of the matrix is e_{image(i)}: 1 -> 6 in the 7-cycle (1 6 7 5 4 3 2).
  CHECK(g2.at(0, 5) == 1);
  const auto id = permutation_module(std::vector<std::vector<int>>{{1, 2, 3}}, f8);
  CHECK(id.generators[0].second == Matrix::identity(f8, 3));
  CHECK_THROWS_AS(permutation_module({word_to_permutation(e7::q2(), *e7::system())}, {1, 2}, f8), DomainNotStable);
}

TEST_CASE("spin examples") {
  const auto f8 = GF2m::with_degree(3);
  const auto rep = k_module(f8);
  CHECK(spin(Matrix::from_rows(f8, {{1, 1, 1, 1, 1, 1, 1}}), rep).dim() == 1);
  CHECK(spin(Matrix::from_rows(f8, {{0, 0, 0, 0, 0, 0, 0}}), rep).dim() == 0);
  const auto s = spin(Matrix::from_rows(f8, {{1, 1, 0, 0, 0, 0, 0}}), rep);
  CHECK(s.dim() <= 6);
  CHECK(is_stable(s.basis, rep));
  // Oracle: rank of the images of e1 + e2 under the whole group.
  std::vector<std::vector<uint32_t>> images;
  const auto perms = k_perms_on_o1();
  std::vector<std::vector<int>> group{{0, 1, 2, 3, 4, 5, 6}};
  for (size_t i = 0; i < group.size(); ++i) {
    for (const auto& p : perms) {
      std::vector<int> g(7);
      for (int k = 0; k < 7; ++k) g[k] = p[group[i][k]];
      if (std::find(group.begin(), group.end(), g) == group.end()) group.push_back(g);
    }
  }
  CHECK(group.size() == 14);
  for (const auto& g : group) {
    std::vector<uint32_t> v(7, 0);
    v[g[0]] ^= 1;
    v[g[1]] ^= 1;
    images.push_back(v);
  }
  CHECK(s.dim() == rank_of(f8, images));
}

TEST_CASE("decomposition over GF(8): trivial plus three 2-dimensional irreducibles") {
  const auto f8 = GF2m::with_degree(3);
  const auto rep = k_module(f8);
  const auto dec = decompose(rep);
  CHECK(dec.dims() == std::vector<int>{1, 2, 2, 2});
  std::set<int> classes;
  std::vector<std::vector<uint32_t>> all;
  for (const auto& s : dec.summands) {
    CHECK(s.irreducible);
    CHECK(is_stable(s.module.basis, rep));
    classes.insert(s.iso_class);
    const auto r = rows_of(s.module.basis);
    all.insert(all.end(), r.begin(), r.end());
  }
  CHECK(classes.size() == 4);
  CHECK(rank_of(f8, all) == 7);
  for (size_t i = 1; i < dec.summands.size(); ++i) {
    for (size_t j = i + 1; j < dec.summands.size(); ++j) {
      CHECK(hom_basis(restrict_to(dec.summands[i].module, rep), restrict_to(dec.summands[j].module, rep)).empty());
    }
  }
  CHECK(is_completely_reducible(rep).completely_reducible);

  // Eigenvector oracle: along the 7-cycle c_0 -> c_1 -> ..., v_ζ = Σ ζ^k e_{c_k}
  // is an eigenvector of q2; q1 swaps ζ and ζ⁻¹.
  const std::vector<int> cycle{1, 6, 7, 5, 4, 3, 2};
  auto eig = [&](uint32_t zeta) {
    std::vector<uint32_t> v(7, 0);
    for (int k = 0; k < 7; ++k) v[cycle[k] - 1] = f8.pow(zeta, k);
    return v;
  };
  std::set<std::set<uint32_t>> expected, found;
  for (uint32_t z = 2; z < 8; ++z) expected.insert({z, f8.inv(z)});
  CHECK(expected.size() == 3);
  for (size_t i = 1; i < dec.summands.size(); ++i) {
    for (const auto& pair : expected) {
      std::vector<std::vector<uint32_t>> span;
      for (uint32_t z : pair) span.push_back(eig(z));
      if (same_row_space(dec.summands[i].module.basis, span)) found.insert(pair);
    }
  }
  CHECK(found == expected);
  CHECK(same_row_space(dec.summands[0].module.basis, {eig(1)}));
}

TEST_CASE("decomposition over GF(2) agrees with the submodule lattice") {
  const auto f2 = GF2m::with_degree(1);
  const auto rep = k_module(f2);
  const auto dec = decompose(rep);
  CHECK(dec.dims() == std::vector<int>{1, 6});
  const auto subs = all_submodules(k_perms_on_o1(), 7);
  CHECK(subs.size() == 4);  // 0, <1...1>, augmentation, whole
  for (const auto& s : dec.summands) {
    std::vector<uint32_t> gens;
    for (int i = 0; i < s.module.basis.rows(); ++i) {
      uint32_t m = 0;
      for (int k = 0; k < 7; ++k) m |= s.module.basis.at(i, k) << k;
      gens.push_back(m);
    }
    const auto mine = span_closure(gens, 7);
    CHECK(subs.count(mine) == 1);
    // Irreducible iff no lattice member lies strictly between 0 and it.
    int inside = 0;
    for (const auto& t : subs) {
      bool sub = true;
      for (uint32_t v = 0; v < 128; ++v) sub = sub && (!t[v] || mine[v]);
      inside += sub;
    }
    CHECK(s.irreducible == (inside == 2));
  }
  // Complete reducibility: every submodule has a complement in the lattice.
  bool complemented = true;
  for (const auto& a : subs) {
    bool has = false;
    for (const auto& b : subs) {
      int meet = 0;
      for (uint32_t v = 0; v < 128; ++v) meet += a[v] && b[v];
      auto gens = members(a);
      const auto mb = members(b);
      gens.insert(gens.end(), mb.begin(), mb.end());
      const auto join = span_closure(gens, 7);
      has = has || (meet == 1 && std::count(join.begin(), join.end(), true) == 128);
    }
    complemented = complemented && has;
  }
  CHECK(is_completely_reducible(rep).completely_reducible == complemented);
}

TEST_CASE("irreducibility flags agree with exhaustive search over GF(4)") {
  const auto f4 = GF2m::with_degree(2);
  const auto rep = k_module(f4);
  const auto dec = decompose(rep);
  CHECK(dec.dims() == std::vector<int>{1, 6});
  for (const auto& s : dec.summands) {
    const auto sub = restrict_to(s.module, rep);
    // Every nonzero vector of the summand spins to the whole summand (4^6 vectors).
    bool irreducible = true;
    const int d = sub.dim;
    std::vector<uint32_t> v(d);
    for (uint32_t idx = 1; idx < (1u << (2 * d)) && irreducible; ++idx) {
      for (int k = 0; k < d; ++k) v[k] = (idx >> (2 * k)) & 3;
      std::vector<std::vector<uint32_t>> span{v};
      for (size_t i = 0; i < span.size() && static_cast<int>(span.size()) < 4 * d; ++i) {
        for (const auto& [name, g] : sub.generators) {
          std::vector<uint32_t> w(d, 0);
          for (int r = 0; r < d; ++r) {
            for (int c = 0; c < d; ++c) w[c] ^= f4.mul(span[i][r], g.at(r, c));
          }
          auto grown = span;
          grown.push_back(w);
          if (rank_of(f4, grown) > rank_of(f4, span)) span.push_back(w);
        }
      }
      irreducible = rank_of(f4, span) == d;
    }
    CHECK(s.irreducible == irreducible);
  }
}

TEST_CASE("small reducibility examples") {
  const auto f2 = GF2m::with_degree(1);
  const auto c2 = permutation_module(std::vector<std::vector<int>>{{2, 1}}, f2);
  const auto v = is_completely_reducible(c2);
  CHECK_FALSE(v.completely_reducible);
  CHECK(v.certificate.dims() == std::vector<int>{2});
  CHECK_FALSE(v.certificate.summands[0].irreducible);
  CHECK_FALSE(is_irreducible(c2));

  const auto one = permutation_module(std::vector<std::vector<int>>{{1}}, f2);
  CHECK(is_completely_reducible(one).completely_reducible);
  CHECK(is_irreducible(one));

  const auto f8 = GF2m::with_degree(3);
  const auto triv = permutation_module(std::vector<std::vector<int>>{{1, 2, 3}}, f8);
  const auto dec = decompose(triv);
  CHECK(dec.dims() == std::vector<int>{1, 1, 1});
  for (const auto& s : dec.summands) {
    CHECK(s.irreducible);
    CHECK(s.iso_class == dec.summands[0].iso_class);
  }
}

TEST_CASE("univariate factorisation") {
  const auto f2 = GF2m::with_degree(1);
  const upoly::Poly x7 = {1, 0, 0, 0, 0, 0, 0, 1};
  const auto fac = upoly::factor(f2, x7);
  REQUIRE(fac.size() == 3);
  CHECK(fac[0] == std::pair<upoly::Poly, int>{{1, 1}, 1});
  std::set<upoly::Poly> cubics{fac[1].first, fac[2].first};
  CHECK(cubics == std::set<upoly::Poly>{{1, 1, 0, 1}, {1, 0, 1, 1}});
  const auto f8 = GF2m::with_degree(3);
  const auto lin = upoly::factor(f8, x7);
  CHECK(lin.size() == 7);
  for (const auto& [p, e] : lin) CHECK((upoly::degree(p) == 1 && e == 1));
  CHECK(upoly::to_string(f2, {1, 1, 0, 1}) == "x^3 + x + 1");

  // Products of random monic polynomials factor back to themselves.
  std::mt19937_64 rng(6);
  for (unsigned m : {1u, 2u, 3u, 4u}) {
    const auto f = GF2m::with_degree(m);
    for (int i = 0; i < 40; ++i) {
      upoly::Poly prod{1};
      for (int k = 0; k < 3; ++k) {
        upoly::Poly p(2 + rng() % 4);
        for (auto& c : p) c = static_cast<uint32_t>(rng() % f.size());
        p.back() = 1;
        prod = upoly::mul(f, prod, p);
      }
      upoly::Poly back{1};
      for (const auto& [p, e] : upoly::factor(f, prod, rng())) {
        for (int k = 0; k < e; ++k) back = upoly::mul(f, back, p);
        // Each factor is irreducible: no factor of degree >= 1 splits off again.
        CHECK(upoly::factor(f, p).size() == 1);
        CHECK(upoly::factor(f, p)[0].second == 1);
      }
      CHECK(back == prod);
    }
  }
}

TEST_CASE("matrix algebra") {
  const auto f = GF2m::with_degree(4);
  std::mt19937_64 rng(12);
  int inverted = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    Matrix a(f, n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a.at(r, c) = static_cast<uint32_t>(rng() % 16);
    }
    CHECK(a.rank() == rank_of(f, rows_of(a)));
    CHECK(a.is_invertible() == (a.rank() == n));
    if (a.is_invertible()) {
      CHECK(a * a.inverse() == Matrix::identity(f, n));
      ++inverted;
    }
    const auto ns = a.left_nullspace();
    CHECK(ns.rows() == n - a.rank());
    if (ns.rows() > 0) CHECK((ns * a).is_zero());
    std::vector<uint32_t> x(n);
    for (auto& c : x) c = static_cast<uint32_t>(rng() % 16);
    const auto b = (Matrix::from_rows(f, {x}) * a).row(0);
    const auto sol = a.solve_left(b);
    REQUIRE(sol);
    CHECK((Matrix::from_rows(f, {*sol}) * a).row(0) == b);
    const auto mp = minimal_polynomial(a);
    CHECK(evaluate(mp, a).is_zero());
    CHECK(upoly::degree(mp) <= n);
    CHECK(a.transpose().transpose() == a);
  }
  CHECK(inverted > 0);
  CHECK_THROWS(Matrix::identity(f, 2).stacked(Matrix::identity(f, 3)));
  CHECK_THROWS(Matrix(f, 2, 2).inverse());
}

TEST_CASE("decomposition limits") {
  const auto f2 = GF2m::with_degree(1);
  std::vector<int> big(65);
  for (int i = 0; i < 65; ++i) big[i] = i + 1;
  CHECK_THROWS_AS(decompose(permutation_module(std::vector<std::vector<int>>{big}, f2)), std::invalid_argument);
  // The 3-dim trivial module over GF(2^16) has 2^48 vectors to spin.
  CHECK_THROWS_AS(is_irreducible(permutation_module(std::vector<std::vector<int>>{{1, 2, 3}}, GF2m::with_degree(16))),
                  SearchSpaceTooLarge);
}
