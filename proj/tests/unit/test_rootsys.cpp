#include <doctest.h>

#include <chevkit/e7.hpp>
#include <chevkit/errors.hpp>
#include <chevkit/rootsys.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

using namespace chevkit;

namespace {

// Positive roots of a simply-laced system are exactly the nonzero vectors
// with nonnegative coefficients and x^T A x = 2.
std::set<Coords> roots_by_quadratic_form(const CartanDatum& d, int max_coeff) {
  std::set<Coords> out;
  Coords x(d.rank, 0);
  for (;;) {
    int q = 0;
    for (int i = 0; i < d.rank; ++i) {
      for (int j = 0; j < d.rank; ++j) q += x[i] * d.matrix[i][j] * x[j];
    }
    if (q == 2) out.insert(x);
    int k = 0;
    while (k < d.rank && x[k] == max_coeff) x[k++] = 0;
    if (k == d.rank) break;
    ++x[k];
  }
  return out;
}

std::set<Coords> generated(const RootSystem& sys) {
  std::set<Coords> out;
  for (const auto& r : sys.positive_roots()) out.insert(r.coords);
  return out;
}

CartanDatum type_d(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 3, n - 1);
  return CartanDatum::from_edges(n, edges);
}

CartanDatum type_e(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(2, n - 1);
  return CartanDatum::from_edges(n, edges);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("E7 datum is the expected diagram") {
  const auto d = CartanDatum::e7();
  d.validate();
  CHECK(d.rank == 7);
  for (int i = 0; i < 7; ++i) {
    CHECK(d.matrix[i][i] == 2);
    for (int j = 0; j < 7; ++j) CHECK(d.matrix[i][j] == d.matrix[j][i]);
  }
  const std::set<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}};
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) CHECK((d.matrix[i][j] == -1) == (edges.count({i, j}) > 0));
  }
  CHECK(d.simple_index("sigma") == 6);
  CHECK(d.simple_index("σ") == 6);
  CHECK(d.simple_index("h") == 5);
  CHECK(d.simple_index("zeta") == -1);
}

TEST_CASE("generation matches the quadratic-form enumeration") {
  struct Case {
    CartanDatum d;
    size_t count;
    int max_coeff;
  };
  const std::vector<Case> cases{{CartanDatum::type_a(1), 1, 2}, {CartanDatum::type_a(2), 3, 2},
                                {CartanDatum::type_a(4), 10, 2}, {type_d(4), 12, 3},
                                {type_d(5), 20, 3},              {type_e(6), 36, 3},
                                {CartanDatum::e7(), 63, 4}};
  for (const auto& c : cases) {
    const auto sys = RootSystem::generate(c.d);
    CHECK(sys.size() == static_cast<int>(c.count));
    CHECK(generated(sys) == roots_by_quadratic_form(c.d, c.max_coeff));
  }
}

TEST_CASE("A2 roots are xi, zeta, xi + zeta") {
  const auto sys = RootSystem::generate(CartanDatum::type_a(2));
  REQUIRE(sys.size() == 3);
  CHECK(sys.positive_roots()[0].coords == Coords{1, 0});
  CHECK(sys.positive_roots()[1].coords == Coords{0, 1});
  CHECK(sys.positive_roots()[2].coords == Coords{1, 1});
}

TEST_CASE("generation errors") {
  CartanDatum bad = CartanDatum::type_a(2);
  bad.matrix[0][1] = -2;
  CHECK_THROWS_AS(RootSystem::generate(bad), NonSimplyLaced);
  CartanDatum asym = CartanDatum::type_a(2);
  asym.matrix[0][1] = 0;
  CHECK_THROWS_AS(RootSystem::generate(asym), NonSimplyLaced);
  // The affine A2 triangle has infinitely many roots.
  const auto affine = CartanDatum::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(RootSystem::generate(affine), NonFinite);
  CHECK_THROWS_AS(RootSystem::generate(CartanDatum::e7(), 50), NonFinite);
}

TEST_CASE("E7 pairings and reflections") {
  const auto d = CartanDatum::e7();
  auto simple = [](int i) {
    Root r{Coords(7, 0)};
    r.coords[i] = 1;
    return r;
  };
  const Root sigma = simple(6), delta = simple(3), alpha = simple(0), beta = simple(1);
  CHECK(pairing(sigma, delta, d) == -1);
  CHECK(pairing(sigma, sigma, d) == 2);
  CHECK(pairing(sigma, alpha, d) == 0);
  CHECK(reflect(sigma, sigma, d) == -sigma);
  CHECK(reflect(sigma, beta, d) == sigma);
  const auto sys = e7::system();
  CHECK(sys->label_of(reflect(sigma, delta, d)) == 9);
}

TEST_CASE("E7 root invariants over all 126 roots") {
  const auto sys = e7::system();
  CHECK(sys->size() == 63);
  int total = 0;
  for (int x = -63; x <= 63; ++x) {
    if (x == 0) continue;
    ++total;
    const Root r = sys->root(x);
    CHECK((r.is_positive() != r.is_negative()));
    CHECK(sys->pairing(x, x) == 2);
    CHECK(sys->label_of(-r) == -x);
    for (int y = -63; y <= 63; ++y) {
      if (y == 0) continue;
      CHECK(sys->pairing(x, y) == sys->pairing(y, x));
      CHECK(sys->reflect(sys->reflect(x, y), y) == x);
      const int s = sys->sum_label(x, y);
      const auto sum = sys->label_of(r + sys->root(y));
      CHECK(s == sum.value_or(0));
      if (x > 0 && y > 0 && s != 0) CHECK(s > 0);
    }
  }
  CHECK(total == 126);
}

TEST_CASE("E7 labelling: simple roots and sigma bands") {
  const auto sys = e7::system();
  CHECK(sys->simple_label(6) == 8);
  for (int i = 0; i < 6; ++i) CHECK(sys->simple_label(i) == 43 + i);
  for (int l = 1; l <= 63; ++l) {
    const int sigma = sys->coefficient(l, 6);
    CHECK(sigma == (l <= 35 ? 1 : l <= 42 ? 2 : 0));
  }
}

TEST_CASE("bundled table validates and matches the data file") {
  const auto table = e7::table();
  CHECK(table.columns == std::vector<std::string>{"sigma", "alpha", "beta", "gamma", "delta", "epsilon", "eta"});
  CHECK(table.rows.size() == 63);
  const auto generic = RootSystem::generate(CartanDatum::e7());
  const auto rep = validate_labeling(generic, table, e7::bands());
  CHECK(rep.valid);
  CHECK(rep.matched == 63);
  CHECK(rep.expected == 63);
  CHECK(LabelTable::read_csv(CHEVKIT_DATA "/e7_roots.csv").to_csv() == table.to_csv());
  CHECK(LabelTable::parse_csv(table.to_csv()).to_csv() == table.to_csv());
  CHECK(read_file(CHEVKIT_DATA "/e7_roots.csv") == e7::bundled_csv());
}

TEST_CASE("row 8 is sigma") {
  const auto table = LabelTable::parse_csv("label,sigma,alpha,beta,gamma,delta,epsilon,eta\n8,1,0,0,0,0,0,0\n");
  const auto sys = RootSystem::generate(CartanDatum::e7());
  // A partial table is a valid row but not a bijection onto all 63 roots.
  CHECK_THROWS_AS(validate_labeling(sys, table), LabelMismatch);
  const auto full = e7::system();
  CHECK(full->root(8).coords == Coords{0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("labelling errors name the offending label") {
  const auto sys = RootSystem::generate(CartanDatum::e7());
  auto table = e7::table();
  table.rows[12].coeffs = table.rows[3].coeffs;  // label 13 duplicates label 4
  try {
    validate_labeling(sys, table);
    FAIL("duplicate accepted");
  } catch (const LabelMismatch& e) {
    CHECK(e.label() == 13);
  }
  auto not_root = e7::table();
  not_root.rows[0].coeffs = {1, 1, 1, 1, 1, 1, 1};
  CHECK_THROWS_AS(validate_labeling(sys, not_root), LabelMismatch);
  const auto corrupted = LabelTable::read_csv(CHEVKIT_FIXTURES "/e7_roots_corrupted.csv");
  CHECK(validate_labeling(sys, corrupted).valid);
  try {
    validate_labeling(sys, corrupted, e7::bands());
    FAIL("band violation accepted");
  } catch (const LabelMismatch& e) {
    CHECK(e.label() == 3);
  }
  CHECK_THROWS_AS(e7::system_from(corrupted), LabelMismatch);
}

TEST_CASE("csv parse errors") {
  CHECK_THROWS_AS(LabelTable::parse_csv("label,sigma\n1,x\n"), ParseError);
  CHECK_THROWS_AS(LabelTable::parse_csv("label,sigma\n1,1,2\n"), ParseError);
  CHECK_THROWS_AS(LabelTable::parse_csv(""), ParseError);
  CHECK_THROWS_AS(LabelTable::read_csv("/nonexistent/roots.csv"), ParseError);
  auto table = e7::table();
  table.columns[0] = "tau";
  CHECK_THROWS_AS(RootSystem::generate(CartanDatum::e7()).relabel(table), LabelMismatch);
}
