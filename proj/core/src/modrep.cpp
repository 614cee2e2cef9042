#include "chevkit/modrep.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "chevkit/errors.hpp"

namespace chevkit {

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(GF2m field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

Matrix Matrix::identity(GF2m field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(GF2m field, const std::vector<std::vector<uint32_t>>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  Matrix m(field, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < cols; ++c) {
      if (rows[r][c] >= field.size()) throw std::invalid_argument("matrix entry outside " + field.name());
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

std::vector<uint32_t> Matrix::row(int r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
          data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_};
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](uint32_t x) { return x == 0; });
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (!(x.field_ == y.field_)) throw RingMismatch("matrices over different fields");
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shapes do not match");
  Matrix out(x.field_, x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i) {
    for (int k = 0; k < x.cols_; ++k) {
      const uint32_t a = x.at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < y.cols_; ++j) {
        const uint32_t b = y.at(k, j);
        if (b != 0) out.at(i, j) ^= x.field_.mul(a, b);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (!(x.field_ == y.field_)) throw RingMismatch("matrices over different fields");
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shapes do not match");
  Matrix out = x;
  for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] ^= y.data_[i];
  return out;
}

bool operator==(const Matrix& x, const Matrix& y) {
  return x.field_ == y.field_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

Matrix Matrix::scaled(uint32_t c) const {
  Matrix out = *this;
  for (auto& v : out.data_) v = field_.mul(v, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

Matrix Matrix::pow(uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
  Matrix r = identity(field_, rows_);
  Matrix b = *this;
  while (e != 0) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (!(field_ == below.field_)) throw RingMismatch("matrices over different fields");
  if (rows_ > 0 && below.rows_ > 0 && cols_ != below.cols_) throw std::invalid_argument("column counts differ");
  Matrix out(field_, rows_ + below.rows_, rows_ > 0 ? cols_ : below.cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

namespace {

// In-place RREF; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  const GF2m& f = m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    const uint32_t inv = f.inv(m.at(r, c));
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const uint32_t factor = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) ^= f.mul(factor, m.at(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::row_reduced() const {
  Matrix m = *this;
  const auto pivots = rref(m);
  Matrix out(field_, static_cast<int>(pivots.size()), cols_);
  std::copy(m.data_.begin(), m.data_.begin() + static_cast<std::ptrdiff_t>(pivots.size()) * cols_, out.data_.begin());
  return out;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(rref(m).size());
}

bool Matrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix aug(field_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < rows_ || pivots[rows_ - 1] >= cols_) {
    throw std::domain_error("matrix is singular");
  }
  Matrix out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
  }
  return out;
}

Matrix Matrix::left_nullspace() const {
  // x·A = 0  ⟺  Aᵀ·xᵀ = 0.
  Matrix t = transpose();
  const auto pivots = rref(t);
  std::vector<bool> is_pivot(rows_, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix out(field_, rows_ - static_cast<int>(pivots.size()), rows_);
  int k = 0;
  for (int free = 0; free < rows_; ++free) {
    if (is_pivot[free]) continue;
    out.at(k, free) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) out.at(k, pivots[r]) = t.at(static_cast<int>(r), free);
    ++k;
  }
  return out;
}

std::optional<std::vector<uint32_t>> Matrix::solve_left(const std::vector<uint32_t>& b) const {
  if (static_cast<int>(b.size()) != cols_) throw std::invalid_argument("right-hand side has the wrong length");
  // Aᵀ·xᵀ = bᵀ as an augmented system.
  Matrix aug(field_, cols_, rows_ + 1);
  for (int i = 0; i < cols_; ++i) {
    for (int j = 0; j < rows_; ++j) aug.at(i, j) = at(j, i);
    aug.at(i, rows_) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == rows_) return std::nullopt;
  std::vector<uint32_t> x(rows_, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), rows_);
  return x;
}

std::string Matrix::to_string() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    out += "[";
    for (int j = 0; j < cols_; ++j) out += (j ? " " : "") + std::to_string(at(i, j));
    out += "]\n";
  }
  return out;
}

// ---------------------------------------------------------------- modules

MatRep permutation_module(const std::vector<std::vector<int>>& perms, const GF2m& field) {
  MatRep rep{field, perms.empty() ? 0 : static_cast<int>(perms.front().size()), {}};
  int k = 0;
  for (const auto& p : perms) {
    if (static_cast<int>(p.size()) != rep.dim) throw std::invalid_argument("permutations of different degrees");
    Matrix m(field, rep.dim, rep.dim);
    std::vector<bool> hit(rep.dim, false);
    for (int i = 0; i < rep.dim; ++i) {
      const int img = p[i] - 1;
      if (img < 0 || img >= rep.dim || hit[img]) throw std::invalid_argument("not a permutation");
      hit[img] = true;
      m.at(i, img) = 1;
    }
    rep.generators.emplace_back("g" + std::to_string(++k), std::move(m));
  }
  return rep;
}

MatRep permutation_module(const std::vector<RootPermutation>& perms, const std::vector<int>& domain,
                          const GF2m& field) {
  std::vector<std::vector<int>> images;
  for (const auto& p : perms) {
    std::vector<int> img;
    for (int x : domain) {
      auto it = std::find(domain.begin(), domain.end(), p(x));
      if (it == domain.end()) throw DomainNotStable("label " + std::to_string(x) + " leaves the domain");
      img.push_back(static_cast<int>(it - domain.begin()) + 1);
    }
    images.push_back(std::move(img));
  }
  auto rep = permutation_module(images, field);
  if (perms.empty()) rep.dim = static_cast<int>(domain.size());
  return rep;
}

bool is_stable(const Matrix& basis, const MatRep& rep) {
  const int r = basis.rank();
  for (const auto& [name, g] : rep.generators) {
    if (basis.stacked(basis * g).rank() != r) return false;
  }
  return true;
}

Submodule spin(const Matrix& vectors, const MatRep& rep) {
  Matrix basis = vectors.rows() == 0 ? Matrix(rep.field, 0, rep.dim) : vectors.row_reduced();
  for (;;) {
    Matrix grown = basis;
    for (const auto& [name, g] : rep.generators) grown = grown.stacked(basis * g);
    grown = grown.row_reduced();
    if (grown.rows() == basis.rows()) return Submodule{basis};
    basis = std::move(grown);
  }
}

MatRep restrict_to(const Submodule& sub, const MatRep& rep) {
  MatRep out{rep.field, sub.dim(), {}};
  for (const auto& [name, g] : rep.generators) {
    const Matrix img = sub.basis * g;
    Matrix coords(rep.field, sub.dim(), sub.dim());
    for (int i = 0; i < sub.dim(); ++i) {
      auto x = sub.basis.solve_left(img.row(i));
      if (!x) throw std::invalid_argument("subspace is not stable under " + name);
      for (int j = 0; j < sub.dim(); ++j) coords.at(i, j) = (*x)[j];
    }
    out.generators.emplace_back(name, std::move(coords));
  }
  return out;
}

std::vector<Matrix> hom_basis(const MatRep& u, const MatRep& w) {
  if (u.generators.size() != w.generators.size()) throw std::invalid_argument("representations of different groups");
  const int ku = u.dim, kw = w.dim, n = ku * kw;
  const GF2m& f = u.field;
  if (n == 0) return {};
  // Unknown X[i][j] is row i*kw+j; each generator contributes ku*kw columns.
  Matrix sys(f, n, n * static_cast<int>(u.generators.size()));
  for (size_t t = 0; t < u.generators.size(); ++t) {
    const Matrix& gu = u.generators[t].second;
    const Matrix& gw = w.generators[t].second;
    const int off = static_cast<int>(t) * n;
    for (int r = 0; r < ku; ++r) {
      for (int s = 0; s < kw; ++s) {
        const int col = off + r * kw + s;
        for (int i = 0; i < ku; ++i) sys.at(i * kw + s, col) ^= gu.at(r, i);   // (g_U X)_{rs}
        for (int j = 0; j < kw; ++j) sys.at(r * kw + j, col) ^= gw.at(j, s);   // (X g_W)_{rs}
      }
    }
  }
  const Matrix null = sys.left_nullspace();
  std::vector<Matrix> out;
  for (int b = 0; b < null.rows(); ++b) {
    Matrix x(f, ku, kw);
    for (int i = 0; i < ku; ++i) {
      for (int j = 0; j < kw; ++j) x.at(i, j) = null.at(b, i * kw + j);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<int> Decomposition::dims() const {
  std::vector<int> out;
  for (const auto& s : summands) out.push_back(s.module.dim());
  return out;
}

namespace {

constexpr uint64_t kExhaustiveEnd = uint64_t{1} << 16;
constexpr uint64_t kExhaustiveSpin = uint64_t{1} << 20;
constexpr int kRandomTrials = 64;

uint64_t field_power(uint64_t q, size_t e, uint64_t cap) {
  uint64_t r = 1;
  for (size_t i = 0; i < e; ++i) {
    if (r > cap / q) return cap + 1;
    r *= q;
  }
  return r;
}

Matrix combination(const std::vector<Matrix>& basis, const std::vector<uint32_t>& coeffs) {
  Matrix out(basis.front().field(), basis.front().rows(), basis.front().cols());
  for (size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0) out = out + basis[i].scaled(coeffs[i]);
  }
  return out;
}

// Calls visit on linear combinations of `basis`: all of them when the
// span is small, otherwise the basis and seeded random combinations.
// Stops when visit returns true.
bool for_each_combination(const std::vector<Matrix>& basis, std::mt19937_64& rng,
                          const std::function<bool(const Matrix&)>& visit) {
  if (basis.empty()) return false;
  const GF2m& f = basis.front().field();
  const uint64_t q = f.size();
  const uint64_t total = field_power(q, basis.size(), kExhaustiveEnd);
  if (total <= kExhaustiveEnd) {
    std::vector<uint32_t> c(basis.size(), 0);
    for (uint64_t idx = 1; idx < total; ++idx) {
      uint64_t rest = idx;
      for (size_t k = 0; k < c.size(); ++k) {
        c[k] = static_cast<uint32_t>(rest % q);
        rest /= q;
      }
      if (visit(combination(basis, c))) return true;
    }
    return false;
  }
  for (const auto& b : basis) {
    if (visit(b)) return true;
  }
  std::uniform_int_distribution<uint32_t> coin(0, static_cast<uint32_t>(q - 1));
  std::vector<uint32_t> c(basis.size());
  for (int t = 0; t < kRandomTrials; ++t) {
    for (auto& x : c) x = coin(rng);
    if (visit(combination(basis, c))) return true;
  }
  return false;
}

void split(const Submodule& sub, const MatRep& rep, std::mt19937_64& rng, std::vector<Submodule>& out) {
  if (sub.dim() <= 1) {
    out.push_back(sub);
    return;
  }
  const MatRep local = restrict_to(sub, rep);
  const auto end = hom_basis(local, local);
  std::vector<Matrix> parts;
  for_each_combination(end, rng, [&](const Matrix& phi) {
    const auto factors = upoly::factor(local.field, minimal_polynomial(phi), rng());
    if (factors.size() < 2) return false;
    for (const auto& [p, e] : factors) {
      upoly::Poly pe{1};
      for (int i = 0; i < e; ++i) pe = upoly::mul(local.field, pe, p);
      parts.push_back(evaluate(pe, phi).left_nullspace());
    }
    return true;
  });
  if (parts.empty()) {
    out.push_back(sub);
    return;
  }
  for (const auto& k : parts) split(Submodule{(k * sub.basis).row_reduced()}, rep, rng, out);
}

bool irreducible_by_spin(const MatRep& rep) {
  const int k = rep.dim;
  if (k <= 1) return k == 1;
  const uint64_t q = rep.field.size();
  if (field_power(q, static_cast<size_t>(k), kExhaustiveSpin) > kExhaustiveSpin) {
    throw SearchSpaceTooLarge(rep.field.name() + "^" + std::to_string(k) + " vectors exceed the spin limit");
  }
  // One vector per line: first nonzero coordinate 1.
  for (int lead = 0; lead < k; ++lead) {
    const uint64_t tails = field_power(q, static_cast<size_t>(k - lead - 1), kExhaustiveSpin);
    for (uint64_t idx = 0; idx < tails; ++idx) {
      Matrix v(rep.field, 1, k);
      v.at(0, lead) = 1;
      uint64_t rest = idx;
      for (int j = lead + 1; j < k; ++j) {
        v.at(0, j) = static_cast<uint32_t>(rest % q);
        rest /= q;
      }
      if (spin(v, rep).dim() < k) return false;
    }
  }
  return true;
}

bool isomorphic(const MatRep& u, const MatRep& w, bool both_irreducible, std::mt19937_64& rng) {
  if (u.dim != w.dim) return false;
  const auto homs = hom_basis(u, w);
  if (both_irreducible) return !homs.empty();
  return for_each_combination(homs, rng, [](const Matrix& x) { return x.is_invertible(); });
}

}  // namespace

bool is_irreducible(const MatRep& rep) { return irreducible_by_spin(rep); }

Decomposition decompose(const MatRep& rep, uint64_t seed) {
  if (rep.dim > 64) throw std::invalid_argument("decompose supports dimension <= 64");
  for (const auto& [name, g] : rep.generators) {
    if (!g.is_invertible()) throw std::invalid_argument("generator " + name + " is not invertible");
  }
  std::mt19937_64 rng(seed);
  std::vector<Submodule> parts;
  split(Submodule{Matrix::identity(rep.field, rep.dim)}, rep, rng, parts);
  // Canonical order: by dimension, then by basis entries.
  std::sort(parts.begin(), parts.end(), [](const Submodule& x, const Submodule& y) {
    if (x.dim() != y.dim()) return x.dim() < y.dim();
    for (int i = 0; i < x.dim(); ++i) {
      const auto a = x.basis.row(i), b = y.basis.row(i);
      if (a != b) return a < b;
    }
    return false;
  });
  Decomposition d;
  std::vector<MatRep> local;
  for (auto& p : parts) {
    local.push_back(restrict_to(p, rep));
    d.summands.push_back(Summand{std::move(p), irreducible_by_spin(local.back()), 0});
  }
  int classes = 0;
  for (size_t i = 0; i < d.summands.size(); ++i) {
    d.summands[i].iso_class = -1;
    for (size_t j = 0; j < i; ++j) {
      const bool irr = d.summands[i].irreducible && d.summands[j].irreducible;
      if (isomorphic(local[j], local[i], irr, rng)) {
        d.summands[i].iso_class = d.summands[j].iso_class;
        break;
      }
    }
    if (d.summands[i].iso_class < 0) d.summands[i].iso_class = classes++;
  }
  return d;
}

ReducibilityVerdict is_completely_reducible(const MatRep& rep, uint64_t seed) {
  ReducibilityVerdict v;
  v.certificate = decompose(rep, seed);
  v.completely_reducible = std::all_of(v.certificate.summands.begin(), v.certificate.summands.end(),
                                       [](const Summand& s) { return s.irreducible; });
  return v;
}

// ---------------------------------------------------------------- polynomials

namespace upoly {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(i % 2 ? p[i] : 0);
  trim(d);
  return d;
}

// p(x) = r(x)^2 with r's coefficients the square roots of p's even ones.
Poly frobenius_root(const GF2m& f, const Poly& p) {
  Poly r;
  for (size_t i = 0; i < p.size(); i += 2) r.push_back(f.sqrt(p[i]));
  trim(r);
  return r;
}

Poly powmod(const GF2m& f, Poly base, uint64_t e, const Poly& m) {
  Poly r{1};
  base = mod(f, std::move(base), m);
  while (e != 0) {
    if (e & 1u) r = mod(f, mul(f, r, base), m);
    base = mod(f, mul(f, base, base), m);
    e >>= 1;
  }
  return r;
}

bool is_one(const Poly& p) { return p.size() == 1 && p[0] == 1; }

std::vector<std::pair<Poly, int>> square_free(const GF2m& f, const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (degree(p) <= 0) return out;
  const Poly d = derivative(p);
  if (d.empty()) {
    for (auto& [h, j] : square_free(f, frobenius_root(f, p))) out.emplace_back(std::move(h), 2 * j);
    return out;
  }
  Poly c = gcd(f, p, d);
  Poly w = div(f, p, c);
  int i = 1;
  while (!is_one(w)) {
    Poly y = gcd(f, w, c);
    Poly z = div(f, w, y);
    if (degree(z) > 0) out.emplace_back(std::move(z), i);
    ++i;
    w = std::move(y);
    c = div(f, c, w);
  }
  if (degree(c) > 0) {
    for (auto& [h, j] : square_free(f, frobenius_root(f, c))) out.emplace_back(std::move(h), 2 * j);
  }
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(const GF2m& f, Poly h) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{0, 1};
  Poly xq = x;
  for (int i = 1; degree(h) >= 2 * i; ++i) {
    xq = powmod(f, xq, f.size(), h);
    Poly g = gcd(f, h, add(xq, x));
    if (!is_one(g)) {
      h = div(f, h, g);
      xq = mod(f, xq, h);
      out.emplace_back(std::move(g), i);
    }
  }
  if (degree(h) > 0) out.emplace_back(h, degree(h));
  return out;
}

void equal_degree(const GF2m& f, const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  std::uniform_int_distribution<uint32_t> coin(0, f.size() - 1);
  const int trace_terms = static_cast<int>(f.degree()) * d;
  for (;;) {
    Poly a(static_cast<size_t>(n));
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (degree(a) <= 0) continue;
    // Absolute trace a + a^2 + ... + a^(2^(md-1)) mod g.
    Poly t = a, s = a;
    for (int k = 1; k < trace_terms; ++k) {
      s = mod(f, mul(f, s, s), g);
      t = add(t, s);
    }
    Poly u = gcd(f, g, t);
    if (degree(u) > 0 && degree(u) < n) {
      equal_degree(f, u, d, rng, out);
      equal_degree(f, div(f, g, u), d, rng, out);
      return;
    }
  }
}

}  // namespace

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& x, const Poly& y) {
  Poly r(std::max(x.size(), y.size()), 0);
  for (size_t i = 0; i < x.size(); ++i) r[i] ^= x[i];
  for (size_t i = 0; i < y.size(); ++i) r[i] ^= y[i];
  trim(r);
  return r;
}

Poly mul(const GF2m& f, const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly r(x.size() + y.size() - 1, 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) r[i + j] ^= f.mul(x[i], y[j]);
  }
  trim(r);
  return r;
}

Poly monic(const GF2m& f, Poly p) {
  trim(p);
  if (p.empty()) return p;
  const uint32_t inv = f.inv(p.back());
  for (auto& c : p) c = f.mul(c, inv);
  return p;
}

namespace {
Poly divmod(const GF2m& f, Poly& x, const Poly& y) {
  if (y.empty()) throw std::domain_error("polynomial division by zero");
  trim(x);
  Poly q(x.size() >= y.size() ? x.size() - y.size() + 1 : 0, 0);
  const uint32_t lead_inv = f.inv(y.back());
  while (x.size() >= y.size()) {
    const size_t shift = x.size() - y.size();
    const uint32_t c = f.mul(x.back(), lead_inv);
    q[shift] = c;
    for (size_t i = 0; i < y.size(); ++i) x[shift + i] ^= f.mul(c, y[i]);
    trim(x);
  }
  trim(q);
  return q;
}
}  // namespace

Poly mod(const GF2m& f, Poly x, const Poly& y) {
  divmod(f, x, y);
  return x;
}

Poly div(const GF2m& f, Poly x, const Poly& y) { return divmod(f, x, y); }

Poly gcd(const GF2m& f, Poly x, Poly y) {
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = mod(f, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(f, std::move(x));
}

std::vector<std::pair<Poly, int>> factor(const GF2m& f, const Poly& p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Poly, int>> out;
  for (const auto& [sf, mult] : square_free(f, monic(f, p))) {
    for (const auto& [g, d] : distinct_degree(f, sf)) {
      std::vector<Poly> irreducibles;
      equal_degree(f, g, d, rng, irreducibles);
      for (auto& h : irreducibles) out.emplace_back(std::move(h), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  return out;
}

std::string to_string(const GF2m& f, const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (int i = degree(p); i >= 0; --i) {
    if (p[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string c = f.elem(p[i]).to_string();
    const bool unit = p[i] == 1;
    const std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (mono.empty()) {
      out += c;
    } else if (unit) {
      out += mono;
    } else {
      out += "(" + c + ")*" + mono;
    }
  }
  return out;
}

}  // namespace upoly

upoly::Poly minimal_polynomial(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("minimal polynomial of a non-square matrix");
  const int n = a.rows();
  const GF2m& f = a.field();
  auto flat = [&](const Matrix& m) {
    Matrix v(f, 1, n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) v.at(0, i * n + j) = m.at(i, j);
    }
    return v;
  };
  Matrix power = Matrix::identity(f, n);
  Matrix powers = flat(power);
  for (int d = 1; d <= n; ++d) {
    power = power * a;
    const Matrix next = flat(power);
    if (auto x = powers.solve_left(next.row(0))) {
      upoly::Poly p(*x);
      p.push_back(1);
      return p;
    }
    powers = powers.stacked(next);
  }
  throw std::logic_error("minimal polynomial exceeds the matrix size");
}

Matrix evaluate(const upoly::Poly& p, const Matrix& a) {
  const GF2m& f = a.field();
  Matrix r(f, a.rows(), a.cols());
  for (int i = upoly::degree(p); i >= 0; --i) r = r * a + Matrix::identity(f, a.rows()).scaled(p[i]);
  return r;
}

}  // namespace chevkit
