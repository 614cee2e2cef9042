#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chevkit/gf2m.hpp"
#include "chevkit/weyl.hpp"

namespace chevkit {

/// Dense matrix over GF(2^m); entries are raw bit patterns of `field`.
class Matrix {
 public:
  Matrix(GF2m field, int rows, int cols);
  static Matrix identity(GF2m field, int n);
  /// From rows of bit patterns.
  static Matrix from_rows(GF2m field, const std::vector<std::vector<uint32_t>>& rows, int cols = -1);

  const GF2m& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  uint32_t at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  uint32_t& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  std::vector<uint32_t> row(int r) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix& x, const Matrix& y);
  Matrix scaled(uint32_t c) const;
  Matrix transpose() const;
  Matrix pow(uint64_t e) const;
  /// Rows stacked below this one's.
  Matrix stacked(const Matrix& below) const;

  /// Reduced row echelon form with zero rows removed.
  Matrix row_reduced() const;
  int rank() const;
  bool is_invertible() const;
  Matrix inverse() const;
  /// Basis (as rows) of { x : x·this = 0 }.
  Matrix left_nullspace() const;
  /// Solves x·this = b for a row vector b; nullopt when b is not in the row space.
  std::optional<std::vector<uint32_t>> solve_left(const std::vector<uint32_t>& b) const;

  std::string to_string() const;

 private:
  GF2m field_;
  int rows_;
  int cols_;
  std::vector<uint32_t> data_;
};

/// A representation by right action on row vectors: v ↦ v·g.
struct MatRep {
  GF2m field;
  int dim = 0;
  std::vector<std::pair<std::string, Matrix>> generators;
};

/// Permutation matrices of `perms` on points 1..n (perms[k][i-1] = image of
/// i); the generator names are "g1", "g2", ...
MatRep permutation_module(const std::vector<std::vector<int>>& perms, const GF2m& field);
/// Restriction of root permutations to `domain` (in that order); throws
/// DomainNotStable.
MatRep permutation_module(const std::vector<RootPermutation>& perms, const std::vector<int>& domain,
                          const GF2m& field);

/// Row-reduced basis of a generator-stable subspace.
struct Submodule {
  Matrix basis;
  int dim() const noexcept { return basis.rows(); }
};

/// Smallest generator-stable subspace containing the rows of `vectors`.
Submodule spin(const Matrix& vectors, const MatRep& rep);
/// True when the row space of `basis` is stable under every generator.
bool is_stable(const Matrix& basis, const MatRep& rep);

/// Action of the generators on a submodule in the coordinates of its basis.
MatRep restrict_to(const Submodule& sub, const MatRep& rep);

/// Module homomorphisms U → W as k_U × k_W matrices X with g_U·X = X·g_W.
std::vector<Matrix> hom_basis(const MatRep& u, const MatRep& w);

struct Summand {
  Submodule module;
  bool irreducible = false;
  /// Summands with the same class index are isomorphic.
  int iso_class = 0;
};

struct Decomposition {
  std::vector<Summand> summands;
  std::vector<int> dims() const;
};

/// Splits into indecomposable summands using primary decompositions of
/// module endomorphisms (Fitting), then flags each summand irreducible by
/// spinning every nonzero vector. Endomorphism rings are searched
/// exhaustively when they have at most 2^16 elements, otherwise by the
/// basis and seeded random combinations. Throws SearchSpaceTooLarge if a
/// summand has more than 2^20 vectors to spin, std::invalid_argument above
/// dimension 64.
Decomposition decompose(const MatRep& rep, uint64_t seed = 1);

/// Irreducible iff every nonzero vector spins the whole module.
bool is_irreducible(const MatRep& rep);

struct ReducibilityVerdict {
  bool completely_reducible = false;
  /// The direct-sum decomposition; a reducible indecomposable summand
  /// refutes complete reducibility.
  Decomposition certificate;
};

ReducibilityVerdict is_completely_reducible(const MatRep& rep, uint64_t seed = 1);

/// Univariate polynomials over GF(2^m), coefficients lowest degree first,
/// no trailing zeros.
namespace upoly {
using Poly = std::vector<uint32_t>;

Poly monic(const GF2m& f, Poly p);
Poly mul(const GF2m& f, const Poly& x, const Poly& y);
Poly add(const Poly& x, const Poly& y);
/// Remainder of x modulo y (y nonzero).
Poly mod(const GF2m& f, Poly x, const Poly& y);
Poly div(const GF2m& f, Poly x, const Poly& y);
Poly gcd(const GF2m& f, Poly x, Poly y);
int degree(const Poly& p);
/// Monic irreducible factors with multiplicities, sorted.
std::vector<std::pair<Poly, int>> factor(const GF2m& f, const Poly& p, uint64_t seed = 1);
std::string to_string(const GF2m& f, const Poly& p);
}  // namespace upoly

/// Minimal polynomial of a square matrix (monic).
upoly::Poly minimal_polynomial(const Matrix& a);
/// p(A).
Matrix evaluate(const upoly::Poly& p, const Matrix& a);

}  // namespace chevkit
